#pragma once

// Sweeps the three lemma checkers over element pairs of a built group and
// tallies hypothesis-satisfying instances and counterexamples.

#include <algorithm>
#include <random>
#include <string>
#include <vector>

#include "cap2/capability.hpp"

namespace cap2::test {

struct Tally {
  long instances = 0;
  long hypotheses_met = 0;
  long counterexamples = 0;
  std::string first_counterexample;

  void add(const LemmaResult& r, const std::string& where) {
    ++instances;
    if (r.hypotheses_met) ++hypotheses_met;
    if (!r.holds) {
      if (counterexamples++ == 0) first_counterexample = where + ": " + r.note;
    }
  }
  Tally& operator+=(const Tally& o) {
    instances += o.instances;
    hypotheses_met += o.hypotheses_met;
    if (counterexamples == 0 && o.counterexamples > 0) first_counterexample = o.first_counterexample;
    counterexamples += o.counterexamples;
    return *this;
  }
};

struct LemmaTallies {
  Tally commcond, halfstep, exceptional;
};

inline std::vector<NilElt> sample_elements(const NilGroup& k, std::size_t limit, unsigned seed) {
  std::vector<NilElt> out;
  if (static_cast<std::size_t>(k.order()) <= limit) {
    for (Id id = 0; id < k.order(); ++id) out.push_back(k.element(id));
    return out;
  }
  out = {k.a(), k.b(), k.mul(k.a(), k.b()), k.inverse(k.b())};
  std::mt19937 rng(seed);
  std::uniform_int_distribution<Id> pick(0, static_cast<Id>(k.order() - 1));
  while (out.size() < limit) out.push_back(k.element(pick(rng)));
  return out;
}

// Smallest k >= floor with x^(2^k) central.
inline int central_exponent(const NilGroup& k, const NilElt& x, int floor) {
  int e = floor;
  while (!k.is_central(k.power(x, pow2(e)))) ++e;
  return e;
}

// Smallest g >= 0 with [y,x]^(2^g) commuting with x and y.
inline int commuting_exponent(const NilGroup& k, const NilElt& y, const NilElt& x) {
  const NilElt c = k.commutator(y, x);
  for (int g = 0;; ++g) {
    const NilElt w = k.power(c, pow2(g));
    if (k.commutator(w, x) == k.identity() && k.commutator(w, y) == k.identity()) return g;
  }
}

inline void scan_commcond(const NilGroup& k, std::vector<NilElt> ys, Tally& t, const std::string& where) {
  std::vector<int> r;
  for (const auto& y : ys) r.push_back(central_exponent(k, y, 1));
  std::vector<std::size_t> order(ys.size());
  for (std::size_t i = 0; i < order.size(); ++i) order[i] = i;
  std::stable_sort(order.begin(), order.end(), [&](std::size_t i, std::size_t j) { return r[i] < r[j]; });
  std::vector<NilElt> sorted_y;
  std::vector<int> sorted_r;
  for (std::size_t i : order) {
    sorted_y.push_back(ys[i]);
    sorted_r.push_back(r[i]);
  }
  std::vector<int> gamma;
  for (std::size_t i = 0; i + 1 < sorted_y.size(); ++i)
    gamma.push_back(commuting_exponent(k, sorted_y.back(), sorted_y[i]));
  t.add(lemma_check_commcond(k, sorted_y, sorted_r, gamma), where);
  // a weaker bound on the last exponent keeps the hypotheses intact
  sorted_r.back() += 1;
  t.add(lemma_check_commcond(k, sorted_y, sorted_r, gamma), where);
}

inline LemmaTallies scan_lemmas(const NilGroup& k, std::size_t limit = 96, unsigned seed = 7) {
  LemmaTallies out;
  const auto elems = sample_elements(k, limit, seed);
  std::vector<NilElt> center_gens = center(k);
  const std::string name = to_string(k.spec());
  for (const auto& x : elems)
    for (const auto& y : elems) {
      const std::string where = name + " x=" + to_string(x) + " y=" + to_string(y);
      scan_commcond(k, {x, y}, out.commcond, where);
      scan_commcond(k, {x, y, k.mul(x, y)}, out.commcond, where);
      for (int alpha = 2; alpha <= 4; ++alpha) out.halfstep.add(lemma_check_halfstep(k, x, y, alpha), where);
      for (int gamma = 0; gamma <= 3; ++gamma) {
        out.exceptional.add(exceptional_obstruction_check(k, x, y, gamma), where);
        for (const auto& z : center_gens)
          out.exceptional.add(exceptional_obstruction_check(k, x, k.mul(x, z), gamma), where);
      }
    }
  for (const auto& x : elems)
    for (int gamma = 0; gamma <= 3; ++gamma) out.exceptional.add(exceptional_obstruction_check(k, x, x, gamma), name);
  return out;
}

}  // namespace cap2::test

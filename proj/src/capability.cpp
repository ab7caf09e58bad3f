#include "cap2/capability.hpp"

#include <algorithm>
#include <sstream>

#include "cap2/oracle.hpp"

namespace cap2 {

namespace {

template <class... Ts>
struct overloaded : Ts... {
  using Ts::operator()...;
};
template <class... Ts>
overloaded(Ts...) -> overloaded<Ts...>;

constexpr const char* kNotCertified =
    "reported from the classification; non-capability is not certified by exhaustive search";

Verdict capable(Clause clause, std::string why) { return {true, clause, Obstruction::none, std::move(why)}; }

Verdict not_capable(Obstruction o, const std::string& why) {
  return {false, Clause::none, o, why + "; " + kNotCertified};
}

// Obstruction for generator orders 2^lo <= 2^hi and [a,b] of order 2^comm.
std::optional<Verdict> necessary_conditions(int lo, int hi, int comm) {
  if (hi > lo + 1)
    return not_capable(Obstruction::generator_orders,
                       "generator orders 2^" + std::to_string(lo) + " and 2^" + std::to_string(hi) +
                           " differ by more than a factor 2");
  if (hi == lo + 1 && comm != lo)
    return not_capable(Obstruction::commutator_order,
                       "generator orders differ by a factor 2 but [a,b] has order 2^" + std::to_string(comm) +
                           " < 2^" + std::to_string(lo));
  return std::nullopt;
}

FreeElt aba_power(Int n) { return {0, 0, 0, n, 0}; }
FreeElt abb_power(Int n) { return {0, 0, 0, 0, n}; }

}  // namespace

std::string to_string(Clause c) {
  switch (c) {
    case Clause::a: return "a";
    case Clause::b: return "b";
    case Clause::c: return "c";
    case Clause::d: return "d";
    case Clause::none: return "none";
  }
  return "?";
}

std::string to_string(Obstruction o) {
  switch (o) {
    case Obstruction::none: return "none";
    case Obstruction::generator_orders: return "generator-orders";
    case Obstruction::commutator_order: return "commutator-order";
    case Obstruction::half_step: return "half-step";
    case Obstruction::exceptional: return "exceptional";
  }
  return "?";
}

std::string to_string(VerifyStatus s) {
  switch (s) {
    case VerifyStatus::pass: return "PASS";
    case VerifyStatus::fail: return "FAIL";
    case VerifyStatus::budget_exceeded: return "BUDGET";
  }
  return "?";
}

bool order_conditions(std::span<const int> exponents) {
  if (exponents.empty()) throw std::invalid_argument("order_conditions: empty exponent list");
  if (exponents.front() < 1) throw std::invalid_argument("order_conditions: exponents must be at least 1");
  if (!std::is_sorted(exponents.begin(), exponents.end()))
    throw std::invalid_argument("order_conditions: exponents must be nondecreasing");
  const std::size_t m = exponents.size();
  return m > 1 && exponents[m - 1] <= exponents[m - 2] + 1;
}

bool commutator_order_condition(const Class2Group& g) {
  Int lo = g.order_of(g.a());
  Int hi = g.order_of(g.b());
  if (lo > hi) std::swap(lo, hi);
  if (hi != 2 * lo) return true;
  return g.order_of(g.commutator(g.a(), g.b())) == lo;
}

Verdict decide(const TypeParams& params) {
  const TypeParams p = validate(params);
  return std::visit(
      overloaded{
          [](const TypeI& q) -> Verdict {
            if (q.alpha == q.beta) return capable(Clause::a, "type i with α = β");
            if (q.alpha == q.beta + 1 && q.beta == q.gamma) return capable(Clause::b, "type i with α = β+1 = γ+1");
            return *necessary_conditions(q.beta, q.alpha, q.gamma);
          },
          [](const TypeII& q) -> Verdict {
            if (q.alpha == q.beta && q.gamma < q.beta - 1)
              return capable(Clause::c, "type ii with α = β and γ < β-1");
            if (q.alpha == q.beta + 1 && q.beta == q.gamma && q.gamma == q.sigma + 1)
              return capable(Clause::d, "type ii with α = β+1 = γ+1 = σ+2");
            if (auto v = necessary_conditions(std::min(q.alpha, q.beta), std::max(q.alpha, q.beta), q.gamma)) return *v;
            // Remaining case: α = β = γ+1.
            return not_capable(Obstruction::half_step,
                               "type ii with α = β = γ+1: in any class-three cover b^(2^(α-1)) is forced central");
          },
          [](const TypeIII&) -> Verdict {
            return not_capable(Obstruction::exceptional,
                               "type iii: a^(2^γ) lifts to a central element of every class-three cover");
          },
      },
      p);
}

WitnessSpec build_witness(const TypeParams& params) {
  const TypeParams p = validate(params);
  const Verdict v = decide(p);
  if (!v.capable) throw NotCapable(to_string(p) + " is not capable: " + v.rationale);

  return std::visit(
      overloaded{
          [&](const TypeI& q) -> WitnessSpec {
            if (v.clause == Clause::b)
              return {{q.alpha, q.beta, {}}, p, "3-nilpotent product G(β+1,β)"};
            if (q.gamma == q.beta) return {{q.beta, q.beta, {}}, p, "3-nilpotent product G(β,β)"};
            return {{q.beta, q.beta, {aba_power(pow2(q.gamma)), abb_power(pow2(q.gamma))}},
                    p,
                    "G(β,β) modulo [a,b,a]^(2^γ), [a,b,b]^(2^γ)"};
          },
          [&](const TypeII& q) -> WitnessSpec {
            if (v.clause == Clause::c) {
              const Int shift = pow2(q.alpha + q.sigma - q.gamma);
              const Int two_sigma = pow2(q.sigma);
              return {{q.alpha,
                       q.alpha,
                       {aba_power(pow2(q.gamma)), abb_power(pow2(q.gamma)), FreeElt{0, 0, shift, 0, -two_sigma},
                        aba_power(two_sigma)}},
                      p,
                      "G(α,α) modulo [a,b,a]^(2^γ), [a,b,b]^(2^γ), then [a,b]^(2^(α+σ-γ)) [a,b,b]^(-2^σ), "
                      "[a,b,a]^(2^σ)"};
            }
            // clause d: kill [a^(2^β) [a,b]^(-2^(β-1)), a], collected in the free group.
            const FreeElt lifted = hall::mul(hall::power(hall::a, pow2(q.beta)),
                                             hall::power(hall::comm_ab, -pow2(q.beta - 1)));
            return {{q.alpha, q.beta, {hall::commutator(lifted, hall::a)}},
                    p,
                    "G(β+1,β) modulo [a^(2^β) [a,b]^(-2^(β-1)), a]"};
          },
          [&](const TypeIII&) -> WitnessSpec { throw NotCapable(to_string(p) + " is not capable"); },
      },
      p);
}

WitnessReport verify_witness(const WitnessSpec& w, const VerifyOptions& options) {
  WitnessReport report;
  report.target = to_string(w.target);
  report.ambient = to_string(w.ambient);

  std::optional<NilGroup> built;
  try {
    built = build(w.ambient);
  } catch (const std::exception& e) {
    report.message = std::string("ambient group does not build: ") + e.what();
    return report;
  }
  const NilGroup& K = *built;
  report.k_order = K.order();
  report.kernel_order = build({w.ambient.alpha, w.ambient.beta, {}}).order() / K.order();
  if (static_cast<std::size_t>(K.order()) > options.max_order) {
    report.status = VerifyStatus::budget_exceeded;
    report.message = "witness order " + std::to_string(K.order()) + " exceeds enumeration budget " +
                     std::to_string(options.max_order);
    return report;
  }

  const std::vector<NilElt> zgens = center(K);
  const std::vector<Id> z = subgroup_elements(K, zgens);
  report.center_order = static_cast<Int>(z.size());
  for (const auto& g : zgens) report.center_generators.push_back(to_string(g));

  const GroupTable table = enumerate(K, options.max_order);
  report.center_check = table.size() <= kPairwiseCenterLimit ? "brute-pairwise" : "brute-generators";
  if (brute_center(table) != z) {
    report.message = "solved center disagrees with the brute-force center";
    return report;
  }

  const GroupTable quotient = quotient_central(table, z);
  const Class2Group target = model(w.target);
  if (static_cast<Int>(quotient.size()) != target.order()) {
    report.message = "|K/Z(K)| = " + std::to_string(quotient.size()) + " but the target has order " +
                     std::to_string(target.order());
    return report;
  }
  const auto iso = iso_2gen(quotient, target);
  if (!iso) {
    report.message = "no isomorphism from K/Z(K) onto " + report.target;
    return report;
  }
  report.image_a = quotient.label(iso->image_a);
  report.image_b = quotient.label(iso->image_b);
  report.status = VerifyStatus::pass;
  report.message = "K/Z(K) is isomorphic to " + report.target;
  return report;
}

std::string format_report(const WitnessReport& r) {
  std::ostringstream os;
  os << "target=" << r.target << '\n';
  os << "ambient=" << r.ambient << '\n';
  os << "|K|=" << r.k_order << " |Z(K)|=" << r.center_order << " iso=" << to_string(r.status) << '\n';
  os << "|N|=" << r.kernel_order << " (central subgroup factored out of the 3-nilpotent product)\n";
  if (!r.center_generators.empty()) {
    os << "Z(K) generators:";
    for (const auto& g : r.center_generators) os << ' ' << g;
    os << '\n';
  }
  if (!r.center_check.empty()) os << "center check: " << r.center_check << '\n';
  if (r.passed()) os << "images: a -> " << r.image_a << ", b -> " << r.image_b << '\n';
  os << r.message << '\n';
  return os.str();
}

bool generates_modulo_center(const NilGroup& K, std::span<const NilElt> elements) {
  // K/Z(K) is trivial or a noncyclic 2-generator 2-group; in the latter case
  // elements generate it iff their images in K/Φ(K) = (Z/2)^2 span.
  if (K.commutator(K.a(), K.b()) == K.identity()) return true;
  for (std::size_t i = 0; i < elements.size(); ++i)
    for (std::size_t j = i + 1; j < elements.size(); ++j)
      if ((elements[i].r * elements[j].s - elements[j].r * elements[i].s) % 2 != 0) return true;
  return false;
}

LemmaResult lemma_check_commcond(const NilGroup& K, std::span<const NilElt> y, std::span<const int> r,
                                 std::span<const int> gamma) {
  const std::size_t m = y.size();
  if (m < 2) throw std::invalid_argument("lemma_check_commcond: need at least two elements");
  if (r.size() != m || gamma.size() != m - 1)
    throw std::invalid_argument("lemma_check_commcond: expected " + std::to_string(m) + " exponents r and " +
                                std::to_string(m - 1) + " exponents gamma");
  auto vacuous = [](std::string why) { return LemmaResult{true, false, "hypotheses unmet: " + std::move(why)}; };

  if (r[0] < 1 || !std::is_sorted(r.begin(), r.end())) return vacuous("r must satisfy 1 <= r_1 <= ... <= r_m");
  if (!generates_modulo_center(K, y)) return vacuous("elements do not generate K modulo Z(K)");
  for (std::size_t i = 0; i < m; ++i)
    if (!K.is_central(K.power(y[i], pow2(r[i])))) return vacuous("y_" + std::to_string(i + 1) + "^(2^r) not central");
  const int r_prev = r[m - 2];
  const NilElt& last = y[m - 1];
  for (std::size_t i = 0; i + 1 < m; ++i) {
    if (gamma[i] < 0 || gamma[i] >= r_prev) return vacuous("gamma_i must lie in [0, r_(m-1))");
    const NilElt w = K.power(K.commutator(last, y[i]), pow2(gamma[i]));
    if (K.commutator(w, y[i]) != K.identity() || K.commutator(w, last) != K.identity())
      return vacuous("[y_m,y_i]^(2^gamma_i) does not commute with y_i and y_m");
  }
  const bool holds = K.is_central(K.power(last, pow2(r_prev)));
  return {holds, true, holds ? "y_m^(2^r_(m-1)) is central" : "counterexample: y_m^(2^r_(m-1)) is not central"};
}

LemmaResult lemma_check_halfstep(const NilGroup& K, const NilElt& x, const NilElt& y, int alpha) {
  if (alpha <= 1) throw std::invalid_argument("lemma_check_halfstep: alpha must exceed 1");
  const NilElt c = K.commutator(x, y);
  auto centralizes = [&](const NilElt& z) {
    return K.commutator(z, x) == K.identity() && K.commutator(z, y) == K.identity();
  };
  const NilElt h1 = K.power(x, pow2(alpha));
  const NilElt h2 = K.power(c, pow2(alpha - 1));
  const NilElt h3 = K.mul(K.power(x, pow2(alpha - 1)), K.power(c, -pow2(alpha - 2)));
  if (!centralizes(h1) || !centralizes(h2) || !centralizes(h3))
    return {true, false, "hypotheses unmet: a required element does not centralize <x,y>"};
  const bool holds = K.commutator(x, K.power(y, pow2(alpha - 1))) == K.identity();
  return {holds, true, holds ? "y^(2^(α-1)) commutes with x" : "counterexample: [x, y^(2^(α-1))] != 1"};
}

LemmaResult exceptional_obstruction_check(const NilGroup& K, const NilElt& x, const NilElt& y, int gamma) {
  if (gamma < 0) throw std::invalid_argument("exceptional_obstruction_check: gamma must be nonnegative");
  const NilElt xp = K.power(x, pow2(gamma));
  const NilElt yp = K.power(y, pow2(gamma));
  if (!K.is_central(K.mul(xp, K.inverse(yp))))
    return {true, false, "hypotheses unmet: x^(2^γ) y^(-2^γ) is not central"};
  bool holds = K.commutator(xp, x) == K.identity() && K.commutator(xp, y) == K.identity();
  std::string note = holds ? "x^(2^γ) centralizes <x,y>" : "counterexample: x^(2^γ) does not centralize <x,y>";
  const NilElt pair[] = {x, y};
  if (holds && generates_modulo_center(K, pair)) {
    holds = K.is_central(xp);
    note = holds ? "x^(2^γ) is central in K" : "counterexample: x^(2^γ) is not central in K";
  }
  return {holds, true, note};
}

}  // namespace cap2

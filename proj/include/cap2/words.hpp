#pragma once

// Words in a, b and their basic commutators, evaluated in any concrete group
// that provides the usual operations.

#include <concepts>
#include <string>
#include <vector>

#include "cap2/arith.hpp"

namespace cap2 {

template <typename G>
concept GroupLike = requires(const G& g, typename G::Elem x, Int n) {
  { g.identity() } -> std::convertible_to<typename G::Elem>;
  { g.mul(x, x) } -> std::convertible_to<typename G::Elem>;
  { g.inverse(x) } -> std::convertible_to<typename G::Elem>;
  { g.power(x, n) } -> std::convertible_to<typename G::Elem>;
  { g.commutator(x, x) } -> std::convertible_to<typename G::Elem>;
};

enum class Basic { a, b, ab, aba, abb };

struct Factor {
  Basic basic;
  Int exponent;
  friend bool operator==(const Factor&, const Factor&) = default;
};

using Word = std::vector<Factor>;

/// lhs = rhs; an empty side is the identity.
struct Relation {
  Word lhs;
  Word rhs;
};

template <GroupLike G>
typename G::Elem evaluate(const G& group, const Word& word, typename G::Elem a, typename G::Elem b) {
  const auto c = group.commutator(a, b);
  auto result = group.identity();
  for (const auto& f : word) {
    typename G::Elem base = a;
    switch (f.basic) {
      case Basic::a: base = a; break;
      case Basic::b: base = b; break;
      case Basic::ab: base = c; break;
      case Basic::aba: base = group.commutator(c, a); break;
      case Basic::abb: base = group.commutator(c, b); break;
    }
    result = group.mul(result, group.power(base, f.exponent));
  }
  return result;
}

template <GroupLike G>
bool satisfies(const G& group, const Relation& rel, typename G::Elem a, typename G::Elem b) {
  return evaluate(group, rel.lhs, a, b) == evaluate(group, rel.rhs, a, b);
}

template <GroupLike G>
bool satisfies_all(const G& group, const std::vector<Relation>& rels, typename G::Elem a,
                   typename G::Elem b) {
  for (const auto& rel : rels)
    if (!satisfies(group, rel, a, b)) return false;
  return true;
}

std::string to_string(const Word& word);
std::string to_string(const Relation& rel);

}  // namespace cap2

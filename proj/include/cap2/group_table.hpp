#pragma once

// Explicit finite groups for brute-force refereeing.
//
// A GroupTable is a finite 2-group on element ids 0..n-1 with a designated
// generating pair. Multiplication is a callback into whatever model owns the
// elements; groups of at most kMemoLimit elements get a precomputed Cayley
// table. Tables are immutable after construction.

#include <array>
#include <cstdint>
#include <functional>
#include <memory>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

#include "cap2/arith.hpp"

namespace cap2 {

using Id = std::uint32_t;
using Subgroup = std::vector<Id>;  // sorted element ids

inline constexpr std::size_t kDefaultEnumerationBound = std::size_t{1} << 16;
inline constexpr std::size_t kMemoLimit = 512;
inline constexpr std::size_t kPairwiseCenterLimit = 1024;

class BudgetExceeded : public std::runtime_error {
 public:
  BudgetExceeded(std::size_t order, std::size_t bound)
      : std::runtime_error("group of order " + std::to_string(order) +
                           " exceeds enumeration bound " + std::to_string(bound)),
        order_(order),
        bound_(bound) {}
  [[nodiscard]] std::size_t order() const { return order_; }
  [[nodiscard]] std::size_t bound() const { return bound_; }

 private:
  std::size_t order_;
  std::size_t bound_;
};

class GroupTable {
 public:
  using Elem = Id;
  using MulFn = std::function<Id(Id, Id)>;
  using LabelFn = std::function<std::string(Id)>;

  /// Throws std::invalid_argument if the generators do not generate all
  /// `order` elements.
  GroupTable(std::size_t order, Id identity, std::array<Id, 2> generators, MulFn mul,
             LabelFn label = {});

  [[nodiscard]] std::size_t size() const { return order_; }
  [[nodiscard]] Id identity() const { return identity_; }
  [[nodiscard]] const std::array<Id, 2>& generators() const { return generators_; }
  [[nodiscard]] bool memoized() const { return memo_ != nullptr; }
  /// Row-major Cayley table, or null when the group is too large to memoize.
  [[nodiscard]] const std::vector<Id>* cayley_table() const { return memo_.get(); }

  [[nodiscard]] Id mul(Id x, Id y) const {
    return memo_ ? (*memo_)[std::size_t{x} * order_ + y] : mul_(x, y);
  }
  /// Smallest 2^k with x^(2^k) = 1.
  [[nodiscard]] Int order_of(Id x) const;
  [[nodiscard]] Id inverse(Id x) const;
  [[nodiscard]] Id power(Id x, Int n) const;
  [[nodiscard]] Id commutator(Id x, Id y) const;
  [[nodiscard]] bool commute(Id x, Id y) const { return mul(x, y) == mul(y, x); }
  [[nodiscard]] std::string label(Id x) const;

 private:
  std::size_t order_;
  Id identity_;
  std::array<Id, 2> generators_;
  MulFn mul_;
  LabelFn label_;
  std::shared_ptr<const std::vector<Id>> memo_;
};

Subgroup closure(const GroupTable& group, std::span<const Id> generators);
Subgroup normal_closure(const GroupTable& group, std::span<const Id> generators);
/// {z : zg = gz for all g}; pairwise scan for small groups, scan against the
/// generating pair otherwise.
Subgroup brute_center(const GroupTable& group);
/// Quotient by a central subgroup. Throws std::invalid_argument if `central`
/// is not central. Quotient generators are the images of the parent's.
GroupTable quotient_central(const GroupTable& group, const Subgroup& central);
/// Quotient by an arbitrary normal subgroup (checked).
GroupTable quotient_normal(const GroupTable& group, const Subgroup& normal);
/// Lower central series G = G_1 > G_2 > ... ending at the trivial group.
/// Throws std::runtime_error if the series stalls (group not nilpotent).
std::vector<Subgroup> lcs(const GroupTable& group);
/// Nilpotency class (length of lcs minus one).
int nilpotency_class(const GroupTable& group);

}  // namespace cap2

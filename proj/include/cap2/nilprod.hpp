#pragma once

// 3-nilpotent products of two cyclic 2-groups and their quotients by
// subgroups of the commutator block.
//
// G(α,β) = <a> ∐ <b> with |a| = 2^α, |b| = 2^β, α ≥ β ≥ 1, taken modulo
// the fourth term of the lower central series. Elements are a^r b^s c^t d^u e^v
// with r mod 2^α, s mod 2^β and (t,u,v) boxed by the Hermite form of the
// relation lattice of the commutator block.

#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "cap2/class2.hpp"
#include "cap2/group_table.hpp"
#include "cap2/hall.hpp"
#include "cap2/lattice.hpp"

namespace cap2 {

struct GroupSpec {
  int alpha = 1;
  int beta = 1;
  /// Elements of the commutator subgroup to kill. Each must be central in
  /// the group built from the base product and the extras listed before it.
  std::vector<FreeElt> extra_central;
};

std::string to_string(const GroupSpec& spec);

class NonCentralExtra : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

struct NilElt {
  Int r = 0;
  Int s = 0;
  Int t = 0;
  Int u = 0;
  Int v = 0;
  friend bool operator==(const NilElt&, const NilElt&) = default;
  friend auto operator<=>(const NilElt&, const NilElt&) = default;
};

std::string to_string(const NilElt& x);
std::ostream& operator<<(std::ostream& os, const NilElt& x);

/// Coordinates with respect to a^r b^s [a,b]^t [a^2,b]^u [a,b^2]^v.
struct StruikCoords {
  Int r, s, t, u, v;
  friend bool operator==(const StruikCoords&, const StruikCoords&) = default;
};

class NilGroup {
 public:
  using Elem = NilElt;

  [[nodiscard]] const GroupSpec& spec() const { return spec_; }
  [[nodiscard]] const CommLattice& comm_lattice() const { return lattice_; }
  [[nodiscard]] Int r_modulus() const { return r_mod_; }
  [[nodiscard]] Int s_modulus() const { return s_mod_; }
  [[nodiscard]] Int order() const { return order_; }
  /// Pivots of the (t,u,v) box.
  [[nodiscard]] std::array<Int, 3> box() const {
    return {lattice_.pivot(0), lattice_.pivot(1), lattice_.pivot(2)};
  }

  [[nodiscard]] NilElt reduce(const FreeElt& g) const;
  [[nodiscard]] static FreeElt lift(const NilElt& x) { return {x.r, x.s, x.t, x.u, x.v}; }

  [[nodiscard]] NilElt identity() const { return {}; }
  [[nodiscard]] NilElt a() const { return reduce(hall::a); }
  [[nodiscard]] NilElt b() const { return reduce(hall::b); }
  [[nodiscard]] NilElt mul(const NilElt& x, const NilElt& y) const { return reduce(hall::mul(lift(x), lift(y))); }
  [[nodiscard]] NilElt inverse(const NilElt& x) const { return reduce(hall::inverse(lift(x))); }
  [[nodiscard]] NilElt power(const NilElt& x, Int n) const;
  [[nodiscard]] NilElt commutator(const NilElt& x, const NilElt& y) const {
    return reduce(hall::commutator(lift(x), lift(y)));
  }
  [[nodiscard]] bool is_central(const NilElt& x) const;

  [[nodiscard]] Id index(const NilElt& x) const;
  [[nodiscard]] NilElt element(Id id) const;

  [[nodiscard]] StruikCoords to_struik(const NilElt& x) const;
  /// Moduli of the Struik-style box (t', u', v').
  [[nodiscard]] std::array<Int, 3> struik_box() const;

 private:
  friend NilGroup build(const GroupSpec& spec);
  NilGroup(GroupSpec spec, CommLattice lattice);

  GroupSpec spec_;
  CommLattice lattice_;
  CommLattice struik_lattice_;
  Int r_mod_;
  Int s_mod_;
  Int order_;
};

/// Throws ParameterError for α < β or β < 1, NonCentralExtra for an extra
/// that is not central at its stage, and std::logic_error if the base
/// product does not have order 2^(α+4β-[α=β]).
NilGroup build(const GroupSpec& spec);

inline NilElt reduce(const FreeElt& g, const NilGroup& group) { return group.reduce(g); }

/// Smallest 2^k with x^(2^k) = 1.
Int order_of(const NilElt& x, const NilGroup& group);

/// Generators of Z(G), found by solving [z,a] = [z,b] = 1 over the (r,s,t)
/// block; d and e are always central.
std::vector<NilElt> center(const NilGroup& group);
/// Element list (sorted ids) of the subgroup generated by `gens`.
std::vector<Id> subgroup_elements(const NilGroup& group, const std::vector<NilElt>& gens);

/// Lazy table view of the group; throws BudgetExceeded above `bound`.
GroupTable enumerate(const NilGroup& group, std::size_t bound = kDefaultEnumerationBound);

/// G/Z(G) as a table, built from the solved center.
GroupTable central_quotient_table(const NilGroup& group, std::size_t bound = kDefaultEnumerationBound);

/// Recognizes G/Z(G) as a presented class-two group. Throws
/// std::runtime_error if the quotient is not a 2-generator class-two group.
TypeParams central_quotient(const NilGroup& group, std::size_t bound = kDefaultEnumerationBound);

}  // namespace cap2

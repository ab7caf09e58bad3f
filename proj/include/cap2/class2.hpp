#pragma once

// Two-generator 2-groups of class two in standard presentation:
//
//   I(α,β,γ)     a^(2^α) = b^(2^β) = [a,b]^(2^γ) = 1,            α ≥ β ≥ γ ≥ 1
//   II(α,β,γ,σ)  a^(2^α) = b^(2^β) = 1, a^(2^(α+σ-γ)) = [a,b]^(2^σ),
//                β ≥ γ > σ ≥ 0, α+σ ≥ 2γ, α+β+σ > 3
//   III(γ)       a^(2^(γ+1)) = b^(2^(γ+1)) = [a,b]^(2^γ) = 1,
//                a^(2^γ) = b^(2^γ) = [a,b]^(2^(γ-1)),            γ ≥ 1
//
// together with [a,b,a] = [a,b,b] = 1 in every type.

#include <array>
#include <iosfwd>
#include <map>
#include <optional>
#include <stdexcept>
#include <string>
#include <variant>
#include <vector>

#include "cap2/arith.hpp"
#include "cap2/group_table.hpp"
#include "cap2/words.hpp"

namespace cap2 {

struct TypeI {
  int alpha, beta, gamma;
  friend bool operator==(const TypeI&, const TypeI&) = default;
};
struct TypeII {
  int alpha, beta, gamma, sigma;
  friend bool operator==(const TypeII&, const TypeII&) = default;
};
struct TypeIII {
  int gamma;
  friend bool operator==(const TypeIII&, const TypeIII&) = default;
};

using TypeParams = std::variant<TypeI, TypeII, TypeIII>;

enum class Kind { I, II, III };

[[nodiscard]] Kind kind_of(const TypeParams& p);
/// log2 of the group order.
[[nodiscard]] int order_log2(const TypeParams& p);
[[nodiscard]] std::string to_string(const TypeParams& p);
[[nodiscard]] std::string to_string(Kind k);  // "i", "ii", "iii"
[[nodiscard]] std::optional<Kind> parse_kind(const std::string& s);
std::ostream& operator<<(std::ostream& os, const TypeParams& p);

/// Unvalidated parameters as they arrive from a user.
struct RawParams {
  std::optional<Kind> kind;
  std::optional<int> alpha, beta, gamma, sigma;
};

/// A violated constraint; constraint() names it (e.g. "α+β+σ>3").
class ParameterError : public std::invalid_argument {
 public:
  ParameterError(std::string constraint, const std::string& detail)
      : std::invalid_argument("constraint " + constraint + " violated: " + detail),
        constraint_(std::move(constraint)) {}
  [[nodiscard]] const std::string& constraint() const { return constraint_; }

 private:
  std::string constraint_;
};

/// Largest exponent accepted anywhere; keeps every coordinate inside 64 bits.
inline constexpr int kMaxExponent = 30;

TypeParams validate(const RawParams& raw);
TypeParams validate(const TypeParams& p);

/// All valid parameter tuples whose group has order 2^n.
std::vector<TypeParams> params_of_order(int n);

/// II(β+1,β,β,β-1) presents the same group as I(β,β,β) (take a·b and b as
/// generators); returns the type I tuple for those and nullopt otherwise.
std::optional<TypeParams> isomorphic_alias(const TypeParams& p);

struct Elt2 {
  Int i = 0;
  Int j = 0;
  Int k = 0;
  friend bool operator==(const Elt2&, const Elt2&) = default;
};

/// Coordinate model a^i b^j [a,b]^k of a presented class-two group.
class Class2Group {
 public:
  using Elem = Elt2;

  explicit Class2Group(const TypeParams& params);

  [[nodiscard]] const TypeParams& params() const { return params_; }
  /// Representative ranges (M_i, M_j, M_k).
  [[nodiscard]] std::array<Int, 3> moduli() const { return {mi_, mj_, mk_}; }
  [[nodiscard]] Int order() const { return mi_ * mj_ * mk_; }

  /// Normal form of a^i b^j [a,b]^k for arbitrary integers.
  [[nodiscard]] Elt2 fold(Int i, Int j, Int k) const;

  [[nodiscard]] Elt2 identity() const { return {}; }
  [[nodiscard]] Elt2 a() const { return fold(1, 0, 0); }
  [[nodiscard]] Elt2 b() const { return fold(0, 1, 0); }
  [[nodiscard]] Elt2 mul(const Elt2& x, const Elt2& y) const;
  [[nodiscard]] Elt2 inverse(const Elt2& x) const;
  [[nodiscard]] Elt2 power(const Elt2& x, Int n) const;
  [[nodiscard]] Elt2 commutator(const Elt2& x, const Elt2& y) const;
  [[nodiscard]] Int order_of(const Elt2& x) const;

  [[nodiscard]] Id index(const Elt2& x) const { return static_cast<Id>((x.i * mj_ + x.j) * mk_ + x.k); }
  [[nodiscard]] Elt2 element(Id id) const;

  /// Defining relations of the presentation.
  [[nodiscard]] const std::vector<Relation>& relations() const { return relations_; }

 private:
  TypeParams params_;
  Int mi_ = 1, mj_ = 1, mk_ = 1;
  std::vector<Relation> relations_;
};

/// Builds the model and checks the defining relations and class two.
Class2Group model(const TypeParams& p);

GroupTable enumerate(const Class2Group& g, std::size_t bound = kDefaultEnumerationBound);

struct Fingerprint {
  Int order = 0;
  Int exponent = 0;
  Int center_order = 0;
  Int derived_order = 0;
  std::array<Int, 2> abelian_invariants{};  // Z_m1 x Z_m2 with m1 | m2
  std::map<Int, Int> order_histogram;

  friend bool operator==(const Fingerprint&, const Fingerprint&) = default;
};

Fingerprint fingerprint(const GroupTable& table);
Fingerprint fingerprint(const Class2Group& g);
std::ostream& operator<<(std::ostream& os, const Fingerprint& f);

}  // namespace cap2

#pragma once

// Capability of two-generator 2-groups of class two: necessary conditions,
// the four-clause decision, explicit class-three witnesses and their
// verification, and checkers for the implications behind non-capability.

#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

#include "cap2/class2.hpp"
#include "cap2/nilprod.hpp"

namespace cap2 {

enum class Clause { a, b, c, d, none };

/// Why a group fails to be capable.
enum class Obstruction {
  none,
  generator_orders,  // largest generator order more than twice the next
  commutator_order,  // orders differ by 2 but [a,b] is too small
  half_step,         // type ii with α = β = γ+1
  exceptional,       // type iii
};

std::string to_string(Clause c);
std::string to_string(Obstruction o);

struct Verdict {
  bool capable = false;
  Clause clause = Clause::none;
  Obstruction obstruction = Obstruction::none;
  std::string rationale;
};

/// Generator-order condition for 2-groups of class two minimally generated by
/// elements of orders 2^r1 <= ... <= 2^rm: m > 1 and rm <= r(m-1) + 1.
/// Throws std::invalid_argument for an empty, decreasing or non-positive list.
bool order_conditions(std::span<const int> exponents);

/// When the generator orders differ by exactly a factor 2, [a,b] must have the
/// order of the smaller generator; vacuously true otherwise.
bool commutator_order_condition(const Class2Group& g);

Verdict decide(const TypeParams& p);

/// Recipe for a class-three group K with K/Z(K) isomorphic to the target.
struct WitnessSpec {
  GroupSpec ambient;
  TypeParams target;
  std::string construction;
};

class NotCapable : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Throws NotCapable when decide(p) is negative.
WitnessSpec build_witness(const TypeParams& p);

enum class VerifyStatus { pass, fail, budget_exceeded };
std::string to_string(VerifyStatus s);

struct VerifyOptions {
  /// Largest witness order that will be enumerated.
  std::size_t max_order = kDefaultEnumerationBound;
};

struct WitnessReport {
  VerifyStatus status = VerifyStatus::fail;
  std::string target;
  std::string ambient;
  Int k_order = 0;
  Int center_order = 0;
  /// Order of the central subgroup factored out of the bare 3-nilpotent product.
  Int kernel_order = 0;
  std::vector<std::string> center_generators;
  std::string image_a;
  std::string image_b;
  std::string center_check;
  std::string message;

  [[nodiscard]] bool passed() const { return status == VerifyStatus::pass; }
};

/// Builds K, solves for Z(K) and cross-checks it against a brute-force scan,
/// forms K/Z(K) and searches for an explicit isomorphism onto the target.
WitnessReport verify_witness(const WitnessSpec& w, const VerifyOptions& options = {});

std::string format_report(const WitnessReport& report);

struct LemmaResult {
  bool holds = true;
  bool hypotheses_met = false;
  std::string note;
  explicit operator bool() const { return holds; }
};

/// True when the elements generate K modulo Z(K).
bool generates_modulo_center(const NilGroup& K, std::span<const NilElt> elements);

/// If y_1..y_m generate K mod Z(K), y_i^(2^r_i) is central with
/// 1 <= r_1 <= ... <= r_m, and for each i < m some 0 <= γ_i < r_(m-1) makes
/// [y_m,y_i]^(2^γ_i) commute with y_i and y_m, then y_m^(2^r_(m-1)) is central.
/// Unmet hypotheses give a vacuous true with a note. Throws
/// std::invalid_argument on length mismatch or m < 2.
LemmaResult lemma_check_commcond(const NilGroup& K, std::span<const NilElt> y, std::span<const int> r,
                                 std::span<const int> gamma);

/// If x^(2^α), [x,y]^(2^(α-1)) and x^(2^(α-1)) [x,y]^(-2^(α-2)) centralize
/// <x,y>, then y^(2^(α-1)) commutes with x. Throws for α <= 1.
LemmaResult lemma_check_halfstep(const NilGroup& K, const NilElt& x, const NilElt& y, int alpha);

/// If x^(2^γ) y^(-2^γ) is central then x^(2^γ) centralizes <x,y>; when x, y
/// also generate K mod Z(K) it is central in K.
LemmaResult exceptional_obstruction_check(const NilGroup& K, const NilElt& x, const NilElt& y, int gamma);

}  // namespace cap2

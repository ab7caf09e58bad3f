#pragma once

// Full-rank sublattices of Z^3 on the commutator coordinates (t, u, v).

#include <array>
#include <iosfwd>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

#include "cap2/arith.hpp"

namespace cap2 {

using Vec3 = std::array<Int, 3>;

class InfiniteBlock : public std::invalid_argument {
 public:
  InfiniteBlock() : std::invalid_argument("infinite commutator block") {}
};

/// A full-rank lattice kept in Hermite normal form: rows are upper
/// triangular, pivots are positive, and entries above a pivot lie in
/// [0, pivot).
class CommLattice {
 public:
  /// Canonical basis of the lattice spanned by `generators`. Throws
  /// InfiniteBlock if they do not span a finite-index sublattice.
  static CommLattice from_generators(std::span<const Vec3> generators);

  [[nodiscard]] const std::array<Vec3, 3>& basis() const { return basis_; }
  [[nodiscard]] Int pivot(std::size_t j) const { return basis_[j][j]; }
  [[nodiscard]] Int index() const;

  /// Unique representative of v + L in the box [0,p0) x [0,p1) x [0,p2).
  [[nodiscard]] Vec3 reduce(Vec3 v) const;
  [[nodiscard]] bool contains(const Vec3& v) const;

  friend bool operator==(const CommLattice&, const CommLattice&) = default;

 private:
  explicit CommLattice(const std::array<Vec3, 3>& basis) : basis_(basis) {}
  std::array<Vec3, 3> basis_;
};

inline CommLattice canonical_basis(std::span<const Vec3> generators) {
  return CommLattice::from_generators(generators);
}
inline Vec3 reduce_vector(const Vec3& v, const CommLattice& lattice) { return lattice.reduce(v); }
inline bool contains(const Vec3& v, const CommLattice& lattice) { return lattice.contains(v); }

std::string to_string(const Vec3& v);
std::ostream& operator<<(std::ostream& os, const CommLattice& lattice);

}  // namespace cap2

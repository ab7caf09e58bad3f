#include "cap2/lattice.hpp"

#include <algorithm>
#include <cstdlib>
#include <ostream>
#include <sstream>

namespace cap2 {

namespace {

void axpy(Vec3& row, Int q, const Vec3& other) {
  for (std::size_t k = 0; k < 3; ++k) row[k] = sub(row[k], mul(q, other[k]));
}

}  // namespace

CommLattice CommLattice::from_generators(std::span<const Vec3> generators) {
  std::vector<Vec3> rows(generators.begin(), generators.end());
  std::array<Vec3, 3> basis{};

  std::size_t top = 0;
  for (std::size_t col = 0; col < 3; ++col) {
    // Euclid on column `col` over rows [top, end).
    for (;;) {
      std::size_t best = rows.size();
      for (std::size_t i = top; i < rows.size(); ++i) {
        if (rows[i][col] == 0) continue;
        if (best == rows.size() || std::llabs(rows[i][col]) < std::llabs(rows[best][col])) best = i;
      }
      if (best == rows.size()) throw InfiniteBlock();
      std::swap(rows[top], rows[best]);
      bool done = true;
      for (std::size_t i = top + 1; i < rows.size(); ++i) {
        if (rows[i][col] == 0) continue;
        axpy(rows[i], floor_div(rows[i][col], rows[top][col]), rows[top]);
        if (rows[i][col] != 0) done = false;
      }
      if (done) break;
    }
    if (rows[top][col] < 0)
      for (auto& x : rows[top]) x = neg(x);
    ++top;
  }
  std::copy_n(rows.begin(), 3, basis.begin());

  // Reduce entries above each pivot; column 1 first so that column 2 stays
  // reduced afterwards.
  for (std::size_t j = 1; j < 3; ++j)
    for (std::size_t i = 0; i < j; ++i) axpy(basis[i], floor_div(basis[i][j], basis[j][j]), basis[j]);

  return CommLattice(basis);
}

Int CommLattice::index() const { return mul(mul(pivot(0), pivot(1)), pivot(2)); }

Vec3 CommLattice::reduce(Vec3 v) const {
  for (std::size_t j = 0; j < 3; ++j) axpy(v, floor_div(v[j], basis_[j][j]), basis_[j]);
  return v;
}

bool CommLattice::contains(const Vec3& v) const { return reduce(v) == Vec3{0, 0, 0}; }

std::string to_string(const Vec3& v) {
  std::ostringstream os;
  os << '(' << v[0] << ',' << v[1] << ',' << v[2] << ')';
  return os.str();
}

std::ostream& operator<<(std::ostream& os, const CommLattice& lattice) {
  os << '{';
  for (std::size_t i = 0; i < 3; ++i) os << (i ? "," : "") << to_string(lattice.basis()[i]);
  return os << "} index " << lattice.index();
}

}  // namespace cap2

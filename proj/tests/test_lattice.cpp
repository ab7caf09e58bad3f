#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>
#include <random>
#include <set>
#include <vector>

#include "cap2/lattice.hpp"

using namespace cap2;

namespace {

CommLattice lat(std::vector<Vec3> gens) { return CommLattice::from_generators(gens); }

Vec3 plus(const Vec3& x, const Vec3& y) { return {x[0] + y[0], x[1] + y[1], x[2] + y[2]}; }
Vec3 minus(const Vec3& x, const Vec3& y) { return {x[0] - y[0], x[1] - y[1], x[2] - y[2]}; }

std::vector<Vec3> random_gens(std::mt19937& rng) {
  std::uniform_int_distribution<Int> d(-6, 6);
  std::vector<Vec3> gens{{8, 0, 0}, {0, 8, 0}, {0, 0, 8}};
  const int extra = static_cast<int>(rng() % 4);
  for (int i = 0; i < extra; ++i) gens.push_back({d(rng), d(rng), d(rng)});
  return gens;
}

}  // namespace

TEST_CASE("canonical basis examples") {
  const auto diag = lat({{2, 0, 0}, {0, 2, 0}, {0, 0, 2}});
  CHECK(diag.basis() == std::array<Vec3, 3>{Vec3{2, 0, 0}, Vec3{0, 2, 0}, Vec3{0, 0, 2}});
  CHECK(diag.index() == 8);

  const auto g21 = lat({{4, -2, 0}, {2, 0, 1}, {0, 2, 0}, {0, 0, 2}});
  CHECK(g21.basis() == std::array<Vec3, 3>{Vec3{2, 0, 1}, Vec3{0, 2, 0}, Vec3{0, 0, 2}});
  CHECK(g21.index() == 8);

  CHECK(lat({{2, -1, 0}, {2, 0, 1}, {0, 2, 0}, {0, 0, 2}}).index() == 4);
}

TEST_CASE("rank-deficient generators are rejected") {
  CHECK_THROWS_AS(lat({{2, 0, 0}, {0, 2, 0}}), InfiniteBlock);
  CHECK_THROWS_AS(lat({{1, 1, 0}, {2, 2, 0}, {0, 0, 3}}), InfiniteBlock);
  CHECK_THROWS_AS(lat({}), InfiniteBlock);
}

TEST_CASE("reduction and membership examples") {
  const auto g21 = lat({{4, -2, 0}, {2, 0, 1}, {0, 2, 0}, {0, 0, 2}});
  CHECK(g21.reduce({2, 0, 1}) == Vec3{0, 0, 0});
  CHECK(g21.contains({0, 0, 0}));
  CHECK(g21.contains({2, 0, 1}));
  CHECK_FALSE(g21.contains({1, 0, 0}));
  const auto diag = lat({{2, 0, 0}, {0, 2, 0}, {0, 0, 2}});
  CHECK(diag.reduce({0, 0, 3}) == Vec3{0, 0, 1});
  const Vec3 once = g21.reduce({5, 1, 7});
  CHECK(g21.reduce(once) == once);
}

TEST_CASE("canonical form does not depend on generator order") {
  std::mt19937 rng(11);
  for (int n = 0; n < 300; ++n) {
    auto gens = random_gens(rng);
    const auto l = lat(gens);
    std::shuffle(gens.begin(), gens.end(), rng);
    CHECK(lat(gens) == l);
    gens.push_back(plus(gens[0], gens[1]));
    CHECK(lat(gens) == l);
  }
}

TEST_CASE("hermite shape") {
  std::mt19937 rng(12);
  for (int n = 0; n < 300; ++n) {
    const auto l = lat(random_gens(rng));
    const auto& b = l.basis();
    for (std::size_t j = 0; j < 3; ++j) {
      CHECK(b[j][j] > 0);
      for (std::size_t i = 0; i < j; ++i) {
        CHECK(b[j][i] == 0);
        CHECK(b[i][j] >= 0);
        CHECK(b[i][j] < b[j][j]);
      }
    }
    CHECK(l.index() == b[0][0] * b[1][1] * b[2][2]);
  }
}

TEST_CASE("lattice properties") {
  std::mt19937 rng(13);
  std::uniform_int_distribution<Int> d(-40, 40);
  for (int n = 0; n < 200; ++n) {
    const auto gens = random_gens(rng);
    const auto l = lat(gens);
    for (const auto& g : gens) CHECK(l.contains(g));

    // superset of generators gives a sublattice of smaller index
    auto more = gens;
    more.push_back({d(rng) % 5, d(rng) % 5, d(rng) % 5});
    const auto bigger = lat(more);
    CHECK(l.index() % bigger.index() == 0);

    for (int k = 0; k < 20; ++k) {
      const Vec3 x{d(rng), d(rng), d(rng)}, y{d(rng), d(rng), d(rng)};
      const Vec3 rx = l.reduce(x);
      CHECK(l.reduce(rx) == rx);
      CHECK(l.contains(minus(x, rx)));
      CHECK(l.reduce(plus(x, y)) == l.reduce(plus(rx, l.reduce(y))));
      CHECK(l.contains(x) == (rx == Vec3{0, 0, 0}));
    }
  }
}

TEST_CASE("boxed representatives are distinct cosets") {
  std::mt19937 rng(14);
  for (int n = 0; n < 40; ++n) {
    const auto l = lat(random_gens(rng));
    std::set<Vec3> seen;
    for (Int t = 0; t < l.pivot(0); ++t)
      for (Int u = 0; u < l.pivot(1); ++u)
        for (Int v = 0; v < l.pivot(2); ++v) {
          const Vec3 x{t, u, v};
          CHECK(l.reduce(x) == x);
          seen.insert(l.reduce(x));
        }
    CHECK(static_cast<Int>(seen.size()) == l.index());
  }
}

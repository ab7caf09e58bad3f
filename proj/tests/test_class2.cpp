#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <map>
#include <random>
#include <string>

#include "cap2/class2.hpp"
#include "cap2/oracle.hpp"

using namespace cap2;

namespace {

std::string violated(const TypeParams& p) {
  try {
    validate(p);
  } catch (const ParameterError& e) {
    return e.constraint();
  }
  return "";
}

std::vector<TypeParams> params_up_to(int n) {
  std::vector<TypeParams> all;
  for (int k = 1; k <= n; ++k)
    for (const auto& p : params_of_order(k)) all.push_back(p);
  return all;
}

}  // namespace

TEST_CASE("validation examples") {
  CHECK(violated(TypeI{3, 2, 2}) == "");
  CHECK(violated(TypeII{4, 4, 2, 1}) == "");
  CHECK(violated(TypeII{2, 1, 1, 0}) == "α+β+σ>3");
  CHECK(violated(TypeI{2, 3, 1}) == "α≥β");
  CHECK(violated(TypeI{2, 1, 2}) == "β≥γ");
  CHECK(violated(TypeI{1, 1, 0}) == "γ≥1");
  CHECK(violated(TypeII{4, 1, 2, 0}) == "β≥γ");
  CHECK(violated(TypeII{4, 2, 1, 1}) == "γ>σ");
  CHECK(violated(TypeII{2, 2, 2, 1}) == "α+σ≥2γ");
  CHECK(violated(TypeII{4, 2, 1, -1}) == "σ≥0");
  CHECK(violated(TypeIII{0}) == "γ≥1");
  CHECK(violated(TypeI{31, 1, 1}) == "exponent≤30");
}

TEST_CASE("dihedral exclusion message") {
  try {
    validate(TypeII{2, 1, 1, 0});
    FAIL("expected a parameter error");
  } catch (const ParameterError& e) {
    const std::string what = e.what();
    CHECK(what.find("α+β+σ>3") != std::string::npos);
    CHECK(what.find("dihedral") != std::string::npos);
  }
}

TEST_CASE("raw parameters must match the type arity") {
  RawParams raw;
  CHECK_THROWS_AS(validate(raw), ParameterError);
  raw.kind = Kind::I;
  raw.alpha = 2;
  raw.beta = 1;
  raw.gamma = 1;
  CHECK(validate(raw) == TypeParams{TypeI{2, 1, 1}});
  raw.sigma = 0;
  CHECK_THROWS_AS(validate(raw), ParameterError);
  raw.kind = Kind::III;
  raw.sigma.reset();
  CHECK_THROWS_AS(validate(raw), ParameterError);
  raw.alpha.reset();
  raw.beta.reset();
  CHECK(validate(raw) == TypeParams{TypeIII{1}});
  raw.kind = Kind::II;
  CHECK_THROWS_AS(validate(raw), ParameterError);
}

TEST_CASE("names and kinds") {
  CHECK(to_string(TypeParams{TypeI{1, 1, 1}}) == "I(1,1,1)");
  CHECK(to_string(TypeParams{TypeII{3, 2, 2, 1}}) == "II(3,2,2,1)");
  CHECK(to_string(TypeParams{TypeIII{1}}) == "III(1)");
  CHECK(parse_kind("ii") == Kind::II);
  CHECK(parse_kind("III") == Kind::III);
  CHECK_FALSE(parse_kind("iv").has_value());
  CHECK(order_log2(TypeII{4, 4, 2, 1}) == 9);
  CHECK(order_log2(TypeIII{2}) == 6);
}

TEST_CASE("parameter tuples by order") {
  CHECK(params_of_order(3) == std::vector<TypeParams>{TypeI{1, 1, 1}, TypeIII{1}});
  for (int n = 1; n <= 9; ++n)
    for (const auto& p : params_of_order(n)) {
      CHECK(order_log2(p) == n);
      CHECK_NOTHROW(validate(p));
    }
}

TEST_CASE("models have the right order, relations and class") {
  for (const auto& p : params_up_to(9)) {
    CAPTURE(to_string(p));
    const Class2Group g = model(p);
    CHECK(g.order() == pow2(order_log2(p)));
    const GroupTable t = enumerate(g);
    CHECK(nilpotency_class(t) == 2);
    for (Id id = 0; id < g.order(); ++id) CHECK(g.index(g.element(id)) == id);
  }
}

TEST_CASE("generator orders") {
  const auto g = model(TypeII{3, 2, 2, 1});
  CHECK(g.order_of(g.a()) == 8);
  CHECK(g.order_of(g.b()) == 4);
  CHECK(g.order_of(g.commutator(g.a(), g.b())) == 4);
  CHECK(g.fold(0, 0, 2) == g.fold(4, 0, 0));
  const auto q = model(TypeIII{1});
  CHECK(q.order_of(q.a()) == 4);
  CHECK(q.power(q.a(), 2) == q.power(q.b(), 2));
  CHECK(q.power(q.b(), 2) == q.commutator(q.a(), q.b()));
  const auto h = model(TypeI{3, 2, 1});
  CHECK(h.order_of(h.commutator(h.a(), h.b())) == 2);
}

TEST_CASE("associativity of the models") {
  for (const auto& p : params_up_to(6)) {
    const Class2Group g = model(p);
    int failures = 0;
    for (Id x = 0; x < g.order(); ++x)
      for (Id y = 0; y < g.order(); ++y)
        for (Id z = 0; z < g.order(); ++z) {
          const Elt2 ex = g.element(x), ey = g.element(y), ez = g.element(z);
          if (g.mul(g.mul(ex, ey), ez) != g.mul(ex, g.mul(ey, ez))) ++failures;
        }
    CHECK_MESSAGE(failures == 0, to_string(p));
  }
  std::mt19937 rng(31);
  for (const auto& p : params_of_order(9)) {
    const Class2Group g = model(p);
    std::uniform_int_distribution<Id> pick(0, static_cast<Id>(g.order() - 1));
    int failures = 0;
    for (int n = 0; n < 20000; ++n) {
      const Elt2 x = g.element(pick(rng)), y = g.element(pick(rng)), z = g.element(pick(rng));
      if (g.mul(g.mul(x, y), z) != g.mul(x, g.mul(y, z))) ++failures;
    }
    CHECK_MESSAGE(failures == 0, to_string(p));
  }
}

TEST_CASE("fingerprints of small groups") {
  const Fingerprint d8 = fingerprint(model(TypeI{1, 1, 1}));
  CHECK(d8.order == 8);
  CHECK(d8.exponent == 4);
  CHECK(d8.center_order == 2);
  CHECK(d8.derived_order == 2);
  CHECK(d8.abelian_invariants == std::array<Int, 2>{2, 2});
  CHECK(d8.order_histogram == std::map<Int, Int>{{1, 1}, {2, 5}, {4, 2}});
  const Fingerprint q8 = fingerprint(model(TypeIII{1}));
  CHECK(q8.order_histogram == std::map<Int, Int>{{1, 1}, {2, 1}, {4, 6}});
}

TEST_CASE("distinct parameters give non-isomorphic groups apart from the known alias") {
  for (int n = 3; n <= 9; ++n) {
    const auto ps = params_of_order(n);
    std::vector<Fingerprint> fps;
    for (const auto& p : ps) fps.push_back(fingerprint(model(p)));
    for (std::size_t i = 0; i < ps.size(); ++i)
      for (std::size_t j = 0; j < ps.size(); ++j) {
        if (i == j || !(fps[i] == fps[j])) continue;
        CAPTURE(to_string(ps[i]));
        CAPTURE(to_string(ps[j]));
        const bool alias = isomorphic_alias(ps[i]) == std::optional{ps[j]} ||
                           isomorphic_alias(ps[j]) == std::optional{ps[i]};
        CHECK(iso_2gen(enumerate(model(ps[i])), model(ps[j])).has_value() == alias);
      }
  }
}

TEST_CASE("alias family") {
  CHECK(isomorphic_alias(TypeII{3, 2, 2, 1}) == std::optional<TypeParams>{TypeI{2, 2, 2}});
  CHECK(isomorphic_alias(TypeII{4, 3, 3, 2}) == std::optional<TypeParams>{TypeI{3, 3, 3}});
  CHECK_FALSE(isomorphic_alias(TypeII{3, 2, 2, 0}).has_value());
  CHECK_FALSE(isomorphic_alias(TypeI{2, 2, 2}).has_value());
  for (int beta = 2; beta <= 3; ++beta) {
    const TypeParams p = TypeII{beta + 1, beta, beta, beta - 1};
    CHECK(iso_2gen(enumerate(model(p)), model(*isomorphic_alias(p))).has_value());
  }
}

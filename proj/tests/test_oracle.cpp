#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "cap2/nilprod.hpp"
#include "cap2/oracle.hpp"

using namespace cap2;

TEST_CASE("word parsing") {
  CHECK(parse_word("aAbB") == LetterWord{Letter::a, Letter::A, Letter::b, Letter::B});
  CHECK(parse_word("a * b  A") == LetterWord{Letter::a, Letter::b, Letter::A});
  CHECK(parse_word("").empty());
  CHECK_THROWS_AS(parse_word("abc"), std::invalid_argument);
  CHECK(to_string(parse_word("ABab")) == "ABab");
}

TEST_CASE("collection examples") {
  CHECK(collect_word("") == hall::identity);
  CHECK(collect_word("aA") == hall::identity);
  CHECK(collect_word("ba") == FreeElt{1, 1, -1, 0, 0});
  CHECK(collect_word("ABab") == hall::comm_ab);
  CHECK(collect_word("abab") == hall::power(hall::a * hall::b, 2));
  CHECK(collect_word(word_of(hall::comm_aba)) == hall::comm_aba);
  CHECK(collect_word(word_of(hall::comm_abb)) == hall::comm_abb);
  CHECK(collect_word("AABaab") == FreeElt{0, 0, 2, 1, 0});
}

TEST_CASE("word_of round trip") {
  std::mt19937 rng(41);
  std::uniform_int_distribution<Int> d(-5, 5);
  for (int n = 0; n < 2000; ++n) {
    const FreeElt x{d(rng), d(rng), d(rng), d(rng), d(rng)};
    CHECK(collect_word(word_of(x)) == x);
  }
}

TEST_CASE("collection is a homomorphism on concatenation") {
  std::mt19937 rng(42);
  std::uniform_int_distribution<int> letter(0, 3), len(0, 30);
  auto random_word = [&] {
    LetterWord w(static_cast<std::size_t>(len(rng)));
    for (auto& l : w) l = static_cast<Letter>(letter(rng));
    return w;
  };
  for (int n = 0; n < 3000; ++n) {
    const LetterWord x = random_word(), y = random_word();
    LetterWord xy = x;
    xy.insert(xy.end(), y.begin(), y.end());
    CHECK(collect_word(xy) == collect_word(x) * collect_word(y));
  }
}

TEST_CASE("group tables") {
  const auto g = build({2, 1, {}});
  const GroupTable t = enumerate(g);
  CHECK(t.size() == 64);
  CHECK(t.memoized());
  CHECK(t.order_of(t.generators()[0]) == 4);
  CHECK(nilpotency_class(t) == 3);
  const auto series = lcs(t);
  REQUIRE(series.size() == 4);
  CHECK(series[0].size() == 64);
  CHECK(series[1].size() == 8);
  CHECK(series[2].size() == 4);
  CHECK(series[3].size() == 1);
  for (Id x = 0; x < t.size(); ++x) {
    CHECK(t.mul(x, t.inverse(x)) == t.identity());
    CHECK(t.power(x, t.order_of(x)) == t.identity());
  }
  const Id a = t.generators()[0];
  const Id sq = t.power(a, 2);
  const Id gens[] = {sq};
  CHECK(closure(t, gens).size() == 2);
  CHECK(normal_closure(t, gens).size() > 2);
  CHECK_THROWS_AS(quotient_central(t, closure(t, gens)), std::invalid_argument);
  CHECK_THROWS(quotient_normal(t, closure(t, gens)));
  const GroupTable ab = quotient_normal(t, lcs(t)[1]);
  CHECK(ab.size() == 8);
  CHECK(nilpotency_class(ab) == 1);
}

TEST_CASE("tables reject non-generating pairs") {
  const auto g = build({2, 1, {}});
  CHECK_THROWS_AS(GroupTable(64, g.index(g.identity()), {g.index(g.a()), g.index(g.a())},
                             [g](Id x, Id y) { return g.index(g.mul(g.element(x), g.element(y))); }),
                  std::invalid_argument);
}

TEST_CASE("brute center of large tables scans against generators") {
  const auto g = build({3, 3, {}});
  const GroupTable t = enumerate(g);
  CHECK_FALSE(t.memoized());
  CHECK(brute_center(t) == subgroup_elements(g, center(g)));
}

TEST_CASE("isomorphism search") {
  const GroupTable d8 = enumerate(model(TypeI{1, 1, 1}));
  CHECK(iso_2gen(d8, model(TypeI{1, 1, 1})).has_value());
  CHECK_FALSE(iso_2gen(d8, model(TypeIII{1})).has_value());
  CHECK_FALSE(iso_2gen(d8, model(TypeI{2, 1, 1})).has_value());

  const auto q = model(TypeIII{1});
  const GroupTable q8 = enumerate(q);
  int involutions = 0;
  for (Id x = 0; x < q8.size(); ++x) involutions += q8.order_of(x) == 2;
  CHECK(involutions == 1);
  CHECK(recognize(q8) == TypeParams{TypeIII{1}});

  // the images must satisfy every relation of the target
  const auto target = model(TypeII{3, 2, 2, 1});
  const GroupTable t = enumerate(target);
  const auto iso = iso_2gen(t, target);
  REQUIRE(iso.has_value());
  CHECK(satisfies_all(t, target.relations(), iso->image_a, iso->image_b));
}

TEST_CASE("every model is recognized as itself") {
  for (int n = 3; n <= 8; ++n)
    for (const auto& p : params_of_order(n)) {
      CAPTURE(to_string(p));
      CHECK(recognize(enumerate(model(p))) == std::optional{isomorphic_alias(p).value_or(p)});
    }
}

TEST_CASE("abelian tables are not recognized") {
  const GroupTable t = quotient_normal(enumerate(build({2, 1, {}})), lcs(enumerate(build({2, 1, {}})))[1]);
  CHECK_FALSE(recognize(t).has_value());
}

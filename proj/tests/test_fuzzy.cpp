#include <catch2/catch_amalgamated.hpp>

#include "fuzzsg/decomposition.hpp"
#include "fuzzsg/enumeration.hpp"
#include "fuzzsg/fuzzy.hpp"

#include "helpers.hpp"
#include "oracles.hpp"

using namespace fuzzsg;
using fuzzsg::test::fuzzy;
using fuzzsg::test::set_of;
using fuzzsg::test::values;

TEST_CASE("convolve reproduces the null semigroup example", "[fuzzy]") {
  auto s = null_semigroup(2);
  auto f = fuzzy(s, {"1/2", "7/10"});
  auto g = fuzzy(s, {"3/10", "9/10"});
  // Oracle first: the four factorizations of 0 give 3/10, 1/2, 3/10, 7/10.
  auto expected = oracle::convolve(s, f.values(), g.values());
  REQUIRE(expected == values({"7/10", "0"}));
  CHECK(convolve(s, f, g).values() == expected);
  CHECK((f * g) == fuzzy(s, {"7/10", "0"}));
}

TEST_CASE("convolve is 0 off S^2", "[fuzzy]") {
  for (auto const& s : fuzzsg::test::small_semigroups()) {
    auto const sq = square_set(s);
    auto const f  = FuzzySet::constant(s, Membership::one());
    auto const fg = convolve(s, f, f);
    for (auto x : s.elements()) {
      if (!sq.contains(x))
        REQUIRE(fg[x] == Membership::zero());
      else
        REQUIRE(fg[x] == Membership::one());
    }
  }
}

TEST_CASE("convolve matches the definition on every chain-valued pair", "[fuzzy][oracle]") {
  auto const chain = make_chain(2);
  for (std::size_t n = 1; n <= 2; ++n) {
    for (auto const& s : all_semigroups(n)) {
      auto const all = all_fuzzy_sets(s, chain);
      for (auto const& f : all) {
        for (auto const& g : all)
          REQUIRE(convolve(s, f, g).values() == oracle::convolve(s, f.values(), g.values()));
      }
    }
  }
}

TEST_CASE("convolve rejects fuzzy sets of another semigroup", "[fuzzy]") {
  auto s = null_semigroup(2);
  auto t = left_zero(2);
  CHECK_THROWS_AS(convolve(s, FuzzySet::constant(s, Membership::one()),
                           FuzzySet::constant(t, Membership::one())),
                  Error);
  CHECK_THROWS_AS(FuzzySet(s, values({"1"})), Error);
}

TEST_CASE("convolve is associative and chain-closed", "[fuzzy][property]") {
  auto check = [](Semigroup const& s, Chain const& chain) {
    auto const all = all_fuzzy_sets(s, chain);
    for (auto const& f : all) {
      for (auto const& g : all) {
        auto const fg = convolve(s, f, g);
        for (auto x : s.elements())
          REQUIRE(chain.contains(fg[x]));
        for (auto const& h : all)
          REQUIRE(convolve(s, fg, h) == convolve(s, f, convolve(s, g, h)));
      }
    }
  };
  for (auto const& s : all_semigroups(2))
    check(s, make_chain(2));
  for (auto const& s : all_semigroups(3))
    check(s, make_chain(1));
}

TEST_CASE("star_convolve on worked examples", "[fuzzy]") {
  auto nl = null_semigroup(2);
  auto a  = nl.at("a");
  RestrictedFuzzySet f(nl, a, values({"1/2"}));
  RestrictedFuzzySet g(nl, a, values({"1"}));
  CHECK(star_convolve(nl, a, f, g).values() == values({"0"}));

  auto mg = monogenic(3, 1);
  auto c2 = mg.at("c2");
  REQUIRE(mg.divisors(c2) == set_of(mg, {"c", "c2"}));
  RestrictedFuzzySet p(mg, c2, values({"3/4", "1/3"}));
  RestrictedFuzzySet q(mg, c2, values({"1/2", "1"}));
  auto               pq = p * q;
  CHECK(pq[mg.at("c")] == Membership::zero());
  CHECK(pq[c2] == Membership(1, 2));
  CHECK_THROWS_AS(pq[mg.at("c3")], Error);
}

TEST_CASE("star_convolve rejects mismatched bases", "[fuzzy]") {
  auto mg = monogenic(3, 1);
  RestrictedFuzzySet p(mg, mg.at("c2"), values({"1", "1"}));
  RestrictedFuzzySet q(mg, mg.at("c3"), values({"1", "1", "1"}));
  CHECK_THROWS_AS(star_convolve(mg, mg.at("c2"), p, q), Error);
  CHECK_THROWS_AS(RestrictedFuzzySet(mg, mg.at("c2"), values({"1"})), Error);
}

TEST_CASE("restriction turns convolution into the star product", "[fuzzy][property]") {
  auto const chain = make_chain(2);
  for (auto const& s : all_semigroups(2)) {
    auto const all = all_fuzzy_sets(s, chain);
    for (auto a : s.elements()) {
      for (auto const& f : all) {
        for (auto const& g : all)
          REQUIRE(restrict(s, a, convolve(s, f, g))
                  == star_convolve(s, a, restrict(s, a, f), restrict(s, a, g)));
      }
    }
  }
}

TEST_CASE("star is associative and matches the triple-product formula",
          "[fuzzy][property]") {
  auto check = [](Semigroup const& s, Chain const& chain) {
    for (auto a : s.elements()) {
      auto const all = all_restricted_fuzzy_sets(s, a, chain);
      auto const d   = s.divisors(a);
      for (auto const& f : all) {
        for (auto const& g : all) {
          auto const fg = star_convolve(s, a, f, g);
          for (auto const& h : all) {
            auto const lhs = star_convolve(s, a, fg, h);
            REQUIRE(lhs == star_convolve(s, a, f, star_convolve(s, a, g, h)));
            // max over s = uvy of min(f(u), g(v), h(y)); 0 outside S^3.
            for (auto x : d.members()) {
              Membership best = Membership::zero();
              for (auto u : d.members())
                for (auto v : d.members())
                  for (auto y : d.members())
                    if (s.product(s.product(u, v), y) == x)
                      best = std::max(best, std::min({f[u], g[v], h[y]}));
              REQUIRE(lhs[x] == best);
            }
          }
        }
      }
    }
  };
  for (auto const& s : all_semigroups(2))
    check(s, make_chain(2));
  check(monogenic(3, 1), make_chain(2));
  check(full_transformation(2), make_chain(1));
}

TEST_CASE("characteristic functions", "[fuzzy]") {
  auto nl = null_semigroup(2);
  CHECK(characteristic(nl, set_of(nl, {"a"})) == fuzzy(nl, {"0", "1"}));
  CHECK(characteristic(nl, ElementSet::full(2)) == FuzzySet::constant(nl, Membership::one()));
  CHECK_THROWS_AS(characteristic(nl, ElementSet(2)), Error);
}

TEST_CASE("embed_element is an injective homomorphism", "[fuzzy][property]") {
  auto nl = null_semigroup(2);
  CHECK(convolve(nl, embed_element(nl, nl.at("a")), embed_element(nl, nl.at("a")))
        == embed_element(nl, nl.at("0")));
  auto lz = left_zero(2);
  CHECK(convolve(lz, embed_element(lz, lz.at("a")), embed_element(lz, lz.at("b")))
        == embed_element(lz, lz.at("a")));

  auto all = fuzzsg::test::small_semigroups();
  for (auto const& s : fuzzsg::test::catalog_semigroups())
    all.push_back(s);
  for (auto const& s : all) {
    for (auto x : s.elements()) {
      for (auto y : s.elements()) {
        REQUIRE(convolve(s, embed_element(s, x), embed_element(s, y))
                == embed_element(s, s.product(x, y)));
        REQUIRE((x == y) == (embed_element(s, x) == embed_element(s, y)));
      }
    }
  }
}

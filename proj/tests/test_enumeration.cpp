#include <catch2/catch_amalgamated.hpp>

#include <set>

#include "fuzzsg/enumeration.hpp"

#include "helpers.hpp"
#include "oracles.hpp"

using namespace fuzzsg;
using fuzzsg::test::values;

TEST_CASE("make_chain", "[enumeration]") {
  CHECK(make_chain(1).values() == values({"0", "1"}));
  CHECK(make_chain(2).values() == values({"0", "1/2", "1"}));
  CHECK(make_chain(4).values() == values({"0", "1/4", "1/2", "3/4", "1"}));
  CHECK_THROWS_AS(make_chain(0), Error);
  CHECK_THROWS_AS(Chain(values({"0", "1/2"})), Error);
  CHECK_THROWS_AS(Chain(values({"0", "1/2", "1/2", "1"})), Error);
  CHECK_THROWS_AS(Chain(values({"1/2", "1"})), Error);
}

TEST_CASE("enumerate_fuzzy_sets yields |chain|^|S| distinct sets", "[enumeration]") {
  auto check = [](Semigroup const& s, Chain const& c, std::size_t expected) {
    auto stream = enumerate_fuzzy_sets(s, c);
    CHECK(stream.count() == expected);
    std::set<std::vector<std::string>> seen;
    while (auto f = stream.next()) {
      std::vector<std::string> key;
      for (auto const& v : f->values()) {
        REQUIRE(c.contains(v));
        key.push_back(v.to_string());
      }
      REQUIRE(seen.insert(key).second);
    }
    CHECK(seen.size() == expected);
  };
  check(null_semigroup(2), make_chain(1), 4);
  check(monogenic(3, 1), make_chain(1), 8);
  check(left_zero(2), make_chain(2), 9);
  check(full_transformation(2), make_chain(2), 81);
}

TEST_CASE("enumerate_semigroups counts labelled semigroups", "[enumeration][oracle]") {
  std::vector<std::uint64_t> const expected{1, 8, 113};
  for (std::size_t n = 1; n <= 3; ++n) {
    // The count itself comes from the independent decoder.
    REQUIRE(oracle::count_semigroups(n) == expected[n - 1]);
    auto          stream = enumerate_semigroups(n);
    std::uint64_t count  = 0;
    std::set<std::vector<std::size_t>> tables;
    while (auto s = stream.next()) {
      ++count;
      REQUIRE(s->order() == n);
      REQUIRE_FALSE(find_associativity_violation(n, s->table()));
      REQUIRE(tables.insert(s->table()).second);
    }
    CHECK(count == expected[n - 1]);
  }
}

TEST_CASE("catalog families", "[enumeration]") {
  auto lz = catalog("left_zero", {2});
  CHECK(lz.names() == std::vector<std::string>{"a", "b"});
  CHECK(lz.table() == std::vector<std::size_t>{0, 0, 1, 1});
  CHECK(catalog("right_zero", {2}).table() == std::vector<std::size_t>{0, 1, 0, 1});
  CHECK(catalog("null", {2}).names() == std::vector<std::string>{"0", "a"});
  CHECK(catalog("cyclic_group", {2}).names() == std::vector<std::string>{"e", "g"});
  auto mg = catalog("monogenic", {3, 1});
  CHECK(mg.names() == std::vector<std::string>{"c", "c2", "c3"});

  auto ft = catalog("full_transformation", {2});
  CHECK(ft.names() == std::vector<std::string>{"t11", "t12", "t21", "t22"});
  // Products apply the left factor first: swap then constant-1 is constant-1.
  CHECK(ft.name(ft.product(ft.at("t21"), ft.at("t11"))) == "t11");
  CHECK(ft.name(ft.product(ft.at("t11"), ft.at("t21"))) == "t22");
  CHECK(ft.name(ft.product(ft.at("t21"), ft.at("t21"))) == "t12");
  CHECK(full_transformation(3).order() == 27);

  CHECK_THROWS_AS(catalog("free_band", {2}), Error);
  CHECK_THROWS_AS(catalog("monogenic", {3}), Error);
  CHECK_THROWS_AS(catalog("left_zero", {0}), Error);
  CHECK_THROWS_AS(catalog("full_transformation", {4}), Error);
}

TEST_CASE("monogenic(i, p) has order i + p - 1 and a kernel of size p",
          "[enumeration][property]") {
  for (std::size_t i = 1; i <= 6; ++i) {
    for (std::size_t p = 1; p <= 6; ++p) {
      auto s = monogenic(i, p);
      REQUIRE(s.order() == i + p - 1);
      REQUIRE(kernel(s).size() == p);
      // c^(i + p) = c^i
      auto c = Element{0};
      auto x = c;
      for (std::size_t k = 1; k < i + p; ++k)
        x = s.product(x, c);
      REQUIRE(x.index == i - 1);
    }
  }
}

TEST_CASE("transformation_closure", "[enumeration]") {
  auto single = transformation_closure({{0, 0}});
  CHECK(single.order() == 1);

  auto t2 = transformation_closure({{1, 0}, {0, 0}});
  CHECK(t2.order() == 4);
  auto ft = full_transformation(2);
  std::set<std::string> a(t2.names().begin(), t2.names().end());
  std::set<std::string> b(ft.names().begin(), ft.names().end());
  CHECK(a == b);
  for (auto x : t2.elements()) {
    for (auto y : t2.elements())
      REQUIRE(t2.name(t2.product(x, y)) == ft.name(ft.product(ft.at(t2.name(x)), ft.at(t2.name(y)))));
  }

  // Already closed: the group {id, swap}.
  auto z2 = transformation_closure({{0, 1}, {1, 0}});
  CHECK(z2.names() == std::vector<std::string>{"t12", "t21"});

  CHECK(transformation_closure({{1, 0, 0}, {1, 2, 0}, {0, 0, 2}}).order() <= 27);
  CHECK(transformation_closure({{1, 2, 0}, {1, 0, 2}, {0, 0, 2}}).order() == 27);

  CHECK_THROWS_AS(transformation_closure({}), Error);
  CHECK_THROWS_AS(transformation_closure({{0, 1}, {0}}), Error);
  CHECK_THROWS_AS(transformation_closure({{0, 2}}), Error);
}

TEST_CASE("random_fuzzy_set is deterministic and chain-valued", "[enumeration]") {
  auto s     = monogenic(3, 1);
  auto chain = make_chain(2);
  CHECK(random_fuzzy_set(s, chain, 7) == random_fuzzy_set(s, chain, 7));
  for (std::uint64_t seed = 0; seed < 50; ++seed) {
    auto f = random_fuzzy_set(s, chain, seed);
    for (auto const& v : f.values())
      REQUIRE(chain.contains(v));
    auto r = random_restricted_fuzzy_set(s, s.at("c2"), chain, seed);
    REQUIRE(r.values().size() == 2);
  }
}

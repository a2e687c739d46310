#include <catch2/catch_amalgamated.hpp>

#include "fuzzsg/io.hpp"
#include "fuzzsg/verify.hpp"

#include "helpers.hpp"

using namespace fuzzsg;
using Catch::Matchers::ContainsSubstring;
using fuzzsg::test::fuzzy;
using fuzzsg::test::values;

TEST_CASE("semigroup JSON round trip", "[io]") {
  for (auto const& s : fuzzsg::test::catalog_semigroups()) {
    auto const j = to_json(s);
    auto const t = semigroup_from_json(j);
    REQUIRE(t == s);
    REQUIRE(t.names() == s.names());
  }
  auto const j = to_json(null_semigroup(2));
  CHECK(j.dump() == R"({"elements":["0","a"],"table":[["0","0"],["0","0"]]})");
}

TEST_CASE("semigroup JSON errors name the offending field", "[io]") {
  auto doc = parse_json(R"({"elements":["a","b"],"table":[["a","x"],["b","b"]]})", "t");
  CHECK_THROWS_WITH(semigroup_from_json(doc), ContainsSubstring("\"x\""));
  CHECK_THROWS_AS(semigroup_from_json(parse_json(R"({"elements":["a"]})", "t")), SchemaError);
  CHECK_THROWS_AS(semigroup_from_json(parse_json(R"({"elements":[1],"table":[[1]]})", "t")),
                  SchemaError);
  CHECK_THROWS_AS(semigroup_from_json(
                      parse_json(R"({"elements":["a","b"],"table":[["b","a"],["a","a"]]})", "t")),
                  AssociativityError);
  CHECK_THROWS_WITH(parse_json("{", "broken.json"), ContainsSubstring("broken.json"));
}

TEST_CASE("membership JSON is a string of an exact rational", "[io]") {
  CHECK(to_json(Membership(1, 2)) == json("1/2"));
  CHECK(membership_from_json(json("7/10"), "f.a") == Membership(7, 10));
  CHECK_THROWS_WITH(membership_from_json(json(0.5), "f.a"), ContainsSubstring("f.a"));
  CHECK_THROWS_AS(membership_from_json(json(1), "f.a"), SchemaError);
  CHECK_THROWS_AS(membership_from_json(json("0.5"), "f.a"), Error);
}

TEST_CASE("fuzzy set JSON", "[io]") {
  auto s = null_semigroup(2);
  auto f = fuzzy(s, {"1/2", "7/10"});
  CHECK(to_json(f).dump() == R"({"0":"1/2","a":"7/10"})");
  CHECK(fuzzy_set_from_json(s, to_json(f)) == f);
  CHECK(fuzzy_set_from_json(s, parse_json(R"({"a":"1","0":"0"})", "t")) == fuzzy(s, {"0", "1"}));
  CHECK_THROWS_WITH(fuzzy_set_from_json(s, parse_json(R"({"0":"1"})", "t")),
                    ContainsSubstring("\"a\""));
  CHECK_THROWS_WITH(fuzzy_set_from_json(s, parse_json(R"({"0":"1","a":"1","b":"1"})", "t")),
                    ContainsSubstring("\"b\""));
  CHECK_THROWS_AS(fuzzy_set_from_json(s, parse_json(R"({"0":"1","a":0.5})", "t")), SchemaError);
}

TEST_CASE("restricted fuzzy set JSON lists exactly the divisors", "[io]") {
  auto s = monogenic(3, 1);
  RestrictedFuzzySet r(s, s.at("c2"), values({"3/4", "1/3"}));
  auto const j = to_json(r);
  CHECK(j.dump() == R"({"base":"c2","values":{"c":"3/4","c2":"1/3"}})");
  CHECK(restricted_fuzzy_set_from_json(s, j) == r);
  CHECK_THROWS_AS(restricted_fuzzy_set_from_json(
                      s, parse_json(R"({"base":"c2","values":{"c":"1"}})", "t")),
                  SchemaError);
  CHECK_THROWS_AS(restricted_fuzzy_set_from_json(
                      s, parse_json(R"({"base":"c2","values":{"c":"1","c2":"1","c3":"1"}})", "t")),
                  SchemaError);
  CHECK_THROWS_AS(restricted_fuzzy_set_from_json(
                      s, parse_json(R"({"base":"c9","values":{}})", "t")),
                  Error);
}

TEST_CASE("subdirect tuple JSON", "[io]") {
  auto s = null_semigroup(2);
  auto t = subdirect_embed(s, fuzzy(s, {"1/2", "3/4"}));
  CHECK(to_json(t).dump()
        == R"({"0":{"base":"0","values":{"0":"1/2","a":"3/4"}},"a":{"base":"a","values":{"a":"3/4"}}})");
}

TEST_CASE("chain JSON", "[io]") {
  auto c = make_chain(2);
  CHECK(to_json(c).dump() == R"(["0","1/2","1"])");
  CHECK(chain_from_json(to_json(c)) == c);
  CHECK_THROWS_AS(chain_from_json(parse_json(R"(["0","1/2"])", "t")), Error);
}

TEST_CASE("verification report JSON round trip", "[io][verify]") {
  auto s    = null_semigroup(2);
  auto pass = verify_theorem(s, Theorem::star_assoc, Strategy::exhaustive(make_chain(1)));
  REQUIRE(pass.passed);
  auto const j = to_json(pass);
  CHECK(j["verdict"] == "pass");
  CHECK(j["theorem"] == "star-assoc");
  CHECK(j["strategy"] == "exhaustive");
  CHECK(j["counterexample"].is_null());
  CHECK(report_from_json(j) == pass);
  CHECK(report_from_json(parse_json(j.dump(), "r")) == pass);

  auto sampled = verify_theorem(s, Theorem::distributivity, Strategy::sampled(make_chain(3), 20, 9));
  CHECK(report_from_json(to_json(sampled)) == sampled);
  CHECK(to_json(sampled)["seed"] == 9);

  auto fail           = pass;
  fail.passed         = false;
  fail.counterexample = json{{"base", "a"}};
  auto const jf       = to_json(fail);
  CHECK(jf["verdict"] == "fail");
  CHECK(report_from_json(jf) == fail);

  auto broken        = jf;
  broken["verdict"] = "pass";
  CHECK_THROWS_AS(report_from_json(broken), SchemaError);
  broken["verdict"] = "maybe";
  CHECK_THROWS_AS(report_from_json(broken), SchemaError);
}

#include "fuzzsg/io.hpp"

#include <fstream>
#include <sstream>

namespace fuzzsg {

  namespace {
    std::string const& expect_string(json const& j, std::string const& field) {
      if (!j.is_string())
        throw SchemaError(field + ": expected a string, got " + j.dump());
      return j.get_ref<std::string const&>();
    }

    json const& expect_member(json const& j, char const* key, std::string const& field) {
      if (!j.is_object())
        throw SchemaError(field + ": expected an object");
      auto it = j.find(key);
      if (it == j.end())
        throw SchemaError(field + ": missing field \"" + key + "\"");
      return *it;
    }
  }  // namespace

  json to_json(Semigroup const& s) {
    json table = json::array();
    for (auto x : s.elements()) {
      json row = json::array();
      for (auto y : s.elements())
        row.push_back(s.name(s.product(x, y)));
      table.push_back(std::move(row));
    }
    return json{{"elements", s.names()}, {"table", std::move(table)}};
  }

  Semigroup semigroup_from_json(json const& j) {
    auto const& elements = expect_member(j, "elements", "semigroup");
    if (!elements.is_array())
      throw SchemaError("elements: expected an array of names");
    std::vector<std::string> names;
    for (std::size_t i = 0; i < elements.size(); ++i)
      names.push_back(expect_string(elements[i], "elements[" + std::to_string(i) + "]"));
    auto const& table = expect_member(j, "table", "semigroup");
    if (!table.is_array())
      throw SchemaError("table: expected an array of rows");
    std::vector<std::vector<std::string>> rows;
    for (std::size_t i = 0; i < table.size(); ++i) {
      std::string const field = "table[" + std::to_string(i) + "]";
      if (!table[i].is_array())
        throw SchemaError(field + ": expected an array");
      std::vector<std::string> row;
      for (std::size_t k = 0; k < table[i].size(); ++k)
        row.push_back(expect_string(table[i][k], field + "[" + std::to_string(k) + "]"));
      rows.push_back(std::move(row));
    }
    try {
      return build_semigroup(names, rows);
    } catch (AssociativityError const&) {
      throw;
    } catch (Error const& e) {
      throw SchemaError(e.what());
    }
  }

  json to_json(Membership const& m) {
    return m.to_string();
  }

  Membership membership_from_json(json const& j, std::string const& field) {
    if (j.is_number())
      throw SchemaError(field + ": membership must be a rational string such as"
                        " \"1/2\", got the number " + j.dump());
    try {
      return Membership::parse(expect_string(j, field));
    } catch (SchemaError const&) {
      throw;
    } catch (Error const& e) {
      throw SchemaError(field + ": " + e.what());
    }
  }

  json to_json(FuzzySet const& f) {
    json out = json::object();
    for (auto x : f.semigroup().elements())
      out[f.semigroup().name(x)] = to_json(f[x]);
    return out;
  }

  FuzzySet fuzzy_set_from_json(Semigroup const& s, json const& j) {
    if (!j.is_object())
      throw SchemaError("fuzzy set: expected an object mapping element names to values");
    std::vector<std::optional<Membership>> values(s.order());
    for (auto const& [key, value] : j.items()) {
      auto e = s.find(key);
      if (!e)
        throw SchemaError("fuzzy set: unknown element \"" + key + "\"");
      values[e->index] = membership_from_json(value, "fuzzy set[\"" + key + "\"]");
    }
    std::vector<Membership> out;
    for (auto x : s.elements()) {
      if (!values[x.index])
        throw SchemaError("fuzzy set: missing value for element \"" + s.name(x) + "\"");
      out.push_back(*values[x.index]);
    }
    return FuzzySet(s, std::move(out));
  }

  json to_json(RestrictedFuzzySet const& f) {
    auto const& s      = f.semigroup();
    json        values = json::object();
    for (auto x : f.domain().members())
      values[s.name(x)] = to_json(f[x]);
    return json{{"base", s.name(f.base())}, {"values", std::move(values)}};
  }

  RestrictedFuzzySet restricted_fuzzy_set_from_json(Semigroup const& s, json const& j) {
    auto const& base_name = expect_string(expect_member(j, "base", "restricted fuzzy set"), "base");
    auto        base      = s.find(base_name);
    if (!base)
      throw SchemaError("base: unknown element \"" + base_name + "\"");
    auto const& values = expect_member(j, "values", "restricted fuzzy set");
    if (!values.is_object())
      throw SchemaError("values: expected an object");
    auto const&                            domain = s.divisors(*base);
    std::vector<std::optional<Membership>> got(s.order());
    for (auto const& [key, value] : values.items()) {
      auto e = s.find(key);
      if (!e)
        throw SchemaError("values: unknown element \"" + key + "\"");
      if (!domain.contains(*e))
        throw SchemaError("values: \"" + key + "\" is not a divisor of \"" + base_name + "\"");
      got[e->index] = membership_from_json(value, "values[\"" + key + "\"]");
    }
    std::vector<Membership> out;
    for (auto x : domain.members()) {
      if (!got[x.index])
        throw SchemaError("values: missing value for divisor \"" + s.name(x) + "\"");
      out.push_back(*got[x.index]);
    }
    return RestrictedFuzzySet(s, *base, std::move(out));
  }

  json to_json(SubdirectTuple const& t) {
    json out = json::object();
    for (auto const& c : t.components())
      out[c.semigroup().name(c.base())] = to_json(c);
    return out;
  }

  json to_json(Chain const& c) {
    json out = json::array();
    for (auto const& m : c.values())
      out.push_back(to_json(m));
    return out;
  }

  Chain chain_from_json(json const& j) {
    if (!j.is_array())
      throw SchemaError("chain: expected an array");
    std::vector<Membership> values;
    for (std::size_t i = 0; i < j.size(); ++i)
      values.push_back(membership_from_json(j[i], "chain[" + std::to_string(i) + "]"));
    try {
      return Chain(std::move(values));
    } catch (Error const& e) {
      throw SchemaError(std::string("chain: ") + e.what());
    }
  }

  json parse_json(std::string const& text, std::string const& source) {
    try {
      return json::parse(text);
    } catch (json::parse_error const& e) {
      throw SchemaError(source + ": invalid JSON at byte " + std::to_string(e.byte)
                        + ": " + e.what());
    }
  }

  json read_json_file(std::filesystem::path const& path) {
    std::ifstream in(path);
    if (!in)
      throw Error("cannot open \"" + path.string() + "\"");
    std::ostringstream buf;
    buf << in.rdbuf();
    return parse_json(buf.str(), path.string());
  }

  void write_text_file(std::filesystem::path const& path, std::string const& text) {
    std::ofstream out(path);
    if (!out)
      throw Error("cannot write \"" + path.string() + "\"");
    out << text;
    if (!out)
      throw Error("error while writing \"" + path.string() + "\"");
  }

}  // namespace fuzzsg

#pragma once

#include <filesystem>
#include <string>

#include "json.hpp"

#include "fuzzsg/decomposition.hpp"
#include "fuzzsg/enumeration.hpp"
#include "fuzzsg/fuzzy.hpp"
#include "fuzzsg/semigroup.hpp"

namespace fuzzsg {

  using json = nlohmann::ordered_json;

  /// Malformed input document; the message names the offending field.
  class SchemaError : public Error {
   public:
    using Error::Error;
  };

  // Semigroup: {"elements": [names...], "table": [[names...]...]}, row-major,
  // table[i][j] = elements[i] * elements[j].
  json      to_json(Semigroup const& s);
  Semigroup semigroup_from_json(json const& j);

  // Membership: "p/q" in lowest terms, "0" or "1".  JSON numbers are rejected.
  json       to_json(Membership const& m);
  Membership membership_from_json(json const& j, std::string const& field);

  // FuzzySet: {name: membership} covering the whole carrier, in carrier order.
  json     to_json(FuzzySet const& f);
  FuzzySet fuzzy_set_from_json(Semigroup const& s, json const& j);

  // RestrictedFuzzySet: {"base": name, "values": {divisor name: membership}}
  // with exactly the divisors of the base as keys.
  json               to_json(RestrictedFuzzySet const& f);
  RestrictedFuzzySet restricted_fuzzy_set_from_json(Semigroup const& s, json const& j);

  // SubdirectTuple: {base name: restricted fuzzy set json} for every element.
  json to_json(SubdirectTuple const& t);

  json  to_json(Chain const& c);
  Chain chain_from_json(json const& j);

  /// Parses JSON text, reporting syntax errors with their byte position.
  json parse_json(std::string const& text, std::string const& source);

  /// Reads and parses a JSON file; throws Error on I/O failure.
  json read_json_file(std::filesystem::path const& path);

  void write_text_file(std::filesystem::path const& path, std::string const& text);

}  // namespace fuzzsg

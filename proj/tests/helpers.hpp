#pragma once

#include <string>
#include <vector>

#include "fuzzsg/enumeration.hpp"
#include "fuzzsg/fuzzy.hpp"

namespace fuzzsg::test {

  inline Membership m(char const* text) {
    return Membership::parse(text);
  }

  inline std::vector<Membership> values(std::vector<char const*> const& texts) {
    std::vector<Membership> out;
    for (auto t : texts)
      out.push_back(m(t));
    return out;
  }

  inline FuzzySet fuzzy(Semigroup const& s, std::vector<char const*> const& texts) {
    return FuzzySet(s, values(texts));
  }

  inline ElementSet set_of(Semigroup const& s, std::vector<std::string> const& names) {
    ElementSet out(s.order());
    for (auto const& n : names)
      out.insert(s.at(n));
    return out;
  }

  /// Every semigroup of order 1, 2 and 3.
  inline std::vector<Semigroup> small_semigroups() {
    std::vector<Semigroup> out;
    for (std::size_t n = 1; n <= 3; ++n) {
      for (auto& s : all_semigroups(n))
        out.push_back(std::move(s));
    }
    return out;
  }

  /// The catalog families up to order 6, plus the full transformation
  /// semigroups on up to three points.
  inline std::vector<Semigroup> catalog_semigroups() {
    std::vector<Semigroup> out;
    for (std::size_t n = 1; n <= 6; ++n) {
      out.push_back(left_zero(n));
      out.push_back(right_zero(n));
      out.push_back(null_semigroup(n));
      out.push_back(cyclic_group(n));
    }
    for (std::size_t i = 1; i <= 6; ++i) {
      for (std::size_t p = 1; i + p - 1 <= 6; ++p)
        out.push_back(monogenic(i, p));
    }
    for (std::size_t n = 1; n <= 3; ++n)
      out.push_back(full_transformation(n));
    return out;
  }

}  // namespace fuzzsg::test

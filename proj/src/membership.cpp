#include "fuzzsg/membership.hpp"

#include <cctype>
#include <charconv>

namespace fuzzsg {

  namespace {
    std::string_view trim(std::string_view s) {
      while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front())))
        s.remove_prefix(1);
      while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back())))
        s.remove_suffix(1);
      return s;
    }

    std::int64_t parse_digits(std::string_view digits, std::string_view whole) {
      if (digits.empty())
        throw Error("invalid membership value \"" + std::string(whole) + "\"");
      for (char c : digits) {
        if (!std::isdigit(static_cast<unsigned char>(c)))
          throw Error("invalid membership value \"" + std::string(whole)
                      + "\": expected \"p/q\" with non-negative integers");
      }
      std::int64_t out = 0;
      auto [ptr, ec]
          = std::from_chars(digits.data(), digits.data() + digits.size(), out);
      if (ec != std::errc() || ptr != digits.data() + digits.size())
        throw Error("membership value out of range: \"" + std::string(whole)
                    + "\"");
      return out;
    }
  }  // namespace

  Membership::Membership(std::int64_t num, std::int64_t den) {
    if (den == 0)
      throw Error("membership value with zero denominator");
    value_type v(num, den);
    if (v < value_type(0) || v > value_type(1))
      throw Error("membership value " + std::to_string(num) + "/"
                  + std::to_string(den) + " is outside [0, 1]");
    value_ = v;
  }

  Membership Membership::parse(std::string_view text) {
    auto const s     = trim(text);
    auto const slash = s.find('/');
    if (slash == std::string_view::npos)
      return Membership(parse_digits(s, text), 1);
    return Membership(parse_digits(s.substr(0, slash), text),
                      parse_digits(s.substr(slash + 1), text));
  }

  std::string Membership::to_string() const {
    if (value_.denominator() == 1)
      return std::to_string(value_.numerator());
    return std::to_string(value_.numerator()) + "/"
           + std::to_string(value_.denominator());
  }

  std::ostream& operator<<(std::ostream& os, Membership const& m) {
    return os << m.to_string();
  }

}  // namespace fuzzsg

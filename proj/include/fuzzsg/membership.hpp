#pragma once

#include <cstdint>
#include <ostream>
#include <string>
#include <string_view>

#include <boost/rational.hpp>

#include "fuzzsg/error.hpp"

namespace fuzzsg {

  /// An exact membership degree in the closed unit interval.
  ///
  /// Meet is the minimum and join is the maximum; both are exact.  Values
  /// print as "p/q" in lowest terms, with "0" and "1" for the endpoints.
  class Membership {
   public:
    using value_type = boost::rational<std::int64_t>;

    constexpr Membership() = default;

    /// Throws Error unless 0 <= num/den <= 1 and den != 0.
    Membership(std::int64_t num, std::int64_t den);

    static Membership zero() { return Membership(); }
    static Membership one() { return Membership(1, 1); }

    /// Parses "p/q", "p" (only "0" and "1" are in range) with optional
    /// surrounding whitespace.  Decimal and exponent forms are rejected.
    static Membership parse(std::string_view text);

    std::int64_t numerator() const { return value_.numerator(); }
    std::int64_t denominator() const { return value_.denominator(); }
    value_type const& value() const { return value_; }

    std::string to_string() const;

    friend bool operator==(Membership const& a, Membership const& b) {
      return a.value_ == b.value_;
    }
    friend bool operator<(Membership const& a, Membership const& b) {
      return a.value_ < b.value_;
    }
    friend bool operator>(Membership const& a, Membership const& b) {
      return b < a;
    }
    friend bool operator<=(Membership const& a, Membership const& b) {
      return !(b < a);
    }
    friend bool operator>=(Membership const& a, Membership const& b) {
      return !(a < b);
    }

   private:
    value_type value_{0};
  };

  inline Membership meet(Membership const& a, Membership const& b) {
    return b < a ? b : a;
  }

  inline Membership join(Membership const& a, Membership const& b) {
    return a < b ? b : a;
  }

  std::ostream& operator<<(std::ostream& os, Membership const& m);

}  // namespace fuzzsg

#pragma once

#include <vector>

#include "fuzzsg/membership.hpp"
#include "fuzzsg/semigroup.hpp"

namespace fuzzsg {

  /// A total mapping from the carrier of a semigroup to [0, 1].
  class FuzzySet {
   public:
    /// `values[i]` is the membership of element i.
    FuzzySet(Semigroup s, std::vector<Membership> values);

    static FuzzySet constant(Semigroup s, Membership value);

    Semigroup const& semigroup() const { return semigroup_; }

    Membership const& operator[](Element x) const { return values_.at(x.index); }
    std::vector<Membership> const& values() const { return values_; }

    friend bool operator==(FuzzySet const& a, FuzzySet const& b) {
      return a.values_ == b.values_ && a.semigroup_ == b.semigroup_;
    }

   private:
    Semigroup               semigroup_;
    std::vector<Membership> values_;
  };

  /// A fuzzy set of the divisor set D_a of a fixed base element a.
  class RestrictedFuzzySet {
   public:
    /// `values` lists memberships for the members of D_a in increasing
    /// index order.
    RestrictedFuzzySet(Semigroup s, Element base, std::vector<Membership> values);

    Semigroup const&  semigroup() const { return semigroup_; }
    Element           base() const { return base_; }
    ElementSet const& domain() const { return semigroup_.divisors(base_); }

    /// Throws Error if x is not a divisor of the base.
    Membership const& operator[](Element x) const;

    /// Memberships over D_a in increasing index order.
    std::vector<Membership> values() const;

    friend bool operator==(RestrictedFuzzySet const& a,
                           RestrictedFuzzySet const& b) {
      return a.base_ == b.base_ && a.values_ == b.values_
             && a.semigroup_ == b.semigroup_;
    }

   private:
    struct FullTag {};
    RestrictedFuzzySet(FullTag, Semigroup s, Element base, std::vector<Membership> full);

    friend RestrictedFuzzySet restrict(Semigroup const&, Element, FuzzySet const&);
    friend RestrictedFuzzySet star_convolve(Semigroup const&,
                                            Element,
                                            RestrictedFuzzySet const&,
                                            RestrictedFuzzySet const&);

    Semigroup semigroup_;
    Element   base_;
    // Indexed by carrier position; zero outside D_a.
    std::vector<Membership> values_;
  };

  /// Sup-min convolution on F(S):
  /// (f o g)(s) = max over s = xy of min(f(x), g(y)), and 0 if s is not in S^2.
  FuzzySet convolve(Semigroup const& s, FuzzySet const& f, FuzzySet const& g);

  inline FuzzySet operator*(FuzzySet const& f, FuzzySet const& g) {
    return convolve(f.semigroup(), f, g);
  }

  /// The same convolution on F*(D_a).  Only factorizations inside D_a can
  /// occur, since xy in D_a forces x, y in D_a.
  RestrictedFuzzySet star_convolve(Semigroup const&          s,
                                   Element                   a,
                                   RestrictedFuzzySet const& f,
                                   RestrictedFuzzySet const& g);

  inline RestrictedFuzzySet operator*(RestrictedFuzzySet const& f,
                                      RestrictedFuzzySet const& g) {
    return star_convolve(f.semigroup(), f.base(), f, g);
  }

  /// Characteristic function of a nonempty subset; throws Error on an empty one.
  FuzzySet characteristic(Semigroup const& s, ElementSet const& a);

  /// s -> C_{s}, the embedding of S into (F(S), o).
  FuzzySet embed_element(Semigroup const& s, Element x);

}  // namespace fuzzsg

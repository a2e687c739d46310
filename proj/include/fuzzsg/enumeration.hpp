#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "fuzzsg/fuzzy.hpp"
#include "fuzzsg/membership.hpp"
#include "fuzzsg/semigroup.hpp"

namespace fuzzsg {

  /// A finite chain 0 = c_0 < c_1 < ... < c_k = 1 of membership values.
  class Chain {
   public:
    /// Throws Error unless strictly increasing from 0 to 1.
    explicit Chain(std::vector<Membership> values);

    std::size_t                    size() const { return values_.size(); }
    Membership const&              operator[](std::size_t i) const { return values_.at(i); }
    std::vector<Membership> const& values() const { return values_; }
    bool                           contains(Membership const& m) const;

    friend bool operator==(Chain const&, Chain const&) = default;

   private:
    std::vector<Membership> values_;
  };

  /// {0, 1/k, 2/k, ..., 1}; throws Error for k == 0.
  Chain make_chain(std::size_t k);

  /// Every chain-valued fuzzy set of S, in odometer order with element 0 as
  /// the fastest digit.
  class FuzzySetStream {
   public:
    FuzzySetStream(Semigroup s, Chain chain);

    /// |chain|^|S|.
    std::uint64_t count() const;

    std::optional<FuzzySet> next();

   private:
    Semigroup                s_;
    Chain                    chain_;
    std::vector<std::size_t> digits_;
    bool                     done_ = false;
  };

  inline FuzzySetStream enumerate_fuzzy_sets(Semigroup const& s, Chain const& chain) {
    return FuzzySetStream(s, chain);
  }

  std::vector<FuzzySet> all_fuzzy_sets(Semigroup const& s, Chain const& chain);

  /// Every chain-valued fuzzy set of D_a.
  std::vector<RestrictedFuzzySet>
  all_restricted_fuzzy_sets(Semigroup const& s, Element a, Chain const& chain);

  /// Streams every associative table on the carrier {s0, ..., s(n-1)}.
  /// Labelled: isomorphic copies are yielded separately.
  class SemigroupStream {
   public:
    explicit SemigroupStream(std::size_t n);

    std::size_t order() const { return n_; }

    std::optional<Semigroup> next();

   private:
    std::size_t              n_;
    std::vector<std::string> names_;
    std::vector<std::size_t> table_;
    bool                     done_ = false;
  };

  inline SemigroupStream enumerate_semigroups(std::size_t n) {
    return SemigroupStream(n);
  }

  std::vector<Semigroup> all_semigroups(std::size_t n);

  // Catalog families.  Names: letters for left/right zero, "0" then letters
  // for null semigroups, "e", "g", "g2", ... for cyclic groups, "c", "c2",
  // ... for monogenic semigroups, one-line images for transformations.
  Semigroup left_zero(std::size_t n);
  Semigroup right_zero(std::size_t n);
  Semigroup null_semigroup(std::size_t n);
  Semigroup cyclic_group(std::size_t n);
  /// <c | c^(index + period) = c^index>, of order index + period - 1.
  Semigroup monogenic(std::size_t index, std::size_t period);
  /// All self-maps of an n-set, n <= 3.
  Semigroup full_transformation(std::size_t n);

  /// Dispatches on a family name: left_zero, right_zero, null, cyclic_group,
  /// monogenic (two parameters), full_transformation.
  Semigroup catalog(std::string const& name, std::vector<std::size_t> const& params);

  /// Catalog family names accepted by catalog().
  std::vector<std::string> const& catalog_names();

  /// A self-map of {0, ..., n-1}, as its list of images.
  using Transformation = std::vector<std::size_t>;

  /// The semigroup generated by `generators` under composition, where the
  /// product xy applies x first and then y.  Elements appear in
  /// breadth-first order starting with the distinct generators.
  Semigroup transformation_closure(std::vector<Transformation> const& generators);

  /// Deterministic in (S, chain, seed).
  FuzzySet random_fuzzy_set(Semigroup const& s, Chain const& chain, std::uint64_t seed);

  RestrictedFuzzySet random_restricted_fuzzy_set(Semigroup const& s,
                                                 Element          a,
                                                 Chain const&     chain,
                                                 std::uint64_t    seed);

}  // namespace fuzzsg

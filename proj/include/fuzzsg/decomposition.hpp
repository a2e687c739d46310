#pragma once

#include <vector>

#include "fuzzsg/fuzzy.hpp"
#include "fuzzsg/semigroup.hpp"

namespace fuzzsg {

  /// A Delta_a-class is represented losslessly by the restriction of any
  /// member to D_a.
  using DeltaClassRep = RestrictedFuzzySet;

  /// (f, g) in Delta_a: f and g agree on every divisor of a.
  bool delta_related(Semigroup const& s, Element a, FuzzySet const& f, FuzzySet const& g);

  /// f restricted to D_a; the class map F(S)/Delta_a -> F*(D_a).
  RestrictedFuzzySet restrict(Semigroup const& s, Element a, FuzzySet const& f);

  /// The fuzzy set equal to f on D_a and 0 on N_a.
  FuzzySet extend_by_zero(Semigroup const& s, Element a, RestrictedFuzzySet const& f);

  /// An element of the direct product of the F*(D_a), one component per a.
  class SubdirectTuple {
   public:
    explicit SubdirectTuple(std::vector<RestrictedFuzzySet> components);

    std::size_t size() const { return components_.size(); }

    /// The projection onto F*(D_a).
    RestrictedFuzzySet const& operator[](Element a) const {
      return components_.at(a.index);
    }
    std::vector<RestrictedFuzzySet> const& components() const { return components_; }

    friend bool operator==(SubdirectTuple const&, SubdirectTuple const&) = default;

   private:
    std::vector<RestrictedFuzzySet> components_;
  };

  /// f -> (f|D_a)_{a in S}.
  SubdirectTuple subdirect_embed(Semigroup const& s, FuzzySet const& f);

  /// Componentwise star product in the direct product.
  SubdirectTuple star_convolve(Semigroup const& s, SubdirectTuple const& f, SubdirectTuple const& g);

}  // namespace fuzzsg

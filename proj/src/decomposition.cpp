#include "fuzzsg/decomposition.hpp"

#include <utility>

namespace fuzzsg {

  bool delta_related(Semigroup const& s,
                     Element          a,
                     FuzzySet const&  f,
                     FuzzySet const&  g) {
    if (!f.semigroup().same_as(s) || !g.semigroup().same_as(s))
      throw Error("fuzzy sets belong to different semigroups");
    for (auto x : s.divisors(a).members()) {
      if (f[x] != g[x])
        return false;
    }
    return true;
  }

  RestrictedFuzzySet restrict(Semigroup const& s, Element a, FuzzySet const& f) {
    if (!f.semigroup().same_as(s))
      throw Error("fuzzy set belongs to a different semigroup");
    return RestrictedFuzzySet(RestrictedFuzzySet::FullTag{}, s, a, f.values());
  }

  FuzzySet extend_by_zero(Semigroup const& s, Element a, RestrictedFuzzySet const& f) {
    if (!f.semigroup().same_as(s) || f.base() != a)
      throw Error("restricted fuzzy set has a different base or semigroup");
    std::vector<Membership> out(s.order(), Membership::zero());
    for (auto x : s.divisors(a).members())
      out[x.index] = f[x];
    return FuzzySet(s, std::move(out));
  }

  SubdirectTuple::SubdirectTuple(std::vector<RestrictedFuzzySet> components)
      : components_(std::move(components)) {
    for (std::size_t i = 0; i < components_.size(); ++i) {
      if (components_[i].base().index != i
          || components_[i].semigroup().order() != components_.size())
        throw Error("component " + std::to_string(i)
                    + " of a subdirect tuple must be based at element "
                    + std::to_string(i));
    }
  }

  SubdirectTuple subdirect_embed(Semigroup const& s, FuzzySet const& f) {
    std::vector<RestrictedFuzzySet> parts;
    parts.reserve(s.order());
    for (auto a : s.elements())
      parts.push_back(restrict(s, a, f));
    return SubdirectTuple(std::move(parts));
  }

  SubdirectTuple star_convolve(Semigroup const&      s,
                               SubdirectTuple const& f,
                               SubdirectTuple const& g) {
    if (f.size() != s.order() || g.size() != s.order())
      throw Error("subdirect tuples do not match the semigroup");
    std::vector<RestrictedFuzzySet> parts;
    parts.reserve(s.order());
    for (auto a : s.elements())
      parts.push_back(star_convolve(s, a, f[a], g[a]));
    return SubdirectTuple(std::move(parts));
  }

}  // namespace fuzzsg

#include "fuzzsg/fuzzy.hpp"

#include <utility>

namespace fuzzsg {

  namespace {
    void require_same(Semigroup const& s, Semigroup const& t) {
      if (!s.same_as(t))
        throw Error("fuzzy sets belong to different semigroups");
    }

    // max over the factorizations of x of min(f(u), g(v)); 0 when x is not
    // a product.
    template <typename F, typename G>
    Membership sup_min(Semigroup const& s, Element x, F const& f, G const& g) {
      Membership best = Membership::zero();
      for (auto const& [u, v] : s.factorizations(x))
        best = join(best, meet(f[u], g[v]));
      return best;
    }
  }  // namespace

  FuzzySet::FuzzySet(Semigroup s, std::vector<Membership> values)
      : semigroup_(std::move(s)), values_(std::move(values)) {
    if (values_.size() != semigroup_.order())
      throw Error("fuzzy set has " + std::to_string(values_.size())
                  + " values for a semigroup of order "
                  + std::to_string(semigroup_.order()));
  }

  FuzzySet FuzzySet::constant(Semigroup s, Membership value) {
    auto const n = s.order();
    return FuzzySet(std::move(s), std::vector<Membership>(n, value));
  }

  RestrictedFuzzySet::RestrictedFuzzySet(Semigroup               s,
                                         Element                 base,
                                         std::vector<Membership> values)
      : semigroup_(std::move(s)), base_(base) {
    if (base.index >= semigroup_.order())
      throw Error("base element out of range");
    auto const members = domain().members();
    if (values.size() != members.size())
      throw Error("restricted fuzzy set has " + std::to_string(values.size())
                  + " values, but the base has "
                  + std::to_string(members.size()) + " divisors");
    values_.assign(semigroup_.order(), Membership::zero());
    for (std::size_t i = 0; i < members.size(); ++i)
      values_[members[i].index] = values[i];
  }

  RestrictedFuzzySet::RestrictedFuzzySet(FullTag,
                                         Semigroup               s,
                                         Element                 base,
                                         std::vector<Membership> full)
      : semigroup_(std::move(s)), base_(base), values_(std::move(full)) {
    auto const& d = domain();
    for (auto x : semigroup_.elements()) {
      if (!d.contains(x))
        values_[x.index] = Membership::zero();
    }
  }

  Membership const& RestrictedFuzzySet::operator[](Element x) const {
    if (!domain().contains(x))
      throw Error("element \"" + semigroup_.name(x) + "\" is not a divisor of \""
                  + semigroup_.name(base_) + "\"");
    return values_[x.index];
  }

  std::vector<Membership> RestrictedFuzzySet::values() const {
    std::vector<Membership> out;
    for (auto x : domain().members())
      out.push_back(values_[x.index]);
    return out;
  }

  FuzzySet convolve(Semigroup const& s, FuzzySet const& f, FuzzySet const& g) {
    require_same(s, f.semigroup());
    require_same(s, g.semigroup());
    std::vector<Membership> out(s.order());
    for (auto x : s.elements())
      out[x.index] = sup_min(s, x, f, g);
    return FuzzySet(s, std::move(out));
  }

  RestrictedFuzzySet star_convolve(Semigroup const&          s,
                                   Element                   a,
                                   RestrictedFuzzySet const& f,
                                   RestrictedFuzzySet const& g) {
    require_same(s, f.semigroup());
    require_same(s, g.semigroup());
    if (f.base() != a || g.base() != a)
      throw Error("restricted fuzzy sets are based at different elements");
    std::vector<Membership> out(s.order());
    for (auto x : s.divisors(a).members())
      out[x.index] = sup_min(s, x, f, g);
    return RestrictedFuzzySet(RestrictedFuzzySet::FullTag{}, s, a, std::move(out));
  }

  FuzzySet characteristic(Semigroup const& s, ElementSet const& a) {
    if (a.universe_size() != s.order())
      throw Error("element set does not belong to this semigroup");
    if (a.empty())
      throw Error("characteristic function of the empty set is not defined;"
                  " use FuzzySet::constant for the zero fuzzy set");
    std::vector<Membership> out(s.order());
    for (auto x : s.elements())
      out[x.index] = a.contains(x) ? Membership::one() : Membership::zero();
    return FuzzySet(s, std::move(out));
  }

  FuzzySet embed_element(Semigroup const& s, Element x) {
    ElementSet single(s.order());
    single.insert(x);
    return characteristic(s, single);
  }

}  // namespace fuzzsg

#include "fuzzsg/enumeration.hpp"

#include <algorithm>
#include <map>
#include <random>
#include <utility>

namespace fuzzsg {

  ////////////////////////////////////////////////////////////////////////
  // Chains and fuzzy set universes
  ////////////////////////////////////////////////////////////////////////

  Chain::Chain(std::vector<Membership> values) : values_(std::move(values)) {
    if (values_.size() < 2 || values_.front() != Membership::zero()
        || values_.back() != Membership::one())
      throw Error("a chain must start at 0 and end at 1");
    for (std::size_t i = 1; i < values_.size(); ++i) {
      if (!(values_[i - 1] < values_[i]))
        throw Error("chain values must be strictly increasing");
    }
  }

  bool Chain::contains(Membership const& m) const {
    return std::binary_search(values_.begin(), values_.end(), m);
  }

  Chain make_chain(std::size_t k) {
    if (k == 0)
      throw Error("make_chain needs k >= 1");
    std::vector<Membership> values;
    for (std::size_t i = 0; i <= k; ++i)
      values.emplace_back(static_cast<std::int64_t>(i), static_cast<std::int64_t>(k));
    return Chain(std::move(values));
  }

  FuzzySetStream::FuzzySetStream(Semigroup s, Chain chain)
      : s_(std::move(s)), chain_(std::move(chain)), digits_(s_.order(), 0) {}

  std::uint64_t FuzzySetStream::count() const {
    std::uint64_t out = 1;
    for (std::size_t i = 0; i < s_.order(); ++i)
      out *= chain_.size();
    return out;
  }

  std::optional<FuzzySet> FuzzySetStream::next() {
    if (done_)
      return std::nullopt;
    std::vector<Membership> values;
    values.reserve(digits_.size());
    for (auto d : digits_)
      values.push_back(chain_[d]);
    std::size_t i = 0;
    for (; i < digits_.size(); ++i) {
      if (++digits_[i] < chain_.size())
        break;
      digits_[i] = 0;
    }
    done_ = (i == digits_.size());
    return FuzzySet(s_, std::move(values));
  }

  std::vector<FuzzySet> all_fuzzy_sets(Semigroup const& s, Chain const& chain) {
    std::vector<FuzzySet> out;
    auto                  stream = enumerate_fuzzy_sets(s, chain);
    out.reserve(stream.count());
    while (auto f = stream.next())
      out.push_back(std::move(*f));
    return out;
  }

  std::vector<RestrictedFuzzySet>
  all_restricted_fuzzy_sets(Semigroup const& s, Element a, Chain const& chain) {
    std::size_t const        k = s.divisors(a).size();
    std::vector<std::size_t> digits(k, 0);
    std::vector<RestrictedFuzzySet> out;
    while (true) {
      std::vector<Membership> values;
      values.reserve(k);
      for (auto d : digits)
        values.push_back(chain[d]);
      out.emplace_back(s, a, std::move(values));
      std::size_t i = 0;
      for (; i < k; ++i) {
        if (++digits[i] < chain.size())
          break;
        digits[i] = 0;
      }
      if (i == k)
        break;
    }
    return out;
  }

  FuzzySet random_fuzzy_set(Semigroup const& s, Chain const& chain, std::uint64_t seed) {
    std::mt19937_64                            rng(seed);
    std::uniform_int_distribution<std::size_t> pick(0, chain.size() - 1);
    std::vector<Membership>                    values;
    for (std::size_t i = 0; i < s.order(); ++i)
      values.push_back(chain[pick(rng)]);
    return FuzzySet(s, std::move(values));
  }

  RestrictedFuzzySet random_restricted_fuzzy_set(Semigroup const& s,
                                                 Element          a,
                                                 Chain const&     chain,
                                                 std::uint64_t    seed) {
    std::mt19937_64                            rng(seed);
    std::uniform_int_distribution<std::size_t> pick(0, chain.size() - 1);
    std::vector<Membership>                    values;
    for (std::size_t i = 0; i < s.divisors(a).size(); ++i)
      values.push_back(chain[pick(rng)]);
    return RestrictedFuzzySet(s, a, std::move(values));
  }

  ////////////////////////////////////////////////////////////////////////
  // All semigroups of a given order
  ////////////////////////////////////////////////////////////////////////

  SemigroupStream::SemigroupStream(std::size_t n) : n_(n), table_(n * n, 0) {
    if (n == 0)
      throw Error("semigroup order must be positive");
    for (std::size_t i = 0; i < n; ++i)
      names_.push_back("s" + std::to_string(i));
  }

  std::optional<Semigroup> SemigroupStream::next() {
    while (!done_) {
      bool const associative = !find_associativity_violation(n_, table_);
      std::optional<Semigroup> found;
      if (associative)
        found.emplace(names_, table_);
      std::size_t i = 0;
      for (; i < table_.size(); ++i) {
        if (++table_[i] < n_)
          break;
        table_[i] = 0;
      }
      done_ = (i == table_.size());
      if (found)
        return found;
    }
    return std::nullopt;
  }

  std::vector<Semigroup> all_semigroups(std::size_t n) {
    std::vector<Semigroup> out;
    auto                   stream = enumerate_semigroups(n);
    while (auto s = stream.next())
      out.push_back(std::move(*s));
    return out;
  }

  ////////////////////////////////////////////////////////////////////////
  // Catalog
  ////////////////////////////////////////////////////////////////////////

  namespace {
    std::string letter_name(std::size_t i) {
      if (i < 26)
        return std::string(1, static_cast<char>('a' + i));
      return "x" + std::to_string(i);
    }

    void require_positive(std::size_t n, char const* family) {
      if (n == 0)
        throw Error(std::string(family) + " needs a positive order");
    }

    std::string transformation_name(Transformation const& t) {
      std::string out = "t";
      for (std::size_t i = 0; i < t.size(); ++i) {
        if (t.size() > 9 && i != 0)
          out += ".";
        out += std::to_string(t[i] + 1);
      }
      return out;
    }

    Transformation compose(Transformation const& first, Transformation const& second) {
      Transformation out(first.size());
      for (std::size_t i = 0; i < first.size(); ++i)
        out[i] = second[first[i]];
      return out;
    }

    Semigroup from_transformations(std::vector<Transformation> const& elems) {
      std::map<Transformation, std::size_t> index;
      std::vector<std::string>              names;
      for (std::size_t i = 0; i < elems.size(); ++i) {
        index.emplace(elems[i], i);
        names.push_back(transformation_name(elems[i]));
      }
      std::vector<std::size_t> table;
      table.reserve(elems.size() * elems.size());
      for (auto const& x : elems) {
        for (auto const& y : elems)
          table.push_back(index.at(compose(x, y)));
      }
      return Semigroup(std::move(names), std::move(table));
    }
  }  // namespace

  Semigroup left_zero(std::size_t n) {
    require_positive(n, "left_zero");
    std::vector<std::string> names;
    std::vector<std::size_t> table;
    for (std::size_t i = 0; i < n; ++i) {
      names.push_back(letter_name(i));
      for (std::size_t j = 0; j < n; ++j)
        table.push_back(i);
    }
    return Semigroup(std::move(names), std::move(table));
  }

  Semigroup right_zero(std::size_t n) {
    require_positive(n, "right_zero");
    std::vector<std::string> names;
    std::vector<std::size_t> table;
    for (std::size_t i = 0; i < n; ++i) {
      names.push_back(letter_name(i));
      for (std::size_t j = 0; j < n; ++j)
        table.push_back(j);
    }
    return Semigroup(std::move(names), std::move(table));
  }

  Semigroup null_semigroup(std::size_t n) {
    require_positive(n, "null");
    std::vector<std::string> names{"0"};
    for (std::size_t i = 1; i < n; ++i)
      names.push_back(letter_name(i - 1));
    return Semigroup(std::move(names), std::vector<std::size_t>(n * n, 0));
  }

  Semigroup cyclic_group(std::size_t n) {
    require_positive(n, "cyclic_group");
    std::vector<std::string> names{"e"};
    if (n > 1)
      names.push_back("g");
    for (std::size_t i = 2; i < n; ++i)
      names.push_back("g" + std::to_string(i));
    std::vector<std::size_t> table;
    for (std::size_t i = 0; i < n; ++i) {
      for (std::size_t j = 0; j < n; ++j)
        table.push_back((i + j) % n);
    }
    return Semigroup(std::move(names), std::move(table));
  }

  Semigroup monogenic(std::size_t index, std::size_t period) {
    if (index == 0 || period == 0)
      throw Error("monogenic needs index >= 1 and period >= 1");
    std::size_t const        m = index + period - 1;
    std::vector<std::string> names{"c"};
    for (std::size_t i = 2; i <= m; ++i)
      names.push_back("c" + std::to_string(i));
    // c^i c^j = c^k with k = i + j reduced into [index, m] modulo period.
    auto power = [&](std::size_t e) {
      return e <= m ? e : index + (e - index) % period;
    };
    std::vector<std::size_t> table;
    for (std::size_t i = 1; i <= m; ++i) {
      for (std::size_t j = 1; j <= m; ++j)
        table.push_back(power(i + j) - 1);
    }
    return Semigroup(std::move(names), std::move(table));
  }

  Semigroup full_transformation(std::size_t n) {
    if (n == 0 || n > 3)
      throw Error("full_transformation is available for 1 <= n <= 3");
    std::size_t total = 1;
    for (std::size_t i = 0; i < n; ++i)
      total *= n;
    // Lexicographic on images.
    std::vector<Transformation> elems;
    for (std::size_t code = 0; code < total; ++code) {
      Transformation t(n);
      std::size_t    c = code;
      for (std::size_t i = n; i-- > 0; c /= n)
        t[i] = c % n;
      elems.push_back(std::move(t));
    }
    return from_transformations(elems);
  }

  std::vector<std::string> const& catalog_names() {
    static std::vector<std::string> const names{"left_zero",
                                                "right_zero",
                                                "null",
                                                "cyclic_group",
                                                "monogenic",
                                                "full_transformation"};
    return names;
  }

  Semigroup catalog(std::string const& name, std::vector<std::size_t> const& params) {
    auto expect = [&](std::size_t k) {
      if (params.size() != k)
        throw Error("catalog family \"" + name + "\" takes " + std::to_string(k)
                    + " parameter(s), got " + std::to_string(params.size()));
    };
    if (name == "monogenic") {
      expect(2);
      return monogenic(params[0], params[1]);
    }
    expect(1);
    if (name == "left_zero")
      return left_zero(params[0]);
    if (name == "right_zero")
      return right_zero(params[0]);
    if (name == "null")
      return null_semigroup(params[0]);
    if (name == "cyclic_group")
      return cyclic_group(params[0]);
    if (name == "full_transformation")
      return full_transformation(params[0]);
    throw Error("unknown catalog family \"" + name + "\"");
  }

  Semigroup transformation_closure(std::vector<Transformation> const& generators) {
    if (generators.empty())
      throw Error("transformation_closure needs at least one generator");
    std::size_t const n = generators.front().size();
    for (auto const& g : generators) {
      if (g.size() != n || n == 0)
        throw Error("generators must be maps on a common nonempty set");
      for (auto v : g) {
        if (v >= n)
          throw Error("generator image out of range");
      }
    }
    std::vector<Transformation>           elems;
    std::map<Transformation, std::size_t> seen;
    auto add = [&](Transformation const& t) {
      if (seen.emplace(t, elems.size()).second)
        elems.push_back(t);
    };
    for (auto const& g : generators)
      add(g);
    // Every product of generators is x * g for a shorter product x.
    for (std::size_t i = 0; i < elems.size(); ++i) {
      for (auto const& g : generators)
        add(compose(elems[i], g));
    }
    return from_transformations(elems);
  }

}  // namespace fuzzsg

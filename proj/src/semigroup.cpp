#include "fuzzsg/semigroup.hpp"

#include <algorithm>
#include <unordered_set>

namespace fuzzsg {

  std::optional<std::array<std::size_t, 3>>
  find_associativity_violation(std::size_t n, std::vector<std::size_t> const& t) {
    for (std::size_t x = 0; x < n; ++x) {
      for (std::size_t y = 0; y < n; ++y) {
        std::size_t const xy = t[x * n + y];
        for (std::size_t z = 0; z < n; ++z) {
          if (t[xy * n + z] != t[x * n + t[y * n + z]])
            return std::array<std::size_t, 3>{x, y, z};
        }
      }
    }
    return std::nullopt;
  }

  ////////////////////////////////////////////////////////////////////////
  // Semigroup
  ////////////////////////////////////////////////////////////////////////

  Semigroup::Semigroup(std::vector<std::string> names,
                       std::vector<std::size_t> table) {
    std::size_t const n = names.size();
    if (n == 0)
      throw Error("a semigroup needs at least one element");
    if (table.size() != n * n)
      throw Error("table has " + std::to_string(table.size())
                  + " entries, expected " + std::to_string(n * n));
    std::unordered_set<std::string> seen;
    for (auto const& nm : names) {
      if (!seen.insert(nm).second)
        throw Error("duplicate element name \"" + nm + "\"");
    }
    for (std::size_t i = 0; i < table.size(); ++i) {
      if (table[i] >= n)
        throw Error("table entry " + std::to_string(i) + " is "
                    + std::to_string(table[i]) + ", not an element index");
    }
    if (auto w = find_associativity_violation(n, table)) {
      auto const [x, y, z] = *w;
      throw AssociativityError("operation is not associative: ("
                                   + names[x] + names[y] + ")" + names[z]
                                   + " != " + names[x] + "(" + names[y]
                                   + names[z] + ") for (" + names[x] + ", "
                                   + names[y] + ", " + names[z] + ")",
                               Element{x},
                               Element{y},
                               Element{z});
    }

    auto impl   = std::make_shared<Impl>();
    impl->names = std::move(names);
    impl->table = std::move(table);
    impl->factorizations.resize(n);
    for (std::size_t x = 0; x < n; ++x) {
      for (std::size_t y = 0; y < n; ++y) {
        impl->factorizations[impl->table[x * n + y]].emplace_back(Element{x},
                                                                  Element{y});
      }
    }
    impl_ = impl;

    std::vector<ElementSet> ideals;
    ideals.reserve(n);
    for (auto x : elements())
      ideals.push_back(principal_ideal(*this, x));
    impl->divisors.assign(n, ElementSet(n));
    for (std::size_t a = 0; a < n; ++a) {
      for (std::size_t x = 0; x < n; ++x) {
        if (ideals[x].contains(Element{a}))
          impl->divisors[a].insert(Element{x});
      }
    }
  }

  ElementSet const& Semigroup::divisors(Element a) const {
    return impl_->divisors.at(a.index);
  }

  std::optional<Element> Semigroup::find(std::string const& nm) const {
    auto const& ns = impl_->names;
    auto        it = std::find(ns.begin(), ns.end(), nm);
    if (it == ns.end())
      return std::nullopt;
    return Element{static_cast<std::size_t>(it - ns.begin())};
  }

  Element Semigroup::at(std::string const& nm) const {
    if (auto e = find(nm))
      return *e;
    throw Error("unknown element \"" + nm + "\"");
  }

  std::vector<Element> Semigroup::elements() const {
    std::vector<Element> out;
    out.reserve(order());
    for (std::size_t i = 0; i < order(); ++i)
      out.push_back(Element{i});
    return out;
  }

  bool Semigroup::same_as(Semigroup const& other) const {
    return impl_ == other.impl_
           || (impl_->names == other.impl_->names
               && impl_->table == other.impl_->table);
  }

  Semigroup build_semigroup(std::vector<std::string> const&              names,
                            std::vector<std::vector<std::string>> const& table) {
    std::size_t const n = names.size();
    if (table.size() != n)
      throw Error("table has " + std::to_string(table.size())
                  + " rows, expected " + std::to_string(n));
    std::vector<std::size_t> flat;
    flat.reserve(n * n);
    for (std::size_t i = 0; i < n; ++i) {
      if (table[i].size() != n)
        throw Error("table row " + std::to_string(i) + " has "
                    + std::to_string(table[i].size()) + " entries, expected "
                    + std::to_string(n));
      for (std::size_t j = 0; j < n; ++j) {
        auto it = std::find(names.begin(), names.end(), table[i][j]);
        if (it == names.end())
          throw Error("table[" + std::to_string(i) + "][" + std::to_string(j)
                      + "]: unknown element \"" + table[i][j] + "\"");
        flat.push_back(static_cast<std::size_t>(it - names.begin()));
      }
    }
    return Semigroup(names, std::move(flat));
  }

  ////////////////////////////////////////////////////////////////////////
  // ElementSet
  ////////////////////////////////////////////////////////////////////////

  ElementSet::ElementSet(std::size_t order, std::initializer_list<std::size_t> members)
      : bits_(order, false) {
    for (auto m : members)
      bits_.at(m) = true;
  }

  ElementSet ElementSet::full(std::size_t order) {
    ElementSet out(order);
    out.bits_.assign(order, true);
    return out;
  }

  std::size_t ElementSet::size() const {
    return static_cast<std::size_t>(std::count(bits_.begin(), bits_.end(), true));
  }

  std::vector<Element> ElementSet::members() const {
    std::vector<Element> out;
    for (std::size_t i = 0; i < bits_.size(); ++i) {
      if (bits_[i])
        out.push_back(Element{i});
    }
    return out;
  }

  ElementSet ElementSet::complement() const {
    ElementSet out(bits_.size());
    for (std::size_t i = 0; i < bits_.size(); ++i)
      out.bits_[i] = !bits_[i];
    return out;
  }

  ElementSet ElementSet::intersect(ElementSet const& other) const {
    if (other.bits_.size() != bits_.size())
      throw Error("element sets over different carriers");
    ElementSet out(bits_.size());
    for (std::size_t i = 0; i < bits_.size(); ++i)
      out.bits_[i] = bits_[i] && other.bits_[i];
    return out;
  }

  ElementSet ElementSet::unite(ElementSet const& other) const {
    if (other.bits_.size() != bits_.size())
      throw Error("element sets over different carriers");
    ElementSet out(bits_.size());
    for (std::size_t i = 0; i < bits_.size(); ++i)
      out.bits_[i] = bits_[i] || other.bits_[i];
    return out;
  }

  bool ElementSet::subset_of(ElementSet const& other) const {
    if (other.bits_.size() != bits_.size())
      throw Error("element sets over different carriers");
    for (std::size_t i = 0; i < bits_.size(); ++i) {
      if (bits_[i] && !other.bits_[i])
        return false;
    }
    return true;
  }

  std::string format_set(Semigroup const& s, ElementSet const& set) {
    std::string out = "{";
    bool        first = true;
    for (auto e : set.members()) {
      if (!first)
        out += ", ";
      out += s.name(e);
      first = false;
    }
    return out + "}";
  }

  ////////////////////////////////////////////////////////////////////////
  // ElementRelation
  ////////////////////////////////////////////////////////////////////////

  ElementRelation ElementRelation::identity(std::size_t order) {
    ElementRelation out(order);
    for (std::size_t i = 0; i < order; ++i)
      out.insert(Element{i}, Element{i});
    return out;
  }

  std::size_t ElementRelation::size() const {
    return static_cast<std::size_t>(std::count(bits_.begin(), bits_.end(), true));
  }

  bool ElementRelation::is_reflexive() const {
    for (std::size_t i = 0; i < order_; ++i) {
      if (!contains(Element{i}, Element{i}))
        return false;
    }
    return true;
  }

  bool ElementRelation::is_symmetric() const {
    for (std::size_t i = 0; i < order_; ++i) {
      for (std::size_t j = 0; j < order_; ++j) {
        if (contains(Element{i}, Element{j}) != contains(Element{j}, Element{i}))
          return false;
      }
    }
    return true;
  }

  bool ElementRelation::is_transitive() const {
    for (std::size_t i = 0; i < order_; ++i) {
      for (std::size_t j = 0; j < order_; ++j) {
        if (!contains(Element{i}, Element{j}))
          continue;
        for (std::size_t k = 0; k < order_; ++k) {
          if (contains(Element{j}, Element{k}) && !contains(Element{i}, Element{k}))
            return false;
        }
      }
    }
    return true;
  }

  bool ElementRelation::is_congruence(Semigroup const& s) const {
    if (s.order() != order_ || !is_equivalence())
      return false;
    for (auto x : s.elements()) {
      for (auto y : s.elements()) {
        if (!contains(x, y))
          continue;
        for (auto z : s.elements()) {
          if (!contains(s.product(z, x), s.product(z, y))
              || !contains(s.product(x, z), s.product(y, z)))
            return false;
        }
      }
    }
    return true;
  }

  std::vector<ElementSet> ElementRelation::classes() const {
    std::vector<ElementSet> out;
    std::vector<bool>       placed(order_, false);
    for (std::size_t i = 0; i < order_; ++i) {
      if (placed[i])
        continue;
      ElementSet cls(order_);
      for (std::size_t j = i; j < order_; ++j) {
        if (contains(Element{i}, Element{j})) {
          cls.insert(Element{j});
          placed[j] = true;
        }
      }
      out.push_back(std::move(cls));
    }
    return out;
  }

  ////////////////////////////////////////////////////////////////////////
  // Ideal structure
  ////////////////////////////////////////////////////////////////////////

  ElementSet square_set(Semigroup const& s) {
    ElementSet out(s.order());
    for (auto x : s.elements()) {
      if (!s.factorizations(x).empty())
        out.insert(x);
    }
    return out;
  }

  ElementSet principal_ideal(Semigroup const& s, Element x) {
    ElementSet out(s.order());
    out.insert(x);
    for (auto u : s.elements()) {
      Element const ux = s.product(u, x);
      out.insert(ux);
      out.insert(s.product(x, u));
      for (auto v : s.elements())
        out.insert(s.product(ux, v));
    }
    return out;
  }

  DivisorPartition divisor_partition(Semigroup const& s, Element a) {
    auto const&      divisors = s.divisors(a);
    DivisorPartition out{divisors, divisors.complement()};
    FUZZSG_ASSERT(out.divisors.contains(a));
    FUZZSG_ASSERT(out.non_divisors.empty() || is_ideal(s, out.non_divisors));
    return out;
  }

  bool is_ideal(Semigroup const& s, ElementSet const& a) {
    if (a.universe_size() != s.order())
      throw Error("element set does not belong to this semigroup");
    if (a.empty())
      return false;
    for (auto x : a.members()) {
      for (auto u : s.elements()) {
        if (!a.contains(s.product(u, x)) || !a.contains(s.product(x, u)))
          return false;
      }
    }
    return true;
  }

  ElementSet kernel(Semigroup const& s) {
    ElementSet out = ElementSet::full(s.order());
    for (auto x : s.elements())
      out = out.intersect(principal_ideal(s, x));
    FUZZSG_ASSERT(is_ideal(s, out));
    return out;
  }

  std::optional<Element> zero_element(Semigroup const& s) {
    for (auto z : s.elements()) {
      bool ok = true;
      for (auto x : s.elements()) {
        if (s.product(z, x) != z || s.product(x, z) != z) {
          ok = false;
          break;
        }
      }
      if (ok)
        return z;
    }
    return std::nullopt;
  }

  std::optional<ElementSet> core(Semigroup const& s) {
    if (s.order() < 2)
      return std::nullopt;
    auto const zero = zero_element(s);
    ElementSet out  = ElementSet::full(s.order());
    for (auto x : s.elements()) {
      if (x != zero)
        out = out.intersect(principal_ideal(s, x));
    }
    // A one-element ideal is necessarily {0}, i.e. trivial.
    if (out.size() <= 1)
      return std::nullopt;
    FUZZSG_ASSERT(is_ideal(s, out));
    return out;
  }

  ElementRelation rees_congruence(Semigroup const& s, ElementSet const& a) {
    if (a.universe_size() != s.order())
      throw Error("element set does not belong to this semigroup");
    if (!a.empty() && !is_ideal(s, a))
      throw Error("Rees congruence requested for " + format_set(s, a)
                  + ", which is not an ideal");
    ElementRelation out = ElementRelation::identity(s.order());
    for (auto x : a.members()) {
      for (auto y : a.members())
        out.insert(x, y);
    }
    FUZZSG_ASSERT(out.is_congruence(s));
    return out;
  }

}  // namespace fuzzsg

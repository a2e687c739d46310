#pragma once

#include <array>
#include <compare>
#include <cstddef>
#include <cstdint>
#include <memory>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "fuzzsg/membership.hpp"

namespace fuzzsg {

  /// An element of a finite semigroup, identified by its position in the
  /// carrier.  Names are presentation only and live in the Semigroup.
  struct Element {
    std::size_t index = 0;

    friend auto operator<=>(Element, Element) = default;
  };

  /// A subset of the carrier of a semigroup of a given order.
  class ElementSet {
   public:
    ElementSet() = default;
    explicit ElementSet(std::size_t order) : bits_(order, false) {}
    ElementSet(std::size_t order, std::initializer_list<std::size_t> members);

    static ElementSet full(std::size_t order);

    std::size_t universe_size() const { return bits_.size(); }
    std::size_t size() const;
    bool        empty() const { return size() == 0; }

    bool contains(Element x) const { return bits_.at(x.index); }
    void insert(Element x) { bits_.at(x.index) = true; }
    void erase(Element x) { bits_.at(x.index) = false; }

    std::vector<Element> members() const;

    ElementSet complement() const;
    ElementSet intersect(ElementSet const& other) const;
    ElementSet unite(ElementSet const& other) const;
    bool       subset_of(ElementSet const& other) const;

    friend bool operator==(ElementSet const&, ElementSet const&) = default;

   private:
    std::vector<bool> bits_;
  };

  /// Raised when a candidate table is not associative.  Carries the first
  /// triple (in lexicographic order of indices) with (xy)z != x(yz).
  class AssociativityError : public Error {
   public:
    AssociativityError(std::string const& what, Element x, Element y, Element z)
        : Error(what), x_(x), y_(y), z_(z) {}

    Element x() const { return x_; }
    Element y() const { return y_; }
    Element z() const { return z_; }

   private:
    Element x_, y_, z_;
  };

  /// A finite semigroup given by its full Cayley table.
  ///
  /// Values are immutable and cheap to copy; copies share the table and the
  /// precomputed factorization lists.  Associativity is checked eagerly in
  /// every constructor.
  class Semigroup {
   public:
    using Factorization = std::pair<Element, Element>;

    /// `table[i * n + j]` is the index of names[i] * names[j].
    Semigroup(std::vector<std::string> names, std::vector<std::size_t> table);

    std::size_t order() const { return impl_->names.size(); }

    Element product(Element x, Element y) const {
      return Element{impl_->table[x.index * order() + y.index]};
    }

    std::string const& name(Element x) const { return impl_->names.at(x.index); }
    std::vector<std::string> const& names() const { return impl_->names; }
    std::vector<std::size_t> const& table() const { return impl_->table; }

    /// Element with the given name, if any.
    std::optional<Element> find(std::string const& name) const;

    /// Element with the given name; throws Error naming it otherwise.
    Element at(std::string const& name) const;

    /// All ordered pairs (x, y) with xy = s, in lexicographic order.
    std::vector<Factorization> const& factorizations(Element s) const {
      return impl_->factorizations.at(s.index);
    }

    /// D_a as computed at construction; see divisor_partition().
    ElementSet const& divisors(Element a) const;

    /// The elements 0, 1, ..., order() - 1.
    std::vector<Element> elements() const;

    /// True for the same instance or for identical names and tables.
    bool same_as(Semigroup const& other) const;

    friend bool operator==(Semigroup const& a, Semigroup const& b) {
      return a.same_as(b);
    }

   private:
    struct Impl {
      std::vector<std::string>                names;
      std::vector<std::size_t>                table;
      std::vector<std::vector<Factorization>> factorizations;
      std::vector<ElementSet>                 divisors;
    };
    std::shared_ptr<Impl const> impl_;
  };

  /// Builds a semigroup from element names and a row-major table of names.
  ///
  /// Throws Error on duplicate names, unknown names or a non-square table,
  /// and AssociativityError with the witnessing triple.
  Semigroup build_semigroup(std::vector<std::string> const&              names,
                            std::vector<std::vector<std::string>> const& table);

  inline Element product(Semigroup const& s, Element x, Element y) {
    return s.product(x, y);
  }

  /// First triple (x, y, z) with (xy)z != x(yz), scanning x, then y, then z.
  std::optional<std::array<std::size_t, 3>>
  find_associativity_violation(std::size_t n, std::vector<std::size_t> const& table);

  /// "{a, b}" using the element names of `s`.
  std::string format_set(Semigroup const& s, ElementSet const& set);

  /// A binary relation on the carrier, stored as an order x order bitmap.
  class ElementRelation {
   public:
    explicit ElementRelation(std::size_t order)
        : order_(order), bits_(order * order, false) {}

    static ElementRelation identity(std::size_t order);

    std::size_t order() const { return order_; }
    bool        contains(Element x, Element y) const {
      return bits_[x.index * order_ + y.index];
    }
    void insert(Element x, Element y) { bits_.at(x.index * order_ + y.index) = true; }

    std::size_t size() const;

    bool is_reflexive() const;
    bool is_symmetric() const;
    bool is_transitive() const;
    bool is_equivalence() const {
      return is_reflexive() && is_symmetric() && is_transitive();
    }
    /// Equivalence that is also left and right compatible with `s`.
    bool is_congruence(Semigroup const& s) const;

    /// Equivalence classes ordered by least member; requires is_equivalence().
    std::vector<ElementSet> classes() const;

    friend bool operator==(ElementRelation const&, ElementRelation const&) = default;

   private:
    std::size_t       order_;
    std::vector<bool> bits_;
  };

  /// The set S^2 of all products.
  ElementSet square_set(Semigroup const& s);

  /// S^1 x S^1 = {x} u Sx u xS u SxS, without adjoining an identity.
  ElementSet principal_ideal(Semigroup const& s, Element x);

  struct DivisorPartition {
    ElementSet divisors;      // D_a = { s : a in S^1 s S^1 }
    ElementSet non_divisors;  // N_a = S \ D_a, empty or an ideal
  };

  /// Splits the carrier into the divisors of `a` and the rest.
  DivisorPartition divisor_partition(Semigroup const& s, Element a);

  /// Nonempty and closed under multiplication by S on both sides.
  bool is_ideal(Semigroup const& s, ElementSet const& a);

  /// The least ideal: the intersection of all principal ideals.
  ElementSet kernel(Semigroup const& s);

  std::optional<Element> zero_element(Semigroup const& s);

  /// The least ideal other than {0}, if it exists.  Always none for a
  /// one-element semigroup.
  std::optional<ElementSet> core(Semigroup const& s);

  /// x ~ y iff x = y or both lie in `a`.  Throws Error if `a` is nonempty
  /// and not an ideal.
  ElementRelation rees_congruence(Semigroup const& s, ElementSet const& a);

  inline std::vector<Semigroup::Factorization> const&
  factorizations(Semigroup const& s, Element x) {
    return s.factorizations(x);
  }

}  // namespace fuzzsg

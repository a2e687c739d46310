#include "fuzzsg/verify.hpp"

#include <algorithm>
#include <array>
#include <map>
#include <random>
#include <utility>

#include "fuzzsg/decomposition.hpp"

namespace fuzzsg {

  namespace {
    struct TheoremName {
      Theorem          theorem;
      std::string_view id;
    };

    constexpr std::array<TheoremName, 9> kTheoremNames{{
        {Theorem::star_assoc, "star-assoc"},
        {Theorem::delta_congruence, "delta-congruence"},
        {Theorem::quotient_iso, "quotient-iso"},
        {Theorem::subdirect, "subdirect"},
        {Theorem::phi_embedding, "phi-embedding"},
        {Theorem::restriction_rees, "restriction-rees"},
        {Theorem::kernel_criterion, "kernel-criterion"},
        {Theorem::core_criterion, "core-criterion"},
        {Theorem::distributivity, "distributivity"},
    }};
  }  // namespace

  std::string_view to_string(Theorem t) {
    for (auto const& [th, id] : kTheoremNames) {
      if (th == t)
        return id;
    }
    throw InternalError("unnamed theorem");
  }

  Theorem parse_theorem(std::string_view id) {
    for (auto const& [th, name] : kTheoremNames) {
      if (name == id)
        return th;
    }
    std::string known;
    for (auto const& [th, name] : kTheoremNames)
      known += (known.empty() ? "" : ", ") + std::string(name);
    throw Error("unknown theorem \"" + std::string(id) + "\" (known: " + known + ")");
  }

  std::vector<Theorem> const& all_theorems() {
    static std::vector<Theorem> const all = [] {
      std::vector<Theorem> out;
      for (auto const& tn : kTheoremNames)
        out.push_back(tn.theorem);
      return out;
    }();
    return all;
  }

  ////////////////////////////////////////////////////////////////////////
  // Direct evaluations
  ////////////////////////////////////////////////////////////////////////

  namespace detail {

    Operations Operations::library() {
      Operations ops;
      ops.convolve = [](Semigroup const& s, FuzzySet const& f, FuzzySet const& g) {
        return ::fuzzsg::convolve(s, f, g);
      };
      ops.star = [](Semigroup const&          s,
                    Element                   a,
                    RestrictedFuzzySet const& f,
                    RestrictedFuzzySet const& g) { return ::fuzzsg::star_convolve(s, a, f, g); };
      return ops;
    }

    std::vector<Membership> naive_convolve(Semigroup const&               s,
                                           std::vector<Membership> const& f,
                                           std::vector<Membership> const& g) {
      std::size_t const       n = s.order();
      std::vector<Membership> out(n, Membership::zero());
      auto const&             table = s.table();
      for (std::size_t x = 0; x < n; ++x) {
        for (std::size_t y = 0; y < n; ++y) {
          auto& slot = out[table[x * n + y]];
          slot       = join(slot, meet(f[x], g[y]));
        }
      }
      return out;
    }

    namespace {
      // S^1 x S^1 with S^1 built explicitly: index n is the adjoined identity.
      ElementSet naive_principal_ideal(Semigroup const& s, std::size_t x) {
        std::size_t const n   = s.order();
        auto              mul = [&](std::size_t u, std::size_t v) {
          if (u == n)
            return v;
          if (v == n)
            return u;
          return s.table()[u * n + v];
        };
        ElementSet out(n);
        for (std::size_t u = 0; u <= n; ++u) {
          for (std::size_t v = 0; v <= n; ++v)
            out.insert(Element{mul(mul(u, x), v)});
        }
        return out;
      }
    }  // namespace

    ElementSet naive_divisors(Semigroup const& s, Element a) {
      ElementSet out(s.order());
      for (std::size_t x = 0; x < s.order(); ++x) {
        if (naive_principal_ideal(s, x).contains(a))
          out.insert(Element{x});
      }
      return out;
    }

  }  // namespace detail

  ////////////////////////////////////////////////////////////////////////
  // The verifier
  ////////////////////////////////////////////////////////////////////////

  namespace {
    using detail::naive_convolve;
    using detail::naive_divisors;
    using detail::Operations;
    using Values = std::vector<Membership>;

    Values full_values(Semigroup const& s, RestrictedFuzzySet const& r) {
      return extend_by_zero(s, r.base(), r).values();
    }

    bool agree_on(ElementSet const& d, Values const& f, Values const& g) {
      for (auto x : d.members()) {
        if (f[x.index] != g[x.index])
          return false;
      }
      return true;
    }

    json values_json(Semigroup const& s, Values const& v) {
      return to_json(FuzzySet(s, v));
    }

    class Verifier {
     public:
      Verifier(Semigroup const& s, Strategy const& strategy, Operations const& ops)
          : s_(s), strategy_(strategy), ops_(ops), rng_(strategy.seed()) {}

      std::uint64_t cases() const { return cases_; }

      std::optional<json> run(Theorem t) {
        switch (t) {
          case Theorem::star_assoc:
            return star_assoc();
          case Theorem::delta_congruence:
            return delta_congruence();
          case Theorem::quotient_iso:
            return quotient_iso();
          case Theorem::subdirect:
            return subdirect();
          case Theorem::phi_embedding:
            return phi_embedding();
          case Theorem::restriction_rees:
            return restriction_rees();
          case Theorem::kernel_criterion:
            return kernel_criterion();
          case Theorem::core_criterion:
            return core_criterion();
          case Theorem::distributivity:
            return distributivity();
        }
        throw InternalError("unhandled theorem");
      }

     private:
      bool exhaustive() const {
        return strategy_.kind() == Strategy::Kind::exhaustive;
      }

      std::uint64_t next_seed() { return rng_(); }

      FuzzySet random_set() {
        return random_fuzzy_set(s_, strategy_.chain(), next_seed());
      }

      RestrictedFuzzySet random_restricted(Element a) {
        return random_restricted_fuzzy_set(s_, a, strategy_.chain(), next_seed());
      }

      // A random fuzzy set agreeing with f on D_a.
      FuzzySet random_delta_partner(Element a, FuzzySet const& f) {
        auto   other  = random_set();
        Values values = other.values();
        for (auto x : s_.divisors(a).members())
          values[x.index] = f[x];
        return FuzzySet(s_, std::move(values));
      }

      std::string const& name(Element x) const { return s_.name(x); }

      // The fast path found a violation; the direct evaluation must agree.
      static void confirm(bool confirmed, std::string_view theorem) {
        if (!confirmed)
          throw InternalError("verifier disagreement in " + std::string(theorem)
                              + ": the direct evaluation does not confirm the"
                                " reported counterexample");
      }

      // max over s = uvy of min(f(u), g(v), h(y)), 0 outside S^3.
      Values triple_formula(Values const& f, Values const& g, Values const& h) const {
        std::size_t const n = s_.order();
        Values            out(n, Membership::zero());
        for (auto u : s_.elements()) {
          for (auto v : s_.elements()) {
            auto uv = s_.product(u, v);
            for (auto y : s_.elements()) {
              auto& slot = out[s_.product(uv, y).index];
              slot       = join(slot, meet(f[u.index], meet(g[v.index], h[y.index])));
            }
          }
        }
        return out;
      }

      //////////////////////////////////////////////////////////////////
      std::optional<json> star_assoc() {
        for (auto a : s_.elements()) {
          auto check = [&](RestrictedFuzzySet const& f,
                           RestrictedFuzzySet const& g,
                           RestrictedFuzzySet const& h) -> std::optional<json> {
            ++cases_;
            auto lhs = ops_.star(s_, a, ops_.star(s_, a, f, g), h);
            auto rhs = ops_.star(s_, a, f, ops_.star(s_, a, g, h));
            auto fv = full_values(s_, f), gv = full_values(s_, g), hv = full_values(s_, h);
            auto triple = triple_formula(fv, gv, hv);
            auto d      = s_.divisors(a);
            if (lhs == rhs && agree_on(d, full_values(s_, lhs), triple))
              return std::nullopt;
            auto nd = naive_divisors(s_, a);
            auto nl = naive_convolve(s_, naive_convolve(s_, fv, gv), hv);
            auto nr = naive_convolve(s_, fv, naive_convolve(s_, gv, hv));
            confirm(!agree_on(nd, nl, nr) || !agree_on(nd, nl, triple), "star-assoc");
            return json{{"base", name(a)},
                        {"f", to_json(f)},
                        {"g", to_json(g)},
                        {"h", to_json(h)},
                        {"lhs", to_json(lhs)},
                        {"rhs", to_json(rhs)},
                        {"triple_product", values_json(s_, triple)}};
          };
          if (exhaustive()) {
            auto all = all_restricted_fuzzy_sets(s_, a, strategy_.chain());
            for (auto const& f : all) {
              for (auto const& g : all) {
                for (auto const& h : all) {
                  if (auto cx = check(f, g, h))
                    return cx;
                }
              }
            }
          } else {
            for (std::size_t i = 0; i < strategy_.samples(); ++i) {
              auto f = random_restricted(a);
              auto g = random_restricted(a);
              auto h = random_restricted(a);
              if (auto cx = check(f, g, h))
                return cx;
            }
          }
        }
        return std::nullopt;
      }

      //////////////////////////////////////////////////////////////////
      std::optional<json> delta_congruence() {
        auto check = [&](Element         a,
                         FuzzySet const& f1,
                         FuzzySet const& g1,
                         FuzzySet const& f2,
                         FuzzySet const& g2,
                         FuzzySet const& lhs,
                         FuzzySet const& rhs) -> std::optional<json> {
          ++cases_;
          if (delta_related(s_, a, lhs, rhs))
            return std::nullopt;
          auto nd = naive_divisors(s_, a);
          confirm(agree_on(nd, f1.values(), g1.values())
                      && agree_on(nd, f2.values(), g2.values())
                      && !agree_on(nd,
                                   naive_convolve(s_, f1.values(), f2.values()),
                                   naive_convolve(s_, g1.values(), g2.values())),
                  "delta-congruence");
          return json{{"base", name(a)},
                      {"f1", to_json(f1)},
                      {"g1", to_json(g1)},
                      {"f2", to_json(f2)},
                      {"g2", to_json(g2)},
                      {"f1_o_f2", to_json(lhs)},
                      {"g1_o_g2", to_json(rhs)}};
        };

        if (exhaustive()) {
          auto const        all = all_fuzzy_sets(s_, strategy_.chain());
          std::size_t const m   = all.size();
          std::vector<FuzzySet> products;
          products.reserve(m * m);
          for (auto const& f : all) {
            for (auto const& g : all)
              products.push_back(ops_.convolve(s_, f, g));
          }
          for (auto a : s_.elements()) {
            std::vector<std::pair<std::size_t, std::size_t>> related;
            for (std::size_t i = 0; i < m; ++i) {
              for (std::size_t j = 0; j < m; ++j) {
                if (delta_related(s_, a, all[i], all[j]))
                  related.emplace_back(i, j);
              }
            }
            for (auto [f1, g1] : related) {
              for (auto [f2, g2] : related) {
                if (auto cx = check(a,
                                    all[f1],
                                    all[g1],
                                    all[f2],
                                    all[g2],
                                    products[f1 * m + f2],
                                    products[g1 * m + g2]))
                  return cx;
              }
            }
          }
        } else {
          for (auto a : s_.elements()) {
            for (std::size_t i = 0; i < strategy_.samples(); ++i) {
              auto f1 = random_set();
              auto f2 = random_set();
              auto g1 = random_delta_partner(a, f1);
              auto g2 = random_delta_partner(a, f2);
              if (auto cx = check(a,
                                  f1,
                                  g1,
                                  f2,
                                  g2,
                                  ops_.convolve(s_, f1, f2),
                                  ops_.convolve(s_, g1, g2)))
                return cx;
            }
          }
        }
        return std::nullopt;
      }

      //////////////////////////////////////////////////////////////////
      // Pieces shared by quotient-iso and subdirect.

      // The canonical representative of [f] lies in [f] and restricts to f*.
      std::optional<json> check_representative(Element a, FuzzySet const& f) {
        ++cases_;
        auto rep = extend_by_zero(s_, a, restrict(s_, a, f));
        if (delta_related(s_, a, f, rep) && restrict(s_, a, rep) == restrict(s_, a, f))
          return std::nullopt;
        confirm(!agree_on(naive_divisors(s_, a), f.values(), rep.values()),
                "quotient-iso");
        return json{{"base", name(a)},
                    {"property", "representative"},
                    {"f", to_json(f)},
                    {"representative", to_json(rep)}};
      }

      // [f] = [g] iff f* = g*.
      std::optional<json> check_class_map(Element a, FuzzySet const& f, FuzzySet const& g) {
        ++cases_;
        if (delta_related(s_, a, f, g) == (restrict(s_, a, f) == restrict(s_, a, g)))
          return std::nullopt;
        confirm(false, "quotient-iso");
        return std::nullopt;
      }

      // Every f* is the restriction of its zero extension.
      std::optional<json> check_surjective(Element a, RestrictedFuzzySet const& r) {
        ++cases_;
        auto ext = extend_by_zero(s_, a, r);
        if (restrict(s_, a, ext) == r)
          return std::nullopt;
        confirm(!agree_on(naive_divisors(s_, a), ext.values(), full_values(s_, r)),
                "projection surjectivity");
        return json{{"base", name(a)},
                    {"property", "surjectivity"},
                    {"restricted", to_json(r)},
                    {"extension", to_json(ext)}};
      }

      // (f o g)* = f* star g*.
      std::optional<json> check_homomorphism(Element         a,
                                             FuzzySet const& f,
                                             FuzzySet const& g,
                                             FuzzySet const& fg) {
        ++cases_;
        auto fr  = restrict(s_, a, f);
        auto gr  = restrict(s_, a, g);
        auto lhs = restrict(s_, a, fg);
        auto rhs = ops_.star(s_, a, fr, gr);
        if (lhs == rhs)
          return std::nullopt;
        auto nd = naive_divisors(s_, a);
        confirm(!agree_on(nd,
                          naive_convolve(s_, f.values(), g.values()),
                          naive_convolve(s_, full_values(s_, fr), full_values(s_, gr))),
                "restriction homomorphism");
        return json{{"base", name(a)},
                    {"property", "homomorphism"},
                    {"f", to_json(f)},
                    {"g", to_json(g)},
                    {"restrict_f_o_g", to_json(lhs)},
                    {"restrict_f_star_restrict_g", to_json(rhs)}};
      }

      std::optional<json> quotient_iso() {
        if (exhaustive()) {
          auto const all = all_fuzzy_sets(s_, strategy_.chain());
          std::vector<FuzzySet> products;
          for (auto const& f : all) {
            for (auto const& g : all)
              products.push_back(ops_.convolve(s_, f, g));
          }
          for (auto a : s_.elements()) {
            for (auto const& f : all) {
              if (auto cx = check_representative(a, f))
                return cx;
            }
            for (std::size_t i = 0; i < all.size(); ++i) {
              for (std::size_t j = 0; j < all.size(); ++j) {
                if (auto cx = check_class_map(a, all[i], all[j]))
                  return cx;
                if (auto cx = check_homomorphism(a, all[i], all[j], products[i * all.size() + j]))
                  return cx;
              }
            }
            for (auto const& r : all_restricted_fuzzy_sets(s_, a, strategy_.chain())) {
              if (auto cx = check_surjective(a, r))
                return cx;
            }
          }
        } else {
          for (auto a : s_.elements()) {
            for (std::size_t i = 0; i < strategy_.samples(); ++i) {
              auto f = random_set();
              auto g = i % 2 == 0 ? random_delta_partner(a, f) : random_set();
              if (auto cx = check_representative(a, f))
                return cx;
              if (auto cx = check_class_map(a, f, g))
                return cx;
              if (auto cx = check_homomorphism(a, f, g, ops_.convolve(s_, f, g)))
                return cx;
              if (auto cx = check_surjective(a, random_restricted(a)))
                return cx;
            }
          }
        }
        return std::nullopt;
      }

      //////////////////////////////////////////////////////////////////
      std::optional<json> check_separated(FuzzySet const& f, FuzzySet const& g) {
        ++cases_;
        bool const same_tuple = subdirect_embed(s_, f) == subdirect_embed(s_, g);
        bool       all_related = true;
        for (auto a : s_.elements())
          all_related = all_related && delta_related(s_, a, f, g);
        bool const equal = (f == g);
        if (same_tuple == equal && all_related == equal)
          return std::nullopt;
        confirm(false, "subdirect");
        return std::nullopt;
      }

      std::optional<json> check_tuple_homomorphism(FuzzySet const& f,
                                                   FuzzySet const& g,
                                                   FuzzySet const& fg) {
        ++cases_;
        auto lhs = subdirect_embed(s_, fg);
        auto tf  = subdirect_embed(s_, f);
        auto tg  = subdirect_embed(s_, g);
        for (auto a : s_.elements()) {
          auto rhs = ops_.star(s_, a, tf[a], tg[a]);
          if (lhs[a] == rhs)
            continue;
          auto nd = naive_divisors(s_, a);
          confirm(!agree_on(nd,
                            naive_convolve(s_, f.values(), g.values()),
                            naive_convolve(s_, full_values(s_, tf[a]), full_values(s_, tg[a]))),
                  "subdirect homomorphism");
          return json{{"base", name(a)},
                      {"property", "homomorphism"},
                      {"f", to_json(f)},
                      {"g", to_json(g)},
                      {"embed_f_o_g", to_json(lhs)},
                      {"component_star", to_json(rhs)}};
        }
        return std::nullopt;
      }

      std::optional<json> subdirect() {
        if (exhaustive()) {
          auto const all = all_fuzzy_sets(s_, strategy_.chain());
          for (std::size_t i = 0; i < all.size(); ++i) {
            for (std::size_t j = 0; j < all.size(); ++j) {
              if (auto cx = check_separated(all[i], all[j]))
                return cx;
              if (auto cx = check_tuple_homomorphism(all[i], all[j], ops_.convolve(s_, all[i], all[j])))
                return cx;
            }
          }
          for (auto a : s_.elements()) {
            for (auto const& r : all_restricted_fuzzy_sets(s_, a, strategy_.chain())) {
              if (auto cx = check_surjective(a, r))
                return cx;
            }
          }
        } else {
          for (std::size_t i = 0; i < strategy_.samples(); ++i) {
            auto f = random_set();
            auto g = random_set();
            if (auto cx = check_separated(f, g))
              return cx;
            if (auto cx = check_separated(f, f))
              return cx;
            if (auto cx = check_tuple_homomorphism(f, g, ops_.convolve(s_, f, g)))
              return cx;
            for (auto a : s_.elements()) {
              if (auto cx = check_surjective(a, random_restricted(a)))
                return cx;
            }
          }
        }
        return std::nullopt;
      }

      //////////////////////////////////////////////////////////////////
      std::optional<json> phi_embedding() {
        for (auto x : s_.elements()) {
          for (auto y : s_.elements()) {
            ++cases_;
            auto lhs = ops_.convolve(s_, embed_element(s_, x), embed_element(s_, y));
            auto rhs = embed_element(s_, s_.product(x, y));
            if (lhs == rhs)
              continue;
            confirm(naive_convolve(s_, embed_element(s_, x).values(), embed_element(s_, y).values())
                        != rhs.values(),
                    "phi-embedding");
            return json{{"property", "homomorphism"},
                        {"s", name(x)},
                        {"t", name(y)},
                        {"C_s_o_C_t", to_json(lhs)},
                        {"C_st", to_json(rhs)}};
          }
        }
        for (auto x : s_.elements()) {
          for (auto y : s_.elements()) {
            if (y <= x)
              continue;
            ++cases_;
            if (embed_element(s_, x) != embed_element(s_, y))
              continue;
            confirm(false, "phi-embedding injectivity");
          }
        }
        return std::nullopt;
      }

      //////////////////////////////////////////////////////////////////
      std::optional<json> restriction_rees() {
        for (auto a : s_.elements()) {
          auto const part = divisor_partition(s_, a);
          ++cases_;
          if (!part.non_divisors.empty() && !is_ideal(s_, part.non_divisors)) {
            auto naive_n = naive_divisors(s_, a).complement();
            confirm(!is_ideal(s_, naive_n), "restriction-rees");
            return json{{"base", name(a)},
                        {"property", "N_a is neither empty nor an ideal"},
                        {"N_a", format_set(s_, part.non_divisors)}};
          }
          auto const rho = rees_congruence(s_, part.non_divisors);
          for (auto x : s_.elements()) {
            for (auto y : s_.elements()) {
              ++cases_;
              bool const delta = delta_related(s_, a, embed_element(s_, x), embed_element(s_, y));
              bool const rees  = rho.contains(x, y);
              if (delta == rees)
                continue;
              auto const nd          = naive_divisors(s_, a);
              bool const naive_delta = agree_on(nd,
                                                embed_element(s_, x).values(),
                                                embed_element(s_, y).values());
              bool const naive_rees = x == y || (!nd.contains(x) && !nd.contains(y));
              confirm(naive_delta != naive_rees, "restriction-rees");
              return json{{"base", name(a)},
                          {"s", name(x)},
                          {"t", name(y)},
                          {"delta_related", delta},
                          {"rees_related", rees}};
            }
          }
        }
        return std::nullopt;
      }

      //////////////////////////////////////////////////////////////////
      ElementSet naive_kernel(std::optional<Element> skip = std::nullopt) const {
        ElementSet out = ElementSet::full(s_.order());
        for (auto x : s_.elements()) {
          if (x == skip)
            continue;
          ElementSet ideal(s_.order());
          for (auto a : s_.elements()) {
            if (naive_divisors(s_, a).contains(x))
              ideal.insert(a);
          }
          out = out.intersect(ideal);
        }
        return out;
      }

      std::optional<json> kernel_criterion() {
        auto const k = kernel(s_);
        ++cases_;
        bool least = is_ideal(s_, k);
        for (auto x : s_.elements())
          least = least && k.subset_of(principal_ideal(s_, x));
        if (!least) {
          confirm(naive_kernel() != k, "kernel-criterion");
          return json{{"property", "kernel is not the least ideal"},
                      {"kernel", format_set(s_, k)}};
        }
        auto const full = ElementSet::full(s_.order());
        for (auto a : s_.elements()) {
          ++cases_;
          bool const whole = (s_.divisors(a) == full);
          if (whole == k.contains(a))
            continue;
          confirm((naive_divisors(s_, a) == full) != naive_kernel().contains(a),
                  "kernel-criterion");
          return json{{"base", name(a)},
                      {"D_a_is_S", whole},
                      {"in_kernel", k.contains(a)},
                      {"kernel", format_set(s_, k)}};
        }
        return std::nullopt;
      }

      //////////////////////////////////////////////////////////////////
      std::optional<json> core_criterion() {
        auto const zero = zero_element(s_);
        if (zero) {
          ++cases_;
          auto const n0 = divisor_partition(s_, *zero).non_divisors;
          if (!n0.empty()) {
            confirm(!naive_divisors(s_, *zero).complement().empty(), "core-criterion");
            return json{{"zero", name(*zero)},
                        {"property", "N_0 is not empty"},
                        {"N_0", format_set(s_, n0)}};
          }
        }
        if (s_.order() < 2)
          return std::nullopt;
        auto const c = core(s_);
        for (auto a : s_.elements()) {
          if (a == zero)
            continue;
          ++cases_;
          bool const small   = divisor_partition(s_, a).non_divisors.size() <= 1;
          bool const in_core = c && c->contains(a);
          if (small == in_core)
            continue;
          auto const naive_core = naive_kernel(zero);
          bool const naive_in   = naive_core.size() > 1 && naive_core.contains(a);
          confirm((naive_divisors(s_, a).complement().size() <= 1) != naive_in,
                  "core-criterion");
          return json{{"base", name(a)},
                      {"N_a_at_most_one", small},
                      {"in_core", in_core},
                      {"core", c ? json(format_set(s_, *c)) : json(nullptr)}};
        }
        return std::nullopt;
      }

      //////////////////////////////////////////////////////////////////
      std::optional<json> check_distributive(Values const& list, Membership const& b) {
        ++cases_;
        Membership sup = Membership::zero(), sup_right = Membership::zero(),
                   sup_left = Membership::zero();
        for (auto const& v : list) {
          sup       = join(sup, v);
          sup_right = join(sup_right, meet(v, b));
          sup_left  = join(sup_left, meet(b, v));
        }
        if (meet(sup, b) == sup_right && meet(b, sup) == sup_left)
          return std::nullopt;
        // Recompute with std::max / std::min over the whole list.
        auto       top  = *std::max_element(list.begin(), list.end());
        Membership best = Membership::zero();
        for (auto const& v : list)
          best = std::max(best, std::min(v, b));
        confirm(std::min(top, b) != best, "distributivity");
        json values = json::array();
        for (auto const& v : list)
          values.push_back(to_json(v));
        return json{{"values", values}, {"b", to_json(b)}};
      }

      std::optional<json> distributivity() {
        auto const& chain = strategy_.chain();
        if (exhaustive()) {
          for (std::size_t len = 1; len <= 3; ++len) {
            std::vector<std::size_t> digits(len, 0);
            while (true) {
              Values list;
              for (auto d : digits)
                list.push_back(chain[d]);
              for (auto const& b : chain.values()) {
                if (auto cx = check_distributive(list, b))
                  return cx;
              }
              std::size_t i = 0;
              for (; i < len; ++i) {
                if (++digits[i] < chain.size())
                  break;
                digits[i] = 0;
              }
              if (i == len)
                break;
            }
          }
        } else {
          std::uniform_int_distribution<std::size_t> pick(0, chain.size() - 1);
          std::uniform_int_distribution<std::size_t> length(1, 8);
          for (std::size_t i = 0; i < strategy_.samples(); ++i) {
            Values list(length(rng_));
            for (auto& v : list)
              v = chain[pick(rng_)];
            if (auto cx = check_distributive(list, chain[pick(rng_)]))
              return cx;
          }
        }
        return std::nullopt;
      }

      Semigroup const&  s_;
      Strategy const&   strategy_;
      Operations const& ops_;
      std::mt19937_64   rng_;
      std::uint64_t     cases_ = 0;
    };
  }  // namespace

  namespace detail {
    VerificationReport verify_theorem(Semigroup const&  s,
                                      Theorem           theorem,
                                      Strategy const&   strategy,
                                      Operations const& ops) {
      bool const         sampled = strategy.kind() == Strategy::Kind::sampled;
      VerificationReport report{
          theorem,
          json{{"semigroup", to_json(s)},
               {"chain", to_json(strategy.chain())},
               {"samples", sampled ? json(strategy.samples()) : json(nullptr)}},
          strategy.kind(),
          sampled ? std::optional<std::uint64_t>(strategy.seed()) : std::nullopt,
          true,
          0,
          std::nullopt};
      Verifier v(s, strategy, ops);
      report.counterexample = v.run(theorem);
      report.passed         = !report.counterexample.has_value();
      report.cases_checked  = v.cases();
      return report;
    }
  }  // namespace detail

  VerificationReport verify_theorem(Semigroup const& s, Theorem theorem, Strategy const& strategy) {
    static detail::Operations const ops = detail::Operations::library();
    return detail::verify_theorem(s, theorem, strategy, ops);
  }

  ////////////////////////////////////////////////////////////////////////
  // Report serialization
  ////////////////////////////////////////////////////////////////////////

  json to_json(VerificationReport const& r) {
    return json{{"theorem", std::string(to_string(r.theorem))},
                {"instance", r.instance},
                {"strategy", r.strategy == Strategy::Kind::exhaustive ? "exhaustive" : "sampled"},
                {"seed", r.seed ? json(*r.seed) : json(nullptr)},
                {"verdict", r.passed ? "pass" : "fail"},
                {"cases_checked", r.cases_checked},
                {"counterexample", r.counterexample ? *r.counterexample : json(nullptr)}};
  }

  VerificationReport report_from_json(json const& j) {
    if (!j.is_object())
      throw SchemaError("report: expected an object");
    auto field = [&](char const* key) -> json const& {
      auto it = j.find(key);
      if (it == j.end())
        throw SchemaError(std::string("report: missing field \"") + key + "\"");
      return *it;
    };
    VerificationReport r{};
    try {
      r.theorem = parse_theorem(field("theorem").get<std::string>());
    } catch (SchemaError const&) {
      throw;
    } catch (std::exception const& e) {
      throw SchemaError(std::string("report.theorem: ") + e.what());
    }
    r.instance          = field("instance");
    auto const strategy = field("strategy");
    if (strategy == "exhaustive")
      r.strategy = Strategy::Kind::exhaustive;
    else if (strategy == "sampled")
      r.strategy = Strategy::Kind::sampled;
    else
      throw SchemaError("report.strategy: expected \"exhaustive\" or \"sampled\"");
    auto const& seed = field("seed");
    if (!seed.is_null()) {
      if (!seed.is_number_unsigned())
        throw SchemaError("report.seed: expected an unsigned integer or null");
      r.seed = seed.get<std::uint64_t>();
    }
    auto const& verdict = field("verdict");
    if (verdict != "pass" && verdict != "fail")
      throw SchemaError("report.verdict: expected \"pass\" or \"fail\"");
    r.passed = verdict == "pass";
    auto const& cases = field("cases_checked");
    if (!cases.is_number_unsigned())
      throw SchemaError("report.cases_checked: expected an unsigned integer");
    r.cases_checked = cases.get<std::uint64_t>();
    auto const& cx  = field("counterexample");
    if (!cx.is_null())
      r.counterexample = cx;
    if (r.passed == r.counterexample.has_value())
      throw SchemaError("report: a failing verdict needs a counterexample and a passing one none");
    return r;
  }

}  // namespace fuzzsg

#pragma once

#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "fuzzsg/enumeration.hpp"
#include "fuzzsg/io.hpp"
#include "fuzzsg/semigroup.hpp"

namespace fuzzsg {

  /// The statements the verifier can check on a single semigroup.
  enum class Theorem {
    star_assoc,         // the star product on F*(D_a) is associative
    delta_congruence,   // Delta_a is a congruence on (F(S), o)
    quotient_iso,       // F(S)/Delta_a is isomorphic to F*(D_a) via restriction
    subdirect,          // F(S) is a subdirect product of the F*(D_a)
    phi_embedding,      // s -> C_s embeds S into F(S)
    restriction_rees,   // Delta_a restricted to S is the Rees congruence of N_a
    kernel_criterion,   // D_a = S iff a lies in the kernel
    core_criterion,     // |N_a| <= 1 iff a lies in the core (a non-zero)
    distributivity      // finite min/max distributive laws on the chain
  };

  std::string_view          to_string(Theorem t);
  Theorem                   parse_theorem(std::string_view id);
  std::vector<Theorem> const& all_theorems();

  class Strategy {
   public:
    enum class Kind { exhaustive, sampled };

    static Strategy exhaustive(Chain chain) {
      return Strategy(Kind::exhaustive, std::move(chain), 0, 0);
    }
    static Strategy sampled(Chain chain, std::size_t samples, std::uint64_t seed) {
      return Strategy(Kind::sampled, std::move(chain), samples, seed);
    }

    Kind          kind() const { return kind_; }
    Chain const&  chain() const { return chain_; }
    std::size_t   samples() const { return samples_; }
    std::uint64_t seed() const { return seed_; }

   private:
    Strategy(Kind k, Chain c, std::size_t n, std::uint64_t seed)
        : kind_(k), chain_(std::move(c)), samples_(n), seed_(seed) {}

    Kind          kind_;
    Chain         chain_;
    std::size_t   samples_;
    std::uint64_t seed_;
  };

  /// Outcome of checking one theorem on one semigroup.  A failing report
  /// always carries a counterexample that was confirmed by an independent
  /// direct evaluation.
  struct VerificationReport {
    Theorem                      theorem;
    json                         instance;  // semigroup, chain, samples
    Strategy::Kind               strategy;
    std::optional<std::uint64_t> seed;
    bool                         passed = true;
    std::uint64_t                cases_checked = 0;
    std::optional<json>          counterexample;

    friend bool operator==(VerificationReport const&, VerificationReport const&) = default;
  };

  json               to_json(VerificationReport const& r);
  VerificationReport report_from_json(json const& j);

  VerificationReport verify_theorem(Semigroup const& s, Theorem theorem, Strategy const& strategy);

  namespace detail {
    /// The products the verifier exercises.  Replaceable so that tests can
    /// feed in a faulty implementation and observe the cross-check.
    struct Operations {
      std::function<FuzzySet(Semigroup const&, FuzzySet const&, FuzzySet const&)> convolve;
      std::function<RestrictedFuzzySet(Semigroup const&,
                                       Element,
                                       RestrictedFuzzySet const&,
                                       RestrictedFuzzySet const&)>
          star;

      static Operations library();
    };

    VerificationReport verify_theorem(Semigroup const& s,
                                      Theorem          theorem,
                                      Strategy const&  strategy,
                                      Operations const& ops);

    // Direct evaluations used to confirm counterexamples.  They scan the
    // whole Cayley table and materialise S^1 instead of using the cached
    // factorization lists and divisor sets.
    std::vector<Membership> naive_convolve(Semigroup const&               s,
                                           std::vector<Membership> const& f,
                                           std::vector<Membership> const& g);
    ElementSet naive_divisors(Semigroup const& s, Element a);
  }  // namespace detail

}  // namespace fuzzsg

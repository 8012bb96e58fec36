// Identity checking in finite monoids: exhaustive and sampled satisfaction,
// bounded equational theories and bounded isoterm search.

#ifndef FBPLAB_IDENTITIES_HPP_
#define FBPLAB_IDENTITIES_HPP_

#include <cstddef>
#include <cstdint>
#include <optional>
#include <vector>

#include "fbplab/monoid.hpp"
#include "fbplab/word.hpp"

namespace fbplab {

  struct SatisfactionOptions {
    // Elements the variables range over; all of M when absent.
    std::optional<std::vector<Index>> domain;
    std::size_t max_substitutions = 200'000'000;
  };

  struct IdentityVerdict {
    bool                               holds;
    std::optional<ElementSubstitution> counterexample;
    std::size_t                        substitutions_checked;
  };

  // Exhaustive over every substitution of the identity's variables. Throws
  // LimitExceeded when |domain|^vars passes max_substitutions.
  IdentityVerdict satisfies_identity(FiniteMonoid const&        m,
                                     Identity const&            id,
                                     SatisfactionOptions const& options = {});

  struct SampledVerdict {
    bool                               counterexample_found;
    std::optional<ElementSubstitution> counterexample;
    std::size_t                        samples;
    std::uint64_t                      seed;
  };

  // Uniform random substitutions from a seeded mt19937_64; the same seed
  // gives the same verdict. A returned counterexample has been re-checked
  // with evaluate_word.
  SampledVerdict satisfies_identity_sampled(
      FiniteMonoid const&               m,
      Identity const&                   id,
      std::size_t                       samples,
      std::uint64_t                     seed,
      std::optional<std::vector<Index>> domain = std::nullopt);

  inline constexpr std::size_t default_theory_work = 400'000'000;

  // Groups of universe word indices (shortlex over x1..x_vars) with equal
  // values under every substitution from m.
  std::vector<std::vector<std::size_t>> bounded_theory_classes(
      FiniteMonoid const& m,
      Universe            universe,
      std::size_t         max_work = default_theory_work);

  // Canonical nontrivial identities of the universe that m satisfies.
  IdentitySet bounded_identity_theory(FiniteMonoid const& m,
                                      Universe            universe,
                                      std::size_t max_work = default_theory_work);

  struct IsotermOptions {
    // Longest candidate; 0 means |u| + 2.
    std::size_t   max_len     = 0;
    std::size_t   extra_fresh = 1;
    std::size_t   max_substitutions = 50'000'000;
    std::size_t   prefilter_samples = 64;
    std::uint64_t seed              = 1;
  };

  struct IsotermVerdict {
    // Bounded verdict: no candidate v != u within the bounds satisfies u ~ v.
    bool                isoterm;
    std::optional<Word> witness;
    std::size_t         candidates_checked;
    std::size_t         max_len;
    std::size_t         extra_fresh;
  };

  // Candidates are the words over alf(u) plus extra_fresh new variables with
  // length at most max_len.
  IsotermVerdict is_isoterm_bounded(FiniteMonoid const&   m,
                                    Word const&           u,
                                    IsotermOptions const& options = {});

  // Exhaustive check of u x v ~ u v in a band monoid b. Throws InvalidInput
  // unless b is a band and x lies in alf(u) = alf(v).
  IdentityVerdict band_identity_check(FiniteMonoid const& b,
                                      Word const&         u,
                                      VariableId const&   x,
                                      Word const&         v);

}  // namespace fbplab

#endif  // FBPLAB_IDENTITIES_HPP_

// Shortlex Knuth-Bendix completion and enumeration of finitely presented
// monoids.

#ifndef FBPLAB_REWRITING_HPP_
#define FBPLAB_REWRITING_HPP_

#include <cstddef>
#include <cstdint>
#include <optional>
#include <vector>

#include "fbplab/monoid.hpp"
#include "fbplab/presentation.hpp"

namespace fbplab {

  enum class CompletionStatus { complete, capped };

  struct CompletionOptions {
    std::size_t rule_cap   = 10'000;
    std::size_t length_cap = 40;
  };

  class RewriteSystem {
   public:
    using Letter  = std::uint32_t;
    using Letters = std::vector<Letter>;

    struct Rule {
      Letters lhs;
      Letters rhs;
    };

    RewriteSystem(Presentation presentation,
                  std::vector<Rule> rules,
                  CompletionStatus status);

    Presentation const& presentation() const noexcept {
      return presentation_;
    }
    std::vector<Rule> const& rules() const noexcept {
      return rules_;
    }
    CompletionStatus status() const noexcept {
      return status_;
    }

    // Generators are letters in presentation order.
    Letters encode(Word const& w) const;
    Word    decode(Letters const& w) const;

    Letters reduce(Letters w) const;
    Word    normal_form(Word const& w) const {
      return decode(reduce(encode(w)));
    }

   private:
    Presentation                       presentation_;
    std::vector<Rule>                  rules_;
    CompletionStatus                   status_;
    std::vector<std::vector<std::size_t>> by_last_;
  };

  // Rules are oriented by shortlex with generators ordered as listed.
  // Stops with status capped when a rule passes length_cap letters or the
  // live rules pass rule_cap.
  RewriteSystem complete(Presentation const&      p,
                         CompletionOptions const& options = {});

  struct PresentedMonoid {
    FiniteMonoid      monoid;
    // normal_forms[i] labels element i; the empty word is the identity.
    std::vector<Word> normal_forms;
    // False when the rewriting system was capped: the count is then only
    // an estimate.
    bool              exact;
    // Monoid size, or one less for a semigroup presentation.
    std::size_t       reported_size;
  };

  // Closure of the generators under reduce(uv). generators() of the monoid
  // follow the presentation.
  PresentedMonoid enumerate_presented(RewriteSystem const& rs,
                                      std::size_t          max_size = 1 << 16);

  // 1, 2, 6, 42, 1806, ...: t(0) = 1 and t(n) = t(n-1) (t(n-1) + 1), the
  // sizes of the free tree monoids. nullopt on 64-bit overflow.
  std::optional<std::uint64_t> t_sequence(std::size_t n);

}  // namespace fbplab

#endif  // FBPLAB_REWRITING_HPP_

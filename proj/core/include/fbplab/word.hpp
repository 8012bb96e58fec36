// Words, identities and the scattered-subword combinatorics behind the
// identity sets J_m and U_m.

#ifndef FBPLAB_WORD_HPP_
#define FBPLAB_WORD_HPP_

#include <compare>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <map>
#include <optional>
#include <set>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace fbplab {

  // A variable label such as "x", "y1" or "p2_3".
  class VariableId {
   public:
    VariableId() = delete;
    // Throws InvalidInput on an empty label or one containing whitespace.
    explicit VariableId(std::string label);
    VariableId(char const* label) : VariableId(std::string(label)) {}  // NOLINT

    std::string const& label() const noexcept {
      return label_;
    }

    friend bool operator==(VariableId const&, VariableId const&) = default;
    friend std::strong_ordering operator<=>(VariableId const& a,
                                            VariableId const& b) {
      return a.label_ <=> b.label_;
    }

   private:
    std::string label_;
  };

  class Word {
   public:
    using value_type     = VariableId;
    using const_iterator = std::vector<VariableId>::const_iterator;

    Word() = default;
    explicit Word(std::vector<VariableId> symbols)
        : symbols_(std::move(symbols)) {}
    Word(std::initializer_list<VariableId> symbols) : symbols_(symbols) {}

    // Whitespace-separated tokens, e.g. "x y x". Blank text is the empty word.
    static Word parse(std::string_view text);

    std::size_t size() const noexcept {
      return symbols_.size();
    }
    bool empty() const noexcept {
      return symbols_.empty();
    }
    VariableId const& operator[](std::size_t i) const {
      return symbols_[i];
    }
    const_iterator begin() const noexcept {
      return symbols_.begin();
    }
    const_iterator end() const noexcept {
      return symbols_.end();
    }
    std::span<VariableId const> symbols() const noexcept {
      return symbols_;
    }

    void push_back(VariableId v) {
      symbols_.push_back(std::move(v));
    }
    Word& operator+=(Word const& other);
    friend Word operator+(Word lhs, Word const& rhs) {
      lhs += rhs;
      return lhs;
    }

    // Factor [first, first + count).
    Word slice(std::size_t first, std::size_t count) const;

    // Space-separated labels.
    std::string to_string() const;

    friend bool operator==(Word const&, Word const&) = default;
    friend auto operator<=>(Word const&, Word const&) = default;

   private:
    std::vector<VariableId> symbols_;
  };

  // Word consisting of `count` copies of `v`.
  Word power(VariableId const& v, std::size_t count);

  // Compares by length first, then lexicographically.
  bool shortlex_less(Word const& a, Word const& b);

  // A formal equality lhs ~ rhs between nonempty words.
  class Identity {
   public:
    Identity(Word lhs, Word rhs);
    // "lhs ~ rhs" with whitespace-separated tokens on either side.
    static Identity parse(std::string_view text);

    Word const& lhs() const noexcept {
      return lhs_;
    }
    Word const& rhs() const noexcept {
      return rhs_;
    }
    std::string to_string() const;

    friend bool operator==(Identity const&, Identity const&) = default;
    friend auto operator<=>(Identity const&, Identity const&) = default;

   private:
    Word lhs_;
    Word rhs_;
  };

  using Substitution = std::map<VariableId, Word>;

  // 0-based positions of an occurrence of a pattern inside a host word.
  struct Embedding {
    std::vector<std::size_t> positions;
    friend bool operator==(Embedding const&, Embedding const&) = default;
  };

  std::set<VariableId> alphabet(Word const& w);

  // Number of distinct embeddings of u into v, saturated at cap.
  std::size_t count_scattered_embeddings(Word const& u,
                                         Word const& v,
                                         std::size_t cap = 2);

  // The unique embedding of u into v, or nullopt when u occurs zero times or
  // more than once.
  std::optional<Embedding> unique_embedding(Word const& u, Word const& v);

  inline bool is_unambiguously_scattered(Word const& u, Word const& v) {
    return unique_embedding(u, v).has_value();
  }

  std::optional<Embedding> leftmost_embedding(Word const& u, Word const& v);

  // All distinct scattered subwords of v with length in 1..k.
  std::set<Word> scattered_subwords_upto(Word const& v, std::size_t k);

  bool in_Jm(Identity const& id, std::size_t m);
  bool in_Um(Identity const& id, std::size_t m);

  // Throws UndefinedVariable naming the first symbol without an image, and
  // InvalidInput if some image is empty or w is empty.
  Word apply_substitution(Substitution const& theta, Word const& w);

  struct Occurrences {
    VariableId               variable;
    std::vector<std::size_t> positions;
    bool                     linear() const noexcept {
      return positions.size() == 1;
    }
  };

  // One entry per variable, in order of first occurrence.
  std::vector<Occurrences> classify_occurrences(Word const& w);

  // All words of length 1..max_len over `letters` in shortlex order (the
  // order of `letters` is the letter order). The callback returns false to
  // stop early. Throws LimitExceeded when the word count would pass `cap`.
  void enumerate_words(std::vector<VariableId> const&       letters,
                       std::size_t                          max_len,
                       std::function<bool(Word const&)> const& visit,
                       std::size_t                          cap = 50'000'000);
  std::vector<Word> enumerate_words(std::vector<VariableId> const& letters,
                                    std::size_t                    max_len,
                                    std::size_t cap = 50'000'000);

  // Number of words of length 1..max_len over k letters (saturating).
  std::size_t word_count(std::size_t k, std::size_t max_len);

  ////////////////////////////////////////////////////////////////////////
  // Bounded identity fragments
  ////////////////////////////////////////////////////////////////////////

  // The variables x1, ..., xk used to spell bounded universes.
  std::vector<VariableId> standard_variables(std::size_t k);

  // Rename variables by first occurrence (reading lhs then rhs) for both
  // orientations and keep the smaller; invariant under renaming and swap.
  Identity canonical_identity(Identity const& id);

  using IdentitySet = std::set<Identity>;

  // A universe of identities: every unordered pair of distinct words over
  // x1..x_vars with lengths 1..max_len.
  struct Universe {
    std::size_t vars;
    std::size_t max_len;
  };

  // Canonical nontrivial identities of the universe lying in J_m / U_m.
  IdentitySet jm_fragment(std::size_t m, Universe universe);
  IdentitySet um_fragment(std::size_t m, Universe universe);

  // Groups of universe word indices; two words share a group exactly when
  // the pair lies in the corresponding identity set.
  std::vector<std::vector<std::size_t>> jm_classes(std::size_t     m,
                                                   Universe        universe);
  std::vector<std::vector<std::size_t>> um_classes(std::size_t     m,
                                                   Universe        universe);

  // Canonical identities spanned by a partition of the universe words.
  IdentitySet identities_from_classes(
      std::vector<Word> const&                     words,
      std::vector<std::vector<std::size_t>> const& classes);

}  // namespace fbplab

template <>
struct std::hash<fbplab::VariableId> {
  std::size_t operator()(fbplab::VariableId const& v) const noexcept {
    return std::hash<std::string>{}(v.label());
  }
};

#endif  // FBPLAB_WORD_HPP_

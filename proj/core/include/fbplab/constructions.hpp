// Word constructions: fresh-variable expansion, the sparse words u_n(m), the
// head/tail words w_n, Zimin words, and the structural checks they satisfy.

#ifndef FBPLAB_CONSTRUCTIONS_HPP_
#define FBPLAB_CONSTRUCTIONS_HPP_

#include <cstddef>
#include <optional>
#include <utility>
#include <vector>

#include "fbplab/word.hpp"

namespace fbplab {

  // Half-open factor [first, first + length) of a word.
  struct Block {
    std::size_t first;
    std::size_t length;
    friend bool operator==(Block const&, Block const&) = default;
  };

  struct SparseVerdict {
    bool sparse;
    // 0-based consecutive occurrences of a repeated variable with no linear
    // variable strictly between them.
    std::optional<std::pair<std::size_t, std::size_t>> violation;
  };

  SparseVerdict is_sparse(Word const& w);

  // The fresh variable p<level>_<slot>.
  VariableId fresh_variable(std::size_t level, std::size_t slot);

  // Inserts p<level>_0, ..., p<level>_k around and between the k symbols of w.
  Word f_expand(Word const& w, std::size_t level);
  // Same fresh variables, reversed slot order: p<level>_k first.
  Word fbar_expand(Word const& w, std::size_t level);

  // Applies f at levels 0, 1, ..., times - 1.
  Word f_power(Word const& w, std::size_t times);
  Word fbar_power(Word const& w, std::size_t times);

  // y1 y2 ... yn.
  Word y_word(std::size_t n);

  struct Construction {
    Word               word;
    std::size_t        head_length;
    std::vector<Block> head_blocks;
    // Offsets relative to the start of the tail; empty for u_n(m).
    std::vector<Block> tail_blocks;

    Word head() const {
      return word.slice(0, head_length);
    }
    Word tail() const {
      return word.slice(head_length, word.size() - head_length);
    }
  };

  inline constexpr std::size_t default_length_cap = std::size_t(1) << 22;

  // Length of u_n(m), saturating.
  std::size_t u_n_m_length(std::size_t n, std::size_t m);

  // x f^{m-1}(y_n) x f^{m-2}(y_n) ... x f(y_n) x y_n; head_blocks are the m
  // factors x f^{m-i}(y_n).
  Construction build_u_n_m(std::size_t n,
                           std::size_t m,
                           std::size_t length_cap = default_length_cap);

  enum class TailForm {
    // y' x fbar(y') x ... x fbar^{m-1}(y') x, m copies of x.
    mirror,
    // y' x fbar(y') x ... x fbar^{m-1}(y'), m - 1 copies of x.
    literal
  };

  // u_{2n}(m) followed by the tail over y' = y1 y3 ... y_{2n-1} y2 y4 ... y_{2n}.
  // In mirror form tail_blocks are the m factors fbar^{i}(y') x; in literal
  // form they are y' and then the factors x fbar^{i}(y').
  Construction build_w_n(std::size_t n,
                         std::size_t m,
                         TailForm    form       = TailForm::mirror,
                         std::size_t length_cap = default_length_cap);

  // Z_1 = x1, Z_{k+1} = Z_k x_{k+1} Z_k.
  Word zimin(std::size_t n, std::size_t max_n = 24);

  // Every two-letter word occurs at most once as a contiguous factor.
  bool check_P1(Word const& w);
  // At least n pairwise distinct variables between any two occurrences of
  // the same variable.
  bool check_P2(Word const& w, std::size_t n);

  // Blocks must tile u from left to right. True when
  // alf(u_1) >= alf(u_2) >= ... >= alf(u_k) >= alf(v).
  bool check_alphabet_chain(Word const&               u,
                            std::vector<Block> const& blocks,
                            Word const&               v);
  // Mirror image: alf(u_k) >= ... >= alf(u_1) >= alf(v).
  bool check_alphabet_chain_dual(Word const&               u,
                                 std::vector<Block> const& blocks,
                                 Word const&               v);

}  // namespace fbplab

#endif  // FBPLAB_CONSTRUCTIONS_HPP_

// Subsequence (scattered subword) primitives, generic over the symbol type.
//
// Everything here works on spans of any equality-comparable symbol so that
// the same code serves label-based Words and the small integer-coded words
// used by the bounded identity-theory machinery.

#ifndef FBPLAB_DETAIL_SUBSEQUENCE_HPP_
#define FBPLAB_DETAIL_SUBSEQUENCE_HPP_

#include <algorithm>
#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <vector>

namespace fbplab::detail {

  // Number of distinct position sequences embedding `u` into `v`, saturated
  // at `cap`. Classic DP: ways[j] counts embeddings of the first j symbols.
  template <typename T>
  std::size_t count_embeddings(std::span<T const> u,
                               std::span<T const> v,
                               std::size_t        cap) {
    if (cap == 0) {
      return 0;
    }
    std::vector<std::size_t> ways(u.size() + 1, 0);
    ways[0] = 1;
    for (auto const& symbol : v) {
      // Right to left so that each host position is used at most once.
      for (std::size_t j = u.size(); j > 0; --j) {
        if (u[j - 1] == symbol && ways[j - 1] != 0) {
          ways[j] = std::min(cap, ways[j] + ways[j - 1]);
        }
      }
    }
    return std::min(cap, ways[u.size()]);
  }

  // Greedy earliest-position embedding; positions are 0-based.
  template <typename T>
  std::optional<std::vector<std::size_t>> leftmost_embedding(
      std::span<T const> u,
      std::span<T const> v) {
    std::vector<std::size_t> positions;
    positions.reserve(u.size());
    std::size_t next = 0;
    for (auto const& symbol : u) {
      while (next < v.size() && !(v[next] == symbol)) {
        ++next;
      }
      if (next == v.size()) {
        return std::nullopt;
      }
      positions.push_back(next++);
    }
    return positions;
  }

  // Calls visit(subword) once for every distinct scattered subword of `v`
  // whose length lies in 1..max_len. Subwords are generated through the
  // next-occurrence automaton, which never produces the same sequence twice.
  template <typename T, typename Visit>
  void for_each_distinct_subword(std::span<T const> v,
                                 std::size_t        max_len,
                                 Visit&&            visit) {
    if (max_len == 0 || v.empty()) {
      return;
    }
    // Distinct symbols in order of first occurrence.
    std::vector<T> symbols;
    for (auto const& s : v) {
      if (std::find(symbols.begin(), symbols.end(), s) == symbols.end()) {
        symbols.push_back(s);
      }
    }
    // next_at[i][c] = least position >= i holding symbols[c], or v.size().
    std::size_t const                     n = v.size();
    std::vector<std::vector<std::size_t>> next_at(
        n + 1, std::vector<std::size_t>(symbols.size(), n));
    for (std::size_t i = n; i-- > 0;) {
      next_at[i] = next_at[i + 1];
      auto c     = static_cast<std::size_t>(
          std::find(symbols.begin(), symbols.end(), v[i]) - symbols.begin());
      next_at[i][c] = i;
    }
    std::vector<T> current;
    current.reserve(max_len);
    auto dfs = [&](auto&& self, std::size_t from) -> void {
      for (std::size_t c = 0; c < symbols.size(); ++c) {
        std::size_t pos = next_at[from][c];
        if (pos == n) {
          continue;
        }
        current.push_back(symbols[c]);
        visit(std::span<T const>(current));
        if (current.size() < max_len) {
          self(self, pos + 1);
        }
        current.pop_back();
      }
    };
    dfs(dfs, 0);
  }

}  // namespace fbplab::detail

#endif  // FBPLAB_DETAIL_SUBSEQUENCE_HPP_

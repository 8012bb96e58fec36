#include "fbplab/constructions.hpp"

#include <algorithm>
#include <limits>
#include <map>
#include <set>
#include <string>

#include "fbplab/error.hpp"

namespace fbplab {

  SparseVerdict is_sparse(Word const& w) {
    if (w.empty()) {
      throw InvalidInput("sparseness is defined for nonempty words");
    }
    auto occurrences = classify_occurrences(w);
    std::set<VariableId> linear;
    for (auto const& occ : occurrences) {
      if (occ.linear()) {
        linear.insert(occ.variable);
      }
    }
    // prefix[i] = number of linear symbols among w[0..i).
    std::vector<std::size_t> prefix(w.size() + 1, 0);
    for (std::size_t i = 0; i < w.size(); ++i) {
      prefix[i + 1] = prefix[i] + (linear.count(w[i]) != 0 ? 1 : 0);
    }
    std::optional<std::pair<std::size_t, std::size_t>> first;
    for (auto const& occ : occurrences) {
      for (std::size_t j = 1; j < occ.positions.size(); ++j) {
        auto a = occ.positions[j - 1];
        auto b = occ.positions[j];
        if (prefix[b] == prefix[a + 1] && (!first || a < first->first)) {
          first = std::make_pair(a, b);
        }
      }
    }
    return SparseVerdict{!first.has_value(), first};
  }

  VariableId fresh_variable(std::size_t level, std::size_t slot) {
    return VariableId("p" + std::to_string(level) + "_" + std::to_string(slot));
  }

  namespace {
    Word expand(Word const& w, std::size_t level, bool reversed) {
      if (w.empty()) {
        throw InvalidInput("cannot expand the empty word");
      }
      std::size_t const k = w.size();
      auto slot = [&](std::size_t i) { return reversed ? k - i : i; };
      Word result;
      result.push_back(fresh_variable(level, slot(0)));
      for (std::size_t i = 0; i < k; ++i) {
        result.push_back(w[i]);
        result.push_back(fresh_variable(level, slot(i + 1)));
      }
      return result;
    }
  }  // namespace

  Word f_expand(Word const& w, std::size_t level) {
    return expand(w, level, false);
  }

  Word fbar_expand(Word const& w, std::size_t level) {
    return expand(w, level, true);
  }

  Word f_power(Word const& w, std::size_t times) {
    Word result = w;
    for (std::size_t level = 0; level < times; ++level) {
      result = f_expand(result, level);
    }
    return result;
  }

  Word fbar_power(Word const& w, std::size_t times) {
    Word result = w;
    for (std::size_t level = 0; level < times; ++level) {
      result = fbar_expand(result, level);
    }
    return result;
  }

  Word y_word(std::size_t n) {
    Word result;
    for (std::size_t i = 1; i <= n; ++i) {
      result.push_back(VariableId("y" + std::to_string(i)));
    }
    return result;
  }

  std::size_t u_n_m_length(std::size_t n, std::size_t m) {
    // |f^k(y_n)| + 1 = 2^k (n + 1), summed over k < m.
    constexpr auto limit = std::numeric_limits<std::size_t>::max();
    if (m >= 63 || n + 1 > (limit >> m)) {
      return limit;
    }
    return (n + 1) * ((std::size_t(1) << m) - 1);
  }

  namespace {
    void check_size(std::size_t predicted, std::size_t cap) {
      if (predicted > cap) {
        throw LimitExceeded("constructed word length", predicted, cap);
      }
    }

    Construction u_construction(Word const& y, std::size_t m) {
      Construction c;
      VariableId   x("x");
      for (std::size_t i = 1; i <= m; ++i) {
        Block block{c.word.size(), 0};
        c.word.push_back(x);
        c.word += f_power(y, m - i);
        block.length = c.word.size() - block.first;
        c.head_blocks.push_back(block);
      }
      c.head_length = c.word.size();
      return c;
    }
  }  // namespace

  Construction build_u_n_m(std::size_t n, std::size_t m, std::size_t length_cap) {
    if (n == 0 || m == 0) {
      throw InvalidInput("u_n(m) needs n >= 1 and m >= 1");
    }
    check_size(u_n_m_length(n, m), length_cap);
    return u_construction(y_word(n), m);
  }

  Construction build_w_n(std::size_t n,
                         std::size_t m,
                         TailForm    form,
                         std::size_t length_cap) {
    if (n < 2 || m == 0) {
      throw InvalidInput("w_n needs n >= 2 and m >= 1");
    }
    auto half = u_n_m_length(2 * n, m);
    check_size(half > length_cap ? half : 2 * half, length_cap);
    Construction c = u_construction(y_word(2 * n), m);

    Word y_prime;
    for (std::size_t i = 1; i <= 2 * n; i += 2) {
      y_prime.push_back(VariableId("y" + std::to_string(i)));
    }
    for (std::size_t i = 2; i <= 2 * n; i += 2) {
      y_prime.push_back(VariableId("y" + std::to_string(i)));
    }
    VariableId x("x");
    if (form == TailForm::mirror) {
      for (std::size_t i = 0; i < m; ++i) {
        Block block{c.word.size() - c.head_length, 0};
        c.word += fbar_power(y_prime, i);
        c.word.push_back(x);
        block.length = c.word.size() - c.head_length - block.first;
        c.tail_blocks.push_back(block);
      }
    } else {
      for (std::size_t i = 0; i < m; ++i) {
        Block block{c.word.size() - c.head_length, 0};
        if (i != 0) {
          c.word.push_back(x);
        }
        c.word += fbar_power(y_prime, i);
        block.length = c.word.size() - c.head_length - block.first;
        c.tail_blocks.push_back(block);
      }
    }
    return c;
  }

  Word zimin(std::size_t n, std::size_t max_n) {
    if (n == 0) {
      throw InvalidInput("Zimin words start at n = 1");
    }
    if (n > max_n) {
      throw LimitExceeded("Zimin word index", n, max_n);
    }
    Word result{VariableId("x1")};
    for (std::size_t k = 2; k <= n; ++k) {
      Word next = result;
      next.push_back(VariableId("x" + std::to_string(k)));
      next += result;
      result = std::move(next);
    }
    return result;
  }

  bool check_P1(Word const& w) {
    std::set<std::pair<VariableId, VariableId>> seen;
    for (std::size_t i = 1; i < w.size(); ++i) {
      if (!seen.emplace(w[i - 1], w[i]).second) {
        return false;
      }
    }
    return true;
  }

  bool check_P2(Word const& w, std::size_t n) {
    for (auto const& occ : classify_occurrences(w)) {
      for (std::size_t j = 1; j < occ.positions.size(); ++j) {
        std::set<VariableId> between(w.begin() + occ.positions[j - 1] + 1,
                                     w.begin() + occ.positions[j]);
        if (between.size() < n) {
          return false;
        }
      }
    }
    return true;
  }

  namespace {
    std::vector<std::set<VariableId>> block_alphabets(
        Word const&               u,
        std::vector<Block> const& blocks) {
      if (blocks.empty()) {
        throw InvalidInput("alphabet chain needs at least one block");
      }
      std::vector<std::set<VariableId>> result;
      std::size_t                       next = 0;
      for (auto const& b : blocks) {
        if (b.first != next || b.length == 0 || b.first + b.length > u.size()) {
          throw InvalidInput("blocks must tile the word with nonempty factors");
        }
        result.push_back(alphabet(u.slice(b.first, b.length)));
        next = b.first + b.length;
      }
      if (next != u.size()) {
        throw InvalidInput("blocks must cover the whole word");
      }
      return result;
    }

    bool descending(std::vector<std::set<VariableId>> const& chain,
                    Word const&                              v) {
      for (std::size_t i = 1; i < chain.size(); ++i) {
        if (!std::includes(chain[i - 1].begin(),
                           chain[i - 1].end(),
                           chain[i].begin(),
                           chain[i].end())) {
          return false;
        }
      }
      auto tail = alphabet(v);
      return std::includes(
          chain.back().begin(), chain.back().end(), tail.begin(), tail.end());
    }
  }  // namespace

  bool check_alphabet_chain(Word const&               u,
                            std::vector<Block> const& blocks,
                            Word const&               v) {
    return descending(block_alphabets(u, blocks), v);
  }

  bool check_alphabet_chain_dual(Word const&               u,
                                 std::vector<Block> const& blocks,
                                 Word const&               v) {
    auto chain = block_alphabets(u, blocks);
    std::reverse(chain.begin(), chain.end());
    return descending(chain, v);
  }

}  // namespace fbplab

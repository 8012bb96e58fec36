#include "coded_word.hpp"

#include <algorithm>

#include "fbplab/detail/subsequence.hpp"

namespace fbplab::internal {

  Code Coder::code(VariableId const& v) {
    auto [it, fresh] = codes_.try_emplace(v, static_cast<Code>(variables_.size()));
    if (fresh) {
      variables_.push_back(v);
    }
    return it->second;
  }

  CodedWord Coder::encode(Word const& w) {
    CodedWord result;
    result.reserve(w.size());
    for (auto const& v : w) {
      result.push_back(code(v));
    }
    return result;
  }

  CodeSet alphabet_of(std::span<Code const> w) {
    CodeSet result(w.begin(), w.end());
    std::sort(result.begin(), result.end());
    result.erase(std::unique(result.begin(), result.end()), result.end());
    return result;
  }

  SubwordSet subwords_upto(std::span<Code const> w, std::size_t k) {
    SubwordSet result;
    detail::for_each_distinct_subword(w, k, [&result](std::span<Code const> s) {
      result.emplace(s.begin(), s.end());
    });
    return result;
  }

  UmSignature um_signature(std::span<Code const> w, std::size_t m) {
    UmSignature sig;
    sig.alphabet = alphabet_of(w);
    detail::for_each_distinct_subword(w, m, [&](std::span<Code const> s) {
      if (detail::count_embeddings(s, w, 2) != 1) {
        return;
      }
      auto                 positions = *detail::leftmost_embedding(s, w);
      std::vector<CodeSet> gaps;
      gaps.reserve(positions.size() + 1);
      std::size_t from = 0;
      for (auto p : positions) {
        gaps.push_back(alphabet_of(w.subspan(from, p - from)));
        from = p + 1;
      }
      gaps.push_back(alphabet_of(w.subspan(from)));
      sig.gaps.emplace(CodedWord(s.begin(), s.end()), std::move(gaps));
    });
    return sig;
  }

  bool shortlex_less(CodedWord const& a, CodedWord const& b) {
    if (a.size() != b.size()) {
      return a.size() < b.size();
    }
    return a < b;
  }

  namespace {
    CodedIdentity renamed(CodedWord const& first, CodedWord const& second) {
      std::map<Code, Code> rename;
      auto                 map_word = [&rename](CodedWord const& w) {
        CodedWord out;
        out.reserve(w.size());
        for (auto c : w) {
          auto next = static_cast<Code>(rename.size());
          out.push_back(rename.try_emplace(c, next).first->second);
        }
        return out;
      };
      CodedWord lhs = map_word(first);
      CodedWord rhs = map_word(second);
      return {std::move(lhs), std::move(rhs)};
    }

    bool pair_less(CodedIdentity const& a, CodedIdentity const& b) {
      if (a.first != b.first) {
        return shortlex_less(a.first, b.first);
      }
      return shortlex_less(a.second, b.second);
    }
  }  // namespace

  CodedIdentity canonical(CodedWord const& lhs, CodedWord const& rhs) {
    auto forward  = renamed(lhs, rhs);
    auto backward = renamed(rhs, lhs);
    return pair_less(backward, forward) ? backward : forward;
  }

  std::vector<CodedWord> universe(std::size_t vars, std::size_t max_len) {
    std::vector<CodedWord> result;
    if (vars == 0) {
      return result;
    }
    for (std::size_t len = 1; len <= max_len; ++len) {
      CodedWord w(len, 0);
      while (true) {
        result.push_back(w);
        std::size_t i = len;
        while (i > 0 && ++w[i - 1] == vars) {
          w[i - 1] = 0;
          --i;
        }
        if (i == 0) {
          break;
        }
      }
    }
    return result;
  }

  Word decode_standard(CodedWord const& w) {
    std::vector<VariableId> symbols;
    symbols.reserve(w.size());
    for (auto c : w) {
      symbols.emplace_back("x" + std::to_string(c + 1));
    }
    return Word(std::move(symbols));
  }

}  // namespace fbplab::internal

#include "fbplab/word.hpp"

#include <algorithm>
#include <cctype>
#include <limits>
#include <sstream>

#include "coded_word.hpp"
#include "fbplab/detail/subsequence.hpp"
#include "fbplab/error.hpp"

namespace fbplab {

  VariableId::VariableId(std::string label) : label_(std::move(label)) {
    if (label_.empty()) {
      throw InvalidInput("variable label must be nonempty");
    }
    for (unsigned char c : label_) {
      if (std::isspace(c)) {
        throw InvalidInput("variable label '" + label_
                           + "' contains whitespace");
      }
    }
  }

  Word Word::parse(std::string_view text) {
    Word              result;
    std::stringstream in{std::string(text)};
    std::string       token;
    while (in >> token) {
      result.push_back(VariableId(token));
    }
    return result;
  }

  Word& Word::operator+=(Word const& other) {
    symbols_.insert(symbols_.end(), other.symbols_.begin(), other.symbols_.end());
    return *this;
  }

  Word Word::slice(std::size_t first, std::size_t count) const {
    if (first > size() || count > size() - first) {
      throw InvalidInput("word slice out of range");
    }
    return Word(std::vector<VariableId>(symbols_.begin() + first,
                                        symbols_.begin() + first + count));
  }

  std::string Word::to_string() const {
    std::string out;
    for (auto const& v : symbols_) {
      if (!out.empty()) {
        out += ' ';
      }
      out += v.label();
    }
    return out;
  }

  Word power(VariableId const& v, std::size_t count) {
    return Word(std::vector<VariableId>(count, v));
  }

  bool shortlex_less(Word const& a, Word const& b) {
    if (a.size() != b.size()) {
      return a.size() < b.size();
    }
    return a < b;
  }

  Identity::Identity(Word lhs, Word rhs)
      : lhs_(std::move(lhs)), rhs_(std::move(rhs)) {
    if (lhs_.empty() || rhs_.empty()) {
      throw InvalidInput("both sides of an identity must be nonempty");
    }
  }

  Identity Identity::parse(std::string_view text) {
    auto tilde = text.find('~');
    if (tilde == std::string_view::npos
        || text.find('~', tilde + 1) != std::string_view::npos) {
      throw ParseError("identity must have the form 'lhs ~ rhs': "
                       + std::string(text));
    }
    return Identity(Word::parse(text.substr(0, tilde)),
                    Word::parse(text.substr(tilde + 1)));
  }

  std::string Identity::to_string() const {
    return lhs_.to_string() + " ~ " + rhs_.to_string();
  }

  std::set<VariableId> alphabet(Word const& w) {
    return std::set<VariableId>(w.begin(), w.end());
  }

  std::size_t count_scattered_embeddings(Word const& u,
                                         Word const& v,
                                         std::size_t cap) {
    if (u.empty()) {
      throw InvalidInput("pattern word must be nonempty");
    }
    return detail::count_embeddings(u.symbols(), v.symbols(), cap);
  }

  std::optional<Embedding> leftmost_embedding(Word const& u, Word const& v) {
    if (u.empty()) {
      throw InvalidInput("pattern word must be nonempty");
    }
    auto positions = detail::leftmost_embedding(u.symbols(), v.symbols());
    if (!positions) {
      return std::nullopt;
    }
    return Embedding{std::move(*positions)};
  }

  std::optional<Embedding> unique_embedding(Word const& u, Word const& v) {
    if (count_scattered_embeddings(u, v, 2) != 1) {
      return std::nullopt;
    }
    // With a single embedding the greedy one is it.
    return leftmost_embedding(u, v);
  }

  std::set<Word> scattered_subwords_upto(Word const& v, std::size_t k) {
    std::set<Word> result;
    detail::for_each_distinct_subword(
        v.symbols(), k, [&result](std::span<VariableId const> s) {
          result.emplace(std::vector<VariableId>(s.begin(), s.end()));
        });
    return result;
  }

  bool in_Jm(Identity const& id, std::size_t m) {
    if (m == 0) {
      return true;
    }
    internal::Coder coder;
    auto            lhs = coder.encode(id.lhs());
    auto            rhs = coder.encode(id.rhs());
    return internal::subwords_upto(lhs, m) == internal::subwords_upto(rhs, m);
  }

  bool in_Um(Identity const& id, std::size_t m) {
    internal::Coder coder;
    auto            lhs = coder.encode(id.lhs());
    auto            rhs = coder.encode(id.rhs());
    return internal::um_signature(lhs, m) == internal::um_signature(rhs, m);
  }

  Word apply_substitution(Substitution const& theta, Word const& w) {
    if (w.empty()) {
      throw InvalidInput("cannot substitute into the empty word");
    }
    Word result;
    for (auto const& v : w) {
      auto it = theta.find(v);
      if (it == theta.end()) {
        throw UndefinedVariable(v.label());
      }
      if (it->second.empty()) {
        throw InvalidInput("image of '" + v.label() + "' is empty");
      }
      result += it->second;
    }
    return result;
  }

  std::vector<Occurrences> classify_occurrences(Word const& w) {
    std::vector<Occurrences>           result;
    std::map<VariableId, std::size_t> slot;
    for (std::size_t i = 0; i < w.size(); ++i) {
      auto [it, fresh] = slot.try_emplace(w[i], result.size());
      if (fresh) {
        result.push_back(Occurrences{w[i], {}});
      }
      result[it->second].positions.push_back(i);
    }
    return result;
  }

  std::size_t word_count(std::size_t k, std::size_t max_len) {
    constexpr auto limit = std::numeric_limits<std::size_t>::max();
    std::size_t    total = 0;
    std::size_t    layer = 1;
    for (std::size_t len = 1; len <= max_len; ++len) {
      if (k != 0 && layer > limit / k) {
        return limit;
      }
      layer *= k;
      if (total > limit - layer) {
        return limit;
      }
      total += layer;
    }
    return total;
  }

  void enumerate_words(std::vector<VariableId> const&          letters,
                       std::size_t                             max_len,
                       std::function<bool(Word const&)> const& visit,
                       std::size_t                             cap) {
    if (letters.empty()) {
      throw InvalidInput("alphabet must be nonempty");
    }
    if (max_len == 0) {
      throw InvalidInput("maximum length must be at least 1");
    }
    auto total = word_count(letters.size(), max_len);
    if (total > cap) {
      throw LimitExceeded("word enumeration", total, cap);
    }
    for (std::size_t len = 1; len <= max_len; ++len) {
      std::vector<std::size_t> digits(len, 0);
      while (true) {
        std::vector<VariableId> symbols;
        symbols.reserve(len);
        for (auto d : digits) {
          symbols.push_back(letters[d]);
        }
        if (!visit(Word(std::move(symbols)))) {
          return;
        }
        std::size_t i = len;
        while (i > 0 && ++digits[i - 1] == letters.size()) {
          digits[i - 1] = 0;
          --i;
        }
        if (i == 0) {
          break;
        }
      }
    }
  }

  std::vector<Word> enumerate_words(std::vector<VariableId> const& letters,
                                    std::size_t                    max_len,
                                    std::size_t                    cap) {
    std::vector<Word> result;
    enumerate_words(
        letters,
        max_len,
        [&result](Word const& w) {
          result.push_back(w);
          return true;
        },
        cap);
    return result;
  }

  std::vector<VariableId> standard_variables(std::size_t k) {
    std::vector<VariableId> result;
    for (std::size_t i = 1; i <= k; ++i) {
      result.emplace_back("x" + std::to_string(i));
    }
    return result;
  }

  Identity canonical_identity(Identity const& id) {
    internal::Coder coder;
    auto            lhs   = coder.encode(id.lhs());
    auto            rhs   = coder.encode(id.rhs());
    auto [left, right]    = internal::canonical(lhs, rhs);
    return Identity(internal::decode_standard(left),
                    internal::decode_standard(right));
  }

  namespace {
    template <typename Signature>
    std::vector<std::vector<std::size_t>> group_by(
        std::vector<internal::CodedWord> const& words,
        Signature&&                             signature) {
      using Key = decltype(signature(words.front()));
      std::map<Key, std::vector<std::size_t>> groups;
      for (std::size_t i = 0; i < words.size(); ++i) {
        groups[signature(words[i])].push_back(i);
      }
      std::vector<std::vector<std::size_t>> result;
      result.reserve(groups.size());
      for (auto& [key, members] : groups) {
        result.push_back(std::move(members));
      }
      std::sort(result.begin(), result.end());
      return result;
    }
  }  // namespace

  std::vector<std::vector<std::size_t>> jm_classes(std::size_t m,
                                                   Universe    universe) {
    auto words = internal::universe(universe.vars, universe.max_len);
    if (m == 0) {
      std::vector<std::size_t> all(words.size());
      for (std::size_t i = 0; i < all.size(); ++i) {
        all[i] = i;
      }
      return {all};
    }
    return group_by(words, [m](internal::CodedWord const& w) {
      return internal::subwords_upto(w, m);
    });
  }

  std::vector<std::vector<std::size_t>> um_classes(std::size_t m,
                                                   Universe    universe) {
    auto words = internal::universe(universe.vars, universe.max_len);
    return group_by(words, [m](internal::CodedWord const& w) {
      return internal::um_signature(w, m);
    });
  }

  IdentitySet identities_from_classes(
      std::vector<Word> const&                     words,
      std::vector<std::vector<std::size_t>> const& classes) {
    internal::Coder                  coder;
    std::vector<internal::CodedWord> coded;
    coded.reserve(words.size());
    for (auto const& w : words) {
      coded.push_back(coder.encode(w));
    }
    std::set<internal::CodedIdentity> canon;
    for (auto const& members : classes) {
      for (std::size_t a = 0; a < members.size(); ++a) {
        for (std::size_t b = a + 1; b < members.size(); ++b) {
          canon.insert(internal::canonical(coded[members[a]], coded[members[b]]));
        }
      }
    }
    IdentitySet result;
    for (auto const& [lhs, rhs] : canon) {
      result.emplace_hint(result.end(),
                          internal::decode_standard(lhs),
                          internal::decode_standard(rhs));
    }
    return result;
  }

  namespace {
    std::vector<Word> standard_universe_words(Universe universe) {
      std::vector<Word> result;
      for (auto const& w : internal::universe(universe.vars, universe.max_len)) {
        result.push_back(internal::decode_standard(w));
      }
      return result;
    }
  }  // namespace

  IdentitySet jm_fragment(std::size_t m, Universe universe) {
    return identities_from_classes(standard_universe_words(universe),
                                   jm_classes(m, universe));
  }

  IdentitySet um_fragment(std::size_t m, Universe universe) {
    return identities_from_classes(standard_universe_words(universe),
                                   um_classes(m, universe));
  }

}  // namespace fbplab

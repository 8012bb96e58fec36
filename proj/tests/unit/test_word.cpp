#include <random>
#include <set>

#include "doctest.h"

#include "fbplab/error.hpp"
#include "fbplab/word.hpp"

using namespace fbplab;

namespace {
  // Subsequences by position mask; only for short words.
  std::size_t brute_embeddings(Word const& u, Word const& v) {
    std::size_t count = 0;
    for (std::size_t mask = 0; mask < (std::size_t(1) << v.size()); ++mask) {
      Word sub;
      for (std::size_t i = 0; i < v.size(); ++i) {
        if (mask >> i & 1) {
          sub.push_back(v[i]);
        }
      }
      count += sub == u;
    }
    return count;
  }

  std::set<Word> brute_subwords(Word const& v, std::size_t k) {
    std::set<Word> out;
    for (std::size_t mask = 1; mask < (std::size_t(1) << v.size()); ++mask) {
      Word sub;
      for (std::size_t i = 0; i < v.size(); ++i) {
        if (mask >> i & 1) {
          sub.push_back(v[i]);
        }
      }
      if (sub.size() <= k) {
        out.insert(sub);
      }
    }
    return out;
  }

  Word random_word(std::mt19937_64& rng, std::size_t letters, std::size_t max_len) {
    std::uniform_int_distribution<std::size_t> len(1, max_len), letter(0, letters - 1);
    auto const vars = standard_variables(letters);
    Word w;
    for (std::size_t i = len(rng); i > 0; --i) {
      w.push_back(vars[letter(rng)]);
    }
    return w;
  }
}  // namespace

TEST_CASE("parse and print") {
  auto w = Word::parse("x y x t1");
  CHECK(w.size() == 4);
  CHECK(Word::parse(w.to_string()) == w);
  CHECK(power("x", 3) == Word::parse("x x x"));
  CHECK(alphabet(w).size() == 3);
}

TEST_CASE("shortlex order") {
  CHECK(shortlex_less(Word::parse("y"), Word::parse("x x")));
  CHECK(!shortlex_less(Word::parse("x y"), Word::parse("x y")));
}

TEST_CASE("embedding counts match position masks") {
  std::mt19937_64 rng(11);
  for (int trial = 0; trial < 300; ++trial) {
    auto const v = random_word(rng, 2, 9);
    auto const u = random_word(rng, 2, 3);
    auto const n = brute_embeddings(u, v);
    CHECK(count_scattered_embeddings(u, v, 1000) == n);
    CHECK(is_unambiguously_scattered(u, v) == (n == 1));
    CHECK(leftmost_embedding(u, v).has_value() == (n > 0));
  }
}

TEST_CASE("unique embedding positions") {
  auto e = unique_embedding(Word::parse("x y"), Word::parse("x t y"));
  REQUIRE(e);
  CHECK(e->positions == std::vector<std::size_t>{0, 2});
  CHECK(!unique_embedding(Word::parse("x"), Word::parse("x x")));
}

TEST_CASE("J_m membership agrees with subword sets") {
  std::mt19937_64 rng(5);
  for (int trial = 0; trial < 400; ++trial) {
    auto const u = random_word(rng, 2, 6);
    auto const v = random_word(rng, 2, 6);
    for (std::size_t m = 1; m <= 3; ++m) {
      CHECK(in_Jm(Identity(u, v), m) == (brute_subwords(u, m) == brute_subwords(v, m)));
      CHECK(scattered_subwords_upto(v, m) == brute_subwords(v, m));
    }
  }
}

TEST_CASE("J_1 and U_0 are content equality") {
  std::mt19937_64 rng(9);
  for (int trial = 0; trial < 200; ++trial) {
    Identity const id(random_word(rng, 3, 5), random_word(rng, 3, 5));
    bool const same = alphabet(id.lhs()) == alphabet(id.rhs());
    CHECK(in_Jm(id, 1) == same);
    CHECK(in_Um(id, 0) == same);
  }
}

TEST_CASE("power swap separates U_m from J_{m+1}") {
  for (std::size_t m = 1; m <= 3; ++m) {
    Identity const id(power("x", m + 1) + power("y", m + 1),
                      power("y", m + 1) + power("x", m + 1));
    CHECK(in_Um(id, m));
    CHECK(!in_Jm(id, m + 1));
  }
}

TEST_CASE("substitution") {
  Substitution theta{{VariableId("x"), Word::parse("a b")}, {VariableId("y"), Word::parse("c")}};
  CHECK(apply_substitution(theta, Word::parse("x y x")) == Word::parse("a b c a b"));
  CHECK_THROWS_AS(apply_substitution(theta, Word::parse("x z")), UndefinedVariable);
}

TEST_CASE("universe sizes") {
  CHECK(word_count(2, 3) == 2 + 4 + 8);
  CHECK(enumerate_words(standard_variables(2), 3).size() == 14);
  // 15 unordered pairs of distinct words; renaming x1 <-> x2 fixes 3 of
  // them and pairs up the other 12.
  auto const frag = jm_fragment(0, Universe{2, 2});
  CHECK(frag.size() == 3 + 12 / 2);
}

TEST_CASE("canonical identity is invariant under renaming and swap") {
  Identity const a(Word::parse("x y x"), Word::parse("y x x"));
  Identity const b(Word::parse("q p p"), Word::parse("p q p"));
  CHECK(canonical_identity(a) == canonical_identity(b));
}

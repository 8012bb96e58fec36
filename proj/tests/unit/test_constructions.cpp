#include "doctest.h"

#include "fbplab/constructions.hpp"
#include "fbplab/error.hpp"

using namespace fbplab;

TEST_CASE("Zimin words") {
  CHECK(zimin(1) == Word::parse("x1"));
  CHECK(zimin(2) == Word::parse("x1 x2 x1"));
  for (std::size_t n = 1; n <= 6; ++n) {
    CHECK(zimin(n).size() == (std::size_t(1) << n) - 1);
  }
}

TEST_CASE("sparse words") {
  CHECK(is_sparse(Word::parse("x t x")).sparse);
  CHECK(is_sparse(Word::parse("x y t y x")).sparse);
  CHECK(!is_sparse(Word::parse("x x")).sparse);
  CHECK(is_sparse(Word::parse("x y x")).sparse);
  CHECK(!is_sparse(Word::parse("x y x y")).sparse);
}

TEST_CASE("u_n(m) lengths and properties") {
  for (std::size_t n = 1; n <= 4; ++n) {
    for (std::size_t m = 1; m <= 4; ++m) {
      auto const c = build_u_n_m(n, m);
      CHECK(c.word.size() == u_n_m_length(n, m));
      CHECK(check_P1(c.word));
      CHECK(check_P2(c.word, n));
      CHECK(check_alphabet_chain(c.word, c.head_blocks, Word{"x"}));
    }
  }
}

TEST_CASE("w_n satisfies both chains") {
  auto const w = build_w_n(2, 3, TailForm::mirror);
  CHECK(check_alphabet_chain(w.head(), w.head_blocks, Word{"x"}));
  CHECK(check_alphabet_chain_dual(w.tail(), w.tail_blocks, Word{"x"}));
  CHECK(alphabet(w.head()) == alphabet(w.tail()));
}

TEST_CASE("length cap") {
  CHECK_THROWS_AS(build_u_n_m(8, 8, 1000), LimitExceeded);
}

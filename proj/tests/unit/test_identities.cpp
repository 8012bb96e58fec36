#include "doctest.h"

#include "fbplab/families.hpp"
#include "fbplab/identities.hpp"

using namespace fbplab;

namespace {
  // Evaluates both sides under every assignment, by nested counting.
  bool brute_holds(FiniteMonoid const& m, Identity const& id) {
    std::vector<VariableId> vars;
    for (auto const& v : alphabet(id.lhs() + id.rhs())) {
      vars.push_back(v);
    }
    std::vector<Index> digits(vars.size(), 0);
    while (true) {
      ElementSubstitution sigma;
      for (std::size_t i = 0; i < vars.size(); ++i) {
        sigma[vars[i]] = digits[i];
      }
      Index l = m.identity(), r = m.identity();
      for (auto const& v : id.lhs()) {
        l = m.product(l, sigma[v]);
      }
      for (auto const& v : id.rhs()) {
        r = m.product(r, sigma[v]);
      }
      if (l != r) {
        return false;
      }
      std::size_t i = 0;
      while (i < digits.size() && ++digits[i] == m.size()) {
        digits[i++] = 0;
      }
      if (i == digits.size()) {
        return true;
      }
    }
  }
}  // namespace

TEST_CASE("exhaustive satisfaction agrees with direct evaluation") {
  auto const c3 = family_monoid(FamilyKind::C, 3).monoid;
  for (auto text : {"x x = x", "x y x = x y", "x y = y x", "x y x y = y x y x",
                    "x y z x = x y z", "x x y = x y"}) {
    auto const p = Word::parse(std::string(text).substr(0, std::string(text).find('=')));
    auto const q = Word::parse(std::string(text).substr(std::string(text).find('=') + 1));
    Identity const id(p, q);
    auto const v = satisfies_identity(c3, id);
    CHECK(v.holds == brute_holds(c3, id));
    if (!v.holds) {
      REQUIRE(v.counterexample);
      CHECK(evaluate_word(c3, *v.counterexample, p) != evaluate_word(c3, *v.counterexample, q));
    }
  }
}

TEST_CASE("sampled satisfaction is reproducible") {
  auto const c3 = family_monoid(FamilyKind::C, 3).monoid;
  Identity const id(Word::parse("x y"), Word::parse("y x"));
  auto const a = satisfies_identity_sampled(c3, id, 1000, 42);
  auto const b = satisfies_identity_sampled(c3, id, 1000, 42);
  CHECK(a.counterexample_found);
  CHECK(a.samples == b.samples);
  CHECK(a.counterexample == b.counterexample);
}

TEST_CASE("bounded theory of a semilattice is content equality") {
  FiniteMonoid const s(2, {0, 1, 1, 1}, 0, {1});
  auto const theory = bounded_identity_theory(s, Universe{2, 4});
  CHECK(theory == jm_fragment(1, Universe{2, 4}));
}

TEST_CASE("bounded theory of C_2 is J_1") {
  auto const c2 = family_monoid(FamilyKind::C, 2).monoid;
  CHECK(bounded_identity_theory(c2, Universe{3, 4}) == jm_fragment(1, Universe{3, 4}));
}

TEST_CASE("isoterm search finds witnesses") {
  auto const c2 = family_monoid(FamilyKind::C, 2).monoid;
  auto const v  = is_isoterm_bounded(c2, Word::parse("x x"));
  CHECK(!v.isoterm);
  REQUIRE(v.witness);
  CHECK(satisfies_identity(c2, Identity(Word::parse("x x"), *v.witness)).holds);
}

TEST_CASE("band identity check validates inputs") {
  FiniteMonoid const s(2, {0, 1, 1, 1}, 0, {1});
  CHECK(band_identity_check(s, Word::parse("x y"), "x", Word::parse("y x")).holds);
  CHECK_THROWS_AS(band_identity_check(s, Word::parse("x"), "y", Word::parse("x")),
                  InvalidInput);
}

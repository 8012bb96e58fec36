#include "doctest.h"

#include "fbplab/error.hpp"
#include "fbplab/families.hpp"
#include "fbplab/monoid.hpp"
#include "fbplab/power.hpp"

using namespace fbplab;

namespace {
  FiniteMonoid two_element_semilattice() {
    return FiniteMonoid(2, {0, 1, 1, 1}, 0, {1}, {"1", "0"});
  }

  bool brute_associative(FiniteMonoid const& m) {
    for (Index a = 0; a < m.size(); ++a) {
      for (Index b = 0; b < m.size(); ++b) {
        for (Index c = 0; c < m.size(); ++c) {
          if (m.product(m.product(a, b), c) != m.product(a, m.product(b, c))) {
            return false;
          }
        }
      }
    }
    return true;
  }

  // a R b iff aM = bM, compared as element sets.
  bool brute_r_trivial(FiniteMonoid const& m) {
    std::vector<std::vector<bool>> ideal(m.size(), std::vector<bool>(m.size()));
    for (Index a = 0; a < m.size(); ++a) {
      for (Index x = 0; x < m.size(); ++x) {
        ideal[a][m.product(a, x)] = true;
      }
    }
    for (Index a = 0; a < m.size(); ++a) {
      for (Index b = a + 1; b < m.size(); ++b) {
        if (ideal[a] == ideal[b]) {
          return false;
        }
      }
    }
    return true;
  }
}  // namespace

TEST_CASE("constructor validates") {
  CHECK_THROWS_AS(FiniteMonoid(2, {0, 1, 1}, 0, {1}), InvalidInput);
  // Not associative: 1 * (1 * 2) != (1 * 1) * 2.
  CHECK_THROWS_AS(FiniteMonoid(3, {0, 1, 2, 1, 2, 0, 2, 2, 2}, 0, {1, 2}), InvalidInput);
}

TEST_CASE("closure tables are associative") {
  for (auto kind : {FamilyKind::C, FamilyKind::IC, FamilyKind::E}) {
    for (std::size_t m = 1; m <= 4; ++m) {
      CHECK(brute_associative(family_monoid(kind, m).monoid));
    }
  }
}

TEST_CASE("triviality matches ideal comparison") {
  for (std::size_t m = 1; m <= 4; ++m) {
    auto const c = family_monoid(FamilyKind::C, m).monoid;
    auto const e = family_monoid(FamilyKind::E, m).monoid;
    CHECK(triviality(c).j_trivial);
    CHECK(triviality(e).r_trivial == brute_r_trivial(e));
    CHECK(triviality(dual(e)).l_trivial == brute_r_trivial(e));
  }
}

TEST_CASE("direct product, dual and adjoined identity") {
  auto const s = two_element_semilattice();
  auto const p = direct_product(s, s);
  CHECK(p.size() == 4);
  CHECK(structure_flags(p).is_band);
  CHECK(adjoin_identity(s).size() == 3);
  CHECK(dual(dual(s)) == s);
}

TEST_CASE("dump round trip") {
  auto const c = family_monoid(FamilyKind::C, 3).monoid;
  CHECK(from_dump(to_dump(c)) == c);
}

TEST_CASE("R-trivial monoids embed extensively") {
  auto const r = embed_rtrivial_in_Em(family_monoid(FamilyKind::E, 3).monoid);
  CHECK(r.extensive);
  CHECK(r.injective);
  CHECK(r.multiplicative);
}

TEST_CASE("unitary power monoid") {
  auto const c3 = family_monoid(FamilyKind::C, 3).monoid;
  auto const p  = unitary_power_monoid(c3).monoid;
  CHECK(p.size() == std::size_t(1) << (c3.size() - 1));
  CHECK(brute_associative(p));
  auto const whole = unitary_submonoid(c3, {(SubsetElement(1) << c3.size()) - 1});
  CHECK(whole.monoid.size() == 2);
}

TEST_CASE("memory cap") {
  setenv("FBPLAB_CAP_MB", "1", 1);
  CHECK_THROWS_AS(family_monoid(FamilyKind::E, 7), LimitExceeded);
  unsetenv("FBPLAB_CAP_MB");
}

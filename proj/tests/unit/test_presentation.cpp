#include <algorithm>

#include "doctest.h"

#include "fbplab/coxeter.hpp"
#include "fbplab/error.hpp"
#include "fbplab/families.hpp"
#include "fbplab/homomorphism.hpp"
#include "fbplab/presentation.hpp"
#include "fbplab/rewriting.hpp"

using namespace fbplab;

TEST_CASE("presentation text round trip") {
  auto const p = Presentation::parse("gens: a b\n# idempotents\na a = a\nb b = b\na b a = 1\n");
  CHECK(p.generators().size() == 2);
  CHECK(p.relations().size() == 3);
  CHECK(Presentation::parse(p.to_string()).relations() == p.relations());
  CHECK_THROWS_AS(Presentation::parse("gens: a\na c = a\n"), InvalidInput);
  CHECK_THROWS_AS(Presentation::parse("a = a\n"), ParseError);
}

TEST_CASE("Coxeter matrix formats") {
  auto const upper = CoxeterMatrix::parse("3\n4 2\n3\n");
  auto const full  = CoxeterMatrix::parse("3\n1 4 2\n1 3\n1\n");
  CHECK(upper == full);
  CHECK(upper == coxeter_B(3));
  CHECK(CoxeterMatrix::parse(upper.to_string()) == upper);
  CHECK(CoxeterMatrix::parse("2\ninf\n").entry(0, 1) == CoxeterMatrix::infinity);
  CHECK_THROWS_AS(CoxeterMatrix::parse("2\n1\n"), InvalidInput);
}

TEST_CASE("t(n) follows its recursion") {
  std::uint64_t t = 1;
  for (std::size_t n = 0; n <= 6; ++n) {
    REQUIRE(t_sequence(n));
    CHECK(*t_sequence(n) == t);
    t = t * (t + 1);
  }
  CHECK(!t_sequence(8));
}

TEST_CASE("completion of small presentations") {
  for (std::size_t n = 1; n <= 3; ++n) {
    auto const rs = complete(free_tree_presentation(n));
    CHECK(rs.status() == CompletionStatus::complete);
    CHECK(enumerate_presented(rs).monoid.size() == *t_sequence(n));
  }
  for (std::size_t m = 2; m <= 5; ++m) {
    auto const c = enumerate_presented(complete(catalan_presentation(m)));
    CHECK(c.monoid.size() == catalan_number(m));
  }
  CHECK(enumerate_presented(complete(lee_L3_presentation())).reported_size == 6);
}

TEST_CASE("capped completion is reported") {
  // Affine braid relations; two rules cannot finish.
  auto const p = Presentation::parse("gens: a b c\na b a = b a b\nb c b = c b c\na c a = c a c\n");
  CompletionOptions opts;
  opts.rule_cap = 2;
  CHECK(complete(p, opts).status() == CompletionStatus::capped);
}

TEST_CASE("normal forms decide the word problem of H_0(A_2)") {
  auto const cd = coxeter_A(2);
  auto const rs = complete(hecke0_presentation(cd));
  auto const h  = hecke0_via_unitary(cd).hecke.monoid;
  ElementSubstitution sigma{{VariableId("s1"), h.generators()[0]},
                            {VariableId("s2"), h.generators()[1]}};
  auto const words = enumerate_words({VariableId("s1"), VariableId("s2")}, 5);
  for (auto const& u : words) {
    for (auto const& v : words) {
      CHECK((rs.normal_form(u) == rs.normal_form(v))
            == (evaluate_word(h, sigma, u) == evaluate_word(h, sigma, v)));
    }
  }
}

TEST_CASE("Coxeter group models") {
  CHECK(coxeter_group_model(coxeter_A(3)).group.monoid.size() == 24);
  CHECK(coxeter_group_model(coxeter_B(3)).group.monoid.size() == 48);
  CHECK(coxeter_group_model(coxeter_I2(5)).group.monoid.size() == 10);
  CHECK(coxeter_group_model(coxeter_I2(2)).group.monoid.size() == 4);
  CHECK_THROWS_AS(coxeter_group_model(coxeter_H3()), InvalidInput);
}

TEST_CASE("homomorphism reports the failing relation") {
  auto const p  = free_tree_presentation(2);
  auto const c3 = family_monoid(FamilyKind::C, 3);
  CHECK(extend_homomorphism(p, c3.monoid, {{p.generators()[0], c3.monoid.generators()[0]},
                                           {p.generators()[1], c3.monoid.identity()}})
            .ok);
  auto const it = std::find(c3.elements.begin(), c3.elements.end(), PartialMap::parse("[2,3,3]"));
  REQUIRE(it != c3.elements.end());
  auto const square_free = Index(it - c3.elements.begin());
  auto const h = extend_homomorphism(p, c3.monoid, {{p.generators()[0], square_free},
                                                    {p.generators()[1], c3.monoid.identity()}});
  CHECK(!h.ok);
  REQUIRE(h.failed_relation);
  CHECK(h.failed_relation->lhs == Word::parse("a1 a1"));
}

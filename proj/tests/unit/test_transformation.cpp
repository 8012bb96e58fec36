#include <algorithm>

#include "doctest.h"

#include "fbplab/digraph.hpp"
#include "fbplab/families.hpp"
#include "fbplab/transformation.hpp"

using namespace fbplab;

namespace {
  std::size_t binomial(std::size_t n, std::size_t k) {
    std::size_t r = 1;
    for (std::size_t i = 1; i <= k; ++i) {
      r = r * (n - k + i) / i;
    }
    return r;
  }

  // Every partial map on [m], filtered by the defining predicates written
  // out directly.
  std::vector<PartialMap> brute(std::size_t m, bool total, bool injective, bool op, bool ext) {
    std::vector<PartialMap> out;
    std::vector<PartialMap::Point> img(m, 0);
    while (true) {
      bool keep = true;
      for (std::size_t i = 0; i < m && keep; ++i) {
        if (img[i] == 0) {
          keep = !total;
          continue;
        }
        keep = !ext || img[i] >= i + 1;
        for (std::size_t j = i + 1; j < m && keep; ++j) {
          if (img[j] != 0) {
            keep = (!injective || img[i] != img[j]) && (!op || img[i] <= img[j]);
          }
        }
      }
      if (keep) {
        out.emplace_back(img);
      }
      std::size_t i = m;
      while (i > 0 && img[i - 1] == m) {
        img[--i] = 0;
      }
      if (i == 0) {
        break;
      }
      ++img[i - 1];
    }
    return out;
  }
}  // namespace

TEST_CASE("Catalan numbers") {
  for (std::size_t n = 0; n <= 10; ++n) {
    CHECK(catalan_number(n) == binomial(2 * n, n) / (n + 1));
  }
}

TEST_CASE("family enumeration agrees with predicate filters") {
  for (std::size_t m = 1; m <= 5; ++m) {
    CHECK(enumerate_family(FamilyKind::C, m) == brute(m, true, false, true, true));
    CHECK(enumerate_family(FamilyKind::E, m) == brute(m, true, false, false, true));
    CHECK(enumerate_family(FamilyKind::IC, m) == brute(m, false, true, true, true));
    CHECK(enumerate_family(FamilyKind::POI, m) == brute(m, false, true, true, false));
  }
}

TEST_CASE("closure of family generators reaches the whole family") {
  for (auto kind : {FamilyKind::C, FamilyKind::E, FamilyKind::IC}) {
    for (std::size_t m = 1; m <= 5; ++m) {
      auto members = enumerate_family(kind, m);
      auto closed  = family_monoid(kind, m, FamilyRoute::generators).elements;
      std::sort(closed.begin(), closed.end());
      CHECK(closed == members);
    }
  }
}

TEST_CASE("composition acts on the right") {
  auto const a = PartialMap::parse("[2,2,3]");
  auto const b = PartialMap::parse("[1,3,-]");
  CHECK(compose(a, b) == PartialMap::parse("[3,3,-]"));
}

TEST_CASE("bar and hat on a small example") {
  auto const a = PartialMap::parse("[-,3,-]");
  CHECK(bar_map(a) == PartialMap::parse("[3,3,4,4]"));
  CHECK(hat_map(bar_map(a)) == a);
  CHECK(bar_map(PartialMap::parse("[2,-,-]")) == PartialMap::parse("[2,4,4,4]"));
}

TEST_CASE("Gamma_n shape") {
  for (std::size_t n = 1; n <= 6; ++n) {
    auto const g = build_gamma_n(n);
    CHECK(g.vertex_count() == 2 * n + 1);
    CHECK(g.edges().size() == 2 * n);
    CHECK(longest_path_vertices(g) == n + 1);
  }
  CHECK(catalan_of_digraph(path_digraph(4)).monoid.size() == catalan_number(4));
}

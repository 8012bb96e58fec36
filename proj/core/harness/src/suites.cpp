#include "fbplab/harness/suites.hpp"

#include <algorithm>
#include <atomic>
#include <chrono>
#include <exception>
#include <thread>

#include "fbplab/constructions.hpp"
#include "fbplab/coxeter.hpp"
#include "fbplab/digraph.hpp"
#include "fbplab/error.hpp"
#include "fbplab/families.hpp"
#include "fbplab/homomorphism.hpp"
#include "fbplab/identities.hpp"
#include "fbplab/power.hpp"
#include "fbplab/rewriting.hpp"

namespace fbplab::harness {

  namespace {
    using json = nlohmann::json;

    constexpr char const* published = "published";
    constexpr char const* oracle    = "oracle";
    constexpr char const* definition = "definition";

    Outcome exact(json expected, json actual, std::string source, std::string detail = {}) {
      Outcome o;
      o.status          = expected == actual ? Status::pass : Status::fail;
      o.expected        = std::move(expected);
      o.actual          = std::move(actual);
      o.expected_source = std::move(source);
      o.detail          = std::move(detail);
      return o;
    }

    Outcome bounded(json expected, json actual, json bound, std::string source,
                    std::string detail = {}) {
      auto o   = exact(std::move(expected), std::move(actual), std::move(source),
                       std::move(detail));
      o.bound  = std::move(bound);
      if (o.status == Status::pass) {
        o.status = Status::bounded_pass;
      }
      return o;
    }

    Outcome skipped(std::string why) {
      Outcome o;
      o.status = Status::skipped;
      o.detail = std::move(why);
      return o;
    }

    std::string describe(FiniteMonoid const& m, ElementSubstitution const& sigma) {
      std::string out;
      for (auto const& [v, a] : sigma) {
        out += (out.empty() ? "" : ", ") + v.label() + " -> " + m.label(a);
      }
      return out;
    }

    FiniteMonoid family(FamilyKind kind, std::size_t m) {
      return family_monoid(kind, m).monoid;
    }

    // Smallest identity in exactly one of the two sets.
    std::string first_difference(IdentitySet const& a, IdentitySet const& b) {
      std::vector<Identity> diff;
      std::set_symmetric_difference(a.begin(), a.end(), b.begin(), b.end(),
                                    std::back_inserter(diff));
      if (diff.empty()) {
        return {};
      }
      auto const& id = diff.front();
      return (a.count(id) ? "only in first: " : "only in second: ") + id.to_string();
    }

    // Every partial map of [m] as an image vector, 0 for undefined.
    template <typename Visit>
    void for_each_partial_map(std::size_t m, Visit&& visit) {
      std::vector<PartialMap::Point> image(m, 0);
      while (true) {
        visit(PartialMap(image));
        std::size_t i = m;
        while (i > 0 && image[i - 1] == m) {
          image[--i] = 0;
        }
        if (i == 0) {
          return;
        }
        ++image[i - 1];
      }
    }

    ////////////////////////////////////////////////////////////////////////
    // cardinalities
    ////////////////////////////////////////////////////////////////////////

    Suite cardinalities() {
      Suite s{"cardinalities",
              "orders of C_m, IC_m, E_m, POI_2, OPFixTop_3, FT_n and H_0 monoids",
              {}};
      for (std::size_t m = 1; m <= 8; ++m) {
        s.checks.push_back({"C_" + std::to_string(m),
                            "|C_m| is the m-th Catalan number",
                            {{"m", m}},
                            [m](Config const&) {
                              return exact(catalan_number(m),
                                           family(FamilyKind::C, m).size(),
                                           m == 5 ? published : oracle);
                            }});
      }
      for (std::size_t m = 1; m <= 7; ++m) {
        s.checks.push_back({"IC_" + std::to_string(m),
                            "|IC_m| is the (m+1)-th Catalan number",
                            {{"m", m}},
                            [m](Config const&) {
                              return exact(catalan_number(m + 1),
                                           family(FamilyKind::IC, m).size(),
                                           m == 4 ? published : oracle);
                            }});
      }
      s.checks.push_back({"POI_2", "the monoid B_2^1 modelled as POI_2 has six elements",
                          {{"m", 2}}, [](Config const&) {
                            return exact(6, family(FamilyKind::POI, 2).size(), published);
                          }});
      s.checks.push_back({"OPFixTop_3",
                          "the monoid A_2^1 modelled as OPFixTop_3 has six elements",
                          {{"m", 3}}, [](Config const&) {
                            return exact(6, family(FamilyKind::OPFixTop, 3).size(),
                                         published);
                          }});
      for (std::size_t m = 1; m <= 6; ++m) {
        s.checks.push_back(
            {"E_" + std::to_string(m),
             "enumerating E_m and closing its generators give the same m! maps",
             {{"m", m}},
             [m](Config const&) {
               std::size_t factorial = 1;
               for (std::size_t k = 2; k <= m; ++k) {
                 factorial *= k;
               }
               auto members = enumerate_family(FamilyKind::E, m);
               auto closed  = family_monoid(FamilyKind::E, m, FamilyRoute::generators);
               std::sort(members.begin(), members.end());
               auto elements = closed.elements;
               std::sort(elements.begin(), elements.end());
               return exact(json{{"enumerated", factorial}, {"closure", factorial},
                                 {"same_maps", true}},
                            json{{"enumerated", members.size()},
                                 {"closure", elements.size()},
                                 {"same_maps", members == elements}},
                            oracle);
             }});
      }
      std::vector<std::uint64_t> const t_values{1, 2, 6, 42, 1806, 3263442};
      for (std::size_t n = 0; n < t_values.size(); ++n) {
        s.checks.push_back({"t_" + std::to_string(n),
                            "t(0) = 1 and t(n) = t(n-1)(t(n-1)+1)",
                            {{"n", n}},
                            [n, expected = t_values[n]](Config const&) {
                              auto t = t_sequence(n);
                              return exact(expected, t ? json(*t) : json(nullptr),
                                           n <= 4 ? published : oracle);
                            }});
      }
      for (auto [name, size] : std::vector<std::pair<char const*, std::size_t>>{
               {"I4", 8}, {"I5", 10}, {"A3", 24}, {"B3", 48}}) {
        s.checks.push_back({std::string("H0_") + name,
                            "finite 0-Hecke monoids have the order of their Coxeter group",
                            {{"diagram", name}},
                            [name = std::string(name), size](Config const&) {
                              return exact(size,
                                           hecke0_via_unitary(coxeter_by_name(name))
                                               .hecke.monoid.size(),
                                           published);
                            }});
      }
      return s;
    }

    ////////////////////////////////////////////////////////////////////////
    // bar-hat
    ////////////////////////////////////////////////////////////////////////

    // IC_3 to C_4, one pair per element; the {1 -> 2} row is recomputed from
    // the backward induction.
    std::vector<std::pair<char const*, char const*>> const alignment_m3{
        {"[1,2,3]", "[1,2,3,4]"}, {"[-,2,3]", "[2,2,3,4]"}, {"[1,-,3]", "[1,3,3,4]"},
        {"[1,2,-]", "[1,2,4,4]"}, {"[2,-,3]", "[2,3,3,4]"}, {"[1,3,-]", "[1,3,4,4]"},
        {"[2,3,-]", "[2,3,4,4]"}, {"[-,-,3]", "[3,3,3,4]"}, {"[-,2,-]", "[2,2,4,4]"},
        {"[1,-,-]", "[1,4,4,4]"}, {"[3,-,-]", "[3,4,4,4]"}, {"[2,-,-]", "[2,4,4,4]"},
        {"[-,3,-]", "[3,3,4,4]"}, {"[-,-,-]", "[4,4,4,4]"}};

    Suite bar_hat() {
      Suite s{"bar-hat", "the bijection a -> bar(a) from IC_m onto C_{m+1} and its inverse", {}};
      for (std::size_t m = 1; m <= 6; ++m) {
        s.checks.push_back(
            {"bijection_" + std::to_string(m),
             "bar and hat are mutually inverse bijections between IC_m and C_{m+1}",
             {{"m", m}},
             [m](Config const&) {
               auto const ic = enumerate_family(FamilyKind::IC, m);
               auto const c  = enumerate_family(FamilyKind::C, m + 1);
               std::set<PartialMap> images;
               std::string          detail;
               bool                 ok = true;
               for (auto const& a : ic) {
                 auto b = bar_map(a);
                 if (!in_family(FamilyKind::C, b) || hat_map(b) != a) {
                   ok     = false;
                   detail = "bar fails at " + a.to_string();
                 }
                 images.insert(b);
               }
               for (auto const& b : c) {
                 auto a = hat_map(b);
                 if (!in_family(FamilyKind::IC, a) || bar_map(a) != b) {
                   ok     = false;
                   detail = "hat fails at " + b.to_string();
                 }
               }
               auto const n = catalan_number(m + 1);
               return exact(json{{"IC", n}, {"C", n}, {"bar_images", n}, {"inverse", true}},
                            json{{"IC", ic.size()}, {"C", c.size()},
                                 {"bar_images", images.size()}, {"inverse", ok}},
                            published, detail);
             }});
        s.checks.push_back(
            {"bar_preserves_" + std::to_string(m),
             "bar of an order-preserving or extensive partial injection is so too",
             {{"m", m}},
             [m](Config const&) {
               std::size_t injections = 0, violations = 0;
               std::string detail;
               for_each_partial_map(m, [&](PartialMap const& a) {
                 auto const pa = properties(a);
                 if (!pa.injective) {
                   return;
                 }
                 ++injections;
                 auto const pb = properties(bar_map(a));
                 if ((pa.order_preserving && !pb.order_preserving)
                     || (pa.extensive && !pb.extensive) || !pb.total) {
                   ++violations;
                   detail = a.to_string();
                 }
               });
               return exact(json{{"violations", 0}},
                            json{{"violations", violations}}, published,
                            violations ? "first failure " + detail
                                       : std::to_string(injections) + " partial injections");
             }});
        s.checks.push_back(
            {"hat_inverts_" + std::to_string(m),
             "hat of an order-preserving map fixing m+1 is order preserving, inverts "
             "bar, and keeps extensivity",
             {{"m", m}},
             [m](Config const&) {
               std::size_t maps = 0, violations = 0;
               std::string detail;
               for_each_partial_map(m + 1, [&](PartialMap const& b) {
                 auto const pb = properties(b);
                 if (!pb.total || b[m + 1] != m + 1 || !pb.order_preserving) {
                   return;
                 }
                 ++maps;
                 auto const a  = hat_map(b);
                 auto const pa = properties(a);
                 if (!pa.injective || !pa.order_preserving || bar_map(a) != b
                     || (pb.extensive && !pa.extensive)) {
                   ++violations;
                   detail = b.to_string();
                 }
               });
               return exact(json{{"violations", 0}}, json{{"violations", violations}},
                            published,
                            violations ? "first failure " + detail
                                       : std::to_string(maps) + " maps");
             }});
      }
      s.checks.push_back({"alignment_3",
                          "the fourteen elements of IC_3 pair with those of C_4",
                          {{"m", 3}},
                          [](Config const&) {
                            std::size_t matched = 0;
                            std::string detail;
                            std::set<PartialMap> sources, targets;
                            for (auto [a, b] : alignment_m3) {
                              auto const pa = PartialMap::parse(a);
                              auto const pb = PartialMap::parse(b);
                              sources.insert(pa);
                              targets.insert(pb);
                              if (bar_map(pa) == pb && hat_map(pb) == pa) {
                                ++matched;
                              } else {
                                detail += std::string(detail.empty() ? "" : "; ") + a
                                          + " -> " + bar_map(pa).to_string();
                              }
                            }
                            return exact(json{{"pairs", 14}, {"distinct", 14}},
                                         json{{"pairs", matched},
                                              {"distinct", std::min(sources.size(),
                                                                    targets.size())}},
                                         published, detail);
                          }});
      return s;
    }

    ////////////////////////////////////////////////////////////////////////
    // jm-oracle, um-oracle, jm-um-inclusion
    ////////////////////////////////////////////////////////////////////////

    Suite jm_oracle() {
      Suite s{"jm-oracle", "bounded theory of C_m against the J_{m-1} subword oracle", {}};
      for (std::size_t m = 2; m <= 4; ++m) {
        for (auto u : {Universe{2, 6}, Universe{3, 5}}) {
          s.checks.push_back(
              {"C_" + std::to_string(m) + "_v" + std::to_string(u.vars) + "_l"
                   + std::to_string(u.max_len),
               "the identities of C_m are exactly J_{m-1}",
               {{"m", m}, {"vars", u.vars}, {"len", u.max_len}},
               [m, u](Config const&) {
                 auto theory = bounded_identity_theory(family(FamilyKind::C, m), u);
                 auto frag   = jm_fragment(m - 1, u);
                 return exact(json{{"equal", true}, {"size", frag.size()}},
                              json{{"equal", theory == frag}, {"size", theory.size()}},
                              published, first_difference(theory, frag));
               }});
        }
      }
      return s;
    }

    Suite um_oracle() {
      Suite s{"um-oracle", "bounded theory of IC_m against the U_{m-1} oracle", {}};
      for (std::size_t m = 2; m <= 4; ++m) {
        for (auto u : {Universe{2, 6}, Universe{3, m == 4 ? std::size_t(4) : 5}}) {
          s.checks.push_back(
              {"IC_" + std::to_string(m) + "_v" + std::to_string(u.vars) + "_l"
                   + std::to_string(u.max_len),
               "the identities of IC_m are exactly U_{m-1}",
               {{"m", m}, {"vars", u.vars}, {"len", u.max_len}},
               [m, u](Config const&) {
                 auto theory = bounded_identity_theory(family(FamilyKind::IC, m), u);
                 auto frag   = um_fragment(m - 1, u);
                 return exact(json{{"equal", true}, {"size", frag.size()}},
                              json{{"equal", theory == frag}, {"size", theory.size()}},
                              published, first_difference(theory, frag));
               }});
        }
      }
      return s;
    }

    Identity power_swap(std::size_t k) {
      return Identity(power("x", k) + power("y", k), power("y", k) + power("x", k));
    }

    Suite jm_um_inclusion() {
      Suite s{"jm-um-inclusion", "J_{m+1} inside U_m, J_1 = U_0, and a separating identity", {}};
      for (std::size_t m = 0; m <= 3; ++m) {
        for (auto u : {Universe{2, 6}, Universe{3, 5}}) {
          s.checks.push_back(
              {"J" + std::to_string(m + 1) + "_in_U" + std::to_string(m) + "_v"
                   + std::to_string(u.vars) + "_l" + std::to_string(u.max_len),
               "J_{m+1} is contained in U_m",
               {{"m", m}, {"vars", u.vars}, {"len", u.max_len}},
               [m, u](Config const&) {
                 auto j  = jm_fragment(m + 1, u);
                 auto um = um_fragment(m, u);
                 bool const inside = std::includes(um.begin(), um.end(), j.begin(), j.end());
                 return exact(json{{"included", true}}, json{{"included", inside}}, published,
                              inside ? std::to_string(j.size()) + " of "
                                           + std::to_string(um.size()) + " identities"
                                     : first_difference(j, um));
               }});
        }
      }
      for (auto u : {Universe{2, 6}, Universe{3, 5}}) {
        s.checks.push_back({"J1_eq_U0_v" + std::to_string(u.vars) + "_l"
                                + std::to_string(u.max_len),
                            "J_1 equals U_0",
                            {{"m", 0}, {"vars", u.vars}, {"len", u.max_len}},
                            [u](Config const&) {
                              auto j  = jm_fragment(1, u);
                              auto um = um_fragment(0, u);
                              return exact(json{{"equal", true}},
                                           json{{"equal", j == um}}, published,
                                           first_difference(j, um));
                            }});
      }
      for (std::size_t m = 1; m <= 4; ++m) {
        s.checks.push_back({"witness_" + std::to_string(m),
                            "x^{m+1} y^{m+1} ~ y^{m+1} x^{m+1} lies in U_m but not J_{m+1}",
                            {{"m", m}},
                            [m](Config const&) {
                              auto const id = power_swap(m + 1);
                              return exact(json{{"in_U", true}, {"in_J", false}},
                                           json{{"in_U", in_Um(id, m)},
                                                {"in_J", in_Jm(id, m + 1)}},
                                           published, id.to_string());
                            }});
      }
      for (std::size_t m = 2; m <= 3; ++m) {
        s.checks.push_back(
            {"separates_" + std::to_string(m),
             "x^m y^m ~ y^m x^m holds in IC_m and fails in C_{m+1}",
             {{"m", m}},
             [m](Config const&) {
               auto const id   = power_swap(m);
               auto const c    = family(FamilyKind::C, m + 1);
               auto const ic   = satisfies_identity(family(FamilyKind::IC, m), id);
               auto const cv   = satisfies_identity(c, id);
               std::string detail = id.to_string();
               if (cv.counterexample) {
                 detail += "; C counterexample " + describe(c, *cv.counterexample);
               }
               return exact(json{{"holds_in_IC", true}, {"holds_in_C", false}},
                            json{{"holds_in_IC", ic.holds}, {"holds_in_C", cv.holds}},
                            oracle, detail);
             }});
      }
      return s;
    }

    ////////////////////////////////////////////////////////////////////////
    // sparse-machinery
    ////////////////////////////////////////////////////////////////////////

    // S^1 for the semigroup on {0, 1} with the given products; element i
    // becomes i + 1 and the identity is 0.
    std::optional<FiniteMonoid> two_element_monoid(unsigned code) {
      auto prod = [code](unsigned a, unsigned b) { return (code >> (2 * a + b)) & 1u; };
      for (unsigned a = 0; a < 2; ++a) {
        for (unsigned b = 0; b < 2; ++b) {
          for (unsigned c = 0; c < 2; ++c) {
            if (prod(prod(a, b), c) != prod(a, prod(b, c))) {
              return std::nullopt;
            }
          }
        }
      }
      std::vector<Index> table(9);
      for (Index a = 0; a < 3; ++a) {
        for (Index b = 0; b < 3; ++b) {
          table[a * 3 + b] = a == 0 ? b : b == 0 ? a : Index(prod(a - 1, b - 1) + 1);
        }
      }
      return FiniteMonoid(3, std::move(table), 0, {1, 2}, {"1", "a", "b"});
    }

    std::string table_string(unsigned code) {
      std::string out;
      for (unsigned k = 0; k < 4; ++k) {
        out += ((code >> k) & 1u) ? 'b' : 'a';
      }
      return "products aa,ab,ba,bb = " + out;
    }

    Suite sparse_machinery() {
      Suite s{"sparse-machinery",
              "properties P1 and P2 of u_n(m) and the identity u_n(m) x ~ u_n(m)", {}};
      s.checks.push_back({"P1_P2_u_n_m",
                          "u_n(m) has properties P1 and P2",
                          {{"n_max", 5}, {"m_max", 4}},
                          [](Config const&) {
                            std::size_t words = 0, failures = 0;
                            std::string detail;
                            for (std::size_t n = 1; n <= 5; ++n) {
                              for (std::size_t m = 1; m <= 4; ++m) {
                                auto const c = build_u_n_m(n, m);
                                ++words;
                                if (!check_P1(c.word) || !check_P2(c.word, n)) {
                                  ++failures;
                                  detail += "n=" + std::to_string(n) + " m="
                                            + std::to_string(m) + " ";
                                }
                              }
                            }
                            return exact(json{{"words", 20}, {"failures", 0}},
                                         json{{"words", words}, {"failures", failures}},
                                         published, detail);
                          }});
      s.checks.push_back(
          {"two_element_exhaustive",
           "every 2-element R-trivial semigroup satisfies u_2(3) x ~ u_2(3)",
           {{"n", 2}, {"m", 3}},
           [](Config const&) {
             auto const c  = build_u_n_m(2, 3);
             Word       ux = c.word;
             ux.push_back("x");
             Identity const id(ux, c.word);
             bool const chain = check_alphabet_chain(c.word, c.head_blocks, Word{"x"});
             std::size_t semigroups = 0, r_trivial = 0, holding = 0, substitutions = 0;
             std::string detail;
             for (unsigned code = 0; code < 16; ++code) {
               auto m = two_element_monoid(code);
               if (!m) {
                 continue;
               }
               ++semigroups;
               if (!triviality(*m).r_trivial) {
                 continue;
               }
               ++r_trivial;
               SatisfactionOptions opts;
               opts.domain = std::vector<Index>{1, 2};
               auto v      = satisfies_identity(*m, id, opts);
               substitutions = v.substitutions_checked;
               if (v.holds) {
                 ++holding;
               } else {
                 detail += table_string(code) + ": " + describe(*m, *v.counterexample) + "; ";
               }
             }
             return exact(json{{"semigroups", 8}, {"r_trivial", 5}, {"holding", 5},
                               {"substitutions_each", 4096}, {"chain", true}},
                          json{{"semigroups", semigroups}, {"r_trivial", r_trivial},
                               {"holding", holding}, {"substitutions_each", substitutions},
                               {"chain", chain}},
                          published, detail);
           }});
      s.checks.push_back(
          {"E3_sampled",
           "the R-trivial semigroup E_3 satisfies u_2(7) x ~ u_2(7)",
           {{"n", 2}, {"m", 7}},
           [](Config const& config) {
             auto const c  = build_u_n_m(2, 7);
             Word       ux = c.word;
             ux.push_back("x");
             auto const e3 = family(FamilyKind::E, 3);
             auto const m  = adjoin_identity(e3);
             std::vector<Index> domain;
             for (Index a = 1; a < m.size(); ++a) {
               domain.push_back(a);
             }
             auto const v = satisfies_identity_sampled(m, Identity(ux, c.word),
                                                       config.samples, config.seed, domain);
             bool const chain = check_alphabet_chain(c.word, c.head_blocks, Word{"x"});
             return bounded(json{{"r_trivial", true}, {"chain", true},
                                 {"counterexamples", 0}},
                            json{{"r_trivial", triviality(e3).r_trivial}, {"chain", chain},
                                 {"counterexamples", v.counterexample_found ? 1 : 0}},
                            json{{"samples", v.samples}, {"seed", v.seed},
                                 {"semigroup_order", e3.size()}},
                            published,
                            v.counterexample ? describe(m, *v.counterexample) : "");
           }});
      s.checks.push_back({"alphabet_chain_u_n_m",
                          "u_n(m) splits into m blocks with decreasing alphabets over alf(x)",
                          {{"n_max", 4}, {"m_max", 5}},
                          [](Config const&) {
                            std::size_t failures = 0;
                            for (std::size_t n = 1; n <= 4; ++n) {
                              for (std::size_t m = 1; m <= 5; ++m) {
                                auto const c = build_u_n_m(n, m);
                                failures += !check_alphabet_chain(c.word, c.head_blocks,
                                                                  Word{"x"});
                              }
                            }
                            return exact(json{{"failures", 0}}, json{{"failures", failures}},
                                         published);
                          }});
      return s;
    }

    std::string underscored(std::string s) {
      std::replace(s.begin(), s.end(), ' ', '_');
      return s;
    }

    ////////////////////////////////////////////////////////////////////////
    // isoterms
    ////////////////////////////////////////////////////////////////////////

    Suite isoterms() {
      Suite s{"isoterms", "bounded isoterm searches for sparse and Zimin words", {}};
      for (auto text : {"x t x", "x t1 x t2 x", "x y t y x", "x y t x y", "y x t x y"}) {
        s.checks.push_back(
            {"IC_4_" + underscored(text),
             "sparse words are isoterms for IC_4",
             {{"word", text}},
             [text = std::string(text)](Config const& config) {
               auto const u = Word::parse(text);
               IsotermOptions opts;
               opts.max_len     = u.size() + 1;
               opts.extra_fresh = 1;
               opts.seed        = config.seed;
               auto const v = is_isoterm_bounded(family(FamilyKind::IC, 4), u, opts);
               return bounded(json{{"sparse", true}, {"isoterm", true}},
                              json{{"sparse", is_sparse(u).sparse}, {"isoterm", v.isoterm}},
                              json{{"max_len", v.max_len}, {"extra_fresh", v.extra_fresh},
                                   {"candidates", v.candidates_checked}},
                              published, v.witness ? "witness " + v.witness->to_string() : "");
             }});
      }
      for (std::size_t n : {2, 3}) {
        s.checks.push_back(
            {"B21_zimin_" + std::to_string(n),
             "Zimin words are isoterms for B_2^1",
             {{"n", n}},
             [n](Config const& config) {
               auto const u = zimin(n);
               IsotermOptions opts;
               opts.max_len     = n == 2 ? 7 : 9;
               opts.extra_fresh = 1;
               opts.seed        = config.seed;
               auto const v = is_isoterm_bounded(family(FamilyKind::POI, 2), u, opts);
               return bounded(json{{"isoterm", true}}, json{{"isoterm", v.isoterm}},
                              json{{"max_len", v.max_len}, {"extra_fresh", v.extra_fresh},
                                   {"candidates", v.candidates_checked}},
                              published, v.witness ? "witness " + v.witness->to_string() : "");
             }});
      }
      return s;
    }

    ////////////////////////////////////////////////////////////////////////
    // free-tree
    ////////////////////////////////////////////////////////////////////////

    // a_i -> tau_(k-i,k-i+1) for the k - 1 generators a_i of p. The relations
    // a_{i+1} a_i a_{i+1} = a_{i+1} a_i hold for these maps composed left to
    // right; the unreversed tau_(i,i+1) satisfy the mirror relations instead.
    ElementSubstitution reversed_path_generators(Presentation const& p, FiniteMonoid const& c) {
      auto const&         g = c.generators();
      ElementSubstitution sigma;
      for (std::size_t i = 0; i < p.generators().size(); ++i) {
        sigma.emplace(p.generators()[i], g[g.size() - 1 - i]);
      }
      return sigma;
    }

    PresentedMonoid free_tree(std::size_t n) {
      auto rs = complete(free_tree_presentation(n));
      if (rs.status() != CompletionStatus::complete) {
        throw LimitExceeded("free tree completion rules", rs.rules().size(), 10'000);
      }
      return enumerate_presented(rs);
    }

    Suite free_tree_suite() {
      Suite s{"free-tree", "free tree monoids FT_n", {}};
      for (std::size_t m = 2; m <= 6; ++m) {
        s.checks.push_back(
            {"catalan_presentation_" + std::to_string(m),
             "the idempotent, commuting and braid-like relations present C_m",
             {{"m", m}},
             [m](Config const&) {
               auto const p  = catalan_presentation(m);
               auto const c  = family(FamilyKind::C, m);
               auto const h  = extend_homomorphism(p, c, reversed_path_generators(p, c));
               auto const rs = complete(p);
               auto const presented = enumerate_presented(rs);
               return exact(json{{"homomorphism", true}, {"surjective", true},
                                 {"presented_size", c.size()}},
                            json{{"homomorphism", h.ok}, {"surjective", h.surjective},
                                 {"presented_size", presented.reported_size}},
                            published,
                            h.failed_relation ? "fails " + h.failed_relation->to_string()
                                              : "a_i -> tau_(m-i,m-i+1)");
             }});
      }
      for (std::size_t n = 1; n <= 4; ++n) {
        s.checks.push_back({"size_" + std::to_string(n),
                            "|FT_n| = t(n)",
                            {{"n", n}},
                            [n](Config const& config) {
                              if (n == 4 && !config.stretch) {
                                return skipped("stretch checks disabled");
                              }
                              auto const ft = free_tree(n);
                              return exact(json{{"size", *t_sequence(n)}, {"exact", true}},
                                           json{{"size", ft.reported_size},
                                                {"exact", ft.exact}},
                                           published);
                            }});
      }
      for (std::size_t n = 1; n <= 5; ++n) {
        s.checks.push_back(
            {"onto_C_" + std::to_string(n + 1),
             "the Catalan generators extend to a homomorphism of FT_n onto C_{n+1}",
             {{"n", n}},
             [n](Config const&) {
               auto const p = free_tree_presentation(n);
               auto const c = family(FamilyKind::C, n + 1);
               auto const h = extend_homomorphism(p, c, reversed_path_generators(p, c));
               return exact(json{{"homomorphism", true}, {"surjective", true}},
                            json{{"homomorphism", h.ok}, {"surjective", h.surjective}},
                            published,
                            h.failed_relation ? "fails " + h.failed_relation->to_string()
                                              : "a_i -> tau_(n+1-i,n+2-i)");
             }});
      }
      for (std::size_t n = 1; n <= 3; ++n) {
        s.checks.push_back({"r_trivial_" + std::to_string(n),
                            "FT_n is R-trivial",
                            {{"n", n}},
                            [n](Config const&) {
                              return exact(json{{"r_trivial", true}},
                                           json{{"r_trivial",
                                                 triviality(free_tree(n).monoid).r_trivial}},
                                           published);
                            }});
      }
      return s;
    }

    ////////////////////////////////////////////////////////////////////////
    // hecke
    ////////////////////////////////////////////////////////////////////////

    ElementSubstitution by_position(Presentation const& p, std::vector<Index> const& images) {
      ElementSubstitution sigma;
      for (std::size_t i = 0; i < p.generators().size(); ++i) {
        sigma.emplace(p.generators()[i], images.at(i));
      }
      return sigma;
    }

    Suite hecke() {
      Suite s{"hecke", "0-Hecke monoids from unitary subsets and from presentations", {}};
      for (auto [name, size] : std::vector<std::pair<char const*, std::size_t>>{
               {"I4", 8}, {"I5", 10}, {"A3", 24}, {"B3", 48}}) {
        std::string const diagram = name;
        s.checks.push_back(
            {"unitary_" + diagram,
             "the subsets {1, s_i} generate a J-trivial monoid of order |W|",
             {{"diagram", diagram}},
             [diagram, size](Config const&) {
               auto const h = hecke0_via_unitary(coxeter_by_name(diagram));
               return exact(json{{"size", size}, {"group", size}, {"j_trivial", true}},
                            json{{"size", h.hecke.monoid.size()},
                                 {"group", h.model.group.monoid.size()},
                                 {"j_trivial", triviality(h.hecke.monoid).j_trivial}},
                            published);
             }});
        s.checks.push_back(
            {"two_routes_" + diagram,
             "the presented 0-Hecke monoid and the unitary construction are isomorphic",
             {{"diagram", diagram}},
             [diagram](Config const&) {
               auto const cd = coxeter_by_name(diagram);
               auto const p  = hecke0_presentation(cd);
               auto const rs = complete(p);
               auto const presented = enumerate_presented(rs);
               auto const unitary   = hecke0_via_unitary(cd).hecke.monoid;
               auto const h = extend_homomorphism(p, unitary,
                                                  by_position(p, unitary.generators()));
               bool const forward  = map_by_generators(presented.monoid, unitary,
                                                       unitary.generators())
                                         .has_value();
               bool const backward = map_by_generators(unitary, presented.monoid,
                                                       presented.monoid.generators())
                                         .has_value();
               return exact(json{{"complete", true}, {"sizes_equal", true},
                                 {"relations_hold", true}, {"surjective", true},
                                 {"forward", true}, {"backward", true}},
                            json{{"complete", rs.status() == CompletionStatus::complete},
                                 {"sizes_equal", presented.monoid.size() == unitary.size()},
                                 {"relations_hold", h.ok}, {"surjective", h.surjective},
                                 {"forward", forward}, {"backward", backward}},
                            oracle,
                            h.failed_relation ? h.failed_relation->to_string() : "");
             }});
        s.checks.push_back(
            {"catalan_divisor_" + diagram,
             "Catalan generators satisfy the 0-Hecke relations of a path diagram",
             {{"diagram", diagram}},
             [diagram](Config const&) {
               auto const p = hecke0_presentation(coxeter_by_name(diagram));
               auto const k = p.generators().size();
               auto const c = family(FamilyKind::C, k + 1);
               auto const h = extend_homomorphism(p, c, by_position(p, c.generators()));
               return exact(json{{"homomorphism", true}, {"surjective", true}},
                            json{{"homomorphism", h.ok}, {"surjective", h.surjective}},
                            published,
                            h.failed_relation ? h.failed_relation->to_string() : "");
             }});
      }
      for (std::size_t n = 4; n <= 8; ++n) {
        s.checks.push_back(
            {"lee_bridge_" + std::to_string(n),
             "L_n^1 maps into H_0(I_n) and H_0(I_{n+1}) maps onto L_n^1",
             {{"n", n}},
             [n](Config const&) {
               auto const lee    = lee_monoid_presentation(n);
               auto const h_n    = hecke0_via_unitary(coxeter_I2(n)).hecke.monoid;
               auto const to_h   = extend_homomorphism(lee, h_n, by_position(lee, h_n.generators()));
               auto const l_n    = enumerate_presented(complete(lee));
               auto const hp     = hecke0_presentation(coxeter_I2(n + 1));
               auto const from_h = extend_homomorphism(hp, l_n.monoid,
                                                       by_position(hp, l_n.monoid.generators()));
               std::string detail;
               if (to_h.failed_relation) {
                 detail += "L -> H fails " + to_h.failed_relation->to_string() + "; ";
               }
               if (from_h.failed_relation) {
                 detail += "H -> L fails " + from_h.failed_relation->to_string();
               }
               return exact(json{{"lee_to_hecke", true}, {"hecke_to_lee", true},
                                 {"hecke_to_lee_onto", true}},
                            json{{"lee_to_hecke", to_h.ok}, {"hecke_to_lee", from_h.ok},
                                 {"hecke_to_lee_onto", from_h.surjective}},
                            published, detail);
             }});
        s.checks.push_back(
            {"three_way_" + std::to_string(n),
             "s1 s2 s1... (n letters) = s2 s1 s2... (n+1) = s1 s2 s1... (n+1) in H_0(I_n)",
             {{"n", n}},
             [n](Config const&) {
               auto const h = hecke0_via_unitary(coxeter_I2(n)).hecke.monoid;
               ElementSubstitution sigma{{VariableId("s1"), h.generators()[0]},
                                         {VariableId("s2"), h.generators()[1]}};
               auto const a = evaluate_word(h, sigma, alternating("s1", "s2", n));
               auto const b = evaluate_word(h, sigma, alternating("s2", "s1", n + 1));
               auto const c = evaluate_word(h, sigma, alternating("s1", "s2", n + 1));
               return exact(json{{"equal", true}}, json{{"equal", a == b && b == c}},
                            published, h.label(a) + ", " + h.label(b) + ", " + h.label(c));
             }});
      }
      for (auto [name, size] : std::vector<std::pair<char const*, std::size_t>>{
               {"L3", 6}, {"L4", 8}}) {
        std::string const which = name;
        s.checks.push_back({"lee_" + which,
                            "the Lee semigroups L_3 and L_4 have 6 and 8 elements",
                            {{"semigroup", which}},
                            [which, size](Config const&) {
                              auto const p = which == "L3" ? lee_L3_presentation()
                                                           : lee_L4_presentation();
                              auto const l = enumerate_presented(complete(p));
                              return exact(json{{"size", size}, {"exact", true}},
                                           json{{"size", l.reported_size}, {"exact", l.exact}},
                                           published);
                            }});
      }
      for (auto [name, size] : std::vector<std::pair<char const*, std::size_t>>{
               {"H3", 120}, {"D4", 192}}) {
        std::string const diagram = name;
        s.checks.push_back({"completion_" + diagram,
                            "0-Hecke monoids of H3 and D4 have orders 120 and 192",
                            {{"diagram", diagram}},
                            [diagram, size](Config const& config) {
                              if (!config.stretch) {
                                return skipped("stretch checks disabled");
                              }
                              auto const rs = complete(hecke0_presentation(coxeter_by_name(diagram)));
                              auto const m  = enumerate_presented(rs);
                              return exact(json{{"size", size}, {"exact", true}},
                                           json{{"size", m.reported_size}, {"exact", m.exact}},
                                           published);
                            }});
      }
      return s;
    }

    ////////////////////////////////////////////////////////////////////////
    // unitary
    ////////////////////////////////////////////////////////////////////////

    Suite unitary() {
      Suite s{"unitary", "monoids of unitary subsets", {}};
      using Maker = FiniteMonoid (*)();
      std::vector<std::pair<char const*, Maker>> const bases{
          {"S3", [] { return coxeter_group_model(coxeter_A(2)).group.monoid; }},
          {"C3", [] { return family(FamilyKind::C, 3); }},
          {"B21", [] { return family(FamilyKind::POI, 2); }},
          {"D8", [] { return coxeter_group_model(coxeter_I2(4)).group.monoid; }}};
      for (auto [name, make] : bases) {
        s.checks.push_back({std::string("P1_") + name,
                            "P_1(M) has 2^{|M|-1} elements and is J-trivial",
                            {{"monoid", name}},
                            [make = make](Config const&) {
                              auto const m = make();
                              auto const p = unitary_power_monoid(m).monoid;
                              return exact(json{{"size", std::size_t(1) << (m.size() - 1)},
                                                {"j_trivial", true}},
                                           json{{"size", p.size()},
                                                {"j_trivial", triviality(p).j_trivial}},
                                           published);
                            }});
      }
      for (auto [name, order] : std::vector<std::pair<char const*, std::size_t>>{
               {"A2", 6}, {"A3", 24}, {"I4", 8}}) {
        std::string const diagram = name;
        s.checks.push_back({std::string("generated_") + name,
                            "the subsets {1, s_i} generate a submonoid of order |W|",
                            {{"diagram", diagram}},
                            [diagram, order](Config const&) {
                              auto const h = hecke0_via_unitary(coxeter_by_name(diagram));
                              return exact(json{{"size", order}, {"group", order},
                                                {"j_trivial", true}},
                                           json{{"size", h.hecke.monoid.size()},
                                                {"group", h.model.group.monoid.size()},
                                                {"j_trivial",
                                                 triviality(h.hecke.monoid).j_trivial}},
                                           published);
                            }});
      }
      return s;
    }

    ////////////////////////////////////////////////////////////////////////
    // band-digraph
    ////////////////////////////////////////////////////////////////////////

    // Every band on {0..n-1} as B^1, identity at 0, found by backtracking
    // over the off-diagonal cells with an associativity check on the
    // defined part.
    std::vector<FiniteMonoid> bands_with_identity(std::size_t n) {
      std::vector<int> t(n * n, -1);
      for (std::size_t i = 0; i < n; ++i) {
        t[i * n + i] = int(i);
      }
      std::vector<std::size_t> cells;
      for (std::size_t i = 0; i < n * n; ++i) {
        if (t[i] < 0) {
          cells.push_back(i);
        }
      }
      auto consistent = [&] {
        for (std::size_t a = 0; a < n; ++a) {
          for (std::size_t b = 0; b < n; ++b) {
            int const ab = t[a * n + b];
            if (ab < 0) {
              continue;
            }
            for (std::size_t c = 0; c < n; ++c) {
              int const bc = t[b * n + c];
              if (bc < 0) {
                continue;
              }
              int const l = t[std::size_t(ab) * n + c];
              int const r = t[a * n + std::size_t(bc)];
              if (l >= 0 && r >= 0 && l != r) {
                return false;
              }
            }
          }
        }
        return true;
      };
      std::vector<FiniteMonoid> out;
      auto emit = [&] {
        std::vector<Index> table((n + 1) * (n + 1));
        for (std::size_t a = 0; a <= n; ++a) {
          for (std::size_t b = 0; b <= n; ++b) {
            table[a * (n + 1) + b] =
                a == 0 ? Index(b) : b == 0 ? Index(a) : Index(t[(a - 1) * n + b - 1] + 1);
          }
        }
        std::vector<Index> gens;
        for (Index a = 1; a <= n; ++a) {
          gens.push_back(a);
        }
        out.emplace_back(FiniteMonoid::Trusted{}, n + 1, std::move(table), 0, std::move(gens));
      };
      std::function<void(std::size_t)> fill = [&](std::size_t k) {
        if (k == cells.size()) {
          emit();
          return;
        }
        for (std::size_t v = 0; v < n; ++v) {
          t[cells[k]] = int(v);
          if (consistent()) {
            fill(k + 1);
          }
        }
        t[cells[k]] = -1;
      };
      fill(0);
      return out;
    }

    Suite band_digraph() {
      Suite s{"band-digraph",
              "band identities, the w_n identity in R x L x B, and the digraphs Gamma_n", {}};
      s.checks.push_back(
          {"bands_up_to_5",
           "every band satisfies u x v ~ u v when x is in alf(u) = alf(v)",
           {{"max_order", 5}},
           [](Config const&) {
             std::vector<std::tuple<Word, VariableId, Word>> const cases{
                 {Word{"x"}, "x", Word{"x"}},
                 {Word::parse("x y"), "x", Word::parse("y x")},
                 {Word::parse("x y"), "y", Word::parse("x y")},
                 {Word::parse("x y z"), "x", Word::parse("z y x")},
                 {Word::parse("x y z"), "y", Word::parse("y z x")},
                 {Word::parse("x y x z"), "z", Word::parse("z x y")}};
             json        counts = json::array();
             std::size_t failures = 0, checks = 0;
             std::string detail;
             for (std::size_t n = 1; n <= 5; ++n) {
               auto const bands = bands_with_identity(n);
               counts.push_back(bands.size());
               for (auto const& b : bands) {
                 for (auto const& [u, x, v] : cases) {
                   ++checks;
                   auto const verdict = band_identity_check(b, u, x, v);
                   if (!verdict.holds && ++failures == 1) {
                     detail = "order " + std::to_string(n) + ": " + u.to_string() + " "
                              + x.label() + " " + v.to_string();
                   }
                 }
               }
             }
             if (detail.empty()) {
               detail = std::to_string(checks) + " identity checks";
             }
             return exact(json{{"failures", 0}, {"bands", {1, 4, 35, 604, 16727}}},
                          json{{"failures", failures}, {"bands", counts}}, oracle, detail);
           }});
      s.checks.push_back(
          {"w_2_R_L_B",
           "E_3 x dual(E_3) x SL_2 satisfies u x v ~ u v where w_n = u v",
           {{"n", 2}, {"m", 6}},
           [](Config const& config) {
             auto const r   = family(FamilyKind::E, 3);
             auto const l   = dual(r);
             FiniteMonoid const b(2, {0, 1, 1, 1}, 0, {1}, {"1", "0"});
             auto const w   = build_w_n(2, std::max(r.size(), l.size()), TailForm::mirror);
             auto const u   = w.head();
             auto const v   = w.tail();
             Word       uxv = u;
             uxv.push_back("x");
             uxv += v;
             auto const product = direct_product({&r, &l, &b});
             auto const sampled = satisfies_identity_sampled(product, Identity(uxv, w.word),
                                                             config.samples, config.seed);
             auto const x       = Word{"x"};
             auto const au      = alphabet(u);
             json const structure{
                 {"r_trivial", triviality(r).r_trivial},
                 {"l_trivial", triviality(l).l_trivial},
                 {"band", structure_flags(b).is_band},
                 {"head_chain", check_alphabet_chain(u, w.head_blocks, x)},
                 {"tail_chain_dual", check_alphabet_chain_dual(v, w.tail_blocks, x)},
                 {"x_in_alf_u_eq_alf_v", au == alphabet(v) && au.count("x") == 1},
                 {"P1", check_P1(w.word)},
                 {"P2", check_P2(w.word, 2)}};
             json expected = structure;
             for (auto& [key, value] : expected.items()) {
               value = true;
             }
             return bounded(json{{"structure", expected}, {"counterexamples", 0}},
                            json{{"structure", structure},
                                 {"counterexamples", sampled.counterexample_found ? 1 : 0}},
                            json{{"samples", sampled.samples}, {"seed", sampled.seed},
                                 {"product_order", product.size()},
                                 {"word_length", w.word.size()}},
                            published,
                            sampled.counterexample ? describe(product, *sampled.counterexample)
                                                   : "");
           }});
      for (std::size_t n = 1; n <= 6; ++n) {
        s.checks.push_back({"gamma_" + std::to_string(n),
                            "Gamma_n is acyclic with a longest path on n+1 vertices",
                            {{"n", n}},
                            [n](Config const&) {
                              auto const a = digraph_analysis(build_gamma_n(n));
                              return exact(json{{"acyclic", true}, {"longest", n + 1}},
                                           json{{"acyclic", a.is_acyclic},
                                                {"longest", a.longest_path_vertices
                                                                ? json(*a.longest_path_vertices)
                                                                : json(nullptr)}},
                                           published);
                            }});
      }
      for (std::size_t n = 1; n <= 4; ++n) {
        s.checks.push_back({"catalan_gamma_" + std::to_string(n),
                            "C(Gamma_n) is R-trivial",
                            {{"n", n}},
                            [n](Config const&) {
                              auto const c = catalan_of_digraph(build_gamma_n(n)).monoid;
                              return exact(json{{"r_trivial", true}},
                                           json{{"r_trivial", triviality(c).r_trivial}},
                                           published,
                                           std::to_string(c.size()) + " elements");
                            }});
      }
      return s;
    }

    bool matches(CheckSpec const& c, Config const& config) {
      auto agrees = [&](char const* key, std::optional<std::size_t> const& want) {
        return !want || !c.params.contains(key) || c.params.at(key) == *want;
      };
      return agrees("m", config.m) && agrees("vars", config.vars) && agrees("len", config.len);
    }

    bool restrictable(std::string_view suite) {
      return suite == "jm-oracle" || suite == "um-oracle" || suite == "jm-um-inclusion";
    }

    double elapsed_ms(std::chrono::steady_clock::time_point since) {
      return std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - since)
          .count();
    }

    Check run_check(CheckSpec const& spec, std::string const& prefix, Config const& config) {
      Check c;
      c.id     = prefix + spec.id;
      c.anchor = spec.anchor;
      c.params = spec.params;
      auto const start = std::chrono::steady_clock::now();
      try {
        auto o            = spec.run(config);
        c.expected        = std::move(o.expected);
        c.actual          = std::move(o.actual);
        c.status          = o.status;
        c.expected_source = std::move(o.expected_source);
        c.bound           = std::move(o.bound);
        c.detail          = std::move(o.detail);
      } catch (std::exception const& e) {
        c.status = Status::fail;
        c.detail = std::string("error: ") + e.what();
      }
      c.time_ms = elapsed_ms(start);
      return c;
    }
  }  // namespace

  std::vector<Suite> const& registry() {
    static std::vector<Suite> const suites{cardinalities(), bar_hat(),         jm_oracle(),
                                           um_oracle(),     jm_um_inclusion(), sparse_machinery(),
                                           isoterms(),      free_tree_suite(), hecke(),
                                           unitary(),       band_digraph()};
    return suites;
  }

  std::vector<std::string> suite_names() {
    std::vector<std::string> names;
    for (auto const& s : registry()) {
      names.push_back(s.name);
    }
    names.push_back("all");
    return names;
  }

  SuiteReport run_suite(std::string_view name, Config const& config) {
    struct Job {
      CheckSpec const* spec;
      std::string      prefix;
    };
    std::vector<Job> jobs;
    bool             found = false;
    for (auto const& s : registry()) {
      if (name != "all" && name != s.name) {
        continue;
      }
      found = true;
      for (auto const& c : s.checks) {
        if (!restrictable(s.name) || matches(c, config)) {
          jobs.push_back({&c, name == "all" ? s.name + "/" : std::string()});
        }
      }
    }
    if (!found) {
      throw InvalidInput("unknown suite '" + std::string(name) + "'");
    }
    auto const start = std::chrono::steady_clock::now();
    SuiteReport report;
    report.suite   = std::string(name);
    report.seed    = config.seed;
    report.version = FBPLAB_VERSION;
    report.config  = config.to_json();
    report.checks.resize(jobs.size());
    std::size_t workers = config.threads ? config.threads : std::thread::hardware_concurrency();
    workers = std::clamp<std::size_t>(workers, 1, std::max<std::size_t>(jobs.size(), 1));
    std::atomic<std::size_t> next{0};
    auto work = [&] {
      for (std::size_t i; (i = next++) < jobs.size();) {
        report.checks[i] = run_check(*jobs[i].spec, jobs[i].prefix, config);
      }
    };
    if (workers == 1) {
      work();
    } else {
      std::vector<std::thread> pool;
      for (std::size_t w = 0; w < workers; ++w) {
        pool.emplace_back(work);
      }
      for (auto& t : pool) {
        t.join();
      }
    }
    report.wall_time_ms = elapsed_ms(start);
    return report;
  }

}  // namespace fbplab::harness

// Runs every suite twice with the default configuration and prints one
// verdict line per acceptance criterion. Exit status is nonzero when any
// criterion fails.

#include <chrono>
#include <cstdio>
#include <string>
#include <vector>

#include "fbplab/harness/config.hpp"
#include "fbplab/harness/report.hpp"
#include "fbplab/harness/suites.hpp"

using namespace fbplab::harness;

namespace {

  struct Criterion {
    int         number;
    char const* suite;
    char const* claim;
    // Seconds; 0 means no time limit.
    double limit_s;
  };

  std::vector<Criterion> const criteria{
      {1, "cardinalities", "family orders, t(n) and 0-Hecke orders", 30},
      {2, "bar-hat", "bar/hat bijection, preservation, m = 3 alignment", 10},
      {3, "jm-oracle", "Id C_m = J_{m-1} on bounded universes", 180},
      {4, "um-oracle", "Id IC_m = U_{m-1} on bounded universes", 300},
      {5, "jm-um-inclusion", "J_{m+1} in U_m, J_1 = U_0, separating witnesses", 0},
      {6, "sparse-machinery", "P1, P2, two-element and sampled E_3 checks", 0},
      {7, "isoterms", "bounded isoterms for IC_4 and B_2^1", 0},
      {8, "free-tree", "FT_n orders, onto C_{n+1}, R-triviality", 300},
      {9, "hecke", "0-Hecke orders, two routes, Lee bridge, L_3 and L_4", 0},
      {10, "unitary", "unitary subset monoids", 0},
      {11, "band-digraph", "bands, w_n in R x L x B, Gamma_n", 0}};

  double seconds_since(std::chrono::steady_clock::time_point t) {
    return std::chrono::duration<double>(std::chrono::steady_clock::now() - t).count();
  }

}  // namespace

int main() {
  Config const config;
  auto const   start = std::chrono::steady_clock::now();
  auto const   first = run_suite("all", config);
  double const first_s = seconds_since(start);
  auto const   second = run_suite("all", config);

  bool all_ok = true;
  for (auto const& c : criteria) {
    std::string const prefix = std::string(c.suite) + "/";
    std::size_t checks = 0, failed = 0, bounded = 0;
    double      ms     = 0;
    std::string first_failure;
    for (auto const& check : first.checks) {
      if (check.id.rfind(prefix, 0) != 0) {
        continue;
      }
      ++checks;
      ms += check.time_ms;
      bounded += check.status == Status::bounded_pass;
      if (check.status == Status::fail || check.status == Status::skipped) {
        ++failed;
        if (first_failure.empty()) {
          first_failure = check.id + " " + check.detail;
        }
      }
    }
    double const s  = ms / 1000;
    bool const   ok = checks > 0 && failed == 0 && (c.limit_s == 0 || s < c.limit_s);
    all_ok = all_ok && ok;
    std::printf("criterion %2d %s  %-16s %3zu checks (%zu bounded-pass), %.2f s",
                c.number, ok ? "PASS" : "FAIL", c.suite, checks, bounded, s);
    if (c.limit_s > 0) {
      std::printf(" (limit %.0f s)", c.limit_s);
    }
    std::printf("  %s\n", c.claim);
    if (!first_failure.empty()) {
      std::printf("             first failure: %s\n", first_failure.c_str());
    }
  }

  auto const a  = emit_report(first, Format::json, false);
  auto const b  = emit_report(second, Format::json, false);
  bool const ok = a == b && first_s < 600;
  all_ok = all_ok && ok;
  std::printf("criterion 12 %s  determinism      %zu bytes, reports %s, one full run %.2f s "
              "(limit 600 s)\n",
              ok ? "PASS" : "FAIL", a.size(), a == b ? "identical" : "differ", first_s);
  return all_ok ? 0 : 1;
}

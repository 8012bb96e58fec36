// fbplab: run verification suites and dump the objects they are built from.

#include <cstdlib>
#include <iostream>
#include <string>
#include <vector>

#include "CLI11.hpp"

#include "fbplab/digraph.hpp"
#include "fbplab/error.hpp"
#include "fbplab/families.hpp"
#include "fbplab/harness/config.hpp"
#include "fbplab/harness/report.hpp"
#include "fbplab/harness/suites.hpp"
#include "fbplab/presentation.hpp"
#include "fbplab/rewriting.hpp"

namespace {

  enum Exit : int { ok = 0, check_failed = 1, usage = 2, limit = 3 };

  std::string presentation_monoid(fbplab::Presentation const& p) {
    auto const rs = fbplab::complete(p);
    auto const m  = fbplab::enumerate_presented(rs);
    std::string out = "# " + std::to_string(m.reported_size) + " elements, "
                      + std::to_string(rs.rules().size()) + " rules"
                      + (m.exact ? "" : ", lower bound") + "\n";
    return out + fbplab::to_dump(m.monoid);
  }

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Finite basis problem laboratory for small R-trivial monoids"};
  app.require_subcommand(1);
  app.set_version_flag("--version", FBPLAB_VERSION);

  auto* suite = app.add_subcommand("suite", "run a verification suite");
  std::string suite_name, config_path, format = "json";
  std::optional<std::uint64_t> seed;
  std::optional<std::size_t>   threads;
  bool no_timing = false;
  suite->add_option("name", suite_name, "suite name, or 'all'")->required();
  suite->add_option("--config", config_path, "JSON config file")->check(CLI::ExistingFile);
  suite->add_option("--format", format, "report format")->check(CLI::IsMember({"json", "text"}));
  suite->add_option("--seed", seed, "overrides the config seed");
  suite->add_option("--threads", threads, "worker threads, 0 for one per core");
  suite->add_flag("--no-timing", no_timing, "omit wall-clock fields from the report");

  auto* list = app.add_subcommand("list-suites", "print the registered suites");

  auto* build = app.add_subcommand("build", "dump a family, presentation or digraph");
  build->require_subcommand(1);
  bool as_monoid = false;

  auto* family = build->add_subcommand("family", "multiplication table of a family monoid");
  std::string family_kind;
  std::size_t family_m = 0;
  family->add_option("kind", family_kind, "C, IC, E, POI, OPFixTop, ...")->required();
  family->add_option("m", family_m, "chain length")->required();

  auto* pres = build->add_subcommand("presentation", "a named presentation");
  std::string pres_kind;
  std::string pres_arg;
  pres->add_option("kind",
                   pres_kind,
                   "catalan, free_tree, hecke0, lee_monoid, lee_L3, lee_L4")
      ->required();
  pres->add_option("arg", pres_arg, "size, or Coxeter diagram name for hecke0");
  pres->add_flag("--monoid", as_monoid, "complete and dump the presented monoid");

  auto* graph = build->add_subcommand("digraph", "Gamma_n or the path on n vertices");
  std::string graph_kind;
  std::size_t graph_n = 0;
  graph->add_option("kind", graph_kind)->required()->check(CLI::IsMember({"gamma", "path"}));
  graph->add_option("n", graph_n)->required();
  graph->add_flag("--monoid", as_monoid, "dump the Catalan monoid of the digraph");

  CLI11_PARSE(app, argc, argv);

  try {
    if (*list) {
      for (auto const& s : fbplab::harness::registry()) {
        std::cout << s.name << "  " << s.checks.size() << " checks  " << s.summary << '\n';
      }
      std::cout << "all  every suite above\n";
      return ok;
    }
    if (*suite) {
      auto config = config_path.empty() ? fbplab::harness::Config{}
                                        : fbplab::harness::Config::load(config_path);
      if (seed) {
        config.seed = *seed;
      }
      if (threads) {
        config.threads = *threads;
      }
      auto const report = fbplab::harness::run_suite(suite_name, config);
      std::cout << fbplab::harness::emit_report(
          report, fbplab::harness::format_from_string(format), !no_timing);
      return report.passed() ? ok : check_failed;
    }
    if (*family) {
      auto const kind = fbplab::family_from_string(family_kind);
      std::cout << fbplab::to_dump(fbplab::family_monoid(kind, family_m).monoid);
    } else if (*pres) {
      auto const p = fbplab::named_presentation(pres_kind, pres_arg);
      std::cout << (as_monoid ? presentation_monoid(p) : p.to_string());
    } else if (*graph) {
      auto const g = graph_kind == "gamma" ? fbplab::build_gamma_n(graph_n)
                                           : fbplab::path_digraph(graph_n);
      std::cout << (as_monoid ? fbplab::to_dump(fbplab::catalan_of_digraph(g).monoid)
                              : g.to_string());
    }
    return ok;
  } catch (fbplab::LimitExceeded const& e) {
    std::cerr << "fbplab: " << e.what() << '\n';
    return limit;
  } catch (std::exception const& e) {
    std::cerr << "fbplab: " << e.what() << '\n';
    return usage;
  }
}

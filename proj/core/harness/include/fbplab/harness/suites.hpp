// Registry of verification suites. Each suite is a list of named checks;
// a check is a closure from the run configuration to an outcome.

#ifndef FBPLAB_HARNESS_SUITES_HPP_
#define FBPLAB_HARNESS_SUITES_HPP_

#include <functional>
#include <string>
#include <string_view>
#include <vector>

#include "fbplab/harness/config.hpp"
#include "fbplab/harness/report.hpp"

namespace fbplab::harness {

  struct Outcome {
    nlohmann::json expected;
    nlohmann::json actual;
    Status         status = Status::fail;
    std::string    expected_source;
    nlohmann::json bound = nullptr;
    std::string    detail;
  };

  struct CheckSpec {
    std::string                           id;
    std::string                           anchor;
    nlohmann::json                        params = nlohmann::json::object();
    std::function<Outcome(Config const&)> run;
  };

  struct Suite {
    std::string            name;
    std::string            summary;
    std::vector<CheckSpec> checks;
  };

  std::vector<Suite> const& registry();

  // Registered names plus "all".
  std::vector<std::string> suite_names();

  // Checks run on config.threads workers and are merged in registry order.
  // "all" concatenates every suite with ids prefixed by the suite name.
  // Throws InvalidInput for an unknown name.
  SuiteReport run_suite(std::string_view name, Config const& config);

}  // namespace fbplab::harness

#endif  // FBPLAB_HARNESS_SUITES_HPP_

// Suite reports and their JSON and text renderings.

#ifndef FBPLAB_HARNESS_REPORT_HPP_
#define FBPLAB_HARNESS_REPORT_HPP_

#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include "json.hpp"

namespace fbplab::harness {

  // bounded_pass marks verdicts that only hold within stated search bounds
  // or sample counts.
  enum class Status { pass, fail, bounded_pass, skipped };

  std::string to_string(Status s);
  Status      status_from_string(std::string_view s);

  struct Check {
    std::string    id;
    // The claim being checked, in words.
    std::string    anchor;
    // Where the expected value comes from: "published", "oracle" or
    // "definition".
    std::string    expected_source;
    nlohmann::json params   = nlohmann::json::object();
    nlohmann::json expected = nullptr;
    nlohmann::json actual   = nullptr;
    Status         status   = Status::skipped;
    // Search bounds or sample counts behind a bounded_pass.
    nlohmann::json bound    = nullptr;
    // Counterexample or error text for failures.
    std::string    detail;
    double         time_ms = 0;

    friend bool operator==(Check const&, Check const&) = default;
  };

  struct SuiteReport {
    std::string        suite;
    std::vector<Check> checks;
    double             wall_time_ms = 0;
    std::uint64_t      seed         = 0;
    std::string        version;
    nlohmann::json     config = nlohmann::json::object();

    bool passed() const;
    friend bool operator==(SuiteReport const&, SuiteReport const&) = default;
  };

  enum class Format { json, text };

  Format format_from_string(std::string_view s);

  // Without timing the JSON omits wall_time_ms and time_ms, so equal
  // configurations give byte-identical documents.
  nlohmann::json to_json(SuiteReport const& r, bool timing = true);
  SuiteReport    report_from_json(nlohmann::json const& j);

  std::string emit_report(SuiteReport const& r, Format format, bool timing = true);

}  // namespace fbplab::harness

#endif  // FBPLAB_HARNESS_REPORT_HPP_

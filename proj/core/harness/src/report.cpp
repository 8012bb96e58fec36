#include "fbplab/harness/report.hpp"

#include <cstdio>

#include "fbplab/error.hpp"

namespace fbplab::harness {

  std::string to_string(Status s) {
    switch (s) {
      case Status::pass:
        return "pass";
      case Status::fail:
        return "fail";
      case Status::bounded_pass:
        return "bounded-pass";
      case Status::skipped:
        return "skipped";
    }
    return "fail";
  }

  Status status_from_string(std::string_view s) {
    for (auto st : {Status::pass, Status::fail, Status::bounded_pass, Status::skipped}) {
      if (s == to_string(st)) {
        return st;
      }
    }
    throw InvalidInput("unknown check status '" + std::string(s) + "'");
  }

  bool SuiteReport::passed() const {
    for (auto const& c : checks) {
      if (c.status == Status::fail) {
        return false;
      }
    }
    return true;
  }

  Format format_from_string(std::string_view s) {
    if (s == "json") {
      return Format::json;
    }
    if (s == "text") {
      return Format::text;
    }
    throw InvalidInput("unknown report format '" + std::string(s) + "'");
  }

  nlohmann::json to_json(SuiteReport const& r, bool timing) {
    nlohmann::json checks = nlohmann::json::array();
    for (auto const& c : r.checks) {
      nlohmann::json j{{"id", c.id},
                       {"anchor", c.anchor},
                       {"expected_source", c.expected_source},
                       {"params", c.params},
                       {"expected", c.expected},
                       {"actual", c.actual},
                       {"status", to_string(c.status)},
                       {"bound", c.bound},
                       {"detail", c.detail}};
      if (timing) {
        j["time_ms"] = c.time_ms;
      }
      checks.push_back(std::move(j));
    }
    nlohmann::json out{{"suite", r.suite},
                       {"version", r.version},
                       {"seed", r.seed},
                       {"config", r.config},
                       {"passed", r.passed()},
                       {"checks", std::move(checks)}};
    if (timing) {
      out["wall_time_ms"] = r.wall_time_ms;
    }
    return out;
  }

  SuiteReport report_from_json(nlohmann::json const& j) {
    try {
      SuiteReport r;
      r.suite        = j.at("suite").get<std::string>();
      r.version      = j.at("version").get<std::string>();
      r.seed         = j.at("seed").get<std::uint64_t>();
      r.config       = j.at("config");
      r.wall_time_ms = j.value("wall_time_ms", 0.0);
      for (auto const& c : j.at("checks")) {
        Check k;
        k.id              = c.at("id").get<std::string>();
        k.anchor          = c.at("anchor").get<std::string>();
        k.expected_source = c.at("expected_source").get<std::string>();
        k.params          = c.at("params");
        k.expected        = c.at("expected");
        k.actual          = c.at("actual");
        k.status          = status_from_string(c.at("status").get<std::string>());
        k.bound           = c.at("bound");
        k.detail          = c.at("detail").get<std::string>();
        k.time_ms         = c.value("time_ms", 0.0);
        r.checks.push_back(std::move(k));
      }
      return r;
    } catch (nlohmann::json::exception const& e) {
      throw ParseError(std::string("malformed report: ") + e.what());
    }
  }

  std::string emit_report(SuiteReport const& r, Format format, bool timing) {
    if (format == Format::json) {
      return to_json(r, timing).dump(2) + '\n';
    }
    std::string out = "suite " + r.suite + " (fbplab " + r.version + ", seed "
                      + std::to_string(r.seed) + ")\n";
    std::size_t counts[4] = {0, 0, 0, 0};
    for (auto const& c : r.checks) {
      ++counts[static_cast<int>(c.status)];
      out += "  [" + to_string(c.status) + "] " + c.id;
      if (timing) {
        char buf[32];
        std::snprintf(buf, sizeof buf, " (%.1f ms)", c.time_ms);
        out += buf;
      }
      out += "\n      " + c.anchor + "\n";
      out += "      expected " + c.expected.dump() + ", actual " + c.actual.dump() + "\n";
      if (!c.bound.is_null()) {
        out += "      bound " + c.bound.dump() + "\n";
      }
      if (!c.detail.empty()) {
        out += "      " + c.detail + "\n";
      }
    }
    out += std::to_string(counts[0]) + " pass, " + std::to_string(counts[2])
           + " bounded-pass, " + std::to_string(counts[1]) + " fail, "
           + std::to_string(counts[3]) + " skipped";
    if (timing) {
      char buf[48];
      std::snprintf(buf, sizeof buf, " in %.1f ms", r.wall_time_ms);
      out += buf;
    }
    return out + '\n';
  }

}  // namespace fbplab::harness

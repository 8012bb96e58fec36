#include "fbplab/harness/config.hpp"

#include <fstream>

#include "fbplab/error.hpp"

namespace fbplab::harness {

  namespace {
    bool nonnegative(nlohmann::json const& v) {
      return v.is_number_unsigned() || (v.is_number_integer() && v.get<std::int64_t>() >= 0);
    }

    std::size_t count(nlohmann::json const& v, std::string const& key) {
      if (!nonnegative(v)) {
        throw InvalidInput("config key '" + key + "' must be a nonnegative integer");
      }
      return v.get<std::size_t>();
    }
  }  // namespace

  Config Config::from_json(nlohmann::json const& j) {
    if (!j.is_object()) {
      throw InvalidInput("config must be a JSON object");
    }
    Config c;
    for (auto const& [key, value] : j.items()) {
      if (key == "seed") {
        if (!nonnegative(value)) {
          throw InvalidInput("config key 'seed' must be a nonnegative integer");
        }
        c.seed = value.get<std::uint64_t>();
      } else if (key == "samples") {
        c.samples = count(value, key);
        if (c.samples == 0) {
          throw InvalidInput("config key 'samples' must be positive");
        }
      } else if (key == "threads") {
        c.threads = count(value, key);
      } else if (key == "stretch") {
        if (!value.is_boolean()) {
          throw InvalidInput("config key 'stretch' must be a boolean");
        }
        c.stretch = value.get<bool>();
      } else if (key == "m") {
        c.m = count(value, key);
      } else if (key == "vars") {
        c.vars = count(value, key);
      } else if (key == "len") {
        c.len = count(value, key);
      } else {
        throw InvalidInput("unknown config key '" + key + "'");
      }
    }
    return c;
  }

  Config Config::load(std::filesystem::path const& file) {
    std::ifstream in(file);
    if (!in) {
      throw InvalidInput("cannot open config file " + file.string());
    }
    nlohmann::json j;
    try {
      in >> j;
    } catch (nlohmann::json::parse_error const& e) {
      throw ParseError("config file " + file.string() + ": " + e.what());
    }
    return from_json(j);
  }

  nlohmann::json Config::to_json() const {
    nlohmann::json j{{"seed", seed}, {"samples", samples}, {"stretch", stretch}};
    if (m) {
      j["m"] = *m;
    }
    if (vars) {
      j["vars"] = *vars;
    }
    if (len) {
      j["len"] = *len;
    }
    return j;
  }

}  // namespace fbplab::harness

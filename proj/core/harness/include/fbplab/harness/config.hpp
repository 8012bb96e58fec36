// Run configuration for verification suites.

#ifndef FBPLAB_HARNESS_CONFIG_HPP_
#define FBPLAB_HARNESS_CONFIG_HPP_

#include <cstddef>
#include <cstdint>
#include <filesystem>
#include <optional>

#include "json.hpp"

namespace fbplab::harness {

  struct Config {
    std::uint64_t seed    = 1;
    // Trials for every sampled identity check.
    std::size_t   samples = 100'000;
    // Worker threads; 0 uses the hardware concurrency.
    std::size_t   threads = 0;
    // Runs the slower optional checks (FT_4, H3 and D4 by completion).
    bool          stretch = true;
    // When set, oracle suites keep only the matching instances.
    std::optional<std::size_t> m;
    std::optional<std::size_t> vars;
    std::optional<std::size_t> len;

    // Unknown keys and mistyped values throw InvalidInput.
    static Config from_json(nlohmann::json const& j);
    static Config load(std::filesystem::path const& file);
    nlohmann::json to_json() const;

    friend bool operator==(Config const&, Config const&) = default;
  };

}  // namespace fbplab::harness

#endif  // FBPLAB_HARNESS_CONFIG_HPP_

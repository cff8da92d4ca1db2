#pragma once

#include <cstdint>
#include <filesystem>
#include <map>
#include <optional>
#include <string>

namespace glab::cli {

enum class OutputFormat { csv, json };

struct RunConfig {
  std::uint64_t sieve_limit = 1'000'000;
  std::string zeros_source = "builtin";
  std::filesystem::path cache_dir = ".glab-cache";
  OutputFormat output_format = OutputFormat::csv;
  int threads = 0;  // 0 = OpenMP default
  std::size_t chunk_size = 4096;
};

// Values as strings, keyed like the JSON config file.
using Overrides = std::map<std::string, std::string>;

// defaults < config file (JSON) < environment (GLAB_*) < flags
RunConfig resolve_config(const std::optional<std::filesystem::path>& config_file,
                         const Overrides& env, const Overrides& flags);

// GLAB_SIEVE_LIMIT, GLAB_ZEROS, GLAB_CACHE_DIR, GLAB_FORMAT, GLAB_THREADS,
// GLAB_CHUNK_SIZE from the process environment.
Overrides environment_overrides();

void validate(const RunConfig& cfg);

}  // namespace glab::cli

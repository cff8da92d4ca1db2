#include "config.hpp"

#include <cstdlib>
#include <fstream>
#include <json.hpp>

#include "glab/error.hpp"

namespace glab::cli {
namespace {

const std::pair<const char*, const char*> kEnvKeys[] = {
    {"GLAB_SIEVE_LIMIT", "sieve_limit"}, {"GLAB_ZEROS", "zeros_source"},
    {"GLAB_CACHE_DIR", "cache_dir"},     {"GLAB_FORMAT", "output_format"},
    {"GLAB_THREADS", "threads"},         {"GLAB_CHUNK_SIZE", "chunk_size"},
};

std::uint64_t to_u64(const std::string& key, const std::string& v) {
  try {
    std::size_t pos = 0;
    const auto r = std::stoull(v, &pos);
    if (pos != v.size()) throw std::invalid_argument(v);
    return r;
  } catch (const std::exception&) {
    fail(ErrorKind::domain, "config " + key + ": not an unsigned integer: '" + v + "'");
  }
}

void apply(RunConfig& cfg, const std::string& key, const std::string& v) {
  if (key == "sieve_limit") cfg.sieve_limit = to_u64(key, v);
  else if (key == "zeros_source") cfg.zeros_source = v;
  else if (key == "cache_dir") cfg.cache_dir = v;
  else if (key == "output_format") {
    if (v == "csv") cfg.output_format = OutputFormat::csv;
    else if (v == "json") cfg.output_format = OutputFormat::json;
    else fail(ErrorKind::domain, "config output_format must be csv or json");
  } else if (key == "threads") cfg.threads = static_cast<int>(to_u64(key, v));
  else if (key == "chunk_size") cfg.chunk_size = to_u64(key, v);
  else fail(ErrorKind::domain, "unknown config key '" + key + "'");
}

}  // namespace

Overrides environment_overrides() {
  Overrides out;
  for (const auto& [env, key] : kEnvKeys)
    if (const char* v = std::getenv(env)) out[key] = v;
  return out;
}

RunConfig resolve_config(const std::optional<std::filesystem::path>& config_file,
                         const Overrides& env, const Overrides& flags) {
  RunConfig cfg;
  if (config_file) {
    std::ifstream in(*config_file);
    if (!in) fail(ErrorKind::io, "cannot open config file " + config_file->string());
    nlohmann::json j;
    try {
      in >> j;
    } catch (const nlohmann::json::exception& e) {
      fail(ErrorKind::parse, "config file " + config_file->string() + ": " + e.what());
    }
    for (const auto& [key, value] : j.items())
      apply(cfg, key, value.is_string() ? value.get<std::string>() : value.dump());
  }
  for (const auto& [k, v] : env) apply(cfg, k, v);
  for (const auto& [k, v] : flags) apply(cfg, k, v);
  validate(cfg);
  return cfg;
}

void validate(const RunConfig& cfg) {
  if (cfg.sieve_limit < 16) fail(ErrorKind::domain, "sieve_limit must be at least 16");
  if (cfg.chunk_size == 0 || (cfg.chunk_size & (cfg.chunk_size - 1)) != 0)
    fail(ErrorKind::domain, "chunk_size must be a power of two");
  if (cfg.threads < 0) fail(ErrorKind::domain, "threads must be nonnegative");
}

}  // namespace glab::cli

#pragma once

#include "torusbt/manifest.hpp"

#include "json.hpp"

#include <string>

namespace torusbt {

inline constexpr int kSchemaVersion = 1;

/// Result object of one command; throws the library's Error codes.
nlohmann::json run_command(const std::string& command, const Inputs& in);

/// Runs every command (embedding per-command errors), consulting the cache
/// when m.cache_dir is set. Cache status goes to stderr.
nlohmann::json run_manifest(const Manifest& m, const std::vector<std::string>& commands);

/// Inputs echo used in reports and as part of the cache key.
nlohmann::json inputs_echo(const Manifest& m);

std::string sha256_hex(const std::string& data);

/// Stable report text; timestamp excluded from everything but `generated_at`.
std::string render_report(const nlohmann::json& report);

}  // namespace torusbt

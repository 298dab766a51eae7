#pragma once

#include <filesystem>
#include <optional>
#include <string>

#include "mjack/symfunc.hpp"

namespace mjack {

inline constexpr const char* kJackCacheFormat = "mjack-jack-cache";
inline constexpr int kJackCacheVersion = 1;

/// Environment variable naming the cache directory.
inline constexpr const char* kCacheEnvVar = "MJACK_CACHE_DIR";

/// $MJACK_CACHE_DIR, else $XDG_CACHE_HOME/mjack, else $HOME/.cache/mjack.
std::filesystem::path default_cache_dir();

std::filesystem::path jack_cache_file(const std::filesystem::path& dir, int n);

/// Serialized form: a header line, a JSON body, and a SHA-256 footer line.
std::string serialize_jack_degree(const JackDegree& jd);
/// Returns nullopt on version mismatch, hash mismatch or malformed input.
std::optional<JackDegree> deserialize_jack_degree(const std::string& text, int expected_n);

std::optional<JackDegree> load_jack_cache(const std::filesystem::path& dir, int n);
/// Writes to a temporary file in `dir`, then renames over the target.
void save_jack_cache(const std::filesystem::path& dir, const JackDegree& jd);

std::string sha256_hex(const std::string& data);

} // namespace mjack

#pragma once

// Versioned on-disk form of an OrbitTable. Serialization is canonical, so
// serialize(parse(serialize(t))) is byte-identical to serialize(t).

#include <filesystem>
#include <optional>
#include <string>

#include "forge/group.hpp"

namespace forge {

inline constexpr int kOrbitCacheFormatVersion = 1;

std::string serialize_orbit_table(const OrbitTable& table);
// CacheInvalid on anything unexpected, including internally inconsistent tables.
OrbitTable parse_orbit_table(const std::string& text);

std::filesystem::path orbit_cache_path(const std::filesystem::path& dir, int degree, const std::string& hash, int radius);

struct CacheLookup {
  OrbitTable table;
  enum class Source { Hit, Computed, Recomputed } source = Source::Computed;
  std::string note;  // why an existing file was rejected
};

// Reads a matching cache entry if present and valid, otherwise computes the
// table and (re)writes the entry. An empty dir disables caching.
CacheLookup load_or_build_orbit_table(const LocalGroup& F, int radius, const std::optional<std::filesystem::path>& dir);

}  // namespace forge

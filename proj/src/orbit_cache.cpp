#include "forge/orbit_cache.hpp"

#include <fstream>
#include <sstream>

#include <json.hpp>

#include "forge/errors.hpp"

namespace forge {

using ojson = nlohmann::ordered_json;

std::string serialize_orbit_table(const OrbitTable& table) {
  ojson doc;
  doc["format_version"] = kOrbitCacheFormatVersion;
  doc["degree"] = table.degree();
  doc["generator_hash"] = table.generator_hash();
  doc["radius"] = table.radius();
  doc["classes"] = ojson::array();
  for (const auto& c : table.classes())
    doc["classes"].push_back({{"representative", to_string(c.representative)}, {"size", c.size}});
  doc["pair_classes"] = ojson::array();
  for (const auto& c : table.pair_classes())
    doc["pair_classes"].push_back({{"representative", to_string(c.representative)}, {"valency", c.size}});
  return doc.dump(2) + "\n";
}

namespace {

std::vector<OrbitClass> read_classes(const ojson& arr, const char* count_key, int degree) {
  if (!arr.is_array()) throw CacheInvalid("class list is not an array");
  std::vector<OrbitClass> out;
  for (const auto& entry : arr) {
    if (!entry.is_object() || !entry.contains("representative") || !entry.contains(count_key))
      throw CacheInvalid("malformed class entry");
    const auto& rep = entry["representative"];
    const auto& size = entry[count_key];
    if (!rep.is_string() || !size.is_number_unsigned()) throw CacheInvalid("malformed class entry");
    try {
      out.push_back({parse_word(rep.get<std::string>(), degree), size.get<std::size_t>()});
    } catch (const InputError& e) {
      throw CacheInvalid(e.what());
    }
  }
  return out;
}

}  // namespace

OrbitTable parse_orbit_table(const std::string& text) {
  ojson doc;
  try {
    doc = ojson::parse(text);
  } catch (const nlohmann::json::exception& e) {
    throw CacheInvalid(std::string("unreadable cache: ") + e.what());
  }
  if (!doc.is_object()) throw CacheInvalid("cache root is not an object");
  for (const char* key : {"format_version", "degree", "generator_hash", "radius", "classes", "pair_classes"})
    if (!doc.contains(key)) throw CacheInvalid(std::string("missing field ") + key);
  if (!doc["format_version"].is_number_integer() || doc["format_version"].get<int>() != kOrbitCacheFormatVersion)
    throw CacheInvalid("unsupported format_version");
  if (!doc["degree"].is_number_integer() || !doc["radius"].is_number_integer() || !doc["generator_hash"].is_string())
    throw CacheInvalid("bad header field types");
  const int degree = doc["degree"].get<int>();
  const int radius = doc["radius"].get<int>();
  if (degree < 3 || degree > 10 || radius < 0) throw CacheInvalid("header values out of range");

  auto classes = read_classes(doc["classes"], "size", degree);
  auto pairs = read_classes(doc["pair_classes"], "valency", degree);

  // Structural checks: ordered, per-sphere sizes add up, pair data agrees.
  std::vector<std::size_t> per_sphere(static_cast<std::size_t>(radius) + 1, 0);
  for (std::size_t i = 0; i < classes.size(); ++i) {
    const auto& c = classes[i];
    if (c.representative.size() > static_cast<std::size_t>(radius) || c.size == 0)
      throw CacheInvalid("class outside the radius or empty");
    if (i && !(std::make_pair(classes[i - 1].representative.size(), classes[i - 1].representative) <
               std::make_pair(c.representative.size(), c.representative)))
      throw CacheInvalid("classes not in canonical order");
    per_sphere[c.representative.size()] += c.size;
  }
  for (int n = 0; n <= radius; ++n)
    if (per_sphere[static_cast<std::size_t>(n)] != sphere_size(degree, n)) throw CacheInvalid("class sizes do not partition the ball");
  if (pairs != classes) throw CacheInvalid("pair classes disagree with vertex classes");

  OrbitTable table(degree, doc["generator_hash"].get<std::string>(), radius, std::move(classes), std::move(pairs));
  if (serialize_orbit_table(table) != text) throw CacheInvalid("cache file is not in canonical form");
  return table;
}

std::filesystem::path orbit_cache_path(const std::filesystem::path& dir, int degree, const std::string& hash, int radius) {
  return dir / ("orbits-d" + std::to_string(degree) + "-" + hash + "-r" + std::to_string(radius) + ".json");
}

CacheLookup load_or_build_orbit_table(const LocalGroup& F, int radius, const std::optional<std::filesystem::path>& dir) {
  CacheLookup out;
  if (!dir || dir->empty()) {
    out.table = build_orbit_table(F, radius);
    return out;
  }
  const auto path = orbit_cache_path(*dir, F.degree(), F.hash(), radius);
  bool had_file = false;
  if (std::filesystem::exists(path)) {
    had_file = true;
    std::ifstream in(path, std::ios::binary);
    std::stringstream ss;
    ss << in.rdbuf();
    try {
      OrbitTable t = parse_orbit_table(ss.str());
      if (t.degree() != F.degree() || t.generator_hash() != F.hash() || t.radius() != radius)
        throw CacheInvalid("cache key does not match the requested table");
      // Spot-check the content against the group: every representative must be canonical.
      for (const auto& c : t.classes())
        if (canonical_word(F, c.representative) != c.representative || k_orbit_size(F, c.representative) != c.size)
          throw CacheInvalid("class " + to_string(c.representative) + " is not a K-orbit of this group");
      out.table = std::move(t);
      out.source = CacheLookup::Source::Hit;
      return out;
    } catch (const CacheInvalid& e) {
      out.note = e.what();
    }
  }
  out.table = build_orbit_table(F, radius);
  out.source = had_file ? CacheLookup::Source::Recomputed : CacheLookup::Source::Computed;
  std::filesystem::create_directories(*dir);
  const auto tmp = path.string() + ".tmp";
  {
    std::ofstream o(tmp, std::ios::binary | std::ios::trunc);
    if (!o) throw InputError("cannot write cache file " + tmp);
    o << serialize_orbit_table(out.table);
  }
  std::filesystem::rename(tmp, path);
  return out;
}

}  // namespace forge

#include "forge/local_group.hpp"

#include <algorithm>
#include <cstdio>
#include <fstream>
#include <set>
#include <sstream>

#include <json.hpp>

#include "forge/errors.hpp"

namespace forge {

namespace {

std::pair<std::size_t, std::size_t> line_column(std::string_view text, std::size_t offset) {
  std::size_t line = 1, col = 1;
  for (std::size_t i = 0; i < offset && i < text.size(); ++i) {
    if (text[i] == '\n') {
      ++line;
      col = 1;
    } else {
      ++col;
    }
  }
  return {line, col};
}

[[noreturn]] void fail_at(std::string_view text, std::size_t offset, const std::string& what) {
  auto [line, col] = line_column(text, offset);
  throw ParseError(what, line, col);
}

std::size_t locate(std::string_view text, std::string_view needle, std::size_t from = 0) {
  auto pos = text.find(needle, from);
  return pos == std::string_view::npos ? 0 : pos;
}

}  // namespace

LocalGroup::LocalGroup(int degree, std::vector<Perm> generators) : degree_(degree), generators_(std::move(generators)) {
  if (degree_ < 3) throw InputError("LocalGroup: degree must be at least 3 (q >= 2)");
  if (degree_ > 10) throw InputError("LocalGroup: degree above 10 is not supported by the word encoding");
  for (const auto& g : generators_)
    if (g.degree() != degree_) throw InputError("LocalGroup: generator " + g.str() + " has the wrong degree");

  std::set<Perm> seen{Perm::identity(degree_)};
  std::vector<Perm> frontier{Perm::identity(degree_)};
  while (!frontier.empty()) {
    std::vector<Perm> next;
    for (const auto& p : frontier)
      for (const auto& g : generators_) {
        Perm q = g * p;
        if (seen.insert(q).second) next.push_back(std::move(q));
      }
    frontier = std::move(next);
  }
  elements_.assign(seen.begin(), seen.end());

  const auto d = static_cast<std::size_t>(degree_);
  least_first_.assign(d, 0);
  orbit_size_.assign(d, 0);
  for (std::size_t c = 0; c < d; ++c) {
    std::set<Color> orbit;
    for (const auto& p : elements_) orbit.insert(p(static_cast<Color>(c)));
    least_first_[c] = *orbit.begin();
    orbit_size_[c] = orbit.size();
  }
  transitive_ = orbit_size_[0] == d;

  least_next_.assign(d * d * d, 0);
  options_.assign(d * d * d, {});
  for (const auto& p : elements_)
    for (std::size_t c = 0; c < d; ++c)
      for (std::size_t c2 = 0; c2 < d; ++c2) {
        auto& opts = options_[index(static_cast<Color>(c), static_cast<Color>(c2), p(static_cast<Color>(c)))];
        opts.push_back(p(static_cast<Color>(c2)));
      }
  for (std::size_t i = 0; i < options_.size(); ++i) {
    auto& opts = options_[i];
    std::sort(opts.begin(), opts.end());
    opts.erase(std::unique(opts.begin(), opts.end()), opts.end());
    least_next_[i] = opts.empty() ? 0 : opts.front();
  }

  pair_class_.assign(d * d, -1);
  for (std::size_t a = 0; a < d; ++a)
    for (std::size_t b = 0; b < d; ++b) {
      if (a == b || pair_class_[a * d + b] >= 0) continue;
      for (const auto& p : elements_) pair_class_[p(static_cast<Color>(a)) * d + p(static_cast<Color>(b))] = pair_classes_;
      ++pair_classes_;
    }
  two_transitive_ = transitive_ && pair_classes_ == 1;

  std::vector<Perm> table;
  for (std::size_t c = 0; c < d; ++c)
    for (std::size_t e = 0; e < d; ++e) {
      const Perm* p = least_mapping(static_cast<Color>(c), static_cast<Color>(e));
      table.push_back(p ? *p : Perm::transposition(degree_, static_cast<Color>(c), static_cast<Color>(e)));
    }
  completion_ = CompletionRule::from_table(degree_, std::move(table));

  std::uint64_t h = 1469598103934665603ull;
  auto mix = [&h](std::uint64_t x) {
    h ^= x;
    h *= 1099511628211ull;
  };
  mix(static_cast<std::uint64_t>(degree_));
  for (const auto& p : elements_) {
    for (Color c : p.images()) mix(c);
    mix(0xffu);
  }
  char buf[17];
  std::snprintf(buf, sizeof buf, "%016llx", static_cast<unsigned long long>(h));
  hash_ = buf;
}

LocalGroup LocalGroup::symmetric(int degree) {
  std::vector<Color> cycle(static_cast<std::size_t>(degree));
  for (int i = 0; i < degree; ++i) cycle[static_cast<std::size_t>(i)] = static_cast<Color>((i + 1) % degree);
  return LocalGroup(degree, {Perm(cycle), Perm::transposition(degree, 0, 1)});
}

LocalGroup LocalGroup::cyclic(int degree) {
  std::vector<Color> cycle(static_cast<std::size_t>(degree));
  for (int i = 0; i < degree; ++i) cycle[static_cast<std::size_t>(i)] = static_cast<Color>((i + 1) % degree);
  return LocalGroup(degree, {Perm(cycle)});
}

LocalGroup LocalGroup::trivial(int degree) { return LocalGroup(degree, {}); }

bool LocalGroup::contains(const Perm& p) const { return std::binary_search(elements_.begin(), elements_.end(), p); }

const Perm* LocalGroup::least_mapping(Color c, Color d) const {
  for (const auto& p : elements_)
    if (p(c) == d) return &p;
  return nullptr;
}

const Perm* LocalGroup::least_mapping(Color c1, Color d1, Color c2, Color d2) const {
  for (const auto& p : elements_)
    if (p(c1) == d1 && p(c2) == d2) return &p;
  return nullptr;
}

LocalGroup LocalGroup::parse(std::string_view text) {
  nlohmann::json doc;
  try {
    doc = nlohmann::json::parse(text);
  } catch (const nlohmann::json::parse_error& e) {
    fail_at(text, e.byte > 0 ? e.byte - 1 : 0, "malformed group document");
  }
  if (!doc.is_object()) fail_at(text, 0, "group document must be an object");
  if (!doc.contains("degree") || !doc["degree"].is_number_integer())
    fail_at(text, locate(text, "\"degree\""), "field \"degree\" must be an integer");
  const int degree = doc["degree"].get<int>();
  if (degree < 3 || degree > 10) fail_at(text, locate(text, "\"degree\""), "degree must lie in [3, 10]");
  if (!doc.contains("generators") || !doc["generators"].is_array())
    fail_at(text, locate(text, "\"generators\""), "field \"generators\" must be a list");

  std::vector<Perm> gens;
  std::size_t cursor = locate(text, "\"generators\"");
  for (const auto& g : doc["generators"]) {
    std::string spelled;
    if (g.is_string()) {
      spelled = g.get<std::string>();
    } else if (g.is_array()) {
      for (const auto& x : g) {
        if (!x.is_number_integer()) fail_at(text, cursor, "permutation entries must be integers");
        if (!spelled.empty()) spelled.push_back(' ');
        spelled += std::to_string(x.get<int>());
      }
    } else {
      fail_at(text, cursor, "a generator must be a string like \"1 2 0\" or an integer list");
    }
    const std::size_t at = g.is_string() ? locate(text, "\"" + spelled + "\"", cursor) : cursor;
    try {
      gens.push_back(Perm::parse(spelled, degree));
    } catch (const InputError& e) {
      fail_at(text, at, e.what());
    }
    cursor = at + 1;
  }
  return LocalGroup(degree, std::move(gens));
}

LocalGroup LocalGroup::load(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw InputError("cannot open group file " + path);
  std::stringstream ss;
  ss << in.rdbuf();
  return parse(ss.str());
}

std::string LocalGroup::to_json() const {
  nlohmann::ordered_json doc;
  doc["degree"] = degree_;
  doc["generators"] = nlohmann::ordered_json::array();
  for (const auto& g : generators_) doc["generators"].push_back(g.str());
  return doc.dump();
}

}  // namespace forge

#include "forge/group.hpp"

#include <algorithm>
#include <map>
#include <set>

#include "forge/errors.hpp"

namespace forge {

bool check_legal(const Portrait& g, const LocalGroup& F, std::size_t radius) {
  if (g.degree() != F.degree()) return false;
  try {
    for (const Word& v : ball(F.degree(), static_cast<int>(radius))) {
      const Perm s = g.local(v);
      if (!F.contains(s)) return false;
      if (!v.empty()) {
        const Word parent(v.begin(), v.end() - 1);
        const Color c = v.back();
        if (s(c) != g.local(parent)(c)) return false;
      }
    }
  } catch (const IllegalPortrait&) {
    return false;
  }
  return true;
}

StabilizerElement certify_stabilizer_element(const Portrait& g, const LocalGroup& F, std::size_t radius) {
  if (!g.base_image().empty()) throw NotInStabilizer("stabilizer element must fix x0");
  if (!check_legal(g, F, radius)) throw IllegalPortrait("local permutations leave F within radius " + std::to_string(radius));
  return {g, radius};
}

Word canonical_word(const LocalGroup& F, const Word& w) {
  Word e(w.size());
  if (w.empty()) return e;
  e[0] = F.least_in_orbit(w[0]);
  for (std::size_t i = 1; i < w.size(); ++i) e[i] = F.least_next(w[i - 1], w[i], e[i - 1]);
  return e;
}

std::size_t k_orbit_size(const LocalGroup& F, const Word& w) {
  if (w.empty()) return 1;
  std::size_t n = F.orbit_size(w[0]);
  Word e = canonical_word(F, w);
  for (std::size_t i = 1; i < w.size(); ++i) n *= F.next_options(w[i - 1], w[i], e[i - 1]).size();
  return n;
}

namespace {

void orbit_dfs(const LocalGroup& F, const Word& w, Word& cur, std::vector<Word>& out) {
  const std::size_t i = cur.size();
  if (i == w.size()) {
    out.push_back(cur);
    return;
  }
  std::vector<Color> opts;
  if (i == 0) {
    std::set<Color> firsts;
    for (const auto& p : F.elements()) firsts.insert(p(w[0]));
    opts.assign(firsts.begin(), firsts.end());
  } else {
    opts = F.next_options(w[i - 1], w[i], cur[i - 1]);
  }
  for (Color c : opts) {
    cur.push_back(c);
    orbit_dfs(F, w, cur, out);
    cur.pop_back();
  }
}

}  // namespace

std::vector<Word> k_orbit(const LocalGroup& F, const Word& w) {
  std::vector<Word> out;
  Word cur;
  orbit_dfs(F, w, cur, out);
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<OrbitClass> k_orbits_on_sphere(const LocalGroup& F, int n) {
  if (n < 0) throw InputError("sphere radius must be non-negative");
  std::map<Word, std::size_t> counts;
  for (const Word& w : sphere(F.degree(), n)) ++counts[canonical_word(F, w)];
  std::vector<OrbitClass> out;
  for (auto& [rep, size] : counts) out.push_back({rep, size});
  return out;
}

OrbitTable::OrbitTable(int degree, std::string generator_hash, int radius, std::vector<OrbitClass> classes,
                       std::vector<OrbitClass> pair_classes)
    : degree_(degree),
      hash_(std::move(generator_hash)),
      radius_(radius),
      classes_(std::move(classes)),
      pair_classes_(std::move(pair_classes)) {
  for (std::size_t i = 0; i < classes_.size(); ++i) index_.emplace(classes_[i].representative, static_cast<int>(i));
}

std::vector<std::size_t> OrbitTable::counts() const {
  std::vector<std::size_t> out(static_cast<std::size_t>(radius_) + 1, 0);
  for (const auto& c : classes_) ++out.at(c.representative.size());
  return out;
}

std::vector<OrbitClass> OrbitTable::sphere(int n) const {
  std::vector<OrbitClass> out;
  for (const auto& c : classes_)
    if (static_cast<int>(c.representative.size()) == n) out.push_back(c);
  return out;
}

int OrbitTable::class_id(const Word& canonical) const {
  auto it = index_.find(canonical);
  return it == index_.end() ? -1 : it->second;
}

OrbitTable build_orbit_table(const LocalGroup& F, int radius) {
  if (radius < 0) throw InputError("radius must be non-negative");
  std::vector<OrbitClass> classes;
  for (int n = 0; n <= radius; ++n) {
    auto s = k_orbits_on_sphere(F, n);
    classes.insert(classes.end(), s.begin(), s.end());
  }
  std::vector<OrbitClass> pairs = classes;
  return OrbitTable(F.degree(), F.hash(), radius, std::move(classes), std::move(pairs));
}

const char* trend_name(GrowthReport::Trend t) {
  switch (t) {
    case GrowthReport::Trend::Stabilized: return "stabilized";
    case GrowthReport::Trend::Growing: return "growing";
    case GrowthReport::Trend::Inconclusive: return "inconclusive";
  }
  return "?";
}

GrowthReport orbit_count_growth(const LocalGroup& F, int R) {
  if (R < 2) throw InputError("orbit_count_growth needs R >= 2");
  GrowthReport rep;
  rep.radius = R;
  rep.window_low = R - 2;
  for (int n = 0; n <= R; ++n) rep.counts.push_back(k_orbits_on_sphere(F, n).size());
  const auto& c = rep.counts;
  const auto lo = static_cast<std::size_t>(R - 2);
  if (c[lo] == c[lo + 1] && c[lo + 1] == c[lo + 2])
    rep.trend = GrowthReport::Trend::Stabilized;
  else if (c[lo] < c[lo + 1] && c[lo + 1] < c[lo + 2])
    rep.trend = GrowthReport::Trend::Growing;
  else
    rep.trend = GrowthReport::Trend::Inconclusive;
  return rep;
}

std::size_t opposite_pair_orbit_count(const LocalGroup& F, int n) {
  if (n < 1) throw InputError("opposite pairs need depth >= 1");
  const auto words = sphere(F.degree(), n);
  std::set<std::pair<Word, Word>> classes;
  for (const Word& u : words) {
    for (const Word& v : words) {
      if (u[0] == v[0]) continue;
      // Least image of the first-letter pair, then each branch greedily.
      Color a = 0xff, b = 0xff;
      for (const auto& p : F.elements()) {
        const Color pa = p(u[0]), pb = p(v[0]);
        if (pa < a || (pa == a && pb < b)) a = pa, b = pb;
      }
      Word cu(u.size()), cv(v.size());
      cu[0] = a;
      cv[0] = b;
      for (std::size_t i = 1; i < u.size(); ++i) cu[i] = F.least_next(u[i - 1], u[i], cu[i - 1]);
      for (std::size_t i = 1; i < v.size(); ++i) cv[i] = F.least_next(v[i - 1], v[i], cv[i - 1]);
      classes.emplace(std::move(cu), std::move(cv));
    }
  }
  return classes.size();
}

bool two_transitivity_on_ends_proxy(const LocalGroup& F, int n) {
  if (n < 2) throw InputError("two_transitivity_on_ends_proxy needs depth >= 2");
  return opposite_pair_orbit_count(F, n) == 1;
}

Color edge_color(const Word& a, const Word& b) {
  if (b.size() == a.size() + 1 && common_prefix(a, b) == a.size()) return b.back();
  if (a.size() == b.size() + 1 && common_prefix(a, b) == b.size()) return a.back();
  throw InputError("edge_color: vertices " + to_string(a) + " and " + to_string(b) + " are not adjacent");
}

std::optional<Portrait> k_transporter(const LocalGroup& F, const Word& src, const Word& dst) {
  if (src.size() != dst.size()) return std::nullopt;
  if (canonical_word(F, src) != canonical_word(F, dst)) return std::nullopt;
  std::map<Word, Perm> exceptions;
  if (!src.empty()) {
    const Perm* root = F.least_mapping(src[0], dst[0]);
    if (!root) return std::nullopt;
    exceptions.emplace(Word{}, *root);
  }
  for (std::size_t i = 1; i < src.size(); ++i) {
    const Perm* p = F.least_mapping(src[i - 1], dst[i - 1], src[i], dst[i]);
    if (!p) return std::nullopt;
    exceptions.emplace(Word(src.begin(), src.begin() + static_cast<long>(i)), *p);
  }
  return Portrait::basic(F.degree(), Word{}, std::move(exceptions), F.completion());
}

namespace {

Word path_colors(const std::vector<Word>& path) {
  Word colors;
  for (std::size_t i = 1; i < path.size(); ++i) colors.push_back(edge_color(path[i - 1], path[i]));
  if (!is_reduced(colors)) throw InputError("transporter: path backtracks");
  return colors;
}

}  // namespace

std::optional<Portrait> transporter(const LocalGroup& F, const std::vector<Word>& src, const std::vector<Word>& dst) {
  if (src.size() != dst.size())
    throw RadiusMismatch("source has " + std::to_string(src.size()) + " vertices, target " + std::to_string(dst.size()));
  if (src.empty()) throw InputError("transporter: empty configuration");
  auto k = k_transporter(F, path_colors(src), path_colors(dst));
  if (!k) return std::nullopt;
  const int d = F.degree();
  return Portrait::translation(d, dst.front()) * *k * Portrait::translation(d, reversed(src.front()));
}

std::vector<Portrait> k_generators(const LocalGroup& F) {
  std::vector<Portrait> out;
  for (const auto& g : F.generators()) {
    std::map<Word, Perm> root{{Word{}, g}};
    out.push_back(Portrait::basic(F.degree(), Word{}, std::move(root), F.completion()));
  }
  return out;
}

std::vector<Portrait> generating_family(const LocalGroup& F) {
  std::vector<Portrait> out;
  for (int c = 0; c < F.degree(); ++c)
    for (int d = 0; d < F.degree(); ++d)
      if (c != d) out.push_back(Portrait::translation(F.degree(), Word{static_cast<Color>(c), static_cast<Color>(d)}));
  auto ks = k_generators(F);
  out.insert(out.end(), ks.begin(), ks.end());
  return out;
}

std::vector<TreeEnd> fixed_end_check(const std::vector<Portrait>& generators, const std::vector<TreeEnd>& candidates) {
  std::vector<TreeEnd> out;
  for (const auto& e : candidates) {
    bool fixed = true;
    for (const auto& g : generators) {
      if (g(e) != e) {
        fixed = false;
        break;
      }
    }
    if (fixed) out.push_back(e);
  }
  return out;
}

std::vector<TreeEnd> fixed_end_check(const LocalGroup& F, const std::vector<TreeEnd>& candidates) {
  return fixed_end_check(generating_family(F), candidates);
}

TreeApartment standard_apartment() { return TreeApartment(TreeEnd(Word{}, Word{1, 0}), TreeEnd(Word{}, Word{0, 1})); }

PigeonholeResult find_hyperbolic_on_line(const LocalGroup& F, const TreeApartment& line, std::size_t budget,
                                         long start) {
  auto labels = [&](long p) -> std::int64_t {
    const Word prev = line.vertex_at(p - 1), here = line.vertex_at(p), next = line.vertex_at(p + 1);
    return F.pair_class(edge_color(prev, here), edge_color(here, next));
  };
  auto move = [&](long from, long to) -> std::optional<Portrait> {
    return transporter(F, {line.vertex_at(from - 1), line.vertex_at(from), line.vertex_at(from + 1)},
                       {line.vertex_at(to - 1), line.vertex_at(to), line.vertex_at(to + 1)});
  };
  return pigeonhole_find_hyperbolic(line, labels, move, budget, start, 2);
}

}  // namespace forge

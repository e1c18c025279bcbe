#include "forge/tree.hpp"

#include <algorithm>
#include <cstdlib>
#include <map>
#include <stdexcept>

#include "forge/errors.hpp"

namespace forge {

TreeApartment::TreeApartment(TreeEnd end_minus, TreeEnd end_plus)
    : minus_(std::move(end_minus)), plus_(std::move(end_plus)) {
  if (minus_ == plus_) throw InputError("TreeApartment: ends must be distinct");
  origin_ = plus_.truncate(agreement_depth(minus_, plus_));
}

Word TreeApartment::vertex_at(long k) const {
  const std::size_t c = origin_.size();
  if (k >= 0) return plus_.truncate(c + static_cast<std::size_t>(k));
  return minus_.truncate(c + static_cast<std::size_t>(-k));
}

TreeApartment::Projection TreeApartment::project(const Word& x) const {
  const std::size_t c = origin_.size();
  const std::size_t a = agreement_depth(plus_, x);
  const std::size_t b = agreement_depth(minus_, x);
  if (a > c) return {static_cast<long>(a - c), x.size() - a};
  if (b > c) return {-static_cast<long>(b - c), x.size() - b};
  return {0, x.size() + c - 2 * a};
}

int TreeApartment::side(const TreeEnd& c) const {
  if (c == plus_) return 1;
  if (c == minus_) return -1;
  throw InputError("end " + c.str() + " is not an end of the apartment");
}

const char* kind_name(IsometryClass::Kind k) {
  switch (k) {
    case IsometryClass::Kind::Elliptic: return "elliptic";
    case IsometryClass::Kind::Inversion: return "inversion";
    case IsometryClass::Kind::Hyperbolic: return "hyperbolic";
  }
  return "?";
}

namespace {

// Candidate (prefix, period) splittings of a long ray prefix, shortest period first.
std::vector<TreeEnd> guess_ends(const Word& w) {
  std::vector<TreeEnd> out;
  const std::size_t n = w.size();
  for (std::size_t len = 2; 3 * len <= n; ++len) {
    std::size_t s = n - len;
    while (s > 0 && w[s - 1] == w[s - 1 + len]) --s;
    if (n - s < 3 * len) continue;
    try {
      out.emplace_back(Word(w.begin(), w.begin() + static_cast<long>(s)),
                       Word(w.begin() + static_cast<long>(s), w.begin() + static_cast<long>(s + len)));
    } catch (const InputError&) {
    }
  }
  return out;
}

std::optional<TreeEnd> fixed_end_along(const Portrait& g, Word x, std::size_t iterations) {
  for (std::size_t i = 0; i < iterations; ++i) x = g(x);
  for (const TreeEnd& e : guess_ends(x)) {
    try {
      if (g(e) == e) return e;
    } catch (const InsufficientRadius&) {
    }
  }
  return std::nullopt;
}

}  // namespace

std::pair<TreeEnd, TreeEnd> axis_ends(const Portrait& g, const Word& axis_vertex, long length) {
  if (length <= 0) throw NotHyperbolic("axis_ends: translation length must be positive");
  const Portrait ginv = g.inverse();
  const std::size_t reach = axis_vertex.size() + static_cast<std::size_t>(length) + 2;
  for (std::size_t iters = 16; iters <= 4096; iters *= 2) {
    const std::size_t total = iters + reach / static_cast<std::size_t>(length);
    auto plus = fixed_end_along(g, axis_vertex, total);
    auto minus = fixed_end_along(ginv, axis_vertex, total);
    if (plus && minus && *plus != *minus) return {*plus, *minus};
  }
  throw InsufficientRadius("axis_ends: could not certify periodic axis ends");
}

IsometryClass classify_isometry(const Portrait& g, std::size_t search_radius) {
  const std::size_t d0 = g.base_image().size();
  if (search_radius < d0 + 2)
    throw InsufficientRadius("classify_isometry: radius " + std::to_string(search_radius) + " < d(x0, g x0) + 2 = " +
                             std::to_string(d0 + 2));
  std::size_t best = SIZE_MAX;
  Word best_vertex;
  for (int r = 0; r <= static_cast<int>(search_radius) && best > 0; ++r) {
    for (const Word& v : sphere(g.degree(), r)) {
      const std::size_t d = distance(v, g(v));
      if (d < best) {
        best = d;
        best_vertex = v;
        if (d == 0) break;
      }
    }
  }
  IsometryClass cls;
  cls.certified_radius = search_radius;
  if (best == 0) {
    cls.kind = IsometryClass::Kind::Elliptic;
    cls.fixed_vertex = best_vertex;
    return cls;
  }
  const Word gv = g(best_vertex);
  if (best == 1 && g(gv) == best_vertex) {
    cls.kind = IsometryClass::Kind::Inversion;
    cls.fixed_edge = {best_vertex, gv};
    return cls;
  }
  if (distance(best_vertex, g(gv)) != 2 * best)
    throw std::logic_error("classify_isometry: minimal displacement vertex is not on an axis");
  const std::size_t to_axis = best_vertex.size();
  if (d0 != best + 2 * to_axis) throw std::logic_error("classify_isometry: translation length cross-check failed");
  cls.kind = IsometryClass::Kind::Hyperbolic;
  cls.length = static_cast<long>(best);
  cls.axis_point = best_vertex;
  auto [plus, minus] = axis_ends(g, best_vertex, cls.length);
  cls.axis.emplace(minus, plus);
  return cls;
}

bool is_strongly_regular(const Portrait& g, std::size_t search_radius) {
  return classify_isometry(g, search_radius).hyperbolic();
}

long retraction(const TreeApartment& a, const TreeEnd& c, const Word& x) {
  const int s = a.side(c);
  const auto p = a.project(x);
  return s > 0 ? p.coordinate - static_cast<long>(p.offset) : p.coordinate + static_cast<long>(p.offset);
}

long busemann_beta(const TreeApartment& a, const TreeEnd& c, const Portrait& g) {
  const int s = a.side(c);
  if (g(c) != c) throw NotInStabilizer("g does not fix " + c.str());
  auto beta_at = [&](long k) -> std::optional<long> {
    const Word v = a.vertex_at(s * k);
    const Word gv = g(v);
    if (!a.contains(gv)) return std::nullopt;
    return s * (retraction(a, c, gv) - retraction(a, c, v));
  };
  for (long k = 0; k < 8192; ++k) {
    if (auto b = beta_at(k)) {
      auto again = beta_at(k + 3);
      if (!again || *again != *b) throw std::logic_error("busemann_beta: value depends on the sample vertex");
      return *b;
    }
  }
  throw InsufficientRadius("busemann_beta: image of the ray never rejoins the apartment");
}

bool in_Gc0(const Portrait& g, const TreeEnd& c, std::size_t search_radius) {
  const Color first = c.letter(0);
  // Any end leaving x0 through a different edge spans an apartment with c.
  const Color x = first == 0 ? 1 : 0;
  const Color y = x == 0 ? 1 : 0;
  const TreeApartment a(TreeEnd(Word{}, Word{x, y}), c);
  if (busemann_beta(a, c, g) != 0) return false;
  for (std::size_t k = 0; k <= search_radius; ++k) {
    const Word r = c.truncate(k);
    if (g(r) == r) return true;
  }
  throw InsufficientRadius("in_Gc0: beta = 0 but no fixed vertex on the ray within radius " +
                           std::to_string(search_radius));
}

IsometryClass hyperbolic_from_segment(const Portrait& h, const std::vector<Word>& seg,
                                      const std::vector<Word>& image_seg) {
  if (seg.size() < 2) throw NotTranslatedSegment("segment needs at least one edge");
  if (image_seg.size() != seg.size()) throw NotTranslatedSegment("segment and image differ in length");
  if (distance(seg.front(), seg.back()) != seg.size() - 1) throw NotTranslatedSegment("segment is not geodesic");
  for (std::size_t k = 0; k < seg.size(); ++k) {
    if (k && distance(seg[k - 1], seg[k]) != 1) throw NotTranslatedSegment("segment is not a path");
    if (h(seg[k]) != image_seg[k]) throw NotTranslatedSegment("image_seg is not h(seg)");
  }
  const std::size_t ell = distance(seg.front(), image_seg.front());
  if (ell == 0) throw NotTranslatedSegment("h fixes the start of the segment");
  const auto path = geodesic(seg.front(), image_seg.back());
  if (path.size() != ell + seg.size()) throw NotTranslatedSegment("image is not a forward translate of the segment");
  for (std::size_t k = 0; k < seg.size(); ++k)
    if (path[k] != seg[k] || path[ell + k] != image_seg[k])
      throw NotTranslatedSegment("image is not a forward translate of the segment");

  IsometryClass cls;
  cls.kind = IsometryClass::Kind::Hyperbolic;
  cls.length = static_cast<long>(ell);
  cls.certified_radius = path.size();
  auto [plus, minus] = axis_ends(h, seg.front(), cls.length);
  cls.axis.emplace(minus, plus);
  cls.axis_point = cls.axis->vertex_at(cls.axis->project(Word{}).coordinate);
  return cls;
}

TreeEnd iterate_on_end(const Portrait& a, const IsometryClass& cls, const TreeEnd& xi, long n) {
  if (!cls.hyperbolic()) throw NotHyperbolic("iterate_on_end needs a hyperbolic element");
  if (xi == cls.axis->end_minus()) throw RepellingFixedEnd(xi.str() + " is the repelling end of the axis");
  return a.pow(n)(xi);
}

std::size_t segment_through_apartment(const Portrait& a, const IsometryClass& cls, const Word& x0, const Word& x,
                                      long n) {
  if (!cls.hyperbolic()) throw NotHyperbolic("segment_through_apartment needs a hyperbolic element");
  const Word y = a.pow(n)(x);
  const long cu = cls.axis->project(x0).coordinate;
  const long cw = cls.axis->project(y).coordinate;
  return static_cast<std::size_t>(std::labs(cu - cw));
}

PigeonholeResult pigeonhole_find_hyperbolic(const TreeApartment& line, const LabelOracle& labels,
                                            const TransporterOracle& transporter, std::size_t budget, long start,
                                            long step) {
  if (step <= 0) throw InputError("pigeonhole: step must be positive");
  std::map<std::int64_t, std::vector<long>> seen;
  for (std::size_t i = 0; i < budget; ++i) {
    const long p = start + step * static_cast<long>(i);
    const std::int64_t label = labels(p);
    auto& earlier = seen[label];
    for (long p0 : earlier) {
      auto h = transporter(p0, p);
      if (!h) continue;
      const std::vector<Word> seg{line.vertex_at(p0), line.vertex_at(p0 + 1)};
      const std::vector<Word> image{line.vertex_at(p), line.vertex_at(p + 1)};
      try {
        IsometryClass cls = hyperbolic_from_segment(*h, seg, image);
        return {*h, std::move(cls), p0, p, i + 1};
      } catch (const NotTranslatedSegment&) {
      }
    }
    earlier.push_back(p);
  }
  throw BudgetExhausted("no certified label repeat within " + std::to_string(budget) + " positions");
}

}  // namespace forge

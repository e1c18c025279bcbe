#include <random>

#include "doctest.h"
#include "forge/errors.hpp"
#include "forge/group.hpp"
#include "forge/local_group.hpp"
#include "forge/tree.hpp"
#include "oracles.hpp"

using namespace forge;

namespace {

const TreeEnd kPlus(Word{}, Word{0, 1});
const TreeEnd kMinus(Word{}, Word{1, 0});

}  // namespace

TEST_CASE("apartment coordinates") {
  const TreeApartment a(kMinus, kPlus);
  CHECK(a.origin().empty());
  CHECK(a.vertex_at(3) == Word{0, 1, 0});
  CHECK(a.vertex_at(-2) == Word{1, 0});
  auto p = a.project(Word{0, 2, 1});
  CHECK(p.coordinate == 1);
  CHECK(p.offset == 2);
  p = a.project(Word{2, 1});
  CHECK(p.coordinate == 0);
  CHECK(p.offset == 2);
  CHECK(a.contains(Word{1, 0, 1}));
  CHECK_THROWS_AS(TreeApartment(kPlus, kPlus), InputError);

  const TreeApartment b(TreeEnd(Word{2}, Word{0, 1}), TreeEnd(Word{2}, Word{1, 0}));
  CHECK(b.origin() == Word{2});
  CHECK(b.vertex_at(-1) == Word{2, 0});
}

TEST_CASE("classification of basic examples") {
  const auto c0 = classify_isometry(Portrait::translation(3, Word{0}), 4);
  CHECK(c0.kind == IsometryClass::Kind::Inversion);
  const auto c1 = classify_isometry(Portrait::translation(3, Word{0, 1}), 5);
  CHECK(c1.kind == IsometryClass::Kind::Hyperbolic);
  CHECK(c1.length == 2);
  CHECK(c1.axis->end_plus() == kPlus);
  CHECK(c1.axis->end_minus() == kMinus);
  const auto c2 = classify_isometry(Portrait::identity(3), 2);
  CHECK(c2.kind == IsometryClass::Kind::Elliptic);
  CHECK_THROWS_AS(classify_isometry(Portrait::translation(3, Word{0, 1, 2}), 3), InsufficientRadius);

  // Odd translation length: base x0 -> 0, then swap colors along the way.
  const Portrait odd = Portrait::basic(3, Word{0}, {}, CompletionRule::transposition(3));
  const auto c3 = classify_isometry(odd, 4);
  if (c3.hyperbolic()) {
    CHECK(c3.length == 1);
    CHECK_FALSE(c3.type_preserving());
  }
}

TEST_CASE("classification agrees with brute-force minimal displacement") {
  std::mt19937 rng(29);
  for (const auto& F : {LocalGroup::symmetric(3), LocalGroup::cyclic(3)}) {
    for (int t = 0; t < 30; ++t) {
      const Portrait g = oracle::random_element(F, rng, 3, 2);
      const std::size_t R = g.base_image().size() + 2;
      const auto cls = classify_isometry(g, R);
      const int md = oracle::min_displacement(g, static_cast<int>(R));
      switch (cls.kind) {
        case IsometryClass::Kind::Elliptic:
          CHECK(md == 0);
          CHECK(g(cls.fixed_vertex) == cls.fixed_vertex);
          break;
        case IsometryClass::Kind::Inversion:
          CHECK(md == 1);
          CHECK(g(cls.fixed_edge.first) == cls.fixed_edge.second);
          CHECK(g(cls.fixed_edge.second) == cls.fixed_edge.first);
          break;
        case IsometryClass::Kind::Hyperbolic:
          CHECK(md == cls.length);
          CHECK(g(cls.axis->end_plus()) == cls.axis->end_plus());
          CHECK(g(cls.axis->end_minus()) == cls.axis->end_minus());
          CHECK(cls.axis->contains(cls.axis_point));
          // g translates its axis toward end_plus.
          CHECK(cls.axis->project(g(cls.axis_point)).coordinate ==
                cls.axis->project(cls.axis_point).coordinate + cls.length);
          break;
      }
    }
  }
}

TEST_CASE("retraction") {
  const TreeApartment a(kMinus, kPlus);
  for (long k = -5; k <= 5; ++k) {
    CHECK(retraction(a, kPlus, a.vertex_at(k)) == k);
    CHECK(retraction(a, kMinus, a.vertex_at(k)) == k);
  }
  // Busemann-style oracle: rho_{A,c+}(x) = n - d(x, vertex_at(n)) for large n.
  for (const Word& x : ball(3, 4)) {
    CHECK(retraction(a, kPlus, x) == 30 - static_cast<long>(distance(x, a.vertex_at(30))));
    CHECK(retraction(a, kMinus, x) == static_cast<long>(distance(x, a.vertex_at(-30))) - 30);
  }
  CHECK_THROWS_AS(retraction(a, TreeEnd(Word{}, Word{2, 1}), Word{}), InputError);
}

TEST_CASE("Busemann homomorphism on the stabilizer of an end") {
  std::mt19937 rng(31);
  const auto F = LocalGroup::symmetric(3);
  const TreeApartment a(kMinus, kPlus);
  const Portrait t = Portrait::translation(3, Word{0, 1});
  CHECK(busemann_beta(a, kPlus, t) == 2);
  CHECK(busemann_beta(a, kMinus, t) == -2);
  CHECK(busemann_beta(a, kPlus, t.inverse()) == -2);
  CHECK_THROWS_AS(busemann_beta(a, kPlus, Portrait::translation(3, Word{0})), NotInStabilizer);

  std::vector<Portrait> sample;
  for (int i = 0; i < 10; ++i) {
    const Portrait e = oracle::random_ray_fixer(F, kPlus, rng);
    CHECK(e(kPlus) == kPlus);
    sample.push_back(e);
    sample.push_back(t * e);
    sample.push_back(e * t.inverse());
    sample.push_back(t * e * t.inverse());
  }
  for (std::size_t i = 0; i < sample.size(); ++i) {
    const Portrait& g = sample[i];
    const Portrait& h = sample[(i * 7 + 3) % sample.size()];
    CHECK(busemann_beta(a, kPlus, g * h) == busemann_beta(a, kPlus, g) + busemann_beta(a, kPlus, h));
    const long b = busemann_beta(a, kPlus, g);
    CHECK(in_Gc0(g, kPlus, 12) == (b == 0));
    if (b == 0) {
      bool fixed = false;
      for (std::size_t k = 0; k <= 12 && !fixed; ++k) fixed = g(kPlus.truncate(k)) == kPlus.truncate(k);
      CHECK(fixed);
    }
  }
}

TEST_CASE("hyperbolic_from_segment") {
  const Portrait t = Portrait::translation(3, Word{0, 1});
  const auto cls = hyperbolic_from_segment(t, {Word{}, Word{0}}, {Word{0, 1}, Word{0, 1, 0}});
  CHECK(cls.length == 2);
  CHECK(cls.axis->end_plus() == kPlus);
  CHECK_THROWS_AS(hyperbolic_from_segment(t, {Word{}}, {Word{0, 1}}), NotTranslatedSegment);
  CHECK_THROWS_AS(hyperbolic_from_segment(t, {Word{}, Word{1}}, {Word{0, 1}, Word{0}}), NotTranslatedSegment);
  CHECK_THROWS_AS(hyperbolic_from_segment(Portrait::identity(3), {Word{}, Word{0}}, {Word{}, Word{0}}),
                  NotTranslatedSegment);
  // Wrong image claim.
  CHECK_THROWS_AS(hyperbolic_from_segment(t, {Word{}, Word{0}}, {Word{0, 1}, Word{0, 1, 2}}), NotTranslatedSegment);
}

TEST_CASE("iterate_on_end: agreement can drop before the burn-in") {
  const Portrait g = Portrait::translation(3, Word{0, 1, 2, 0});
  const auto cls = classify_isometry(g, 6);
  REQUIRE(cls.hyperbolic());
  const TreeEnd xi(Word{0, 2, 1, 0}, Word{1, 2});
  const TreeEnd& plus = cls.axis->end_plus();
  std::vector<std::size_t> depth;
  for (long n = 0; n <= 12; ++n) depth.push_back(agreement_depth(iterate_on_end(g, cls, xi, n), plus));
  bool dropped = false;
  for (std::size_t n = 0; n + 1 < depth.size(); ++n) dropped = dropped || depth[n + 1] < depth[n];
  CHECK(dropped);
  const std::size_t burn = distance(Word{}, cls.axis_point) + xi.prefix().size();
  for (std::size_t n = burn; n + 1 < depth.size(); ++n) CHECK(depth[n + 1] == depth[n] + 2);
  CHECK_THROWS_AS(iterate_on_end(g, cls, cls.axis->end_minus(), 1), RepellingFixedEnd);
  CHECK_THROWS_AS(iterate_on_end(g, classify_isometry(Portrait::identity(3), 2), xi, 1), NotHyperbolic);
}

TEST_CASE("segment_through_apartment matches an explicit geodesic intersection") {
  const Portrait g = Portrait::translation(3, Word{0, 1, 2, 0});
  const auto cls = classify_isometry(g, 6);
  for (const Word& x : ball(3, 2)) {
    for (long n = 0; n <= 6; ++n) {
      const Word y = g.pow(n)(x);
      std::size_t on_axis = 0;
      for (const Word& v : geodesic(Word{}, y)) on_axis += cls.axis->contains(v);
      const std::size_t len = on_axis ? on_axis - 1 : 0;
      CHECK(segment_through_apartment(g, cls, Word{}, x, n) == len);
    }
  }
}

TEST_CASE("pigeonhole search") {
  const TreeApartment line(kMinus, kPlus);
  auto labels = [](long) -> std::int64_t { return 0; };
  auto trans = [&](long from, long to) -> std::optional<Portrait> {
    // x -> reduce(vertex_at(to) vertex_at(from)^-1 x) on the standard line
    const Word a = line.vertex_at(from), b = line.vertex_at(to);
    return Portrait::translation(3, b) * Portrait::translation(3, reversed(a));
  };
  const auto r = pigeonhole_find_hyperbolic(line, labels, trans, 4);
  CHECK(r.cls.hyperbolic());
  CHECK(r.cls.length == r.second_position - r.first_position);
  CHECK_THROWS_AS(pigeonhole_find_hyperbolic(line, labels, trans, 0), BudgetExhausted);
  auto distinct = [](long p) -> std::int64_t { return p; };
  CHECK_THROWS_AS(pigeonhole_find_hyperbolic(line, distinct, trans, 5), BudgetExhausted);
}

TEST_CASE("agreement with the attracting end grows by l once xi has crossed over") {
  std::mt19937 rng(101);
  const auto ends = enumerate_ends(3, 3, 3);
  for (const auto& F : {LocalGroup::symmetric(3), LocalGroup::cyclic(3), LocalGroup::trivial(3)}) {
    int found = 0;
    for (int tries = 0; found < 15 && tries < 2000; ++tries) {
      const Portrait a = oracle::random_element(F, rng, 5, 2);
      const auto cls = classify_isometry(a, a.base_image().size() + 2);
      if (!cls.hyperbolic()) continue;
      ++found;
      const TreeEnd& plus = cls.axis->end_plus();
      const TreeEnd& minus = cls.axis->end_minus();
      const std::size_t D = cls.axis_point.size();
      for (std::size_t i = 0; i < ends.size(); i += 5) {
        const TreeEnd& xi = ends[i];
        if (xi == plus || xi == minus) continue;
        const std::size_t m = agreement_depth(xi, minus);
        const std::size_t start = std::max<std::size_t>(m > D ? m - D : 0, 1);
        std::size_t prev = agreement_depth(iterate_on_end(a, cls, xi, 0), plus);
        for (std::size_t n = 1; n <= start + 4; ++n) {
          const std::size_t cur = agreement_depth(iterate_on_end(a, cls, xi, static_cast<long>(n)), plus);
          if (n > start) CHECK(cur == prev + static_cast<std::size_t>(cls.length));
          prev = cur;
        }
      }
    }
    CHECK(found == 15);
  }
}

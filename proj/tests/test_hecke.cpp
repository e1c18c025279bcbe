#include "doctest.h"
#include "forge/errors.hpp"
#include "forge/group.hpp"
#include "forge/hecke.hpp"
#include "forge/local_group.hpp"
#include "oracles.hpp"

using namespace forge;

namespace {

// Pair-orbit label of (x0, w) from explicitly enumerated K-orbits.
struct OrbitOracle {
  std::map<Word, int> label;
  OrbitOracle(const LocalGroup& F, int R) {
    int next = 0;
    for (int n = 0; n <= R; ++n)
      for (const auto& orbit : oracle::orbits_on_sphere(F, n)) {
        for (const Word& w : orbit) label[w] = next;
        ++next;
      }
  }
  // (y, z) is carried to (x0, y^-1 z) by the color translation along y^-1.
  int pair(const Word& y, const Word& z) const { return label.at(reduce(concat(reversed(y), z))); }
  static Word concat(Word a, const Word& b) {
    a.insert(a.end(), b.begin(), b.end());
    return a;
  }
};

}  // namespace

TEST_CASE("pair orbit counts") {
  CHECK(pair_orbits(LocalGroup::symmetric(3), 4).size() == 5);
  CHECK(pair_orbits(LocalGroup::cyclic(3), 2).size() == 4);
  CHECK(pair_orbits(LocalGroup::trivial(3), 2).size() == 10);
  const auto po = pair_orbits(LocalGroup::cyclic(3), 3);
  CHECK(po.front().valency == 1);
  CHECK(po.front().representative.empty());
}

TEST_CASE("radial structure constants for S3 match BFS pair counting") {
  const int R = 4;
  const auto sc = intersection_numbers(LocalGroup::symmetric(3), R);
  const oracle::BallGraph g(3, 2 * R);
  for (int i = 0; i <= R; ++i)
    for (int j = 0; i + j <= R; ++j)
      for (int k = 0; k <= R; ++k) {
        const Word z = sphere(3, k).front();
        CHECK(sc.N(i, j, k) == oracle::radial_count(g, i, j, z));
      }
  CHECK(sc.N(1, 1, 0) == 3);
  CHECK(sc.N(1, 1, 2) == 1);
  CHECK(sc.N(1, 2, 1) == 2);
  CHECK_THROWS_AS(sc.N(3, 2, 1), OutOfBudget);
}

TEST_CASE("C3 structure constants match explicit orbit counting") {
  const int R = 3;
  const auto F = LocalGroup::cyclic(3);
  const auto sc = intersection_numbers(F, R);
  const OrbitOracle orb(F, 2 * R);
  const oracle::BallGraph g(3, R);
  const std::size_t n = sc.orbits().size();
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      if (sc.distance(static_cast<int>(i)) + sc.distance(static_cast<int>(j)) > static_cast<std::size_t>(R)) continue;
      for (std::size_t k = 0; k < n; ++k) {
        const Word& z = sc.orbits()[k].representative;
        std::int64_t count = 0;
        for (const Word& y : g.vertices)
          if (orb.label.at(y) == orb.label.at(sc.orbits()[i].representative) &&
              orb.pair(y, z) == orb.label.at(sc.orbits()[j].representative))
            ++count;
        CHECK(sc.N(static_cast<int>(i), static_cast<int>(j), static_cast<int>(k)) == count);
      }
    }
}

TEST_CASE("coherent configuration axioms") {
  for (const auto& F : {LocalGroup::symmetric(3), LocalGroup::cyclic(3), LocalGroup::trivial(3)}) {
    const int R = 4;
    const auto sc = intersection_numbers(F, R);
    const int n = static_cast<int>(sc.orbits().size());
    for (int j = 0; j < n; ++j)
      for (int k = 0; k < n; ++k) {
        CHECK(sc.N(0, j, k) == (j == k));
        CHECK(sc.N(j, 0, k) == (j == k));
      }
    for (int i = 0; i < n; ++i) {
      CHECK(sc.transpose(sc.transpose(i)) == i);
      CHECK(sc.valency(sc.transpose(i)) == sc.valency(i));
      for (int j = 0; j < n; ++j) {
        if (!sc.in_budget(i, j, 0)) continue;
        std::int64_t total = 0;
        for (int k = 0; k < n; ++k) total += sc.N(i, j, k) * static_cast<std::int64_t>(sc.valency(k));
        CHECK(total == static_cast<std::int64_t>(sc.valency(i) * sc.valency(j)));
        CHECK(sc.N(i, j, 0) == (sc.transpose(i) == j ? static_cast<std::int64_t>(sc.valency(i)) : 0));
      }
    }
  }
}

TEST_CASE("representative independence at every orbit member") {
  const auto F = LocalGroup::cyclic(3);
  const auto sc = intersection_numbers(F, 4);
  const int n = static_cast<int>(sc.orbits().size());
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) {
      if (!sc.in_budget(i, j, 0)) continue;
      for (int k = 0; k < n; ++k)
        for (const Word& z : k_orbit(F, sc.orbits()[static_cast<std::size_t>(k)].representative))
          CHECK(intersection_number_at(F, sc.orbits()[static_cast<std::size_t>(i)].representative,
                                       sc.orbits()[static_cast<std::size_t>(j)].representative, z) == sc.N(i, j, k));
    }
}

TEST_CASE("convolution") {
  const auto sc = intersection_numbers(LocalGroup::cyclic(3), 6);
  const int n = static_cast<int>(sc.orbits().size());
  // Associativity on small indicators.
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b)
      for (int c = 0; c < n; ++c) {
        if (sc.distance(a) + sc.distance(b) + sc.distance(c) > 6) continue;
        const auto A = KernelFunction::indicator(a), B = KernelFunction::indicator(b),
                   C = KernelFunction::indicator(c);
        CHECK(convolve(convolve(A, B, sc), C, sc) == convolve(A, convolve(B, C, sc), sc));
      }
  const auto one = KernelFunction::indicator(0);
  const auto x = KernelFunction::indicator(n - 1);
  CHECK(convolve(one, x, sc) == x);
  const auto far = KernelFunction::indicator(n - 1);
  CHECK_THROWS_AS(convolve(far, far, sc), OutOfBudget);
}

TEST_CASE("commutativity reports") {
  const auto s3 = commutativity_report(LocalGroup::symmetric(3), 4);
  CHECK(s3.commutative);
  CHECK(s3.radius == 4);
  const auto c3 = commutativity_report(LocalGroup::cyclic(3), 4);
  CHECK_FALSE(c3.commutative);
  CHECK(c3.n_ij != c3.n_ji);
  const auto sc = intersection_numbers(LocalGroup::cyclic(3), 4);
  CHECK(sc.N(c3.i, c3.j, c3.k) == c3.n_ij);
  CHECK(sc.N(c3.j, c3.i, c3.k) == c3.n_ji);
  CHECK_THROWS_AS(commutativity_report(LocalGroup::cyclic(3), 1), InputError);
}

#include "doctest.h"
#include "forge/errors.hpp"
#include "forge/gelfand.hpp"
#include "forge/group.hpp"
#include "forge/hecke.hpp"
#include "forge/local_group.hpp"
#include <json.hpp>
#include "oracles.hpp"

using namespace forge;

TEST_CASE("strong transitivity verdicts") {
  const auto s3 = strong_transitivity_verdict(LocalGroup::symmetric(3), 3);
  CHECK(s3.two_transitive_proxy);
  CHECK(s3.st_boundary);
  CHECK(s3.fixed_ends.empty());
  const auto c3 = strong_transitivity_verdict(LocalGroup::cyclic(3), 3);
  CHECK_FALSE(c3.two_transitive_proxy);
  CHECK_FALSE(c3.st_boundary);
  CHECK(c3.growth.trend == GrowthReport::Trend::Growing);
}

TEST_CASE("no witness for S3") {
  const auto w = find_witness(LocalGroup::symmetric(3), 8);
  CHECK_FALSE(w.witness.has_value());
  CHECK_FALSE(w.reason.empty());
}

TEST_CASE("C3 witness is certified at the vertex level") {
  const auto F = LocalGroup::cyclic(3);
  const auto search = find_witness(F, 6);
  REQUIRE(search.witness.has_value());
  const WitnessPair& w = *search.witness;
  CHECK(w.alpha_class.hyperbolic());
  CHECK(w.beta_class.hyperbolic());
  CHECK(w.alpha(Word{}) == w.alpha_x0);
  CHECK(w.beta(Word{}) == w.beta_x0);
  CHECK((w.alpha * w.beta)(Word{}) == w.alphabeta_x0);

  // Independent check with explicitly enumerated K: alpha beta x0 is not of
  // the form beta' y with y in K alpha x0, beta' in K beta K. Equivalently the
  // pair (x0, alpha beta x0) is not a concatenation of the two orbit types in
  // the opposite order.
  const int R = static_cast<int>(w.alpha_x0.size() + w.beta_x0.size());
  const auto n = evaluate_noncommutativity(w, F);
  CHECK(n.first >= 1);
  CHECK(n.second == 0);
  const auto sc = intersection_numbers(F, R);
  CHECK(evaluate_noncommutativity(w, sc) == n);

  // Brute force over the ball: count y with (x0,y) ~ (x0, alpha x0) and
  // (y, z) ~ (x0, beta x0) and vice versa, orbits from the explicit oracle.
  std::map<Word, int> label;
  int next = 0;
  for (int r = 0; r <= 2 * R; ++r)
    for (const auto& orbit : oracle::orbits_on_sphere(F, r)) {
      for (const Word& u : orbit) label[u] = next;
      ++next;
    }
  auto pair_label = [&](const Word& y, const Word& z) {
    Word t = reversed(y);
    t.insert(t.end(), z.begin(), z.end());
    return label.at(reduce(t));
  };
  const Word& z = w.alphabeta_x0;
  std::int64_t ab = 0, ba = 0;
  for (const Word& y : ball(3, R)) {
    const int ly = label.at(y);
    if (ly == label.at(w.alpha_x0) && pair_label(y, z) == label.at(w.beta_x0)) ++ab;
    if (ly == label.at(w.beta_x0) && pair_label(y, z) == label.at(w.alpha_x0)) ++ba;
  }
  CHECK(ab == n.first);
  CHECK(ba == n.second);
}

TEST_CASE("witness for the trivial group") {
  const auto search = find_witness(LocalGroup::trivial(3), 6);
  REQUIRE(search.witness.has_value());
  CHECK(evaluate_noncommutativity(*search.witness, LocalGroup::trivial(3)).second == 0);
}

TEST_CASE("main report is consistent and serializes") {
  for (const auto& F : {LocalGroup::symmetric(3), LocalGroup::cyclic(3), LocalGroup::trivial(3)}) {
    const auto v = main_theorem_report(F, 3);
    CHECK(v.consistent);
    const auto doc = nlohmann::json::parse(verdict_to_json(v));
    CHECK(doc.at("consistent").get<bool>());
    CHECK(doc.contains("orbit_counts"));
    CHECK(doc.contains("st_boundary"));
    CHECK(doc.contains("hecke_verdict"));
  }
  CHECK(main_theorem_report(LocalGroup::trivial(3), 3).k_trivial);
  CHECK_THROWS_AS(main_theorem_report(LocalGroup::cyclic(3), 2), InputError);
}

#include <random>
#include <thread>

#include "doctest.h"
#include "forge/errors.hpp"
#include "forge/local_group.hpp"
#include "forge/portrait.hpp"
#include "oracles.hpp"

using namespace forge;

namespace {

// g is an automorphism on the ball: adjacency preserved, injective.
void check_automorphism(const Portrait& g, int radius) {
  const auto vs = ball(g.degree(), radius);
  std::set<Word> images;
  for (const Word& v : vs) {
    images.insert(g(v));
    for (int c = 0; c < g.degree(); ++c) {
      const Word w = step(v, static_cast<Color>(c));
      CHECK(distance(g(v), g(w)) == 1);
    }
  }
  CHECK(images.size() == vs.size());
}

}  // namespace

TEST_CASE("translations") {
  const Portrait t = Portrait::translation(3, Word{0, 1});
  CHECK(t(Word{}) == Word{0, 1});
  CHECK(t(Word{1}) == Word{0});
  CHECK(t(Word{2}) == Word{0, 1, 2});
  CHECK(t.local(Word{2, 0}).is_identity());
  check_automorphism(t, 4);
}

TEST_CASE("illegal exceptions are rejected") {
  std::map<Word, Perm> ex{{Word{}, Perm::parse("1 2 0", 3)}, {Word{0}, Perm::identity(3)}};
  CHECK_THROWS_AS(Portrait::basic(3, {}, ex, CompletionRule::transposition(3)), IllegalPortrait);
  CHECK_THROWS_AS(Portrait::basic(3, {}, {{Word{0, 0}, Perm::identity(3)}}, CompletionRule::transposition(3)),
                  IllegalPortrait);
}

TEST_CASE("group laws on random elements of U(S3) and U(C3)") {
  std::mt19937 rng(17);
  for (const auto& F : {LocalGroup::symmetric(3), LocalGroup::cyclic(3)}) {
    for (int t = 0; t < 25; ++t) {
      const Portrait g = oracle::random_element(F, rng);
      const Portrait h = oracle::random_element(F, rng);
      const Portrait k = oracle::random_element(F, rng);
      check_automorphism(g, 3);
      const Portrait gi = g.inverse();
      for (const Word& v : ball(3, 4)) {
        CHECK(gi(g(v)) == v);
        CHECK(g(gi(v)) == v);
        CHECK(((g * h) * k)(v) == (g * (h * k))(v));
        CHECK((g * h)(v) == g(h(v)));
        CHECK(g.pow(3)(v) == g(g(g(v))));
        CHECK(g.pow(-2)(v) == gi(gi(v)));
        CHECK(g.pow(0)(v) == v);
      }
    }
  }
}

TEST_CASE("end images match truncation of vertex images") {
  std::mt19937 rng(5);
  const auto F = LocalGroup::symmetric(3);
  const auto ends = enumerate_ends(3, 2, 3);
  for (int t = 0; t < 15; ++t) {
    const Portrait g = oracle::random_element(F, rng);
    for (std::size_t i = 0; i < ends.size(); i += 7) {
      const TreeEnd img = g(ends[i]);
      // g maps the ray to a ray; deep enough vertices agree with the image end
      // up to a bounded discrepancy at the start.
      const std::size_t n = 40;
      const Word far = g(ends[i].truncate(n));
      CHECK(agreement_depth(img, far) + 2 * g.base_image().size() + 2 >= n);
    }
  }
}

TEST_CASE("concurrent evaluation is consistent") {
  std::mt19937 rng(23);
  const auto F = LocalGroup::symmetric(3);
  const Portrait g = oracle::random_element(F, rng) * oracle::random_element(F, rng);
  const auto vs = ball(3, 6);
  std::vector<Word> serial;
  {
    const Portrait fresh = g * Portrait::identity(3);
    for (const auto& v : vs) serial.push_back(fresh(v));
  }
  std::vector<std::thread> threads;
  std::vector<int> ok(4, 1);
  for (int t = 0; t < 4; ++t)
    threads.emplace_back([&, t] {
      for (std::size_t i = 0; i < vs.size(); ++i)
        if (g(vs[(i * (t + 1)) % vs.size()]) != serial[(i * (t + 1)) % vs.size()]) ok[static_cast<std::size_t>(t)] = 0;
    });
  for (auto& th : threads) th.join();
  for (int v : ok) CHECK(v == 1);
}

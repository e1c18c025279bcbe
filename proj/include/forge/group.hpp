#pragma once

// The universal group U(F) of a local group F: legality checks, the action of
// the vertex stabilizer K on words, orbit tables, transporters, and the
// finite-depth proxies for transitivity on ends.
//
// K acts on a word c1..cn by choosing s0 in F for the first letter and then,
// at each later position, any s in F with s(c_i) = e_i (the image already
// assigned to the incoming edge). K-orbits are therefore read off from F
// alone; K itself is never enumerated.

#include <cstddef>
#include <optional>
#include <string>
#include <unordered_map>
#include <vector>

#include "forge/local_group.hpp"
#include "forge/portrait.hpp"
#include "forge/tree.hpp"
#include "forge/word.hpp"

namespace forge {

bool check_legal(const Portrait& g, const LocalGroup& F, std::size_t radius);

struct StabilizerElement {
  Portrait portrait;
  std::size_t certified_radius = 0;
};

// IllegalPortrait unless g fixes x0 and is legal for F to the given radius.
StabilizerElement certify_stabilizer_element(const Portrait& g, const LocalGroup& F, std::size_t radius);

// Lexicographically least word in the K-orbit of w.
Word canonical_word(const LocalGroup& F, const Word& w);
std::size_t k_orbit_size(const LocalGroup& F, const Word& w);
std::vector<Word> k_orbit(const LocalGroup& F, const Word& w);  // sorted

struct OrbitClass {
  Word representative;
  std::size_t size = 0;

  bool operator==(const OrbitClass&) const = default;
};

std::vector<OrbitClass> k_orbits_on_sphere(const LocalGroup& F, int n);

// K-orbits on the radius-R ball, which for U(F) are also the G-orbits on the
// pairs (x0, v), with valency = orbit size.
class OrbitTable {
 public:
  OrbitTable() = default;
  OrbitTable(int degree, std::string generator_hash, int radius, std::vector<OrbitClass> classes,
             std::vector<OrbitClass> pair_classes);

  int degree() const { return degree_; }
  const std::string& generator_hash() const { return hash_; }
  int radius() const { return radius_; }
  const std::vector<OrbitClass>& classes() const { return classes_; }  // ordered by (length, word)
  const std::vector<OrbitClass>& pair_classes() const { return pair_classes_; }

  std::vector<std::size_t> counts() const;  // per sphere 0..R
  std::vector<OrbitClass> sphere(int n) const;
  // Index into classes() of a canonical word, or -1.
  int class_id(const Word& canonical) const;

  bool operator==(const OrbitTable& o) const {
    return degree_ == o.degree_ && hash_ == o.hash_ && radius_ == o.radius_ && classes_ == o.classes_ &&
           pair_classes_ == o.pair_classes_;
  }

 private:
  int degree_ = 0;
  std::string hash_;
  int radius_ = 0;
  std::vector<OrbitClass> classes_;
  std::vector<OrbitClass> pair_classes_;
  std::unordered_map<Word, int, WordHash> index_;
};

OrbitTable build_orbit_table(const LocalGroup& F, int radius);

struct GrowthReport {
  enum class Trend { Stabilized, Growing, Inconclusive };

  std::vector<std::size_t> counts;  // n = 0..R
  Trend trend = Trend::Inconclusive;
  int window_low = 0;  // the verdict looks at spheres window_low..R
  int radius = 0;
};

const char* trend_name(GrowthReport::Trend t);

// Orbit counts per sphere and a verdict on the window [R-2, R]. R >= 2.
GrowthReport orbit_count_growth(const LocalGroup& F, int R);

// Number of U(F)-orbits on ordered pairs of vertices at distance 2n whose
// midpoint is x0, i.e. K-orbits on pairs of depth-n words with distinct first letters.
std::size_t opposite_pair_orbit_count(const LocalGroup& F, int n);
bool two_transitivity_on_ends_proxy(const LocalGroup& F, int n);

// Color of the edge between adjacent vertices.
Color edge_color(const Word& a, const Word& b);

// Some k in K with k(src) = dst, or nothing if the words lie in different K-orbits.
std::optional<Portrait> k_transporter(const LocalGroup& F, const Word& src, const Word& dst);

// Some g in U(F) mapping the geodesic path src vertex-by-vertex onto dst.
// RadiusMismatch if the paths have different lengths.
std::optional<Portrait> transporter(const LocalGroup& F, const std::vector<Word>& src, const std::vector<Word>& dst);

// One element of K per generator of F (that generator at x0, F-completion below).
std::vector<Portrait> k_generators(const LocalGroup& F);
// Color translations for every ordered pair of distinct colors, plus k_generators.
std::vector<Portrait> generating_family(const LocalGroup& F);

std::vector<TreeEnd> fixed_end_check(const std::vector<Portrait>& generators, const std::vector<TreeEnd>& candidates);
std::vector<TreeEnd> fixed_end_check(const LocalGroup& F, const std::vector<TreeEnd>& candidates);

// The apartment with ends (10)^inf and (01)^inf through x0.
TreeApartment standard_apartment();

// Pigeonhole search for a type-preserving hyperbolic element of U(F) along a line.
// Labels are the F-classes of (incoming color, outgoing color) at each position.
PigeonholeResult find_hyperbolic_on_line(const LocalGroup& F, const TreeApartment& line, std::size_t budget,
                                         long start = 0);

}  // namespace forge

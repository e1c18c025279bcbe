#pragma once

// Rank-one geometry on the colored tree: apartments (bi-infinite geodesics
// between two ends), retractions based at an end, the Busemann cocycle,
// classification of automorphisms, and the constructions that produce
// hyperbolic elements from translated segments.

#include <cstdint>
#include <functional>
#include <optional>
#include <utility>
#include <vector>

#include "forge/portrait.hpp"
#include "forge/word.hpp"

namespace forge {

class TreeApartment {
 public:
  TreeApartment(TreeEnd end_minus, TreeEnd end_plus);

  const TreeEnd& end_minus() const { return minus_; }
  const TreeEnd& end_plus() const { return plus_; }
  // Coordinate 0 sits where the rays toward the two ends part.
  const Word& origin() const { return origin_; }

  Word vertex_at(long k) const;

  struct Projection {
    long coordinate;     // of the nearest point of the apartment
    std::size_t offset;  // distance from the vertex to that point
  };
  Projection project(const Word& x) const;
  bool contains(const Word& x) const { return project(x).offset == 0; }
  // +1 for end_plus, -1 for end_minus; InputError otherwise.
  int side(const TreeEnd& c) const;

 private:
  TreeEnd minus_;
  TreeEnd plus_;
  Word origin_;
};

struct IsometryClass {
  enum class Kind { Elliptic, Inversion, Hyperbolic };

  Kind kind = Kind::Elliptic;
  Word fixed_vertex;                             // Elliptic
  std::pair<Word, Word> fixed_edge;              // Inversion
  long length = 0;                               // Hyperbolic translation length
  std::optional<TreeApartment> axis;             // Hyperbolic: end_plus is attracting
  Word axis_point;                               // Hyperbolic: axis vertex nearest x0
  std::size_t certified_radius = 0;

  bool hyperbolic() const { return kind == Kind::Hyperbolic; }
  bool type_preserving() const { return kind == Kind::Elliptic || (kind == Kind::Hyperbolic && length % 2 == 0); }
};

const char* kind_name(IsometryClass::Kind k);

// Minimum displacement over the ball of the given radius, with an explicit
// certificate. Requires search_radius >= d(x0, g x0) + 2, else InsufficientRadius.
IsometryClass classify_isometry(const Portrait& g, std::size_t search_radius);
bool is_strongly_regular(const Portrait& g, std::size_t search_radius);

// Attracting and repelling ends of a hyperbolic g, given one axis vertex.
// The guess is read off a long orbit word and then verified exactly.
std::pair<TreeEnd, TreeEnd> axis_ends(const Portrait& g, const Word& axis_vertex, long length);

// rho_{a,c}: folds the tree onto a around c; restricted to a it is the identity.
long retraction(const TreeApartment& a, const TreeEnd& c, const Word& x);

// beta_c(g), positive when g pushes toward c. NotInStabilizer if g c != c.
long busemann_beta(const TreeApartment& a, const TreeEnd& c, const Portrait& g);

// g fixes some vertex of the ray [x0, c) within the radius. NotInStabilizer if
// g c != c; InsufficientRadius if beta = 0 but no fixed ray vertex is found.
bool in_Gc0(const Portrait& g, const TreeEnd& c, std::size_t search_radius);

// Certifies that h is hyperbolic from a geodesic segment and its image lying on
// one geodesic, shifted forward by l = d(seg[0], image[0]) > 0.
IsometryClass hyperbolic_from_segment(const Portrait& h, const std::vector<Word>& seg,
                                      const std::vector<Word>& image_seg);

// a^n(xi) for a hyperbolic a with the given classification.
TreeEnd iterate_on_end(const Portrait& a, const IsometryClass& cls, const TreeEnd& xi, long n);

// Length of [x0, a^n(x)] ∩ axis(a).
std::size_t segment_through_apartment(const Portrait& a, const IsometryClass& cls, const Word& x0, const Word& x,
                                      long n);

// Walks the positions start, start + step, ... of a line, labeling each. On
// the first label repeat whose transporter element is certified hyperbolic
// by hyperbolic_from_segment, returns it. BudgetExhausted after `budget` positions.
struct PigeonholeResult {
  Portrait element;
  IsometryClass cls;
  long first_position = 0;
  long second_position = 0;
  std::size_t positions_visited = 0;
};

using LabelOracle = std::function<std::int64_t(long position)>;
using TransporterOracle = std::function<std::optional<Portrait>(long from, long to)>;

PigeonholeResult pigeonhole_find_hyperbolic(const TreeApartment& line, const LabelOracle& labels,
                                            const TransporterOracle& transporter, std::size_t budget,
                                            long start = 0, long step = 2);

}  // namespace forge

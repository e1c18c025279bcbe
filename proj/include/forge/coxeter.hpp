#pragma once

// Affine Coxeter complexes of types A1~ and A2~ in exact coordinates.
//
// Model: A2~ lives on R^2 with positive root functionals f1(x,y) = x,
// f2(x,y) = y, f3 = f1 + f2, and walls {f_i = k} for integer k. Every point of
// the coweight lattice Z^2 is a special vertex. A1~ lives on R with the single
// functional f(x) = x and special vertices Z. This is one of several
// isomorphic presentations; nothing downstream depends on the choice beyond
// "functionals take integer values on special vertices".

#include <array>
#include <cstddef>
#include <cstdint>
#include <optional>
#include <set>
#include <utility>
#include <vector>

#include <Eigen/Core>

#include "forge/errors.hpp"
#include "forge/rational.hpp"

namespace forge::coxeter {

enum class AffineType { A1, A2 };

template <class Scalar = Rational>
using ApartmentVector = Eigen::Matrix<Scalar, Eigen::Dynamic, 1>;

template <class Scalar = Rational>
using FunctionalMatrix = Eigen::Matrix<Scalar, Eigen::Dynamic, Eigen::Dynamic>;

template <class Scalar = Rational>
struct RootSystem {
  AffineType type;
  FunctionalMatrix<Scalar> functionals;  // one row per positive root
  std::vector<ApartmentVector<Scalar>> coroot_translations;

  Eigen::Index rank() const { return functionals.cols(); }
  std::size_t num_roots() const { return static_cast<std::size_t>(functionals.rows()); }
};

template <class Scalar = Rational>
RootSystem<Scalar> root_system(AffineType type) {
  RootSystem<Scalar> rs{type, {}, {}};
  if (type == AffineType::A1) {
    rs.functionals.resize(1, 1);
    rs.functionals << Scalar(1);
    ApartmentVector<Scalar> t(1);
    t << Scalar(2);
    rs.coroot_translations.push_back(t);
  } else {
    rs.functionals.resize(3, 2);
    rs.functionals << Scalar(1), Scalar(0),
                      Scalar(0), Scalar(1),
                      Scalar(1), Scalar(1);
    ApartmentVector<Scalar> t1(2), t2(2);
    t1 << Scalar(2), Scalar(-1);
    t2 << Scalar(-1), Scalar(2);
    rs.coroot_translations = {t1, t2};
  }
  return rs;
}

template <class Scalar>
ApartmentVector<Scalar> make_vector(std::initializer_list<Scalar> coords) {
  ApartmentVector<Scalar> v(static_cast<Eigen::Index>(coords.size()));
  Eigen::Index i = 0;
  for (const auto& c : coords) v(i++) = c;
  return v;
}

inline ApartmentVector<Rational> point(std::initializer_list<Rational> coords) {
  return make_vector<Rational>(coords);
}

struct Wall {
  std::size_t root_index;
  std::int64_t level;

  auto operator<=>(const Wall&) const = default;
};

template <class Scalar>
ApartmentVector<Scalar> evaluate(const RootSystem<Scalar>& rs, const ApartmentVector<Scalar>& x) {
  if (x.size() != rs.rank()) throw InputError("vector dimension does not match root system rank");
  return rs.functionals * x;
}

template <class Scalar>
bool is_special_vertex(const ApartmentVector<Scalar>& v) {
  for (Eigen::Index i = 0; i < v.size(); ++i)
    if (!is_integral(v(i))) return false;
  return true;
}

// Coset of a special vertex modulo the translation subgroup of W
// (A1~: x mod 2; A2~: x + 2y mod 3). Translations in W preserve it.
template <class Scalar>
std::int64_t vertex_type(const RootSystem<Scalar>& rs, const ApartmentVector<Scalar>& v) {
  if (!is_special_vertex(v)) throw InputError("vertex_type: not a special vertex");
  auto mod = [](std::int64_t a, std::int64_t m) { return ((a % m) + m) % m; };
  if (rs.type == AffineType::A1) return mod(floor_to_int(v(0)), 2);
  return mod(floor_to_int(v(0)) + 2 * floor_to_int(v(1)), 3);
}

template <class Scalar>
bool in_translation_lattice(const RootSystem<Scalar>& rs, const ApartmentVector<Scalar>& v) {
  return is_special_vertex(v) && vertex_type(rs, v) == 0;
}

// Walls {f_i = k} met by the closed segment [seg_start, seg_end]. A wall through
// an endpoint counts; a family whose functional is constant along the segment
// contributes nothing (the segment is parallel to it).
template <class Scalar>
std::set<Wall> walls_crossed(const ApartmentVector<Scalar>& seg_start, const ApartmentVector<Scalar>& seg_end,
                             const RootSystem<Scalar>& rs) {
  if (seg_start == seg_end) throw DegenerateSegment("walls_crossed: equal endpoints");
  const ApartmentVector<Scalar> fa = evaluate(rs, seg_start);
  const ApartmentVector<Scalar> fb = evaluate(rs, seg_end);
  std::set<Wall> out;
  for (std::size_t i = 0; i < rs.num_roots(); ++i) {
    const auto idx = static_cast<Eigen::Index>(i);
    if (fa(idx) == fb(idx)) continue;
    const Scalar lo = fa(idx) < fb(idx) ? fa(idx) : fb(idx);
    const Scalar hi = fa(idx) < fb(idx) ? fb(idx) : fa(idx);
    for (std::int64_t k = ceil_to_int(lo); k <= floor_to_int(hi); ++k) out.insert(Wall{i, k});
  }
  return out;
}

template <class Scalar>
std::vector<std::size_t> walls_per_family(const std::set<Wall>& walls, const RootSystem<Scalar>& rs) {
  std::vector<std::size_t> counts(rs.num_roots(), 0);
  for (const auto& w : walls) ++counts.at(w.root_index);
  return counts;
}

template <class Scalar>
bool is_strongly_regular_translation(const ApartmentVector<Scalar>& v, const RootSystem<Scalar>& rs) {
  if (v.isZero()) throw DegenerateSegment("is_strongly_regular_translation: zero vector");
  const ApartmentVector<Scalar> f = evaluate(rs, v);
  for (Eigen::Index i = 0; i < f.size(); ++i)
    if (f(i) == Scalar(0)) return false;
  return true;
}

template <class Scalar>
struct StronglyRegularTranslation {
  ApartmentVector<Scalar> translation;
  std::pair<ApartmentVector<Scalar>, ApartmentVector<Scalar>> witness;  // special vertices 0 and v
};

// A translation of W whose axis lies in an open Weyl chamber. Tries the sum of
// the coroot translations first, then small lattice combinations.
template <class Scalar>
StronglyRegularTranslation<Scalar> construct_strongly_regular_translation(const RootSystem<Scalar>& rs) {
  const Eigen::Index n = rs.rank();
  ApartmentVector<Scalar> sum = ApartmentVector<Scalar>::Zero(n);
  for (const auto& t : rs.coroot_translations) sum += t;
  auto accept = [&](const ApartmentVector<Scalar>& v) {
    return !v.isZero() && is_strongly_regular_translation(v, rs);
  };
  ApartmentVector<Scalar> chosen;
  if (accept(sum)) {
    chosen = sum;
  } else {
    for (int a = 1; a <= 3 && chosen.size() == 0; ++a) {
      for (int b = -3; b <= 3 && chosen.size() == 0; ++b) {
        ApartmentVector<Scalar> v = Scalar(a) * rs.coroot_translations[0];
        if (rs.coroot_translations.size() > 1) v += Scalar(b) * rs.coroot_translations[1];
        if (accept(v)) chosen = v;
      }
    }
  }
  return {chosen, {ApartmentVector<Scalar>::Zero(n), chosen}};
}

template <class Scalar>
class Sector {
 public:
  // Throws InputError when the sign pattern describes an empty cone.
  Sector(ApartmentVector<Scalar> base, std::vector<int> sign_pattern, const RootSystem<Scalar>& rs)
      : base_(std::move(base)), signs_(std::move(sign_pattern)) {
    if (base_.size() != rs.rank()) throw InputError("Sector: base dimension mismatch");
    if (signs_.size() != rs.num_roots()) throw InputError("Sector: one sign per positive root required");
    for (int s : signs_)
      if (s != 1 && s != -1) throw InputError("Sector: signs must be +1 or -1");
    if (!realizable(signs_, rs)) throw InputError("Sector: sign pattern describes an empty cone");
  }

  const ApartmentVector<Scalar>& base() const { return base_; }
  const std::vector<int>& signs() const { return signs_; }

  bool contains_in_interior(const ApartmentVector<Scalar>& x, const RootSystem<Scalar>& rs) const {
    const ApartmentVector<Scalar> f = evaluate(rs, ApartmentVector<Scalar>(x - base_));
    for (std::size_t i = 0; i < signs_.size(); ++i) {
      const Scalar value = Scalar(signs_[i]) * f(static_cast<Eigen::Index>(i));
      if (!(value > Scalar(0))) return false;
    }
    return true;
  }

  Sector opposite(const RootSystem<Scalar>& rs) const {
    std::vector<int> flipped(signs_);
    for (int& s : flipped) s = -s;
    return Sector(base_, std::move(flipped), rs);
  }

  // Every open chamber of the A1~ and A2~ arrangements contains an integer
  // direction with coordinates in [-2, 2], so scanning that box is exact here.
  static bool realizable(const std::vector<int>& signs, const RootSystem<Scalar>& rs) {
    const Eigen::Index n = rs.rank();
    std::vector<int> coords(static_cast<std::size_t>(n), -2);
    while (true) {
      ApartmentVector<Scalar> d(n);
      for (Eigen::Index i = 0; i < n; ++i) d(i) = Scalar(coords[static_cast<std::size_t>(i)]);
      const ApartmentVector<Scalar> f = rs.functionals * d;
      bool ok = true;
      for (std::size_t i = 0; i < signs.size() && ok; ++i)
        ok = Scalar(signs[i]) * f(static_cast<Eigen::Index>(i)) > Scalar(0);
      if (ok) return true;
      std::size_t k = 0;
      while (k < coords.size() && coords[k] == 2) coords[k++] = -2;
      if (k == coords.size()) return false;
      ++coords[k];
    }
  }

 private:
  ApartmentVector<Scalar> base_;
  std::vector<int> signs_;
};

// True iff v1 and v2 sit in the interiors of two opposite sectors, i.e. the
// line through them meets every wall family transversally.
template <class Scalar>
bool opposite_sector_criterion(const ApartmentVector<Scalar>& v1, const ApartmentVector<Scalar>& v2,
                               const RootSystem<Scalar>& rs) {
  if (!is_special_vertex(v1) || !is_special_vertex(v2))
    throw InputError("opposite_sector_criterion: arguments must be special vertices");
  if (v1 == v2) throw DegenerateSegment("opposite_sector_criterion: equal vertices");
  return is_strongly_regular_translation(ApartmentVector<Scalar>(v2 - v1), rs);
}

// The pair of opposite sectors based at the midpoint of [v1, v2] that contain
// v2 and v1 in their interiors. Requires opposite_sector_criterion(v1, v2).
template <class Scalar>
std::pair<Sector<Scalar>, Sector<Scalar>> separating_sectors(const ApartmentVector<Scalar>& v1,
                                                             const ApartmentVector<Scalar>& v2,
                                                             const RootSystem<Scalar>& rs) {
  if (!opposite_sector_criterion(v1, v2, rs)) throw InputError("separating_sectors: line is singular");
  const ApartmentVector<Scalar> mid = (v1 + v2) / Scalar(2);
  const ApartmentVector<Scalar> f = evaluate(rs, ApartmentVector<Scalar>(v2 - v1));
  std::vector<int> signs;
  for (Eigen::Index i = 0; i < f.size(); ++i) signs.push_back(f(i) > Scalar(0) ? 1 : -1);
  Sector<Scalar> forward(mid, signs, rs);
  return {forward, forward.opposite(rs)};
}

}  // namespace forge::coxeter

#pragma once

// The orbit algebra of (U(F), K): basis = G-orbits on vertex pairs, product
// given by intersection numbers
//   N_ij^k = #{ y : (x, y) in O_i, (y, z) in O_j }  for any (x, z) in O_k,
// which is the convolution of double-coset indicators with mu(K) = 1.
//
// U(F) is vertex-transitive for every F (the color translations
// w -> reduce(b.w) have trivial local action), so pair orbits are exactly
// the K-orbits on the ball around x0.

#include <array>
#include <cstdint>
#include <map>
#include <vector>

#include "forge/group.hpp"
#include "forge/rational.hpp"

namespace forge {

struct PairOrbit {
  int id = 0;
  Word representative;  // the pair is (x0, representative)
  std::size_t valency = 0;
  std::size_t distance = 0;
};

// Ids sorted by (distance, representative); id 0 is the diagonal.
std::vector<PairOrbit> pair_orbits(const LocalGroup& F, int R);

class StructureConstants {
 public:
  using Key = std::array<int, 3>;

  StructureConstants(const LocalGroup& F, int radius_budget);

  int radius_budget() const { return radius_; }
  const std::vector<PairOrbit>& orbits() const { return orbits_; }
  const std::map<Key, std::int64_t>& entries() const { return tensor_; }  // nonzero entries only

  // OutOfBudget unless d(i) + d(j) <= R and d(k) <= R.
  std::int64_t N(int i, int j, int k) const;
  bool in_budget(int i, int j, int k) const;
  int transpose(int i) const { return transpose_.at(static_cast<std::size_t>(i)); }
  // Orbit id of the pair (x0, v); OutOfBudget beyond the radius.
  int orbit_of(const Word& v) const;
  std::size_t distance(int i) const { return orbits_.at(static_cast<std::size_t>(i)).distance; }
  std::size_t valency(int i) const { return orbits_.at(static_cast<std::size_t>(i)).valency; }

 private:
  const LocalGroup* group_;
  int radius_;
  std::vector<PairOrbit> orbits_;
  std::map<Word, int> id_of_;
  std::vector<int> transpose_;
  std::map<Key, std::int64_t> tensor_;
};

StructureConstants intersection_numbers(const LocalGroup& F, int R);

// #{ y : (x0, y) in O_i, (y, z) in O_j } for one explicit z, by direct count
// over y with d(x0, y) = d(i). Used to cross-check representative independence.
std::int64_t intersection_number_at(const LocalGroup& F, const Word& rep_i, const Word& rep_j, const Word& z);

struct KernelFunction {
  std::map<int, Rational> coefficients;

  static KernelFunction indicator(int orbit);
  std::size_t support_radius(const StructureConstants& sc) const;
  Rational operator()(int orbit) const;
  bool operator==(const KernelFunction& o) const;
};

KernelFunction convolve(const KernelFunction& phi, const KernelFunction& psi, const StructureConstants& sc);

struct CommutativityReport {
  bool commutative = true;
  int radius = 0;
  // First asymmetry in (i, j, k) order, i < j, when not commutative.
  int i = -1, j = -1, k = -1;
  std::int64_t n_ij = 0, n_ji = 0;
};

CommutativityReport commutativity_report(const StructureConstants& sc);
CommutativityReport commutativity_report(const LocalGroup& F, int R);

}  // namespace forge

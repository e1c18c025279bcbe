#pragma once

// Three independent readings of one dichotomy for (G, K) = (U(F), stabilizer of x0):
// strong transitivity on ends (finite-depth proxies), commutativity of the
// orbit algebra, and an explicit pair alpha, beta with alpha.beta outside
// K.beta.K.alpha.K. The report checks that all three land on the same side.

#include <optional>
#include <string>
#include <vector>

#include "forge/group.hpp"
#include "forge/hecke.hpp"
#include "forge/tree.hpp"

namespace forge {

struct StrongTransitivityVerdict {
  int depth = 0;
  std::size_t opposite_pair_orbits = 0;  // at depth `depth`
  bool two_transitive_proxy = false;
  GrowthReport growth;
  std::size_t fixed_end_candidates = 0;
  std::vector<TreeEnd> fixed_ends;
  bool st_boundary = false;
};

StrongTransitivityVerdict strong_transitivity_verdict(const LocalGroup& F, int R);

struct WitnessPair {
  Portrait a, b;          // the hyperbolic elements found by pigeonhole
  long m = 0, n = 0;      // alpha = a^m, beta = b^n
  Portrait alpha, beta;
  IsometryClass alpha_class, beta_class;
  std::size_t shadow_depth = 0;  // r: first depth where K-shadows of the ends of A miss a word
  Word uncovered_word;           // canonical word outside those shadows
  TreeEnd target_end;            // attracting end of b lies in the cone of uncovered_word
  Word alpha_x0, beta_x0, alphabeta_x0;
  // Certificate: canonical K-class of alpha.beta.x0 and the K-classes of
  // beta.y for y in K.alpha.x0; the former is not among the latter.
  Word target_class;
  std::vector<Word> forbidden_classes;
};

struct WitnessSearch {
  std::optional<WitnessPair> witness;
  int budget = 0;
  std::string reason;  // why nothing was returned
  std::size_t pairs_tried = 0;
};

WitnessSearch find_witness(const LocalGroup& F, int budget);

// (phi*psi, psi*phi) at the orbit of (x0, alpha.beta.x0), phi = 1_{K alpha K}, psi = 1_{K beta K}.
std::pair<std::int64_t, std::int64_t> evaluate_noncommutativity(const WitnessPair& w, const StructureConstants& sc);
// Same values by direct counting, without a precomputed tensor.
std::pair<std::int64_t, std::int64_t> evaluate_noncommutativity(const WitnessPair& w, const LocalGroup& F);

struct Verdict {
  int degree = 0;
  std::string generator_hash;
  std::vector<std::string> generators;
  bool k_trivial = false;  // F = {1}: K is trivial and the algebra is the full pair algebra
  int depth = 0;
  StrongTransitivityVerdict st;
  CommutativityReport hecke;
  WitnessSearch witness;
  std::optional<std::pair<std::int64_t, std::int64_t>> witness_values;
  bool consistent = false;
};

Verdict main_theorem_report(const LocalGroup& F, int R);

std::string verdict_to_json(const Verdict& v);

}  // namespace forge

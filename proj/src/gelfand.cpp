#include "forge/gelfand.hpp"

#include <set>

#include <json.hpp>

#include "forge/errors.hpp"

namespace forge {

StrongTransitivityVerdict strong_transitivity_verdict(const LocalGroup& F, int R) {
  if (R < 3) throw InputError("strong_transitivity_verdict needs R >= 3");
  StrongTransitivityVerdict v;
  v.depth = R;
  v.opposite_pair_orbits = opposite_pair_orbit_count(F, R);
  v.two_transitive_proxy = v.opposite_pair_orbits == 1;
  v.growth = orbit_count_growth(F, R);
  const auto candidates = enumerate_ends(F.degree(), 2, 3);
  v.fixed_end_candidates = candidates.size();
  v.fixed_ends = fixed_end_check(F, candidates);
  v.st_boundary = v.two_transitive_proxy;
  return v;
}

namespace {

// Shortest cyclically reduced word p, then least, with w a prefix of p^inf.
Word periodic_extension(const Word& w, int degree) {
  for (int len = 2; len <= static_cast<int>(w.size()) + 2; ++len)
    for (const Word& p : sphere(degree, len)) {
      if (p.front() == p.back()) continue;
      bool ok = true;
      for (std::size_t i = 0; i < w.size() && ok; ++i) ok = w[i] == p[i % p.size()];
      if (ok) return p;
    }
  throw std::logic_error("periodic_extension: no period found");
}

}  // namespace

WitnessSearch find_witness(const LocalGroup& F, int budget) {
  WitnessSearch out;
  out.budget = budget;
  if (budget <= 0) {
    out.reason = "budget exhausted before any search (budget " + std::to_string(budget) + ")";
    return out;
  }
  if (two_transitivity_on_ends_proxy(F, 3)) {
    out.reason = "F acts 2-transitively on depth-3 opposite pairs: strongly transitive side, no witness exists";
    return out;
  }
  const std::size_t pig_budget = 2 * static_cast<std::size_t>(F.pair_class_count()) + 2;

  WitnessPair w;
  const TreeApartment A = standard_apartment();
  try {
    w.a = find_hyperbolic_on_line(F, A, pig_budget, 0).element;
  } catch (const BudgetExhausted& e) {
    out.reason = std::string("no hyperbolic element on the standard apartment: ") + e.what();
    return out;
  }

  // Smallest depth at which the K-shadow of the two ends of A misses a word.
  bool found = false;
  for (std::size_t r = 1; r <= 16 && !found; ++r) {
    const std::set<Word> shadow{canonical_word(F, A.end_plus().truncate(r)), canonical_word(F, A.end_minus().truncate(r))};
    for (const auto& cls : k_orbits_on_sphere(F, static_cast<int>(r))) {
      if (!shadow.count(cls.representative)) {
        w.shadow_depth = r;
        w.uncovered_word = cls.representative;
        found = true;
        break;
      }
    }
  }
  if (!found) {
    out.reason = "K-shadows of the standard apartment's ends cover every sphere up to depth 16";
    return out;
  }

  const Word period = periodic_extension(w.uncovered_word, F.degree());
  w.target_end = TreeEnd(Word{}, period);
  const TreeApartment line(TreeEnd(Word{}, reversed(period)), w.target_end);
  try {
    w.b = find_hyperbolic_on_line(F, line, pig_budget, static_cast<long>(w.shadow_depth)).element;
  } catch (const BudgetExhausted& e) {
    out.reason = std::string("no hyperbolic element toward the uncovered cone: ") + e.what();
    return out;
  }

  for (long s = 2; s <= 2L * budget + 2; ++s) {
    for (long m = 1; m < s; ++m) {
      const long n = s - m;
      Portrait alpha = w.a.pow(m), beta = w.b.pow(n);
      const Word ax = alpha.base_image(), bx = beta.base_image();
      if (static_cast<long>(ax.size() + bx.size()) > budget) continue;
      ++out.pairs_tried;
      const Word abx = alpha(bx);
      const Word target = canonical_word(F, abx);
      std::set<Word> forbidden;
      for (const Word& y : k_orbit(F, ax)) forbidden.insert(canonical_word(F, beta(y)));
      if (forbidden.count(target)) continue;
      IsometryClass ca = classify_isometry(alpha, ax.size() + 2);
      IsometryClass cb = classify_isometry(beta, bx.size() + 2);
      if (!ca.hyperbolic() || !cb.hyperbolic()) continue;
      w.m = m;
      w.n = n;
      w.alpha = std::move(alpha);
      w.beta = std::move(beta);
      w.alpha_class = std::move(ca);
      w.beta_class = std::move(cb);
      w.alpha_x0 = ax;
      w.beta_x0 = bx;
      w.alphabeta_x0 = abx;
      w.target_class = target;
      w.forbidden_classes.assign(forbidden.begin(), forbidden.end());
      out.witness = std::move(w);
      return out;
    }
  }
  out.reason = "no certified pair (m, n) with d(x0, alpha x0) + d(x0, beta x0) <= " + std::to_string(budget);
  return out;
}

std::pair<std::int64_t, std::int64_t> evaluate_noncommutativity(const WitnessPair& w, const StructureConstants& sc) {
  const int i = sc.orbit_of(w.alpha_x0), j = sc.orbit_of(w.beta_x0), k = sc.orbit_of(w.alphabeta_x0);
  return {sc.N(i, j, k), sc.N(j, i, k)};
}

std::pair<std::int64_t, std::int64_t> evaluate_noncommutativity(const WitnessPair& w, const LocalGroup& F) {
  const Word ri = canonical_word(F, w.alpha_x0), rj = canonical_word(F, w.beta_x0);
  return {intersection_number_at(F, ri, rj, w.alphabeta_x0), intersection_number_at(F, rj, ri, w.alphabeta_x0)};
}

Verdict main_theorem_report(const LocalGroup& F, int R) {
  if (R < 3) throw InputError("main_theorem_report needs R >= 3");
  Verdict v;
  v.degree = F.degree();
  v.generator_hash = F.hash();
  for (const auto& g : F.generators()) v.generators.push_back(g.str());
  v.k_trivial = F.order() == 1;
  v.depth = R;
  v.st = strong_transitivity_verdict(F, R);
  v.hecke = commutativity_report(F, R);
  v.witness = find_witness(F, 2 * R);
  if (v.witness.witness) v.witness_values = evaluate_noncommutativity(*v.witness.witness, F);

  const bool no_fixed_end = v.st.fixed_ends.empty();
  const bool st_side = v.st.st_boundary && v.st.growth.trend == GrowthReport::Trend::Stabilized && v.hecke.commutative &&
                       !v.witness.witness;
  const bool witness_ok = v.witness_values && v.witness_values->first >= 1 && v.witness_values->second == 0;
  const bool non_side = !v.st.st_boundary && v.st.growth.trend == GrowthReport::Trend::Growing && !v.hecke.commutative &&
                        v.witness.witness && witness_ok;
  v.consistent = no_fixed_end && (st_side || non_side);
  return v;
}

std::string verdict_to_json(const Verdict& v) {
  using ojson = nlohmann::ordered_json;
  ojson doc;
  doc["group"] = {{"degree", v.degree},
                  {"generator_hash", v.generator_hash},
                  {"generators", v.generators},
                  {"k_trivial", v.k_trivial}};
  doc["depth"] = v.depth;
  doc["st_boundary"] = v.st.st_boundary;
  doc["opposite_pair_orbits"] = v.st.opposite_pair_orbits;
  doc["orbit_counts"] = v.st.growth.counts;
  doc["orbit_trend"] = trend_name(v.st.growth.trend);
  doc["orbit_trend_window"] = {v.st.growth.window_low, v.st.growth.radius};
  ojson ends = ojson::array();
  for (const auto& e : v.st.fixed_ends) ends.push_back(e.str());
  doc["fixed_ends"] = {{"candidates", v.st.fixed_end_candidates}, {"fixed", ends}};
  ojson hecke;
  hecke["radius"] = v.hecke.radius;
  if (v.hecke.commutative) {
    hecke["verdict"] = "commutative_up_to_radius";
  } else {
    hecke["verdict"] = "noncommutative";
    hecke["asymmetry"] = {{"i", v.hecke.i}, {"j", v.hecke.j}, {"k", v.hecke.k}, {"N_ijk", v.hecke.n_ij}, {"N_jik", v.hecke.n_ji}};
  }
  doc["hecke_verdict"] = hecke;
  if (v.witness.witness) {
    const auto& w = *v.witness.witness;
    ojson wj;
    wj["budget"] = v.witness.budget;
    wj["m"] = w.m;
    wj["n"] = w.n;
    wj["a_length"] = w.alpha_class.length / std::max(1L, w.m);
    wj["alpha_length"] = w.alpha_class.length;
    wj["beta_length"] = w.beta_class.length;
    wj["shadow_depth"] = w.shadow_depth;
    wj["uncovered_word"] = to_string(w.uncovered_word);
    wj["target_end"] = w.target_end.str();
    wj["alpha_x0"] = to_string(w.alpha_x0);
    wj["beta_x0"] = to_string(w.beta_x0);
    wj["alphabeta_x0"] = to_string(w.alphabeta_x0);
    wj["target_class"] = to_string(w.target_class);
    ojson forb = ojson::array();
    for (const auto& f : w.forbidden_classes) forb.push_back(to_string(f));
    wj["beta_K_alpha_classes"] = forb;
    if (v.witness_values) wj["phi_psi_psi_phi"] = {v.witness_values->first, v.witness_values->second};
    doc["witness"] = wj;
  } else {
    doc["witness"] = nullptr;
    doc["witness_note"] = v.witness.reason;
  }
  doc["consistent"] = v.consistent;
  return doc.dump(2);
}

}  // namespace forge

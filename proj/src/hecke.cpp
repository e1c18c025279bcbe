#include "forge/hecke.hpp"

#include <stdexcept>

#include "forge/errors.hpp"

namespace forge {

std::vector<PairOrbit> pair_orbits(const LocalGroup& F, int R) {
  if (R < 0) throw InputError("pair_orbits: negative radius");
  const OrbitTable table = build_orbit_table(F, R);
  std::vector<PairOrbit> out;
  int id = 0;
  for (const auto& c : table.pair_classes()) out.push_back({id++, c.representative, c.size, c.representative.size()});
  return out;
}

std::int64_t intersection_number_at(const LocalGroup& F, const Word& rep_i, const Word& rep_j, const Word& z) {
  std::int64_t count = 0;
  for (const Word& y : k_orbit(F, rep_i))
    if (canonical_word(F, concat_reduce(reversed(y), z)) == rep_j) ++count;
  return count;
}

StructureConstants::StructureConstants(const LocalGroup& F, int radius_budget)
    : group_(&F), radius_(radius_budget), orbits_(pair_orbits(F, radius_budget)) {
  for (const auto& o : orbits_) id_of_.emplace(o.representative, o.id);
  for (const auto& o : orbits_) transpose_.push_back(id_of_.at(canonical_word(F, reversed(o.representative))));

  const auto ball_words = ball(F.degree(), radius_);
  std::vector<int> ball_class;
  for (const Word& y : ball_words) ball_class.push_back(id_of_.at(canonical_word(F, y)));

  auto count_at = [&](const Word& z) {
    std::map<std::pair<int, int>, std::int64_t> counts;
    for (std::size_t t = 0; t < ball_words.size(); ++t) {
      const Word& y = ball_words[t];
      const Word rel = concat_reduce(reversed(y), z);
      if (y.size() + rel.size() > static_cast<std::size_t>(radius_)) continue;
      ++counts[{ball_class[t], id_of_.at(canonical_word(F, rel))}];
    }
    return counts;
  };

  for (const auto& ok : orbits_) {
    auto counts = count_at(ok.representative);
    const auto members = k_orbit(F, ok.representative);
    if (members.size() > 1 && count_at(members.back()) != counts)
      throw std::logic_error("intersection numbers depend on the orbit representative");
    for (const auto& [ij, n] : counts) tensor_[{ij.first, ij.second, ok.id}] = n;
  }
}

bool StructureConstants::in_budget(int i, int j, int k) const {
  const auto n = orbits_.size();
  if (i < 0 || j < 0 || k < 0 || static_cast<std::size_t>(i) >= n || static_cast<std::size_t>(j) >= n ||
      static_cast<std::size_t>(k) >= n)
    return false;
  return distance(i) + distance(j) <= static_cast<std::size_t>(radius_);
}

std::int64_t StructureConstants::N(int i, int j, int k) const {
  if (!in_budget(i, j, k))
    throw OutOfBudget("N(" + std::to_string(i) + "," + std::to_string(j) + "," + std::to_string(k) +
                      ") lies outside radius budget " + std::to_string(radius_));
  auto it = tensor_.find({i, j, k});
  return it == tensor_.end() ? 0 : it->second;
}

int StructureConstants::orbit_of(const Word& v) const {
  if (v.size() > static_cast<std::size_t>(radius_)) throw OutOfBudget("vertex " + to_string(v) + " beyond radius budget");
  return id_of_.at(canonical_word(*group_, v));
}

StructureConstants intersection_numbers(const LocalGroup& F, int R) { return StructureConstants(F, R); }

KernelFunction KernelFunction::indicator(int orbit) {
  KernelFunction f;
  f.coefficients[orbit] = Rational(1);
  return f;
}

std::size_t KernelFunction::support_radius(const StructureConstants& sc) const {
  std::size_t r = 0;
  for (const auto& [i, c] : coefficients)
    if (c != Rational(0)) r = std::max(r, sc.distance(i));
  return r;
}

Rational KernelFunction::operator()(int orbit) const {
  auto it = coefficients.find(orbit);
  return it == coefficients.end() ? Rational(0) : it->second;
}

bool KernelFunction::operator==(const KernelFunction& o) const {
  auto nonzero = [](const KernelFunction& f) {
    std::map<int, Rational> m;
    for (const auto& [i, c] : f.coefficients)
      if (c != Rational(0)) m.emplace(i, c);
    return m;
  };
  return nonzero(*this) == nonzero(o);
}

KernelFunction convolve(const KernelFunction& phi, const KernelFunction& psi, const StructureConstants& sc) {
  for (const auto* f : {&phi, &psi})
    for (const auto& [i, c] : f->coefficients)
      if (i < 0 || static_cast<std::size_t>(i) >= sc.orbits().size()) throw OutOfBudget("kernel support outside the table");
  if (phi.support_radius(sc) + psi.support_radius(sc) > static_cast<std::size_t>(sc.radius_budget()))
    throw OutOfBudget("support radii exceed the structure-constant budget");
  KernelFunction out;
  for (const auto& [i, a] : phi.coefficients) {
    if (a == Rational(0)) continue;
    for (const auto& [j, b] : psi.coefficients) {
      if (b == Rational(0)) continue;
      auto lo = sc.entries().lower_bound({i, j, 0});
      for (auto it = lo; it != sc.entries().end() && it->first[0] == i && it->first[1] == j; ++it)
        out.coefficients[it->first[2]] += a * b * Rational(it->second);
    }
  }
  for (auto it = out.coefficients.begin(); it != out.coefficients.end();)
    it = it->second == Rational(0) ? out.coefficients.erase(it) : std::next(it);
  return out;
}

CommutativityReport commutativity_report(const StructureConstants& sc) {
  CommutativityReport rep;
  rep.radius = sc.radius_budget();
  const int n = static_cast<int>(sc.orbits().size());
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j) {
      if (!sc.in_budget(i, j, 0)) continue;
      for (int k = 0; k < n; ++k) {
        const auto a = sc.N(i, j, k), b = sc.N(j, i, k);
        if (a != b) {
          rep.commutative = false;
          rep.i = i, rep.j = j, rep.k = k, rep.n_ij = a, rep.n_ji = b;
          return rep;
        }
      }
    }
  return rep;
}

CommutativityReport commutativity_report(const LocalGroup& F, int R) {
  if (R < 2) throw InputError("commutativity_report needs R >= 2");
  return commutativity_report(StructureConstants(F, R));
}

}  // namespace forge

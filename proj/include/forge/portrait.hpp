#pragma once

// Tree automorphisms described by portraits: the image of x0 together with a
// local color permutation sigma_v at every vertex v, where g(v.c) = g(v).sigma_v(c).
// Legality: if v = u.c then sigma_v(c) = sigma_u(c), so the edge {u, v} has a
// single image color.
//
// A portrait is a small immutable expression (basic / composite / inverse)
// evaluated lazily, with a per-node memo that is safe to share across threads.

#include <cstddef>
#include <map>
#include <memory>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "forge/word.hpp"

namespace forge {

// Local permutation to use at a vertex whose incoming edge has color c and
// must be sent to color d. Entry (c, d) maps c to d.
class CompletionRule {
 public:
  CompletionRule() = default;
  // Identity when c == d, otherwise the transposition (c d).
  static CompletionRule transposition(int degree);
  static CompletionRule from_table(int degree, std::vector<Perm> table);

  int degree() const { return degree_; }
  const Perm& operator()(Color c, Color d) const { return table_[static_cast<std::size_t>(c) * degree_ + d]; }

 private:
  int degree_ = 0;
  std::vector<Perm> table_;
};

class Portrait {
 public:
  struct Node;

  Portrait() = default;

  static Portrait identity(int degree);
  // Throws IllegalPortrait if an exception breaks the legality cocycle.
  static Portrait basic(int degree, Word base, std::map<Word, Perm> exceptions, CompletionRule rule);
  // The "color translation" w -> reduce(b.w); all local permutations are trivial.
  static Portrait translation(int degree, const Word& b);

  int degree() const;
  const Word& base_image() const;
  bool is_identity_expression() const;

  Word operator()(const Word& v) const;
  TreeVertex operator()(const TreeVertex& v) const { return TreeVertex((*this)(v.word)); }
  Perm local(const Word& v) const;
  std::pair<Word, Perm> eval(const Word& v) const;

  // Exact image of an eventually periodic end. Throws InsufficientRadius if
  // the periodic regime is not reached within max_periods repetitions.
  TreeEnd operator()(const TreeEnd& xi, std::size_t max_periods = 512) const;

  // A finite key at v that determines every local permutation below v
  // (relative to v), when one is available.
  std::optional<Word> state(const Word& v) const;

  // (*this * other)(v) = (*this)(other(v))
  Portrait operator*(const Portrait& other) const;
  Portrait inverse() const;
  Portrait pow(long n) const;

  std::string describe() const;

 private:
  explicit Portrait(std::shared_ptr<const Node> node) : node_(std::move(node)) {}
  const Node& node() const;

  std::shared_ptr<const Node> node_;
};

}  // namespace forge

#pragma once

// A finite permutation group F on the colors {0..q}, stored as its full
// element table. Everything the universal group U(F) needs locally is
// precomputed here: completions and the lookup tables behind K-orbit
// canonical forms.

#include <string>
#include <string_view>
#include <vector>

#include "forge/portrait.hpp"
#include "forge/word.hpp"

namespace forge {

class LocalGroup {
 public:
  LocalGroup(int degree, std::vector<Perm> generators);

  static LocalGroup symmetric(int degree);
  static LocalGroup cyclic(int degree);
  static LocalGroup trivial(int degree);

  // {"degree": 3, "generators": ["1 2 0"]}; syntax errors carry line/column.
  static LocalGroup parse(std::string_view text);
  static LocalGroup load(const std::string& path);
  std::string to_json() const;

  int degree() const { return degree_; }
  const std::vector<Perm>& generators() const { return generators_; }
  const std::vector<Perm>& elements() const { return elements_; }  // lexicographic
  std::size_t order() const { return elements_.size(); }
  bool transitive() const { return transitive_; }
  bool two_transitive() const { return two_transitive_; }
  bool contains(const Perm& p) const;

  // Hex digest of the element table; equal groups hash equally whatever
  // generators were used to describe them.
  const std::string& hash() const { return hash_; }

  // Lexicographically least element sending c to d, if any.
  const Perm* least_mapping(Color c, Color d) const;
  const Perm* least_mapping(Color c1, Color d1, Color c2, Color d2) const;
  // F-completion: least_mapping(c, d) where it exists (always the identity for c == d).
  const CompletionRule& completion() const { return completion_; }

  // Tables for the K-action on words, K = stabilizer of x0 in U(F).
  Color least_in_orbit(Color c) const { return least_first_[c]; }
  // min { s(c2) : s in F, s(c) = e }
  Color least_next(Color c, Color c2, Color e) const { return least_next_[index(c, c2, e)]; }
  // { s(c2) : s in F, s(c) = e }, ascending
  const std::vector<Color>& next_options(Color c, Color c2, Color e) const { return options_[index(c, c2, e)]; }
  std::size_t orbit_size(Color c) const { return orbit_size_[c]; }

  // Class id of the ordered pair (a, b), a != b, under F; ids are dense and
  // ordered by least representative.
  int pair_class(Color a, Color b) const { return pair_class_[static_cast<std::size_t>(a) * degree_ + b]; }
  int pair_class_count() const { return pair_classes_; }

 private:
  std::size_t index(Color c, Color c2, Color e) const {
    return (static_cast<std::size_t>(c) * degree_ + c2) * degree_ + e;
  }

  int degree_;
  std::vector<Perm> generators_;
  std::vector<Perm> elements_;
  bool transitive_ = false;
  bool two_transitive_ = false;
  std::string hash_;
  CompletionRule completion_;
  std::vector<Color> least_first_;
  std::vector<Color> least_next_;
  std::vector<std::vector<Color>> options_;
  std::vector<std::size_t> orbit_size_;
  std::vector<int> pair_class_;
  int pair_classes_ = 0;
};

}  // namespace forge

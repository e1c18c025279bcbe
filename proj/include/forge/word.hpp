#pragma once

// Vertices of the (q+1)-regular tree with a legal edge coloring, encoded as
// non-backtracking color words read from the base vertex x0 (the empty word).

#include <compare>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <string>
#include <string_view>
#include <vector>

namespace forge {

using Color = std::uint8_t;
using Word = std::vector<Color>;

bool is_reduced(const Word& w);

// Free reduction in the free product of copies of Z/2: cancels "cc" pairs.
Word reduce(const Word& w);
Word concat_reduce(const Word& a, const Word& b);
Word reversed(Word w);

// Neighbor of w across the edge of color c.
Word step(const Word& w, Color c);

std::size_t common_prefix(const Word& a, const Word& b);
std::size_t distance(const Word& a, const Word& b);

// Vertices of the geodesic from a to b, both endpoints included.
std::vector<Word> geodesic(const Word& a, const Word& b);

// Digits, one per color ("012"); the empty word prints as "" (x0).
std::string to_string(const Word& w);
Word parse_word(std::string_view text, int degree);

// Non-backtracking words of length n (resp. <= n), lexicographic order.
std::vector<Word> sphere(int degree, int n);
std::vector<Word> ball(int degree, int n);
std::size_t sphere_size(int degree, int n);

struct TreeVertex {
  Word word;

  TreeVertex() = default;
  explicit TreeVertex(Word w);
  static TreeVertex parse(std::string_view text, int degree);

  std::size_t depth() const { return word.size(); }
  std::string str() const { return to_string(word); }

  auto operator<=>(const TreeVertex&) const = default;
};

struct WordHash {
  std::size_t operator()(const Word& w) const noexcept;
};

// A permutation of the colors {0..q} in one-line image notation.
class Perm {
 public:
  Perm() = default;
  explicit Perm(std::vector<Color> images);
  static Perm identity(int degree);
  static Perm transposition(int degree, Color a, Color b);
  static Perm parse(std::string_view text, int degree);  // "1 2 0"

  int degree() const { return static_cast<int>(img_.size()); }
  Color operator()(Color c) const { return img_[c]; }
  const std::vector<Color>& images() const { return img_; }
  bool is_identity() const;

  Perm inverse() const;
  // (a * b)(c) = a(b(c))
  friend Perm operator*(const Perm& a, const Perm& b);

  std::string str() const;

  auto operator<=>(const Perm&) const = default;

 private:
  std::vector<Color> img_;
};

struct PermHash {
  std::size_t operator()(const Perm& p) const noexcept { return WordHash{}(p.images()); }
};

// An eventually periodic end: prefix · period · period · ...
// Kept normalized: primitive period, prefix as short as possible.
class TreeEnd {
 public:
  TreeEnd() = default;
  TreeEnd(Word prefix, Word period);  // validates and normalizes
  static TreeEnd parse(std::string_view text, int degree);  // "PREFIX/PERIOD"

  const Word& prefix() const { return prefix_; }
  const Word& period() const { return period_; }

  Color letter(std::size_t i) const;
  Word truncate(std::size_t n) const;  // the vertex at distance n along the ray
  std::string str() const;

  auto operator<=>(const TreeEnd&) const = default;

 private:
  Word prefix_;
  Word period_;
};

// Length of the common prefix of two rays, capped at `cap` (equal ends return cap).
std::size_t agreement_depth(const TreeEnd& a, const TreeEnd& b, std::size_t cap = 1u << 16);
std::size_t agreement_depth(const TreeEnd& a, const Word& w);

// All normalized ends with |prefix| <= max_prefix and 2 <= |period| <= max_period.
std::vector<TreeEnd> enumerate_ends(int degree, int max_prefix, int max_period);

}  // namespace forge

template <>
struct std::hash<forge::TreeVertex> {
  std::size_t operator()(const forge::TreeVertex& v) const noexcept { return forge::WordHash{}(v.word); }
};

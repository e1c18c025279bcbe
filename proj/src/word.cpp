#include "forge/word.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>

#include "forge/errors.hpp"

namespace forge {

bool is_reduced(const Word& w) {
  for (std::size_t i = 1; i < w.size(); ++i)
    if (w[i] == w[i - 1]) return false;
  return true;
}

Word reduce(const Word& w) {
  Word out;
  out.reserve(w.size());
  for (Color c : w) {
    if (!out.empty() && out.back() == c)
      out.pop_back();
    else
      out.push_back(c);
  }
  return out;
}

Word concat_reduce(const Word& a, const Word& b) {
  Word out = a;
  for (Color c : b) {
    if (!out.empty() && out.back() == c)
      out.pop_back();
    else
      out.push_back(c);
  }
  return out;
}

Word reversed(Word w) {
  std::reverse(w.begin(), w.end());
  return w;
}

Word step(const Word& w, Color c) {
  Word out = w;
  if (!out.empty() && out.back() == c)
    out.pop_back();
  else
    out.push_back(c);
  return out;
}

std::size_t common_prefix(const Word& a, const Word& b) {
  const std::size_t n = std::min(a.size(), b.size());
  std::size_t i = 0;
  while (i < n && a[i] == b[i]) ++i;
  return i;
}

std::size_t distance(const Word& a, const Word& b) { return a.size() + b.size() - 2 * common_prefix(a, b); }

std::vector<Word> geodesic(const Word& a, const Word& b) {
  const std::size_t m = common_prefix(a, b);
  std::vector<Word> path;
  for (std::size_t len = a.size(); len > m; --len) path.emplace_back(a.begin(), a.begin() + static_cast<long>(len));
  for (std::size_t len = m; len <= b.size(); ++len) path.emplace_back(b.begin(), b.begin() + static_cast<long>(len));
  return path;
}

std::string to_string(const Word& w) {
  std::string s;
  s.reserve(w.size());
  for (Color c : w) s.push_back(static_cast<char>('0' + c));
  return s;
}

Word parse_word(std::string_view text, int degree) {
  Word w;
  for (char ch : text) {
    if (ch < '0' || ch > '9' || ch - '0' >= degree)
      throw InputError("bad color '" + std::string(1, ch) + "' in word \"" + std::string(text) + "\"");
    w.push_back(static_cast<Color>(ch - '0'));
  }
  if (!is_reduced(w)) throw InputError("word \"" + std::string(text) + "\" backtracks");
  return w;
}

std::size_t sphere_size(int degree, int n) {
  if (n == 0) return 1;
  std::size_t s = static_cast<std::size_t>(degree);
  for (int i = 1; i < n; ++i) s *= static_cast<std::size_t>(degree - 1);
  return s;
}

namespace {

void extend(int degree, int n, Word& cur, std::vector<Word>& out) {
  if (static_cast<int>(cur.size()) == n) {
    out.push_back(cur);
    return;
  }
  for (int c = 0; c < degree; ++c) {
    if (!cur.empty() && cur.back() == c) continue;
    cur.push_back(static_cast<Color>(c));
    extend(degree, n, cur, out);
    cur.pop_back();
  }
}

}  // namespace

std::vector<Word> sphere(int degree, int n) {
  std::vector<Word> out;
  out.reserve(sphere_size(degree, n));
  Word cur;
  extend(degree, n, cur, out);
  return out;
}

std::vector<Word> ball(int degree, int n) {
  std::vector<Word> out;
  for (int r = 0; r <= n; ++r) {
    auto s = sphere(degree, r);
    out.insert(out.end(), s.begin(), s.end());
  }
  return out;
}

TreeVertex::TreeVertex(Word w) : word(std::move(w)) {
  if (!is_reduced(word)) throw InputError("TreeVertex: word backtracks");
}

TreeVertex TreeVertex::parse(std::string_view text, int degree) { return TreeVertex(parse_word(text, degree)); }

std::size_t WordHash::operator()(const Word& w) const noexcept {
  std::size_t h = 1469598103934665603ull;
  for (Color c : w) {
    h ^= c + 1u;
    h *= 1099511628211ull;
  }
  return h ^ w.size();
}

Perm::Perm(std::vector<Color> images) : img_(std::move(images)) {
  std::vector<bool> seen(img_.size(), false);
  for (Color c : img_) {
    if (c >= img_.size() || seen[c]) throw InputError("Perm: not a permutation");
    seen[c] = true;
  }
}

Perm Perm::identity(int degree) {
  std::vector<Color> img(static_cast<std::size_t>(degree));
  std::iota(img.begin(), img.end(), Color{0});
  return Perm(std::move(img));
}

Perm Perm::transposition(int degree, Color a, Color b) {
  Perm p = identity(degree);
  std::swap(p.img_[a], p.img_[b]);
  return p;
}

Perm Perm::parse(std::string_view text, int degree) {
  std::istringstream in{std::string(text)};
  std::vector<Color> img;
  int v;
  while (in >> v) {
    if (v < 0 || v >= degree) throw InputError("Perm: image " + std::to_string(v) + " out of range");
    img.push_back(static_cast<Color>(v));
  }
  if (!in.eof()) throw InputError("Perm: unreadable \"" + std::string(text) + "\"");
  if (static_cast<int>(img.size()) != degree)
    throw InputError("Perm: expected " + std::to_string(degree) + " images in \"" + std::string(text) + "\"");
  return Perm(std::move(img));
}

bool Perm::is_identity() const {
  for (std::size_t i = 0; i < img_.size(); ++i)
    if (img_[i] != i) return false;
  return true;
}

Perm Perm::inverse() const {
  std::vector<Color> inv(img_.size());
  for (std::size_t i = 0; i < img_.size(); ++i) inv[img_[i]] = static_cast<Color>(i);
  Perm p;
  p.img_ = std::move(inv);
  return p;
}

Perm operator*(const Perm& a, const Perm& b) {
  std::vector<Color> out(b.img_.size());
  for (std::size_t i = 0; i < out.size(); ++i) out[i] = a.img_[b.img_[i]];
  Perm p;
  p.img_ = std::move(out);
  return p;
}

std::string Perm::str() const {
  std::string s;
  for (std::size_t i = 0; i < img_.size(); ++i) {
    if (i) s.push_back(' ');
    s += std::to_string(img_[i]);
  }
  return s;
}

TreeEnd::TreeEnd(Word prefix, Word period) : prefix_(std::move(prefix)), period_(std::move(period)) {
  if (period_.size() < 2) throw InputError("TreeEnd: period must have length >= 2");
  if (!is_reduced(prefix_) || !is_reduced(period_) || period_.front() == period_.back())
    throw InputError("TreeEnd: ray backtracks");
  if (!prefix_.empty() && prefix_.back() == period_.front()) throw InputError("TreeEnd: ray backtracks");

  const std::size_t n = period_.size();
  for (std::size_t d = 1; d < n; ++d) {
    if (n % d) continue;
    bool periodic = true;
    for (std::size_t i = d; i < n && periodic; ++i) periodic = period_[i] == period_[i - d];
    if (periodic) {
      period_.resize(d);
      break;
    }
  }
  while (!prefix_.empty() && prefix_.back() == period_.back()) {
    prefix_.pop_back();
    std::rotate(period_.rbegin(), period_.rbegin() + 1, period_.rend());
  }
}

TreeEnd TreeEnd::parse(std::string_view text, int degree) {
  const auto slash = text.find('/');
  if (slash == std::string_view::npos) throw InputError("end must be written PREFIX/PERIOD");
  return TreeEnd(parse_word(text.substr(0, slash), degree), parse_word(text.substr(slash + 1), degree));
}

Color TreeEnd::letter(std::size_t i) const {
  if (i < prefix_.size()) return prefix_[i];
  return period_[(i - prefix_.size()) % period_.size()];
}

Word TreeEnd::truncate(std::size_t n) const {
  Word w(n);
  for (std::size_t i = 0; i < n; ++i) w[i] = letter(i);
  return w;
}

std::string TreeEnd::str() const { return to_string(prefix_) + "/" + to_string(period_); }

std::size_t agreement_depth(const TreeEnd& a, const TreeEnd& b, std::size_t cap) {
  if (a == b) return cap;
  std::size_t i = 0;
  while (i < cap && a.letter(i) == b.letter(i)) ++i;
  return i;
}

std::size_t agreement_depth(const TreeEnd& a, const Word& w) {
  std::size_t i = 0;
  while (i < w.size() && a.letter(i) == w[i]) ++i;
  return i;
}

std::vector<TreeEnd> enumerate_ends(int degree, int max_prefix, int max_period) {
  std::vector<TreeEnd> out;
  std::vector<Word> periods;
  for (int len = 2; len <= max_period; ++len)
    for (auto& p : sphere(degree, len))
      if (p.front() != p.back()) periods.push_back(p);
  for (auto& prefix : ball(degree, max_prefix)) {
    for (auto& period : periods) {
      if (!prefix.empty() && prefix.back() == period.front()) continue;
      TreeEnd e(prefix, period);
      if (e.prefix() == prefix && e.period() == period) out.push_back(std::move(e));
    }
  }
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

}  // namespace forge

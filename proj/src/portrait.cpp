#include "forge/portrait.hpp"

#include <mutex>
#include <shared_mutex>
#include <unordered_map>
#include <unordered_set>

#include "forge/errors.hpp"

namespace forge {

CompletionRule CompletionRule::transposition(int degree) {
  std::vector<Perm> table;
  for (int c = 0; c < degree; ++c)
    for (int d = 0; d < degree; ++d)
      table.push_back(Perm::transposition(degree, static_cast<Color>(c), static_cast<Color>(d)));
  return from_table(degree, std::move(table));
}

CompletionRule CompletionRule::from_table(int degree, std::vector<Perm> table) {
  if (table.size() != static_cast<std::size_t>(degree * degree))
    throw InputError("CompletionRule: table must have degree^2 entries");
  for (int c = 0; c < degree; ++c)
    for (int d = 0; d < degree; ++d) {
      const Perm& p = table[static_cast<std::size_t>(c * degree + d)];
      if (p.degree() != degree || p(static_cast<Color>(c)) != d)
        throw InputError("CompletionRule: entry (" + std::to_string(c) + "," + std::to_string(d) + ") does not map c to d");
    }
  CompletionRule r;
  r.degree_ = degree;
  r.table_ = std::move(table);
  return r;
}

struct Portrait::Node {
  using Value = std::pair<Word, Perm>;

  int degree;
  Word base;

  explicit Node(int d) : degree(d) {}
  virtual ~Node() = default;

  Value eval(const Word& v) const {
    {
      std::shared_lock lock(mu_);
      auto it = memo_.find(v);
      if (it != memo_.end()) return it->second;
    }
    Value out = compute(v);
    std::unique_lock lock(mu_);
    if (memo_.size() > kMemoCap) memo_.clear();
    memo_.emplace(v, out);
    return out;
  }

  virtual Value compute(const Word& v) const = 0;
  virtual std::optional<Word> state(const Word& v) const = 0;
  virtual std::string describe() const = 0;
  virtual bool is_identity() const { return false; }

 private:
  static constexpr std::size_t kMemoCap = 1u << 18;
  mutable std::shared_mutex mu_;
  mutable std::unordered_map<Word, Value, WordHash> memo_;
};

namespace {

void append_perm(Word& key, const Perm& p) { key.insert(key.end(), p.images().begin(), p.images().end()); }

class BasicNode final : public Portrait::Node {
 public:
  BasicNode(int degree, Word base_image, std::map<Word, Perm> exceptions, CompletionRule rule)
      : Node(degree), exceptions_(std::move(exceptions)), rule_(std::move(rule)) {
    base = std::move(base_image);
    for (const auto& [key, perm] : exceptions_) {
      if (!is_reduced(key)) throw IllegalPortrait("exception vertex " + to_string(key) + " backtracks");
      if (perm.degree() != degree) throw IllegalPortrait("exception permutation has wrong degree");
      for (std::size_t len = 0; len < key.size(); ++len) inner_.insert(Word(key.begin(), key.begin() + static_cast<long>(len)));
    }
    identity_ = base.empty() && rule_.degree() == degree;
    for (const auto& [key, perm] : exceptions_) identity_ = identity_ && perm.is_identity();
  }

  Value compute(const Word& v) const override {
    Word image = base;
    Word prefix;
    Perm sigma = root_perm();
    bool inside = !exceptions_.empty();
    for (Color c : v) {
      if (c >= degree) throw InputError("color out of range");
      const Color d = sigma(c);
      image = step(image, d);
      prefix.push_back(c);
      const Perm* next = nullptr;
      if (inside) {
        auto it = exceptions_.find(prefix);
        if (it != exceptions_.end()) {
          if (it->second(c) != d)
            throw IllegalPortrait("local permutation at " + to_string(prefix) + " breaks the edge-color cocycle");
          next = &it->second;
        }
        inside = inner_.count(prefix) > 0;
      }
      sigma = next ? *next : rule_(c, d);
    }
    return {std::move(image), std::move(sigma)};
  }

  std::optional<Word> state(const Word& v) const override {
    if (v.empty() || inner_.count(v)) return std::nullopt;
    Word key;
    append_perm(key, eval(v).second);
    key.push_back(v.back());
    return key;
  }

  std::string describe() const override {
    std::string s = "basic(base=\"" + to_string(base) + "\"";
    for (const auto& [key, perm] : exceptions_) s += ", [" + to_string(key) + "]=" + perm.str();
    return s + ")";
  }

  bool is_identity() const override { return identity_ && exceptions_.empty(); }

 private:
  Perm root_perm() const {
    auto it = exceptions_.find(Word{});
    return it != exceptions_.end() ? it->second : Perm::identity(degree);
  }

  std::map<Word, Perm> exceptions_;
  std::unordered_set<Word, WordHash> inner_;  // proper prefixes of exception vertices
  CompletionRule rule_;
  bool identity_ = false;
};

class ComposeNode final : public Portrait::Node {
 public:
  ComposeNode(std::shared_ptr<const Node> outer, std::shared_ptr<const Node> inner)
      : Node(outer->degree), outer_(std::move(outer)), inner_(std::move(inner)) {
    base = outer_->eval(inner_->base).first;
  }

  Value compute(const Word& v) const override {
    auto [w1, s1] = inner_->eval(v);
    auto [w2, s2] = outer_->eval(w1);
    return {std::move(w2), s2 * s1};
  }

  std::optional<Word> state(const Word& v) const override {
    if (v.empty()) return std::nullopt;
    const Word hv = inner_->eval(v).first;
    if (common_prefix(hv, inner_->base) == hv.size()) return std::nullopt;
    auto sh = inner_->state(v);
    if (!sh) return std::nullopt;
    auto sg = outer_->state(hv);
    if (!sg) return std::nullopt;
    Word key = std::move(*sh);
    key.push_back(0xff);
    key.insert(key.end(), sg->begin(), sg->end());
    key.push_back(v.back());
    return key;
  }

  std::string describe() const override { return "(" + outer_->describe() + " * " + inner_->describe() + ")"; }

 private:
  std::shared_ptr<const Node> outer_;
  std::shared_ptr<const Node> inner_;
};

class InverseNode final : public Portrait::Node {
 public:
  explicit InverseNode(std::shared_ptr<const Node> g) : Node(g->degree), g_(std::move(g)) {
    // Pull x0 back along the geodesic from g(x0) to x0.
    Word u;
    Perm sigma = g_->eval(u).second;
    Word at = g_->base;
    while (!at.empty()) {
      const Color e = at.back();
      at.pop_back();
      u = step(u, sigma.inverse()(e));
      sigma = g_->eval(u).second;
    }
    base = std::move(u);
    root_inverse_ = sigma.inverse();
  }

  Value compute(const Word& w) const override {
    Word u = base;
    Perm tau = root_inverse_;
    for (Color e : w) {
      u = step(u, tau(e));
      tau = g_->eval(u).second.inverse();
    }
    return {std::move(u), std::move(tau)};
  }

  std::optional<Word> state(const Word& w) const override {
    if (w.empty() || common_prefix(w, g_->base) == w.size()) return std::nullopt;
    const Word u = eval(w).first;
    if (u.empty()) return std::nullopt;
    auto sg = g_->state(u);
    if (!sg) return std::nullopt;
    Word key = std::move(*sg);
    key.push_back(u.back());
    key.push_back(w.back());
    return key;
  }

  std::string describe() const override { return "inverse(" + g_->describe() + ")"; }

 private:
  std::shared_ptr<const Node> g_;
  Perm root_inverse_;
};

}  // namespace

Portrait Portrait::identity(int degree) {
  return Portrait(std::make_shared<BasicNode>(degree, Word{}, std::map<Word, Perm>{}, CompletionRule::transposition(degree)));
}

Portrait Portrait::basic(int degree, Word base, std::map<Word, Perm> exceptions, CompletionRule rule) {
  if (!is_reduced(base)) throw IllegalPortrait("base image backtracks");
  if (rule.degree() != degree) throw IllegalPortrait("completion rule has wrong degree");
  for (Color c : base)
    if (c >= degree) throw IllegalPortrait("base image color out of range");
  std::vector<Word> keys;
  for (const auto& kv : exceptions) keys.push_back(kv.first);
  auto node = std::make_shared<BasicNode>(degree, std::move(base), std::move(exceptions), std::move(rule));
  for (const auto& k : keys) node->eval(k);  // surfaces cocycle violations now
  return Portrait(std::move(node));
}

Portrait Portrait::translation(int degree, const Word& b) {
  std::map<Word, Perm> none;
  return basic(degree, reduce(b), std::move(none), CompletionRule::transposition(degree));
}

const Portrait::Node& Portrait::node() const {
  if (!node_) throw InputError("empty portrait");
  return *node_;
}

int Portrait::degree() const { return node().degree; }
const Word& Portrait::base_image() const { return node().base; }
bool Portrait::is_identity_expression() const { return node().is_identity(); }

Word Portrait::operator()(const Word& v) const { return node().eval(v).first; }
Perm Portrait::local(const Word& v) const { return node().eval(v).second; }
std::pair<Word, Perm> Portrait::eval(const Word& v) const { return node().eval(v); }
std::optional<Word> Portrait::state(const Word& v) const { return node().state(v); }

TreeEnd Portrait::operator()(const TreeEnd& xi, std::size_t max_periods) const {
  const Node& n = node();
  Word v = xi.prefix();
  std::map<Word, Word> seen;  // state -> image at the period boundary where it first appeared
  for (std::size_t j = 0; j <= max_periods; ++j) {
    if (!v.empty()) {
      Word img = n.eval(v).first;
      if (common_prefix(img, n.base) < img.size()) {
        if (auto key = n.state(v)) {
          auto it = seen.find(*key);
          if (it != seen.end()) {
            const Word& first = it->second;
            return TreeEnd(first, Word(img.begin() + static_cast<long>(first.size()), img.end()));
          }
          seen.emplace(std::move(*key), std::move(img));
        }
      }
    }
    v.insert(v.end(), xi.period().begin(), xi.period().end());
  }
  throw InsufficientRadius("end image of " + xi.str() + " not periodic within " + std::to_string(max_periods) + " periods");
}

Portrait Portrait::operator*(const Portrait& other) const {
  if (degree() != other.degree()) throw InputError("composing portraits of different degree");
  if (other.is_identity_expression()) return *this;
  if (is_identity_expression()) return other;
  return Portrait(std::make_shared<ComposeNode>(node_, other.node_));
}

Portrait Portrait::inverse() const {
  if (is_identity_expression()) return *this;
  return Portrait(std::make_shared<InverseNode>(node_));
}

Portrait Portrait::pow(long n) const {
  if (n < 0) return inverse().pow(-n);
  Portrait result = identity(degree());
  Portrait square = *this;
  while (n > 0) {
    if (n & 1) result = square * result;
    n >>= 1;
    if (n) square = square * square;
  }
  return result;
}

std::string Portrait::describe() const { return node().describe(); }

}  // namespace forge

#include "udrig/tower.hpp"

#include <algorithm>
#include <array>
#include <atomic>
#include <cstdint>
#include <map>
#include <mutex>
#include <stdexcept>
#include <unordered_map>
#include <vector>

namespace udrig {

struct TowerElem::Node {
  int level = 0;
  Rational q;  // level 0 only
  NodePtr a;   // level > 0: value = a + b * s_level
  NodePtr b;
  std::size_t hash = 0;
};

using NodePtr = TowerElem::NodePtr;

struct TowerAccess {
  static const NodePtr& node(const TowerElem& e) { return e.node_; }
  static TowerElem wrap(NodePtr n) { return TowerElem(std::move(n)); }
};

namespace {

constexpr int kMaxGenerators = 1 << 16;

NodePtr make_rational(Rational q) {
  auto n = std::make_shared<TowerElem::Node>();
  n->level = 0;
  n->q = std::move(q);
  n->q.canonicalize();
  n->hash = hash_value(n->q);
  return n;
}

const NodePtr& zero_node() {
  static const NodePtr z = make_rational(Rational(0));
  return z;
}

const NodePtr& one_node() {
  static const NodePtr o = make_rational(Rational(1));
  return o;
}

bool is_zero(const NodePtr& x) { return x->level == 0 && sgn(x->q) == 0; }

NodePtr make(int level, NodePtr a, NodePtr b) {
  if (is_zero(b)) return a;
  auto n = std::make_shared<TowerElem::Node>();
  n->level = level;
  n->hash = a->hash * 1000003ULL ^ (b->hash + 0x9e3779b97f4a7c15ULL + static_cast<std::size_t>(level) * 7919);
  n->a = std::move(a);
  n->b = std::move(b);
  return n;
}

bool equal(const NodePtr& x, const NodePtr& y) {
  if (x == y) return true;
  if (x->hash != y->hash || x->level != y->level) return false;
  if (x->level == 0) return x->q == y->q;
  return equal(x->a, y->a) && equal(x->b, y->b);
}

struct Generator {
  NodePtr radicand;
  NodePtr self;
  std::string text;
};

struct NodeKey {
  NodePtr node;
  int level;
};

struct NodeKeyHash {
  std::size_t operator()(const NodeKey& k) const { return k.node->hash * 31 + static_cast<std::size_t>(k.level); }
};

struct NodeKeyEq {
  bool operator()(const NodeKey& x, const NodeKey& y) const { return x.level == y.level && equal(x.node, y.node); }
};

class Registry {
 public:
  static Registry& instance() {
    static Registry r;
    return r;
  }

  int height() const { return height_.load(std::memory_order_acquire); }

  const Generator& generator(int k) const {
    return *generators_[static_cast<std::size_t>(k)].load(std::memory_order_acquire);
  }

  std::mutex& adjoin_mutex() { return adjoin_mutex_; }

  // Caller holds adjoin_mutex().
  int adjoin(NodePtr radicand, std::string text) {
    int k = height() + 1;
    if (k >= kMaxGenerators) throw std::length_error("quadratic tower exhausted");
    auto* g = new Generator{std::move(radicand), nullptr, std::move(text)};
    g->self = make(k, zero_node(), one_node());
    generators_[static_cast<std::size_t>(k)].store(g, std::memory_order_release);
    height_.store(k, std::memory_order_release);
    return k;
  }

  std::optional<std::optional<NodePtr>> lookup_sqrt(const NodeKey& key) {
    std::lock_guard lock(cache_mutex_);
    auto it = sqrt_cache_.find(key);
    if (it == sqrt_cache_.end()) return std::nullopt;
    return it->second;
  }

  void store_sqrt(const NodeKey& key, std::optional<NodePtr> value) {
    std::lock_guard lock(cache_mutex_);
    sqrt_cache_.emplace(key, std::move(value));
  }

  using ClassEntry = std::optional<std::pair<Rational, NodePtr>>;

  std::optional<ClassEntry> lookup_class(const NodeKey& key) {
    std::lock_guard lock(cache_mutex_);
    auto it = class_cache_.find(key);
    if (it == class_cache_.end()) return std::nullopt;
    return it->second;
  }

  void store_class(const NodeKey& key, ClassEntry value) {
    std::lock_guard lock(cache_mutex_);
    class_cache_.emplace(key, std::move(value));
  }

  std::optional<ClassEntry> lookup_generator_class(int k) {
    std::lock_guard lock(cache_mutex_);
    auto it = generator_class_.find(k);
    if (it == generator_class_.end()) return std::nullopt;
    return it->second;
  }

  void store_generator_class(int k, ClassEntry value) {
    std::lock_guard lock(cache_mutex_);
    generator_class_.emplace(k, std::move(value));
  }

  std::optional<std::optional<std::vector<int>>> lookup_span(const Rational& c, int level) {
    std::lock_guard lock(cache_mutex_);
    auto it = span_cache_.find({c.get_str(), level});
    if (it == span_cache_.end()) return std::nullopt;
    return it->second;
  }

  void store_span(const Rational& c, int level, std::optional<std::vector<int>> value) {
    std::lock_guard lock(cache_mutex_);
    span_cache_.emplace(std::pair{c.get_str(), level}, std::move(value));
  }

  std::optional<Interval> lookup_interval(int k, int bits) {
    std::lock_guard lock(cache_mutex_);
    auto it = interval_cache_.find({k, bits});
    if (it == interval_cache_.end()) return std::nullopt;
    return it->second;
  }

  void store_interval(int k, int bits, const Interval& iv) {
    std::lock_guard lock(cache_mutex_);
    interval_cache_.emplace(std::pair{k, bits}, iv);
  }

 private:
  Registry() : generators_(new std::atomic<const Generator*>[kMaxGenerators]) {
    for (int i = 0; i < kMaxGenerators; ++i) generators_[static_cast<std::size_t>(i)].store(nullptr);
  }

  std::unique_ptr<std::atomic<const Generator*>[]> generators_;
  std::atomic<int> height_{0};
  std::mutex adjoin_mutex_;
  std::mutex cache_mutex_;
  std::unordered_map<NodeKey, std::optional<NodePtr>, NodeKeyHash, NodeKeyEq> sqrt_cache_;
  std::map<std::pair<int, int>, Interval> interval_cache_;
  std::unordered_map<NodeKey, std::optional<std::pair<Rational, NodePtr>>, NodeKeyHash, NodeKeyEq> class_cache_;
  std::map<std::pair<std::string, int>, std::optional<std::vector<int>>> span_cache_;
  std::unordered_map<int, ClassEntry> generator_class_;
};

const NodePtr& radicand_of(int k) { return Registry::instance().generator(k).radicand; }

std::pair<NodePtr, NodePtr> split(const NodePtr& x, int level) {
  if (x->level == level) return {x->a, x->b};
  return {x, zero_node()};
}

NodePtr add(const NodePtr& x, const NodePtr& y) {
  if (is_zero(x)) return y;
  if (is_zero(y)) return x;
  if (x->level == 0 && y->level == 0) return make_rational(x->q + y->q);
  int level = std::max(x->level, y->level);
  auto [xa, xb] = split(x, level);
  auto [ya, yb] = split(y, level);
  return make(level, add(xa, ya), add(xb, yb));
}

NodePtr neg(const NodePtr& x) {
  if (x->level == 0) return make_rational(-x->q);
  return make(x->level, neg(x->a), neg(x->b));
}

NodePtr scale(const NodePtr& x, const Rational& c) {
  if (sgn(c) == 0) return zero_node();
  if (c == 1) return x;
  if (x->level == 0) return make_rational(x->q * c);
  return make(x->level, scale(x->a, c), scale(x->b, c));
}

NodePtr mul(const NodePtr& x, const NodePtr& y) {
  if (is_zero(x) || is_zero(y)) return zero_node();
  if (x->level == 0) return scale(y, x->q);
  if (y->level == 0) return scale(x, y->q);
  if (x->level < y->level) return make(y->level, mul(x, y->a), mul(x, y->b));
  if (y->level < x->level) return make(x->level, mul(x->a, y), mul(x->b, y));
  int level = x->level;
  const NodePtr& r = radicand_of(level);
  NodePtr a = add(mul(x->a, y->a), mul(mul(x->b, y->b), r));
  NodePtr b = add(mul(x->a, y->b), mul(x->b, y->a));
  return make(level, a, b);
}

NodePtr inv(const NodePtr& x) {
  if (is_zero(x)) throw std::domain_error("division by zero");
  if (x->level == 0) return make_rational(1 / x->q);
  const NodePtr& r = radicand_of(x->level);
  NodePtr den = add(mul(x->a, x->a), neg(mul(mul(x->b, x->b), r)));
  NodePtr di = inv(den);
  return make(x->level, mul(x->a, di), neg(mul(x->b, di)));
}

std::optional<NodePtr> rational_sqrt(const Rational& q) {
  if (sgn(q) < 0) return std::nullopt;
  if (sgn(q) == 0) return zero_node();
  if (!mpz_perfect_square_p(q.get_num_mpz_t()) || !mpz_perfect_square_p(q.get_den_mpz_t())) return std::nullopt;
  Integer n;
  Integer d;
  mpz_sqrt(n.get_mpz_t(), q.get_num_mpz_t());
  mpz_sqrt(d.get_mpz_t(), q.get_den_mpz_t());
  return make_rational(Rational(n, d));
}


// Square roots are found through rational square classes. For x in F_l and
// level >= l, square_class returns a rational c and w in F_level with
// x * c == w * w. x is a square in F_level iff such a c exists and lies in
// S_level = Q* intersected with the squares of F_level, which is generated
// by one rational class per generator (when its radicand has one). Membership
// in S_level is linear algebra over GF(2) on a coprime factor base, so the
// search only branches at generators whose radicand has no rational class.

// Pairwise coprime integers > 1, none a perfect square, whose products
// with integer exponents give every input.
std::vector<Integer> coprime_base(std::vector<Integer> xs) {
  std::vector<Integer> base;
  for (Integer& x : xs) {
    if (x > 1) base.push_back(x);
  }
  bool changed = true;
  while (changed) {
    changed = false;
    for (std::size_t i = 0; i < base.size() && !changed; ++i) {
      for (std::size_t j = i + 1; j < base.size() && !changed; ++j) {
        if (base[i] == base[j]) {
          base.erase(base.begin() + static_cast<std::ptrdiff_t>(j));
          changed = true;
          break;
        }
        Integer g;
        mpz_gcd(g.get_mpz_t(), base[i].get_mpz_t(), base[j].get_mpz_t());
        if (g == 1) continue;
        Integer a = base[i] / g, b = base[j] / g;
        base.erase(base.begin() + static_cast<std::ptrdiff_t>(j));
        base.erase(base.begin() + static_cast<std::ptrdiff_t>(i));
        for (Integer* v : {&a, &b, &g}) {
          if (*v > 1) base.push_back(*v);
        }
        changed = true;
      }
    }
  }
  for (Integer& b : base) {
    while (mpz_perfect_square_p(b.get_mpz_t())) mpz_sqrt(b.get_mpz_t(), b.get_mpz_t());
  }
  return base;
}

using Bits = std::vector<std::uint64_t>;

void flip(Bits& v, std::size_t i) { v[i / 64] ^= std::uint64_t{1} << (i % 64); }
bool bit(const Bits& v, std::size_t i) { return (v[i / 64] >> (i % 64)) & 1U; }
void xor_into(Bits& dst, const Bits& src) {
  for (std::size_t i = 0; i < dst.size(); ++i) dst[i] ^= src[i];
}

Bits parity(Integer n, const std::vector<Integer>& base) {
  Bits v(base.size() / 64 + 1, 0);
  for (std::size_t i = 0; i < base.size(); ++i) {
    while (mpz_divisible_p(n.get_mpz_t(), base[i].get_mpz_t())) {
      n /= base[i];
      flip(v, i);
    }
  }
  return v;
}

struct SquareClass {
  Rational c;
  NodePtr root;  // x * c == root * root
};

std::optional<SquareClass> from_entry(const Registry::ClassEntry& e) {
  if (!e) return std::nullopt;
  return SquareClass{e->first, e->second};
}

Registry::ClassEntry to_entry(const std::optional<SquareClass>& s) {
  if (!s) return std::nullopt;
  return std::pair{s->c, s->root};
}

std::optional<SquareClass> square_class(const NodePtr& x, int level);

// Rational c_k with sqrt(c_k) in F_k, and that root, when the radicand of
// generator k has a rational square class.
std::optional<SquareClass> generator_class(int k) {
  auto& reg = Registry::instance();
  if (auto hit = reg.lookup_generator_class(k)) return from_entry(*hit);
  const Generator& g = reg.generator(k);
  std::optional<SquareClass> out;
  if (g.radicand->level == 0) {
    out = SquareClass{g.radicand->q, g.self};
  } else if (auto cls = square_class(g.radicand, k - 1)) {
    // r * c = w^2, so sqrt(c) = w / s_k.
    out = SquareClass{cls->c, mul(cls->root, inv(g.self))};
  }
  reg.store_generator_class(k, to_entry(out));
  return out;
}

// Generators T <= level with c * prod_{k in T} c_k a rational square.
std::optional<std::vector<int>> class_span(const Rational& c, int level) {
  if (sgn(c) <= 0) return std::nullopt;
  auto& reg = Registry::instance();
  if (auto hit = reg.lookup_span(c, level)) return *hit;
  std::vector<Integer> ints{c.get_num() * c.get_den()};
  std::vector<int> gens;
  for (int k = 1; k <= level; ++k) {
    if (auto gc = generator_class(k)) {
      ints.push_back(gc->c.get_num() * gc->c.get_den());
      gens.push_back(k);
    }
  }
  std::vector<Integer> base = coprime_base(ints);
  struct Row {
    Bits v;
    Bits combo;
  };
  std::vector<Row> rows;
  std::vector<std::size_t> pivots;
  const std::size_t words = gens.size() / 64 + 1;
  auto reduce = [&](Row& r) {
    for (std::size_t i = 0; i < rows.size(); ++i) {
      if (bit(r.v, pivots[i])) {
        xor_into(r.v, rows[i].v);
        xor_into(r.combo, rows[i].combo);
      }
    }
  };
  for (std::size_t g = 0; g < gens.size(); ++g) {
    Row r{parity(ints[g + 1], base), Bits(words, 0)};
    flip(r.combo, g);
    reduce(r);
    std::size_t p = 0;
    while (p < base.size() && !bit(r.v, p)) ++p;
    if (p == base.size()) continue;
    rows.push_back(std::move(r));
    pivots.push_back(p);
  }
  Row target{parity(ints[0], base), Bits(words, 0)};
  reduce(target);
  std::optional<std::vector<int>> out;
  bool zero = true;
  for (std::size_t i = 0; i < base.size(); ++i) zero = zero && !bit(target.v, i);
  if (zero) {
    std::vector<int> chosen;
    for (std::size_t g = 0; g < gens.size(); ++g) {
      if (bit(target.combo, g)) chosen.push_back(gens[g]);
    }
    out = std::move(chosen);
  }
  reg.store_span(c, level, out);
  return out;
}

// Some y in F_level with y*y == x, or nothing. The sign of y is arbitrary.
std::optional<NodePtr> sqrt_in(const NodePtr& x, int level) {
  if (is_zero(x)) return zero_node();
  if (level == 0) return rational_sqrt(x->q);
  auto& reg = Registry::instance();
  NodeKey key{x, level};
  if (auto hit = reg.lookup_sqrt(key)) return *hit;
  std::optional<NodePtr> result;
  if (auto cls = square_class(x, level)) {
    if (auto gens = class_span(cls->c, level)) {
      // sqrt(c) = q * prod sqrt(c_k) with q^2 = c / prod c_k.
      Rational prod(1);
      NodePtr root_c = one_node();
      for (int k : *gens) {
        auto gc = generator_class(k);
        prod *= gc->c;
        root_c = mul(root_c, gc->root);
      }
      auto q = rational_sqrt(cls->c / prod);
      if (!q) throw std::logic_error("square class bookkeeping failed");
      result = mul(cls->root, inv(mul(*q, root_c)));
    }
  }
  reg.store_sqrt(key, result);
  return result;
}

std::optional<SquareClass> square_class(const NodePtr& x, int level) {
  if (x->level == 0 && level == 0) return SquareClass{x->q, x};
  auto& reg = Registry::instance();
  NodeKey key{x, level};
  if (auto hit = reg.lookup_class(key)) return from_entry(*hit);
  std::optional<SquareClass> result;
  if (level > x->level) {
    result = square_class(x, level - 1);
    if (!result && !generator_class(level)) {
      // x * c = r * w^2 with r the radicand: then x * c = (w * s / r)^2.
      const Generator& g = reg.generator(level);
      if (auto cls = square_class(mul(x, g.radicand), level - 1)) {
        result = SquareClass{cls->c, mul(cls->root, inv(g.self))};
      }
    }
  } else {
    // (u + v s)^2 = c (a + b s) forces u^2 - v^2 r = ±c sqrt(a^2 - b^2 r).
    const int l = x->level;
    const NodePtr& r = radicand_of(l);
    NodePtr norm = add(mul(x->a, x->a), neg(mul(mul(x->b, x->b), r)));
    if (auto n = sqrt_in(norm, l - 1)) {
      static const Rational half(1, 2);
      for (const NodePtr& signed_n : {*n, neg(*n)}) {
        NodePtr t = scale(add(x->a, signed_n), half);
        if (is_zero(t)) continue;
        if (auto cls = square_class(t, l - 1)) {
          NodePtr v = mul(scale(x->b, cls->c), inv(scale(cls->root, Rational(2))));
          result = SquareClass{cls->c, make(l, cls->root, v)};
          break;
        }
      }
    }
  }
  reg.store_class(key, to_entry(result));
  return result;
}

Interval generator_interval(int k, int bits);

Interval eval(const NodePtr& x, int bits) {
  if (x->level == 0) return Interval(x->q);
  Interval g = generator_interval(x->level, bits);
  Interval v = eval(x->a, bits) + eval(x->b, bits) * g;
  return v.rounded(bits + 4);
}

Interval generator_interval(int k, int bits) {
  auto& reg = Registry::instance();
  if (auto hit = reg.lookup_interval(k, bits)) return *hit;
  Interval rad = eval(radicand_of(k), bits + 16);
  Interval iv = rad.sqrt(bits + 8);
  reg.store_interval(k, bits, iv);
  return iv;
}

std::optional<int> sign_within(const NodePtr& x, int max_bits) {
  if (is_zero(x)) return 0;
  if (x->level == 0) return sgn(x->q);
  for (int bits = 64;; bits *= 2) {
    int b = std::min(bits, max_bits);
    Interval iv = eval(x, b);
    if (iv.strictly_positive()) return 1;
    if (iv.strictly_negative()) return -1;
    if (b >= max_bits) return std::nullopt;
  }
}

int exact_sign(const NodePtr& x) {
  constexpr int kHardCap = 1 << 20;
  if (auto s = sign_within(x, kHardCap)) return *s;
  throw std::runtime_error("sign of a nonzero tower element not separated at 2^20 bits");
}

void flatten(const NodePtr& x, std::vector<int>& gens, std::map<std::vector<int>, Rational>& out) {
  if (is_zero(x)) return;
  if (x->level == 0) {
    std::vector<int> key(gens.rbegin(), gens.rend());
    out[key] += x->q;
    return;
  }
  flatten(x->a, gens, out);
  gens.push_back(x->level);
  flatten(x->b, gens, out);
  gens.pop_back();
}

std::string monomial_text(const std::vector<int>& gens) {
  std::string s;
  for (int k : gens) {
    if (!s.empty()) s += "*";
    s += Registry::instance().generator(k).text;
  }
  return s;
}

std::string render(const NodePtr& x) {
  std::map<std::vector<int>, Rational> terms;
  std::vector<int> gens;
  flatten(x, gens, terms);
  std::vector<std::pair<std::vector<int>, Rational>> ordered;
  for (auto& [k, c] : terms) {
    if (sgn(c) != 0) ordered.emplace_back(k, c);
  }
  if (ordered.empty()) return "0";
  std::stable_sort(ordered.begin(), ordered.end(),
                   [](const auto& l, const auto& r) { return l.first.size() < r.first.size(); });
  std::string out;
  bool first = true;
  for (const auto& [key, coeff] : ordered) {
    bool negative = sgn(coeff) < 0;
    Rational mag = abs(coeff);
    std::string term;
    if (key.empty()) {
      term = to_string(mag);
    } else if (mag == 1) {
      term = monomial_text(key);
    } else {
      term = to_string(mag) + "*" + monomial_text(key);
    }
    if (first) {
      out = negative ? "-" + term : term;
      first = false;
    } else {
      out += negative ? " - " : " + ";
      out += term;
    }
  }
  return out;
}

}  // namespace

TowerElem::TowerElem() : node_(zero_node()) {}
TowerElem::TowerElem(long value) : node_(make_rational(Rational(value))) {}
TowerElem::TowerElem(const Rational& value) : node_(make_rational(value)) {}

TowerElem TowerElem::sqrt(const TowerElem& x) {
  if (x.is_zero()) return TowerElem();
  if (x.sign() < 0) throw std::domain_error("square root of a negative tower element");
  if (auto y = sqrt_if_square(x)) return *y;
  auto& reg = Registry::instance();
  std::lock_guard lock(reg.adjoin_mutex());
  if (auto y = sqrt_if_square(x)) return *y;
  if (x.is_rational()) {
    // sqrt(p/q) = (f/q) * sqrt(m) with m = p*q / f^2 stripped of small square factors.
    Integer m = x.rational().get_num() * x.rational().get_den();
    Integer f = 1;
    for (unsigned long p = 2; p < 4096 && p * p <= m; ++p) {
      while (mpz_divisible_ui_p(m.get_mpz_t(), p * p)) {
        m /= p * p;
        f *= p;
      }
    }
    TowerElem scale(Rational(f) / Rational(x.rational().get_den()));
    TowerElem rm{Rational(m)};
    int k = reg.adjoin(rm.node_, "sqrt(" + rm.to_string() + ")");
    return scale * TowerElem(reg.generator(k).self);
  }
  int k = reg.adjoin(x.node_, "sqrt(" + x.to_string() + ")");
  return TowerElem(reg.generator(k).self);
}

std::optional<TowerElem> TowerElem::sqrt_if_square(const TowerElem& x) {
  auto y = sqrt_in(x.node_, Registry::instance().height());
  if (!y) return std::nullopt;
  TowerElem root(*y);
  if (root.sign() < 0) root = -root;
  return root;
}

bool TowerElem::is_zero() const { return udrig::is_zero(node_); }
bool TowerElem::is_rational() const { return node_->level == 0; }

const Rational& TowerElem::rational() const {
  if (node_->level != 0) throw std::logic_error("tower element is not rational");
  return node_->q;
}

int TowerElem::level() const { return node_->level; }
int TowerElem::sign() const { return exact_sign(node_); }
std::optional<int> TowerElem::sign_within(int bits) const { return udrig::sign_within(node_, bits); }
Interval TowerElem::enclose(int bits) const { return eval(node_, bits); }
double TowerElem::approx() const {
  if (node_->level == 0) return node_->q.get_d();
  return eval(node_, 64).approx();
}
std::string TowerElem::to_string() const { return render(node_); }
std::size_t TowerElem::hash() const { return node_->hash; }

TowerElem TowerElem::abs() const { return sign() < 0 ? -*this : *this; }

TowerElem operator+(const TowerElem& a, const TowerElem& b) { return TowerElem(add(a.node_, b.node_)); }
TowerElem operator-(const TowerElem& a, const TowerElem& b) { return TowerElem(add(a.node_, neg(b.node_))); }
TowerElem operator-(const TowerElem& a) { return TowerElem(neg(a.node_)); }
TowerElem operator*(const TowerElem& a, const TowerElem& b) { return TowerElem(mul(a.node_, b.node_)); }
TowerElem operator/(const TowerElem& a, const TowerElem& b) {
  if (b.node_->level == 0) {
    if (sgn(b.node_->q) == 0) throw std::domain_error("division by zero");
    return TowerElem(scale(a.node_, 1 / b.node_->q));
  }
  return TowerElem(mul(a.node_, inv(b.node_)));
}
bool operator==(const TowerElem& a, const TowerElem& b) { return equal(a.node_, b.node_); }

int compare_exact(const TowerElem& a, const TowerElem& b) { return (a - b).sign(); }

Integer floor(const TowerElem& x) {
  if (x.is_rational()) return floor(x.rational());
  Integer k = floor(x.enclose(64).lo());
  while (compare_exact(x, TowerElem(Rational(k))) < 0) k -= 1;
  while (compare_exact(x, TowerElem(Rational(k + 1))) >= 0) k += 1;
  return k;
}

Integer ceil(const TowerElem& x) {
  Integer k = floor(x);
  return TowerElem(Rational(k)) == x ? k : Integer(k + 1);
}

namespace tower {

int height() { return Registry::instance().height(); }

TowerElem radicand(int k) {
  if (k < 1 || k > height()) throw std::out_of_range("no such generator");
  return TowerAccess::wrap(Registry::instance().generator(k).radicand);
}

TowerElem generator(int k) {
  if (k < 1 || k > height()) throw std::out_of_range("no such generator");
  return TowerAccess::wrap(Registry::instance().generator(k).self);
}

}  // namespace tower

}  // namespace udrig

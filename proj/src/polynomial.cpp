#include "reeskit/polynomial.hpp"

#include <algorithm>
#include <cctype>
#include <sstream>

namespace reeskit {

RingPtr PolyRing::make(Field field, std::vector<std::string> names, MonomialOrder order,
                       std::vector<int> grading, std::vector<int> positive_grading) {
  if (names.size() > kMaxVars) throw Error("too many variables (max 16)");
  if (order.num_vars() != names.size()) throw Error("order does not match variable count");
  for (std::size_t i = 0; i < names.size(); ++i)
    for (std::size_t j = i + 1; j < names.size(); ++j)
      if (names[i] == names[j]) throw Error("repeated variable name '" + names[i] + "'");
  if (grading.empty()) grading.assign(names.size(), 1);
  if (positive_grading.empty()) {
    const auto& blocks = order.blocks();
    if (blocks.size() == 1 && blocks[0].graded)
      positive_grading = blocks[0].weights;
    else
      positive_grading.assign(names.size(), 1);
  }
  if (grading.size() != names.size() || positive_grading.size() != names.size())
    throw Error("grading must give one weight per variable");
  for (int w : positive_grading)
    if (w <= 0) throw Error("positive grading needs strictly positive weights");
  auto r = std::shared_ptr<PolyRing>(new PolyRing());
  r->field_ = field;
  r->names_ = std::move(names);
  r->order_ = std::move(order);
  r->grading_ = std::move(grading);
  r->positive_ = std::move(positive_grading);
  return r;
}

std::optional<std::size_t> PolyRing::index_of(const std::string& name) const {
  auto it = std::find(names_.begin(), names_.end(), name);
  if (it == names_.end()) return std::nullopt;
  return static_cast<std::size_t>(it - names_.begin());
}

long PolyRing::degree(const Monomial& m) const {
  long d = 0;
  for (std::size_t i = 0; i < names_.size(); ++i) d += static_cast<long>(grading_[i]) * m[i];
  return d;
}

long PolyRing::positive_degree(const Monomial& m) const {
  long d = 0;
  for (std::size_t i = 0; i < names_.size(); ++i) d += static_cast<long>(positive_[i]) * m[i];
  return d;
}

namespace {

bool same_ring(const RingPtr& a, const RingPtr& b) {
  if (a == b) return true;
  if (!a || !b) return false;
  return a->field() == b->field() && a->names() == b->names() &&
         a->order().describe() == b->order().describe() && a->grading() == b->grading();
}

}  // namespace

void require_same_ring(const Polynomial& f, const Polynomial& g) {
  if (!same_ring(f.ring(), g.ring())) throw RingMismatch();
}

Polynomial Polynomial::constant(RingPtr ring, const FieldElem& c) {
  Polynomial p(ring);
  FieldElem v = ring->field().normalize(c);
  if (!Field::is_zero(v)) p.terms_.push_back({Monomial{}, v});
  return p;
}

Polynomial Polynomial::variable(RingPtr ring, std::size_t i) {
  if (i >= ring->num_vars()) throw Error("variable index out of range");
  Monomial m;
  m[i] = 1;
  return monomial(std::move(ring), m, FieldElem(1));
}

Polynomial Polynomial::variable(RingPtr ring, const std::string& name) {
  auto i = ring->index_of(name);
  if (!i) throw Error("unknown variable '" + name + "'");
  return variable(std::move(ring), *i);
}

Polynomial Polynomial::monomial(RingPtr ring, const Monomial& m, const FieldElem& c) {
  Polynomial p(ring);
  FieldElem v = ring->field().normalize(c);
  if (!Field::is_zero(v)) p.terms_.push_back({m, v});
  return p;
}

Polynomial Polynomial::from_terms(RingPtr ring, std::vector<Term> terms) {
  const auto& ord = ring->order();
  std::sort(terms.begin(), terms.end(),
            [&](const Term& a, const Term& b) { return ord.greater(a.mono, b.mono); });
  Polynomial p(ring);
  const Field& k = ring->field();
  for (auto& t : terms) {
    if (!p.terms_.empty() && p.terms_.back().mono == t.mono)
      p.terms_.back().coef = k.add(p.terms_.back().coef, t.coef);
    else
      p.terms_.push_back({t.mono, k.normalize(t.coef)});
    if (Field::is_zero(p.terms_.back().coef)) p.terms_.pop_back();
  }
  // A merged-then-cancelled entry can leave equal monomials split; re-merge.
  std::vector<Term> out;
  for (auto& t : p.terms_) {
    if (!out.empty() && out.back().mono == t.mono) {
      out.back().coef = k.add(out.back().coef, t.coef);
      if (Field::is_zero(out.back().coef)) out.pop_back();
    } else {
      out.push_back(std::move(t));
    }
  }
  p.terms_ = std::move(out);
  return p;
}

Polynomial Polynomial::monic() const {
  if (is_zero() || Field::is_one(leading().coef)) return *this;
  return scaled(ring_->field().inv(leading().coef));
}

Polynomial Polynomial::scaled(const FieldElem& c) const {
  Polynomial p(ring_);
  const Field& k = ring_->field();
  FieldElem v = k.normalize(c);
  if (Field::is_zero(v)) return p;
  p.terms_.reserve(terms_.size());
  for (const auto& t : terms_) p.terms_.push_back({t.mono, k.mul(t.coef, v)});
  return p;
}

Polynomial Polynomial::times_term(const Monomial& m, const FieldElem& c) const {
  Polynomial p(ring_);
  const Field& k = ring_->field();
  if (Field::is_zero(c)) return p;
  p.terms_.reserve(terms_.size());
  for (const auto& t : terms_) p.terms_.push_back({t.mono * m, k.mul(t.coef, c)});
  return p;
}

bool Polynomial::is_homogeneous(const std::vector<int>& weights) const {
  if (terms_.size() < 2) return true;
  auto deg = [&](const Monomial& m) {
    long d = 0;
    for (std::size_t i = 0; i < weights.size(); ++i) d += static_cast<long>(weights[i]) * m[i];
    return d;
  };
  long d0 = deg(terms_[0].mono);
  return std::all_of(terms_.begin(), terms_.end(), [&](const Term& t) { return deg(t.mono) == d0; });
}

bool Polynomial::check_canonical() const {
  for (std::size_t i = 0; i < terms_.size(); ++i) {
    if (Field::is_zero(terms_[i].coef)) return false;
    if (ring_->field().normalize(terms_[i].coef) != terms_[i].coef) return false;
    if (i && !ring_->order().greater(terms_[i - 1].mono, terms_[i].mono)) return false;
  }
  return true;
}

std::string Polynomial::to_string() const {
  if (terms_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (const auto& t : terms_) {
    FieldElem c = t.coef;
    bool negative = sgn(c) < 0;
    if (negative) c = -c;
    if (first)
      os << (negative ? "-" : "");
    else
      os << (negative ? " - " : " + ");
    first = false;
    bool unit = (c == 1);
    if (!unit || t.mono.is_one()) {
      os << c.get_str();
      if (!t.mono.is_one()) os << "*";
    }
    bool firstvar = true;
    for (std::size_t i = 0; i < ring_->num_vars(); ++i) {
      if (t.mono[i] == 0) continue;
      if (!firstvar) os << "*";
      firstvar = false;
      os << ring_->name(i);
      if (t.mono[i] > 1) os << "^" << t.mono[i];
    }
  }
  return os.str();
}

Polynomial combine(const Polynomial& f, const Polynomial& g, const FieldElem& c) {
  require_same_ring(f, g);
  const auto& ring = f.ring_ ? f.ring_ : g.ring_;
  Polynomial r(ring);
  if (Field::is_zero(c) || g.is_zero()) return f;
  const Field& k = ring->field();
  const auto& ord = ring->order();
  auto &a = f.terms_, &b = g.terms_;
  r.terms_.reserve(a.size() + b.size());
  std::size_t i = 0, j = 0;
  while (i < a.size() || j < b.size()) {
    Cmp cmp = i == a.size() ? Cmp::LT : j == b.size() ? Cmp::GT : ord.compare(a[i].mono, b[j].mono);
    if (cmp == Cmp::GT) {
      r.terms_.push_back(a[i++]);
    } else if (cmp == Cmp::LT) {
      r.terms_.push_back({b[j].mono, k.mul(c, b[j].coef)});
      ++j;
    } else {
      FieldElem v = k.add(a[i].coef, k.mul(c, b[j].coef));
      if (!Field::is_zero(v)) r.terms_.push_back({a[i].mono, std::move(v)});
      ++i;
      ++j;
    }
  }
  return r;
}

Polynomial& Polynomial::operator+=(const Polynomial& g) {
  if (!ring_) ring_ = g.ring_;
  *this = combine(*this, g, FieldElem(1));
  return *this;
}

Polynomial& Polynomial::operator-=(const Polynomial& g) {
  if (!ring_) ring_ = g.ring_;
  *this = combine(*this, g, ring_->field().neg(FieldElem(1)));
  return *this;
}

Polynomial operator-(const Polynomial& f) { return f.scaled(f.ring()->field().neg(FieldElem(1))); }

Polynomial operator*(const Polynomial& f, const Polynomial& g) {
  require_same_ring(f, g);
  std::vector<Term> terms;
  terms.reserve(f.size() * g.size());
  const Field& k = f.ring()->field();
  for (const auto& s : f.terms())
    for (const auto& t : g.terms()) terms.push_back({s.mono * t.mono, k.mul(s.coef, t.coef)});
  return Polynomial::from_terms(f.ring(), std::move(terms));
}

bool operator==(const Polynomial& f, const Polynomial& g) {
  if (f.terms_.size() != g.terms_.size()) return false;
  for (std::size_t i = 0; i < f.terms_.size(); ++i)
    if (!(f.terms_[i].mono == g.terms_[i].mono) || f.terms_[i].coef != g.terms_[i].coef) return false;
  return true;
}

Polynomial poly_add(const Polynomial& f, const Polynomial& g) { return f + g; }
Polynomial poly_mul(const Polynomial& f, const Polynomial& g) { return f * g; }

Polynomial pow(const Polynomial& f, unsigned e) {
  Polynomial result = Polynomial::constant(f.ring(), FieldElem(1));
  Polynomial base = f;
  while (e) {
    if (e & 1u) result = result * base;
    e >>= 1u;
    if (e) base = base * base;
  }
  return result;
}

std::optional<long> weighted_degree(const Polynomial& f, const std::vector<int>& weights) {
  if (f.is_zero()) return std::nullopt;
  long best = 0;
  bool first = true;
  for (const auto& t : f.terms()) {
    long d = 0;
    for (std::size_t i = 0; i < weights.size(); ++i) d += static_cast<long>(weights[i]) * t.mono[i];
    if (first || d > best) best = d;
    first = false;
  }
  return best;
}

std::optional<long> weighted_degree(const Polynomial& f) {
  return weighted_degree(f, f.ring()->grading());
}

Polynomial map_by_names(const Polynomial& f, const RingPtr& target) {
  const auto& src = *f.ring();
  std::vector<std::optional<std::size_t>> idx(src.num_vars());
  for (std::size_t i = 0; i < src.num_vars(); ++i) idx[i] = target->index_of(src.name(i));
  std::vector<Term> terms;
  terms.reserve(f.size());
  for (const auto& t : f.terms()) {
    Monomial m;
    for (std::size_t i = 0; i < src.num_vars(); ++i) {
      if (t.mono[i] == 0) continue;
      if (!idx[i]) throw Error("variable '" + src.name(i) + "' missing in target ring");
      m[*idx[i]] = t.mono[i];
    }
    terms.push_back({m, target->field().normalize(t.coef)});
  }
  return Polynomial::from_terms(target, std::move(terms));
}

Polynomial substitute(const Polynomial& f, const std::vector<Polynomial>& images, const RingPtr& target) {
  if (images.size() != f.ring()->num_vars()) throw Error("substitution needs one image per variable");
  Polynomial acc(target);
  std::vector<std::vector<Polynomial>> powers(images.size());
  auto power = [&](std::size_t i, int e) -> const Polynomial& {
    auto& cache = powers[i];
    if (cache.empty()) cache.push_back(Polynomial::constant(target, FieldElem(1)));
    while (static_cast<int>(cache.size()) <= e) cache.push_back(cache.back() * images[i]);
    return cache[e];
  };
  for (const auto& t : f.terms()) {
    Polynomial term = Polynomial::constant(target, t.coef);
    for (std::size_t i = 0; i < images.size(); ++i)
      if (t.mono[i]) term = term * power(i, t.mono[i]);
    acc += term;
  }
  return acc;
}

namespace {

class PolyParser {
 public:
  PolyParser(const std::string& s, const RingPtr& ring) : s_(s), ring_(ring) {}

  Polynomial parse() {
    Polynomial p = expr();
    skip();
    if (pos_ != s_.size()) fail("unexpected '" + std::string(1, s_[pos_]) + "'");
    return p;
  }

 private:
  [[noreturn]] void fail(const std::string& what) {
    throw Error("column " + std::to_string(pos_ + 1) + ": " + what);
  }
  void skip() {
    while (pos_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[pos_]))) ++pos_;
  }
  bool eat(char c) {
    skip();
    if (pos_ < s_.size() && s_[pos_] == c) {
      ++pos_;
      return true;
    }
    return false;
  }
  Polynomial expr() {
    Polynomial acc(ring_);
    bool neg = false;
    if (eat('-')) neg = true;
    else eat('+');
    Polynomial t = term();
    acc = neg ? -t : t;
    for (;;) {
      if (eat('+')) acc += term();
      else if (eat('-')) acc -= term();
      else break;
    }
    return acc;
  }
  Polynomial term() {
    Polynomial acc = factor();
    while (eat('*')) acc = acc * factor();
    return acc;
  }
  unsigned exponent() {
    skip();
    std::size_t start = pos_;
    while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) ++pos_;
    if (start == pos_) fail("expected exponent");
    return static_cast<unsigned>(std::stoul(s_.substr(start, pos_ - start)));
  }
  Polynomial factor() {
    skip();
    if (pos_ >= s_.size()) fail("unexpected end of expression");
    Polynomial base(ring_);
    char c = s_[pos_];
    if (c == '(') {
      ++pos_;
      base = expr();
      if (!eat(')')) fail("expected ')'");
    } else if (std::isdigit(static_cast<unsigned char>(c))) {
      std::size_t start = pos_;
      while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) ++pos_;
      mpq_class v(mpz_class(s_.substr(start, pos_ - start)));
      if (pos_ < s_.size() && s_[pos_] == '/') {
        ++pos_;
        std::size_t ds = pos_;
        while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) ++pos_;
        if (ds == pos_) fail("expected denominator");
        mpz_class den(s_.substr(ds, pos_ - ds));
        if (den == 0) fail("zero denominator");
        v /= mpq_class(den);
      }
      base = Polynomial::constant(ring_, v);
    } else if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
      std::size_t start = pos_;
      while (pos_ < s_.size() &&
             (std::isalnum(static_cast<unsigned char>(s_[pos_])) || s_[pos_] == '_'))
        ++pos_;
      std::string name = s_.substr(start, pos_ - start);
      auto i = ring_->index_of(name);
      if (!i) {
        pos_ = start;
        fail("unknown variable '" + name + "'");
      }
      base = Polynomial::variable(ring_, *i);
    } else {
      fail("unexpected '" + std::string(1, c) + "'");
    }
    if (eat('^')) base = pow(base, exponent());
    return base;
  }

  const std::string& s_;
  RingPtr ring_;
  std::size_t pos_ = 0;
};

}  // namespace

Polynomial parse_polynomial(const std::string& text, const RingPtr& ring) {
  return PolyParser(text, ring).parse();
}

}  // namespace reeskit

#include "reeskit/monomial.hpp"

#include <algorithm>
#include <sstream>

#include "reeskit/field.hpp"

namespace reeskit {

Monomial Monomial::from(std::span<const int> e) {
  if (e.size() > kMaxVars) throw Error("too many variables (max 16)");
  Monomial m;
  for (std::size_t i = 0; i < e.size(); ++i) {
    if (e[i] < 0) throw Error("negative exponent");
    m.exp[i] = e[i];
  }
  return m;
}

bool Monomial::is_one() const {
  return std::all_of(exp.begin(), exp.end(), [](int v) { return v == 0; });
}

int Monomial::total_degree() const {
  int d = 0;
  for (int v : exp) d += v;
  return d;
}

bool Monomial::divides(const Monomial& other) const {
  for (std::size_t i = 0; i < kMaxVars; ++i)
    if (exp[i] > other.exp[i]) return false;
  return true;
}

Monomial operator*(const Monomial& a, const Monomial& b) {
  Monomial r;
  for (std::size_t i = 0; i < kMaxVars; ++i) r.exp[i] = a.exp[i] + b.exp[i];
  return r;
}

Monomial operator/(const Monomial& a, const Monomial& b) {
  Monomial r;
  for (std::size_t i = 0; i < kMaxVars; ++i) r.exp[i] = a.exp[i] - b.exp[i];
  return r;
}

Monomial lcm(const Monomial& a, const Monomial& b) {
  Monomial r;
  for (std::size_t i = 0; i < kMaxVars; ++i) r.exp[i] = std::max(a.exp[i], b.exp[i]);
  return r;
}

bool coprime(const Monomial& a, const Monomial& b) {
  for (std::size_t i = 0; i < kMaxVars; ++i)
    if (a.exp[i] != 0 && b.exp[i] != 0) return false;
  return true;
}

MonomialOrder MonomialOrder::lex(std::size_t n) {
  MonomialOrder o;
  o.nvars_ = n;
  o.blocks_.push_back({0, n, false, {}, Tiebreak::Lex});
  return o;
}

MonomialOrder MonomialOrder::degrevlex(std::size_t n) {
  return weighted(std::vector<int>(n, 1), Tiebreak::RevLex);
}

MonomialOrder MonomialOrder::weighted(std::vector<int> weights, Tiebreak tb) {
  for (int w : weights)
    if (w <= 0) throw Error("weighted term orders need positive weights");
  MonomialOrder o;
  o.nvars_ = weights.size();
  o.blocks_.push_back({0, weights.size(), true, std::move(weights), tb});
  return o;
}

MonomialOrder MonomialOrder::block(const std::vector<MonomialOrder>& parts) {
  MonomialOrder o;
  for (const auto& p : parts) {
    for (auto b : p.blocks_) {
      b.begin += o.nvars_;
      b.end += o.nvars_;
      o.blocks_.push_back(std::move(b));
    }
    o.nvars_ += p.nvars_;
  }
  return o;
}

std::string MonomialOrder::describe() const {
  std::ostringstream os;
  for (std::size_t k = 0; k < blocks_.size(); ++k) {
    const auto& b = blocks_[k];
    if (k) os << " > ";
    os << (b.tiebreak == Tiebreak::Lex ? (b.graded ? "wlex" : "lex") : "wrevlex") << "[" << b.begin
       << "," << b.end << ")";
  }
  return os.str();
}

Cmp MonomialOrder::compare(const Monomial& a, const Monomial& b) const {
  for (const auto& blk : blocks_) {
    if (blk.graded) {
      long da = 0, db = 0;
      for (std::size_t i = blk.begin; i < blk.end; ++i) {
        da += static_cast<long>(blk.weights[i - blk.begin]) * a.exp[i];
        db += static_cast<long>(blk.weights[i - blk.begin]) * b.exp[i];
      }
      if (da != db) return da > db ? Cmp::GT : Cmp::LT;
    }
    if (blk.tiebreak == Tiebreak::Lex) {
      for (std::size_t i = blk.begin; i < blk.end; ++i)
        if (a.exp[i] != b.exp[i]) return a.exp[i] > b.exp[i] ? Cmp::GT : Cmp::LT;
    } else {
      // Reverse lex is only a term order once the degree has been compared.
      for (std::size_t i = blk.end; i-- > blk.begin;)
        if (a.exp[i] != b.exp[i]) return a.exp[i] < b.exp[i] ? Cmp::GT : Cmp::LT;
    }
  }
  return Cmp::EQ;
}

Cmp mono_cmp(const MonomialOrder& order, std::span<const int> m1, std::span<const int> m2) {
  if (m1.size() != order.num_vars() || m2.size() != order.num_vars())
    throw Error("monomial length does not match the order");
  return order.compare(Monomial::from(m1), Monomial::from(m2));
}

}  // namespace reeskit

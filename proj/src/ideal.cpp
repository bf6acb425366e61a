#include "reeskit/ideal.hpp"

#include <algorithm>
#include <sstream>

namespace reeskit {

namespace {

ModuleSpace rank_one(const RingPtr& ring) { return ModuleSpace{ring, 1, {}}; }

bool uses_any(const Polynomial& f, const std::vector<std::size_t>& vars) {
  for (const auto& t : f.terms())
    for (std::size_t v : vars)
      if (t.mono[v] != 0) return true;
  return false;
}

std::vector<Polynomial> mapped(const std::vector<Polynomial>& fs, const RingPtr& target) {
  std::vector<Polynomial> out;
  out.reserve(fs.size());
  for (const auto& f : fs) out.push_back(map_by_names(f, target));
  return out;
}

std::string fresh_name(const RingPtr& ring, const std::string& base) {
  std::string n = base;
  while (ring->index_of(n)) n += "_";
  return n;
}

}  // namespace

std::vector<Polynomial> buchberger(const RingPtr& ring, const std::vector<Polynomial>& gens) {
  ModuleSpace space = rank_one(ring);
  std::vector<Vec> vs;
  vs.reserve(gens.size());
  for (const auto& g : gens) vs.push_back(to_vec(g));
  auto gb = groebner_basis(space, std::move(vs));
  std::vector<Polynomial> out;
  out.reserve(gb.size());
  for (const auto& v : gb) out.push_back(from_vec(space, v)[0]);
  return out;
}

Polynomial normal_form(const Polynomial& f, const std::vector<Polynomial>& gb) {
  ModuleSpace space = rank_one(f.ring());
  std::vector<Vec> vs;
  vs.reserve(gb.size());
  for (const auto& g : gb) {
    require_same_ring(f, g);
    vs.push_back(to_vec(g));
  }
  return from_vec(space, normal_form(space, to_vec(f), vs))[0];
}

Polynomial divide_exact(const Polynomial& f, const Polynomial& g) {
  if (g.is_zero()) throw Error("division by zero polynomial");
  const Field& k = f.ring()->field();
  Polynomial q(f.ring());
  Polynomial r = f;
  FieldElem lcinv = k.inv(g.leading().coef);
  while (!r.is_zero()) {
    const Term& t = r.leading();
    if (!g.leading().mono.divides(t.mono)) throw Error("inexact polynomial division");
    Monomial m = t.mono / g.leading().mono;
    FieldElem c = k.mul(t.coef, lcinv);
    q += Polynomial::monomial(f.ring(), m, c);
    r -= g.times_term(m, c);
  }
  return q;
}

Ideal::Ideal(RingPtr ring, std::vector<Polynomial> gens) : ring_(std::move(ring)) {
  for (auto& g : gens) {
    if (g.ring() && !(g.ring() == ring_)) g = map_by_names(g, ring_);
    if (!g.is_zero()) gens_.push_back(std::move(g));
  }
}

Ideal Ideal::unit(RingPtr ring) {
  auto one = Polynomial::constant(ring, FieldElem(1));
  return Ideal(std::move(ring), {one});
}

const std::vector<Polynomial>& Ideal::gb() const {
  std::call_once(cache_->once, [this] { cache_->gb = buchberger(ring_, gens_); });
  return cache_->gb;
}

Polynomial Ideal::reduce(const Polynomial& f) const {
  Polynomial g = f.ring() == ring_ ? f : map_by_names(f, ring_);
  return normal_form(g, gb());
}

bool Ideal::contains(const Ideal& other) const {
  return std::all_of(other.gens().begin(), other.gens().end(),
                     [&](const Polynomial& g) { return contains(g); });
}

bool Ideal::is_unit() const {
  const auto& g = gb();
  return g.size() == 1 && g[0].is_constant() && !g[0].is_zero();
}

Ideal Ideal::operator+(const Ideal& other) const { return plus(other.gens()); }

Ideal Ideal::plus(const std::vector<Polynomial>& extra) const {
  auto gens = gens_;
  for (const auto& e : extra) gens.push_back(e.ring() == ring_ ? e : map_by_names(e, ring_));
  return Ideal(ring_, std::move(gens));
}

Ideal Ideal::operator*(const Ideal& other) const {
  std::vector<Polynomial> gens;
  for (const auto& a : gens_)
    for (const auto& b : other.gens()) gens.push_back(a * map_by_names(b, ring_));
  return Ideal(ring_, std::move(gens));
}

Ideal Ideal::power(unsigned n) const {
  Ideal r = unit(ring_);
  for (unsigned i = 0; i < n; ++i) r = Ideal(ring_, (r * *this).gb());
  return r;
}

bool operator==(const Ideal& a, const Ideal& b) {
  const auto& x = a.gb();
  const auto& y = b.gb();
  if (x.size() != y.size()) return false;
  for (std::size_t i = 0; i < x.size(); ++i)
    if (!(x[i] == map_by_names(y[i], a.ring()))) return false;
  return true;
}

std::string Ideal::to_string() const {
  std::ostringstream os;
  os << "(";
  for (std::size_t i = 0; i < gens_.size(); ++i) os << (i ? ", " : "") << gens_[i].to_string();
  os << ")";
  return os.str();
}

RingPtr with_elimination_block(const RingPtr& ring, const std::vector<std::string>& extra,
                               const std::vector<int>& extra_weights) {
  std::vector<std::string> names = extra;
  names.insert(names.end(), ring->names().begin(), ring->names().end());
  std::vector<int> grading(extra.size(), 0);
  grading.insert(grading.end(), ring->grading().begin(), ring->grading().end());
  std::vector<int> positive = extra_weights;
  positive.insert(positive.end(), ring->positive_grading().begin(), ring->positive_grading().end());
  auto order = MonomialOrder::block({MonomialOrder::weighted(extra_weights), ring->order()});
  return PolyRing::make(ring->field(), std::move(names), std::move(order), std::move(grading),
                        std::move(positive));
}

Ideal eliminate(const Ideal& L, const std::vector<std::string>& vars) {
  const auto& ring = L.ring();
  std::vector<std::string> first, rest;
  std::vector<int> wf, wr;
  for (std::size_t i = 0; i < ring->num_vars(); ++i) {
    bool elim = std::find(vars.begin(), vars.end(), ring->name(i)) != vars.end();
    (elim ? first : rest).push_back(ring->name(i));
    (elim ? wf : wr).push_back(ring->positive_grading()[i]);
  }
  if (first.empty()) return L;
  std::vector<std::string> names = first;
  names.insert(names.end(), rest.begin(), rest.end());
  std::vector<MonomialOrder> blocks{MonomialOrder::weighted(wf)};
  if (!rest.empty()) blocks.push_back(MonomialOrder::weighted(wr));
  std::vector<int> positive = wf;
  positive.insert(positive.end(), wr.begin(), wr.end());
  auto er = PolyRing::make(ring->field(), names, MonomialOrder::block(blocks), {}, positive);
  std::vector<std::size_t> idx(first.size());
  for (std::size_t i = 0; i < idx.size(); ++i) idx[i] = i;
  std::vector<Polynomial> kept;
  for (const auto& g : buchberger(er, mapped(L.gens(), er)))
    if (!uses_any(g, idx)) kept.push_back(map_by_names(g, ring));
  return Ideal(ring, std::move(kept));
}

namespace {

// Elements of gb(L + extra) free of the first `n_aux` variables, back in `ring`.
Ideal eliminate_aux(const RingPtr& ring, const RingPtr& er, std::size_t n_aux,
                    const std::vector<Polynomial>& gens) {
  std::vector<std::size_t> idx(n_aux);
  for (std::size_t i = 0; i < n_aux; ++i) idx[i] = i;
  std::vector<Polynomial> kept;
  for (const auto& g : buchberger(er, gens))
    if (!uses_any(g, idx)) kept.push_back(map_by_names(g, ring));
  return Ideal(ring, std::move(kept));
}

}  // namespace

Ideal saturate(const Ideal& L, const Polynomial& g) {
  if (g.is_zero()) throw Error("saturation by the zero polynomial");
  const auto& ring = L.ring();
  std::string w = fresh_name(ring, "_w");
  auto er = with_elimination_block(ring, {w}, {1});
  auto gens = mapped(L.gens(), er);
  gens.push_back(Polynomial::variable(er, 0) * map_by_names(g, er) -
                 Polynomial::constant(er, FieldElem(1)));
  return eliminate_aux(ring, er, 1, gens);
}

Ideal saturate_ideal(const Ideal& L, const Ideal& K) {
  if (K.is_zero()) throw Error("saturation by the zero ideal");
  // L : K^oo = ∩_i L : k_i^oo; repeated until the result is stable.
  Ideal cur = L;
  for (;;) {
    std::optional<Ideal> acc;
    for (const auto& k : K.gens()) {
      Ideal s = saturate(cur, k);
      acc = acc ? intersect(*acc, s) : s;
    }
    if (*acc == cur) return cur;
    cur = Ideal(L.ring(), acc->gb());
  }
}

Ideal intersect(const Ideal& a, const Ideal& b) {
  if (!(a.ring() == b.ring()) && a.ring()->names() != b.ring()->names()) throw RingMismatch();
  const auto& ring = a.ring();
  std::string u = fresh_name(ring, "_u");
  auto er = with_elimination_block(ring, {u}, {1});
  Polynomial uu = Polynomial::variable(er, 0);
  Polynomial one_minus = Polynomial::constant(er, FieldElem(1)) - uu;
  std::vector<Polynomial> gens;
  for (const auto& g : a.gens()) gens.push_back(uu * map_by_names(g, er));
  for (const auto& g : b.gens()) gens.push_back(one_minus * map_by_names(g, er));
  return eliminate_aux(ring, er, 1, gens);
}

Ideal ideal_quotient(const Ideal& L, const Polynomial& g) {
  if (g.is_zero()) return Ideal::unit(L.ring());
  Ideal inter = intersect(L, Ideal(L.ring(), {g}));
  std::vector<Polynomial> gens;
  for (const auto& h : inter.gb()) gens.push_back(divide_exact(h, g));
  return Ideal(L.ring(), std::move(gens));
}

Ideal ideal_quotient(const Ideal& L, const Ideal& K) {
  std::optional<Ideal> acc;
  for (const auto& k : K.gens()) {
    Ideal q = ideal_quotient(L, k);
    acc = acc ? intersect(*acc, q) : q;
  }
  return acc ? *acc : Ideal::unit(L.ring());
}

bool radical_membership(const Polynomial& f, const Ideal& L) {
  const auto& ring = L.ring();
  if (f.is_zero()) return true;
  std::string w = fresh_name(ring, "_w");
  auto er = with_elimination_block(ring, {w}, {1});
  auto gens = mapped(L.gens(), er);
  gens.push_back(Polynomial::variable(er, 0) * map_by_names(f, er) -
                 Polynomial::constant(er, FieldElem(1)));
  return Ideal(er, gens).is_unit();
}

Polynomial RingMap::apply(const Polynomial& f) const {
  return target_ideal.reduce(substitute(f, images, target));
}

bool RingMap::respects_grading() const {
  for (std::size_t i = 0; i < images.size(); ++i) {
    if (images[i].is_zero()) continue;
    if (!images[i].is_homogeneous(target->grading())) return false;
    if (*weighted_degree(images[i]) != source->grading()[i]) return false;
  }
  return true;
}

Ideal kernel_of_ring_map(const RingMap& phi) {
  if (phi.images.size() != phi.source->num_vars()) throw Error("ring map needs one image per variable");
  const auto& src = *phi.source;
  const auto& tgt = *phi.target;
  // Target variables become an eliminable first block, renamed on clashes.
  std::vector<std::string> tnames;
  for (const auto& n : tgt.names()) {
    std::string m = n;
    while (src.index_of(m) || std::find(tnames.begin(), tnames.end(), m) != tnames.end()) m = "_" + m;
    tnames.push_back(m);
  }
  std::vector<std::string> names = tnames;
  names.insert(names.end(), src.names().begin(), src.names().end());
  std::vector<int> positive = tgt.positive_grading();
  positive.insert(positive.end(), src.positive_grading().begin(), src.positive_grading().end());
  auto order = MonomialOrder::block({MonomialOrder::weighted(tgt.positive_grading()), src.order()});
  auto gr = PolyRing::make(src.field(), names, std::move(order), {}, positive);

  auto into = [&](const Polynomial& f) {  // target element -> graph ring
    std::vector<Term> terms;
    for (const auto& t : f.terms()) {
      Monomial m;
      for (std::size_t i = 0; i < tgt.num_vars(); ++i) m[i] = t.mono[i];
      terms.push_back({m, t.coef});
    }
    return Polynomial::from_terms(gr, std::move(terms));
  };
  std::vector<Polynomial> gens;
  for (std::size_t i = 0; i < src.num_vars(); ++i)
    gens.push_back(Polynomial::variable(gr, tgt.num_vars() + i) - into(phi.images[i]));
  for (const auto& g : phi.target_ideal.gens()) gens.push_back(into(g));

  std::vector<std::size_t> idx(tgt.num_vars());
  for (std::size_t i = 0; i < idx.size(); ++i) idx[i] = i;
  std::vector<Polynomial> kept;
  for (const auto& g : buchberger(gr, gens)) {
    if (uses_any(g, idx)) continue;
    std::vector<Term> terms;
    for (const auto& t : g.terms()) {
      Monomial m;
      for (std::size_t i = 0; i < src.num_vars(); ++i) m[i] = t.mono[tgt.num_vars() + i];
      terms.push_back({m, t.coef});
    }
    kept.push_back(Polynomial::from_terms(phi.source, std::move(terms)));
  }
  return Ideal(phi.source, std::move(kept));
}

int krull_dim(const Ideal& L) {
  if (L.is_unit()) return -1;
  const std::size_t n = L.ring()->num_vars();
  std::vector<Monomial> leads;
  for (const auto& g : L.gb()) leads.push_back(g.leading().mono);
  int best = 0;
  for (std::uint32_t mask = 0; mask < (1u << n); ++mask) {
    int size = __builtin_popcount(mask);
    if (size <= best) continue;
    bool independent = std::none_of(leads.begin(), leads.end(), [&](const Monomial& m) {
      for (std::size_t i = 0; i < n; ++i)
        if (m[i] != 0 && !(mask & (1u << i))) return false;
      return true;
    });
    if (independent) best = size;
  }
  return best;
}

}  // namespace reeskit

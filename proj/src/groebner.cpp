#include "reeskit/groebner.hpp"

#include <algorithm>
#include <set>
#include <tuple>

namespace reeskit {

GbOptions& default_gb_options() {
  static GbOptions opts;
  return opts;
}

Cmp pot_compare(const MonomialOrder& order, const VecTerm& a, const VecTerm& b) {
  if (a.comp != b.comp) return a.comp < b.comp ? Cmp::GT : Cmp::LT;
  return order.compare(a.mono, b.mono);
}

Vec to_vec(const Polynomial& f, std::uint32_t comp) {
  Vec v;
  v.terms.reserve(f.size());
  for (const auto& t : f.terms()) v.terms.push_back({comp, t.mono, t.coef});
  return v;
}

Vec to_vec(const std::vector<Polynomial>& entries) {
  Vec v;
  for (std::uint32_t i = 0; i < entries.size(); ++i)
    for (const auto& t : entries[i].terms()) v.terms.push_back({i, t.mono, t.coef});
  return v;
}

std::vector<Polynomial> from_vec(const ModuleSpace& space, const Vec& v) {
  std::vector<std::vector<Term>> parts(space.rank);
  for (const auto& t : v.terms) parts.at(t.comp).push_back({t.mono, t.coef});
  std::vector<Polynomial> out;
  out.reserve(space.rank);
  for (auto& p : parts) out.push_back(Polynomial::from_terms(space.ring, std::move(p)));
  return out;
}

Vec vec_from_terms(const ModuleSpace& space, std::vector<VecTerm> terms) {
  const auto& ord = space.ring->order();
  const Field& k = space.ring->field();
  std::sort(terms.begin(), terms.end(),
            [&](const VecTerm& a, const VecTerm& b) { return pot_compare(ord, a, b) == Cmp::GT; });
  Vec v;
  for (auto& t : terms) {
    if (!v.terms.empty() && v.terms.back().comp == t.comp && v.terms.back().mono == t.mono) {
      v.terms.back().coef = k.add(v.terms.back().coef, t.coef);
      if (Field::is_zero(v.terms.back().coef)) v.terms.pop_back();
    } else {
      FieldElem c = k.normalize(t.coef);
      if (!Field::is_zero(c)) v.terms.push_back({t.comp, t.mono, std::move(c)});
    }
  }
  return v;
}

namespace {

// Merge of f[from..] with c*m*g.
Vec combine_tail(const ModuleSpace& space, const Vec& f, std::size_t from, const Vec& g,
                 const FieldElem& c, const Monomial& m) {
  const auto& ord = space.ring->order();
  const Field& k = space.ring->field();
  Vec r;
  r.terms.reserve(f.terms.size() - from + g.terms.size());
  std::size_t i = from, j = 0;
  const auto& a = f.terms;
  const auto& b = g.terms;
  while (i < a.size() || j < b.size()) {
    Cmp cmp;
    VecTerm bt;
    if (j < b.size()) bt = {b[j].comp, b[j].mono * m, FieldElem()};
    if (i == a.size())
      cmp = Cmp::LT;
    else if (j == b.size())
      cmp = Cmp::GT;
    else
      cmp = pot_compare(ord, a[i], bt);
    if (cmp == Cmp::GT) {
      r.terms.push_back(a[i++]);
    } else if (cmp == Cmp::LT) {
      bt.coef = k.mul(c, b[j].coef);
      r.terms.push_back(std::move(bt));
      ++j;
    } else {
      FieldElem v = k.add(a[i].coef, k.mul(c, b[j].coef));
      if (!Field::is_zero(v)) r.terms.push_back({a[i].comp, a[i].mono, std::move(v)});
      ++i;
      ++j;
    }
  }
  return r;
}

}  // namespace

Vec vec_combine(const ModuleSpace& space, const Vec& f, const Vec& g, const FieldElem& c,
                const Monomial& m) {
  if (Field::is_zero(c)) return f;
  return combine_tail(space, f, 0, g, c, m);
}

Vec vec_scale(const ModuleSpace& space, const Vec& f, const FieldElem& c) {
  const Field& k = space.ring->field();
  Vec r;
  if (Field::is_zero(c)) return r;
  r.terms.reserve(f.terms.size());
  for (const auto& t : f.terms) r.terms.push_back({t.comp, t.mono, k.mul(t.coef, c)});
  return r;
}

Vec vec_monic(const ModuleSpace& space, const Vec& f) {
  if (f.is_zero() || Field::is_one(f.lead().coef)) return f;
  return vec_scale(space, f, space.ring->field().inv(f.lead().coef));
}

bool vec_equal(const Vec& a, const Vec& b) {
  if (a.terms.size() != b.terms.size()) return false;
  for (std::size_t i = 0; i < a.terms.size(); ++i) {
    const auto &s = a.terms[i], &t = b.terms[i];
    if (s.comp != t.comp || !(s.mono == t.mono) || s.coef != t.coef) return false;
  }
  return true;
}

namespace {

struct ReducerIndex {
  // Per component, indices into the reducer list.
  std::vector<std::vector<std::size_t>> by_comp;
  ReducerIndex(std::size_t rank, const std::vector<Vec>& g) : by_comp(rank) {
    for (std::size_t i = 0; i < g.size(); ++i)
      if (!g[i].is_zero()) by_comp.at(g[i].lead().comp).push_back(i);
  }
  const Vec* find(const std::vector<Vec>& g, const VecTerm& t) const {
    for (std::size_t i : by_comp[t.comp])
      if (g[i].lead().mono.divides(t.mono)) return &g[i];
    return nullptr;
  }
};

Vec reduce_with(const ModuleSpace& space, Vec f, const std::vector<Vec>& g, const ReducerIndex& idx) {
  const Field& k = space.ring->field();
  Vec done;
  std::size_t pos = 0;
  while (pos < f.terms.size()) {
    const VecTerm& t = f.terms[pos];
    const Vec* r = idx.find(g, t);
    if (!r) {
      done.terms.push_back(t);
      ++pos;
      continue;
    }
    FieldElem c = k.neg(k.mul(t.coef, k.inv(r->lead().coef)));
    Monomial m = t.mono / r->lead().mono;
    f = combine_tail(space, f, pos, *r, c, m);
    pos = 0;
  }
  return done;
}

}  // namespace

Vec normal_form(const ModuleSpace& space, const Vec& f, const std::vector<Vec>& g) {
  ReducerIndex idx(space.rank, g);
  return reduce_with(space, f, g, idx);
}

Vec s_vector(const ModuleSpace& space, const Vec& f, const Vec& g) {
  const Field& k = space.ring->field();
  const auto& a = f.lead();
  const auto& b = g.lead();
  if (a.comp != b.comp) throw Error("S-vector of leads in different components");
  Monomial l = lcm(a.mono, b.mono);
  Vec left = vec_scale(space, f, k.inv(a.coef));
  // (l/lm f) * f/lc f - (l/lm g) * g/lc g
  Vec lf = combine_tail(space, Vec{}, 0, left, FieldElem(1), l / a.mono);
  return combine_tail(space, lf, 0, g, k.neg(k.inv(b.coef)), l / b.mono);
}

std::vector<Vec> groebner_basis(const ModuleSpace& space, std::vector<Vec> gens, const GbOptions& opts) {
  std::vector<Vec> basis;
  for (auto& g : gens)
    if (!g.is_zero()) basis.push_back(vec_monic(space, g));

  using Key = std::tuple<long, std::size_t, std::size_t>;  // (lcm degree, j, i)
  std::set<Key> queue;
  std::set<std::pair<std::size_t, std::size_t>> pending;
  auto add_pairs = [&](std::size_t j) {
    for (std::size_t i = 0; i < j; ++i) {
      if (basis[i].lead().comp != basis[j].lead().comp) continue;
      Monomial l = lcm(basis[i].lead().mono, basis[j].lead().mono);
      long deg = space.ring->positive_degree(l) + space.shift(basis[j].lead().comp);
      queue.insert({deg, j, i});
      pending.insert({i, j});
    }
  };
  for (std::size_t j = 0; j < basis.size(); ++j) add_pairs(j);

  std::size_t processed = 0;
  while (!queue.empty()) {
    auto [deg, j, i] = *queue.begin();
    queue.erase(queue.begin());
    pending.erase({i, j});
    const auto& li = basis[i].lead();
    const auto& lj = basis[j].lead();
    if (space.rank == 1 && coprime(li.mono, lj.mono)) continue;
    Monomial l = lcm(li.mono, lj.mono);
    bool chain = false;
    for (std::size_t k = 0; k < basis.size() && !chain; ++k) {
      if (k == i || k == j || basis[k].lead().comp != li.comp) continue;
      if (!basis[k].lead().mono.divides(l)) continue;
      if (!pending.count({std::min(i, k), std::max(i, k)}) &&
          !pending.count({std::min(j, k), std::max(j, k)}))
        chain = true;
    }
    if (chain) continue;
    if (opts.max_pairs && ++processed > opts.max_pairs)
      throw CapExceeded("Gröbner basis pair limit exceeded (" + std::to_string(opts.max_pairs) + ")");
    Vec s = normal_form(space, s_vector(space, basis[i], basis[j]), basis);
    if (s.is_zero()) continue;
    basis.push_back(vec_monic(space, s));
    add_pairs(basis.size() - 1);
  }

  // Minimalize: drop elements whose lead is divisible by an earlier-kept lead.
  std::vector<Vec> minimal;
  std::vector<std::size_t> order(basis.size());
  for (std::size_t i = 0; i < order.size(); ++i) order[i] = i;
  const auto& ord = space.ring->order();
  std::stable_sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) {
    return pot_compare(ord, basis[a].lead(), basis[b].lead()) == Cmp::LT;
  });
  for (std::size_t idx : order) {
    const auto& t = basis[idx].lead();
    bool redundant = std::any_of(minimal.begin(), minimal.end(), [&](const Vec& m) {
      return m.lead().comp == t.comp && m.lead().mono.divides(t.mono);
    });
    if (!redundant) minimal.push_back(basis[idx]);
  }
  // Tail-reduce each element against the others.
  for (std::size_t i = 0; i < minimal.size(); ++i) {
    Vec head;
    head.terms.push_back(minimal[i].terms.front());
    Vec tail;
    tail.terms.assign(minimal[i].terms.begin() + 1, minimal[i].terms.end());
    std::vector<Vec> others;
    for (std::size_t j = 0; j < minimal.size(); ++j)
      if (j != i) others.push_back(minimal[j]);
    Vec red = normal_form(space, tail, others);
    head.terms.insert(head.terms.end(), red.terms.begin(), red.terms.end());
    minimal[i] = vec_monic(space, head);
  }
  std::sort(minimal.begin(), minimal.end(), [&](const Vec& a, const Vec& b) {
    return pot_compare(ord, a.lead(), b.lead()) == Cmp::GT;
  });
  return minimal;
}

bool satisfies_buchberger_criterion(const ModuleSpace& space, const std::vector<Vec>& gb) {
  for (std::size_t i = 0; i < gb.size(); ++i)
    for (std::size_t j = i + 1; j < gb.size(); ++j) {
      if (gb[i].lead().comp != gb[j].lead().comp) continue;
      if (!normal_form(space, s_vector(space, gb[i], gb[j]), gb).is_zero()) return false;
    }
  return true;
}

}  // namespace reeskit

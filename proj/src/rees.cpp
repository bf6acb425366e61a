#include "reeskit/rees.hpp"

#include <algorithm>
#include <sstream>

namespace reeskit {

RingPtr standard_ring(Field k, const std::vector<std::string>& names) {
  std::vector<int> ones(names.size(), 1);
  return PolyRing::make(k, names, MonomialOrder::degrevlex(names.size()), ones, ones);
}

namespace {

int standard_degree(const Polynomial& f) {
  if (f.is_zero()) throw Error("zero polynomial has no degree");
  int d = f.leading().mono.total_degree();
  for (const auto& t : f.terms())
    if (t.mono.total_degree() != d) throw Error("polynomial " + f.to_string() + " is not homogeneous");
  return d;
}

std::vector<Polynomial> into(const std::vector<Polynomial>& fs, const RingPtr& target) {
  std::vector<Polynomial> out;
  for (const auto& f : fs) out.push_back(map_by_names(f, target));
  return out;
}

}  // namespace

BaseRing BaseRing::make_unchecked(RingPtr ring, std::vector<Polynomial> forms) {
  BaseRing b;
  b.ring = std::move(ring);
  forms.erase(std::remove_if(forms.begin(), forms.end(), [](const Polynomial& f) { return f.is_zero(); }),
              forms.end());
  b.forms = std::move(forms);
  Ideal f(b.ring, b.forms);
  b.A = QuotientRing(f);
  b.dim = krull_dim(f);
  b.complete_intersection =
      static_cast<int>(b.ring->num_vars()) - b.dim == static_cast<int>(b.forms.size());
  return b;
}

BaseRing BaseRing::make(RingPtr ring, std::vector<Polynomial> forms) {
  for (int w : ring->positive_grading())
    if (w != 1) throw Error("base ring must be standard graded");
  for (const auto& f : forms) {
    if (f.is_zero()) throw Error("zero defining form");
    if (standard_degree(f) < 2) throw Error("defining form " + f.to_string() + " has degree < 2");
  }
  auto b = make_unchecked(std::move(ring), std::move(forms));
  if (!b.complete_intersection) throw Error("defining forms are not a regular sequence (height differs from count)");
  return b;
}

int height_of(const Ideal& l, const QuotientRing& ambient) {
  Ideal sum = l.plus(ambient.defining().gens());
  if (sum.is_unit()) throw Error("height of the unit ideal");
  return krull_dim(ambient.defining()) - krull_dim(sum);
}

int embdim(const QuotientRing& q) {
  const auto& ring = q.ring();
  const auto& w = ring->positive_grading();
  const auto& gens = q.defining().gens();
  if (std::all_of(gens.begin(), gens.end(), [&](const Polynomial& g) { return g.is_homogeneous(w); }))
    return static_cast<int>(minimal_generators(maximal_ideal(ring), q).size());
  // At the origin: variables minus the rank of the linear parts.
  std::vector<Polynomial> lin;
  for (const auto& g : gens) {
    Polynomial l(ring);
    for (const auto& t : g.terms()) {
      int d = 0;
      for (std::size_t i = 0; i < ring->num_vars(); ++i) d += t.mono[i];
      if (d == 0) throw Error("embedding dimension: defining ideal is not inside m");
      if (d == 1) l += Polynomial::constant(ring, 1).times_term(t.mono, t.coef);
    }
    if (!l.is_zero()) lin.push_back(l);
  }
  std::vector<Monomial> leads;
  for (const auto& g : Ideal(ring, lin).gb())
    if (std::find(leads.begin(), leads.end(), g.leading().mono) == leads.end()) leads.push_back(g.leading().mono);
  return static_cast<int>(ring->num_vars() - leads.size());
}

bool is_regular_element(const BaseRing& a, const Polynomial& x) {
  Ideal f = a.defining();
  if (f.contains(x)) return false;
  return ideal_quotient(f, x) == f;
}

namespace {

// Minimal generators when everything is graded; over a base cut out by an
// inhomogeneous element (later steps of a superficial sequence) only
// redundant generators are dropped, which is all those steps need.
std::vector<Polynomial> pruned_generators(const Ideal& l, const QuotientRing& base) {
  const auto& w = l.ring()->positive_grading();
  auto graded = [&](const std::vector<Polynomial>& v) {
    return std::all_of(v.begin(), v.end(), [&](const Polynomial& f) { return f.is_homogeneous(w); });
  };
  if (graded(l.gens()) && graded(base.defining().gens())) return minimal_generators(l, base);
  std::vector<Polynomial> out;
  for (const auto& g : l.gens())
    if (!base.is_zero(g)) out.push_back(g);
  for (std::size_t i = out.size(); i-- > 0;) {
    std::vector<Polynomial> others = base.defining().gens();
    for (std::size_t j = 0; j < out.size(); ++j)
      if (j != i) others.push_back(out[j]);
    if (Ideal(l.ring(), others).contains(out[i])) out.erase(out.begin() + static_cast<long>(i));
  }
  return out;
}

}  // namespace

ReesPresentation rees_presentation(const BaseRing& a, const std::vector<Polynomial>& input) {
  const auto& y = a.ring;
  std::vector<Polynomial> gens;
  for (const auto& g : input) {
    if (g.ring() != y && g.ring()->names() != y->names()) throw RingMismatch();
    auto h = map_by_names(g, y);
    if (a.A.is_zero(h)) continue;
    if (standard_degree(h) < 1) throw Error("generator " + h.to_string() + " is not in the maximal ideal");
    gens.push_back(h);
  }
  if (gens.empty()) throw Error("ideal is zero in the base ring");
  gens = pruned_generators(Ideal(y, gens), a.A);
  if (height_of(Ideal(y, gens), a.A) < 1) throw Error("ideal has height 0 (every generator is a zerodivisor)");

  ReesPresentation r;
  r.base = a;
  r.gens = gens;
  std::size_t m = y->num_vars(), n = gens.size();
  for (const auto& g : gens) r.gen_degrees.push_back(standard_degree(g));

  std::vector<std::string> names = y->names();
  for (std::size_t i = 0; i < n; ++i) {
    std::string x = "X" + std::to_string(i + 1);
    if (y->index_of(x) || y->index_of("T") || y->index_of("t"))
      throw Error("base variable names clash with X_i, T or t");
    names.push_back(x);
  }
  std::vector<int> tdeg(m, 0), pos(m, 2);
  for (std::size_t i = 0; i < n; ++i) {
    tdeg.push_back(1);
    pos.push_back(2 * r.gen_degrees[i] - 1);
  }
  r.S = PolyRing::make(y->field(), names, MonomialOrder::weighted(pos), tdeg, pos);

  // J by elimination of t from (X_i - a_i t) + (f) in k[t, y, X].
  std::vector<std::string> gnames{"t"};
  gnames.insert(gnames.end(), names.begin(), names.end());
  std::vector<int> gw{1};
  gw.insert(gw.end(), m, 1);
  for (int e : r.gen_degrees) gw.push_back(e + 1);
  auto graph = PolyRing::make(y->field(), gnames, MonomialOrder::weighted(gw), {}, gw);
  auto t = Polynomial::variable(graph, 0);
  std::vector<Polynomial> gg = into(a.forms, graph);
  for (std::size_t i = 0; i < n; ++i)
    gg.push_back(Polynomial::variable(graph, 1 + m + i) - map_by_names(gens[i], graph) * t);
  Ideal elim = eliminate(Ideal(graph, gg), {"t"});
  r.J = Ideal(r.S, into(elim.gb(), r.S));

  r.SA = QuotientRing(Ideal(r.S, into(a.forms, r.S)));
  r.R = QuotientRing(r.J, a.A.is_domain() ? DomainFlag::Verified : DomainFlag::Unknown);
  std::vector<Polynomial> xs;
  for (std::size_t i = 0; i < n; ++i) xs.push_back(Polynomial::variable(r.S, m + i));
  r.plus = Ideal(r.S, xs);
  r.J_min = pruned_generators(r.J, r.SA);
  return r;
}

ExtReesPresentation ext_rees_presentation(const ReesPresentation& r) {
  const auto& y = r.base.ring;
  std::size_t m = y->num_vars(), n = r.gens.size();
  ExtReesPresentation e;
  auto names = r.S->names();
  names.push_back("T");
  auto tdeg = r.S->grading();
  tdeg.push_back(-1);
  auto pos = r.S->positive_grading();
  pos.push_back(1);
  e.S = PolyRing::make(y->field(), names, MonomialOrder::weighted(pos), tdeg, pos);
  e.T = Polynomial::variable(e.S, m + n);

  std::vector<Polynomial> gens = into(r.J.gens(), e.S);
  for (std::size_t i = 0; i < n; ++i)
    gens.push_back(e.T * Polynomial::variable(e.S, m + i) - map_by_names(r.gens[i], e.S));
  e.J = Ideal(e.S, gens);

  // Kernel of y -> y, X_i -> a_i u, T -> T with u T = 1, eliminating u.
  std::vector<std::string> knames{"u"};
  knames.insert(knames.end(), names.begin(), names.end());
  std::vector<int> kw{1};
  kw.insert(kw.end(), pos.begin(), pos.end());
  auto kr = PolyRing::make(y->field(), knames, MonomialOrder::weighted(kw), {}, kw);
  auto u = Polynomial::variable(kr, 0);
  std::vector<Polynomial> kg = into(r.base.forms, kr);
  for (std::size_t i = 0; i < n; ++i)
    kg.push_back(Polynomial::variable(kr, 1 + m + i) - map_by_names(r.gens[i], kr) * u);
  kg.push_back(Polynomial::variable(kr, 1 + m + n) * u - Polynomial::constant(kr, 1));
  e.J_kernel = Ideal(e.S, into(eliminate(Ideal(kr, kg), {"u"}).gb(), e.S));
  if (!(e.J == e.J_kernel)) throw Error("extended Rees ideal: formula and kernel disagree");

  e.SA = QuotientRing(Ideal(e.S, into(r.base.forms, e.S)));
  e.R = QuotientRing(e.J, r.base.A.is_domain() ? DomainFlag::Verified : DomainFlag::Unknown);
  std::vector<Polynomial> xs;
  for (std::size_t i = 0; i < n; ++i) xs.push_back(Polynomial::variable(e.S, m + i));
  e.plus = Ideal(e.S, xs);
  e.J_min = pruned_generators(e.J, e.SA);
  return e;
}

QuotientRing assoc_graded(const ExtReesPresentation& e) { return QuotientRing(e.J.plus({e.T})); }

RandomOptions& default_random_options() {
  static RandomOptions opts;
  return opts;
}

long draw(std::mt19937_64& rng, long box) {
  auto span = static_cast<std::uint64_t>(2 * box + 1);
  return static_cast<long>(rng() % span) - box;
}

bool superficial_identity_holds(const BaseRing& a, const Ideal& i, const Polynomial& x, int c, int n) {
  Ideal f = a.defining();
  Ideal lhs = intersect(ideal_quotient(i.power(n + 1) + f, x), i.power(c) + f);
  return lhs == i.power(n) + f;
}

std::optional<SuperficialCertificate> certify_superficial(const ReesPresentation& r, const ExtReesPresentation& e,
                                                         const std::vector<long>& coefficients,
                                                         const RandomOptions& opts) {
  std::size_t m = r.base.ring->num_vars(), n = r.gens.size();
  if (coefficients.size() != n) throw Error("one coefficient per generator expected");
  SuperficialCertificate cert;
  cert.coefficients = coefficients;
  cert.x = Polynomial(r.base.ring);
  Polynomial xstar(e.S);
  for (std::size_t i = 0; i < n; ++i) {
    if (coefficients[i] == 0) continue;
    FieldElem c = r.base.ring->field().from_int(coefficients[i]);
    cert.x += r.gens[i].scaled(c);
    xstar += Polynomial::variable(e.S, m + i).scaled(c);
  }
  if (xstar.is_zero() || r.base.A.is_zero(cert.x)) return std::nullopt;

  Ideal g = e.J.plus({e.T});
  Ideal u = ideal_quotient(g, xstar);
  if (!saturate_ideal(g, e.plus).contains(u)) return std::nullopt;
  int c = 0;
  for (;; ++c) {
    if (c > 64) throw CapExceeded("annihilator of the initial form does not vanish in bounded degree");
    Ideal window = c == 0 ? Ideal::unit(e.S) : e.plus.power(c) + g;
    if (g.contains(intersect(u, window))) break;
  }
  cert.c = std::max(1, c);
  cert.n0 = cert.c;
  Ideal i = r.I();
  for (int k = cert.n0; k <= opts.window; ++k)
    if (!superficial_identity_holds(r.base, i, cert.x, cert.c, k))
      throw Error("superficial element " + cert.x.to_string() + " passes the gr-criterion but fails the colon identity at n = " +
                  std::to_string(k));
  cert.verified_through = std::max(cert.n0 - 1, opts.window);
  cert.method = "gr-torsion; direct-colon n=" + std::to_string(cert.n0) + ".." + std::to_string(opts.window);
  return cert;
}

namespace {

std::vector<long> draw_coefficients(std::mt19937_64& rng, std::size_t n, long box) {
  std::vector<long> out(n);
  for (auto& v : out) v = draw(rng, box);
  return out;
}

}  // namespace

SuperficialCertificate superficial_element(const ReesPresentation& r, std::uint64_t seed, const RandomOptions& opts) {
  if (!r.base.ring->field().is_rational()) throw Error("superficial elements are drawn over QQ only");
  auto e = ext_rees_presentation(r);
  std::mt19937_64 rng(seed);
  int tried = 0;
  std::ostringstream failed;
  for (int round = 0; round < opts.rounds; ++round) {
    long box = opts.initial_box << round;
    for (int k = 0; k < opts.per_round; ++k) {
      auto lambda = draw_coefficients(rng, r.gens.size(), box);
      if (std::all_of(lambda.begin(), lambda.end(), [](long v) { return v == 0; })) continue;
      ++tried;
      auto cert = certify_superficial(r, e, lambda, opts);
      if (cert) {
        cert->candidates_tried = tried;
        return *cert;
      }
      if (tried <= 4) {
        failed << " (";
        for (std::size_t i = 0; i < lambda.size(); ++i) failed << (i ? "," : "") << lambda[i];
        failed << ")";
      }
    }
  }
  throw Error("no superficial element found after " + std::to_string(tried) + " candidates; first failures:" +
              failed.str());
}

std::optional<int> reduction_number(const BaseRing& a, const Ideal& i, const Ideal& q, int cap) {
  Ideal f = a.defining();
  if (!(i + f).contains(q)) throw Error("Q is not contained in I");
  // An inhomogeneous Q may have zeros away from the origin, so equality is
  // tested at the origin: Q I^n + f has a colon by I^{n+1} outside m.
  const auto& w = a.ring->positive_grading();
  bool graded = std::all_of(q.gens().begin(), q.gens().end(), [&](const Polynomial& g) { return g.is_homogeneous(w); });
  Ideal in = Ideal::unit(a.ring);  // I^n
  for (int n = 0; n <= cap; ++n) {
    Ideal next = in * i;  // I^{n+1}
    if (graded ? next + f == q * in + f : (ideal_quotient(q * in + f, next + f) + a.maximal()).is_unit()) return n;
    in = next;
  }
  return std::nullopt;
}

ReductionCertificate minimal_reduction(const ReesPresentation& r, int height, std::uint64_t seed,
                                       const RandomOptions& opts) {
  if (height < 1) throw Error("reduction needs height >= 1");
  ReductionCertificate out;
  BaseRing cur = r.base;
  for (int j = 0; j < height; ++j) {
    auto rr = j == 0 ? r : rees_presentation(cur, r.gens);
    auto cert = superficial_element(rr, seed + static_cast<std::uint64_t>(j), opts);
    out.sequence.push_back(cert);
    out.Q.push_back(cert.x);
    auto forms = cur.forms;
    forms.push_back(cert.x);
    cur = BaseRing::make_unchecked(r.base.ring, forms);
  }
  auto nbar = reduction_number(r.base, r.I(), Ideal(r.base.ring, out.Q), opts.red_cap);
  if (!nbar) throw CapExceeded("no reduction number <= " + std::to_string(opts.red_cap));
  out.reduction_number = *nbar;
  return out;
}

std::vector<Polynomial> regular_generators(const BaseRing& a, const std::vector<Polynomial>& input,
                                           std::uint64_t seed, const RandomOptions& opts) {
  if (!a.ring->field().is_rational()) throw Error("regular generators are drawn over QQ only");
  auto gens = minimal_generators(Ideal(a.ring, input), a.A);
  if (std::all_of(gens.begin(), gens.end(), [&](const Polynomial& g) { return is_regular_element(a, g); }))
    return gens;
  const Field& k = a.ring->field();
  std::size_t n = gens.size(), nv = a.ring->num_vars();
  std::vector<int> deg;
  for (const auto& g : gens) deg.push_back(standard_degree(g));
  std::mt19937_64 rng(seed);
  for (int round = 0; round < opts.rounds; ++round) {
    long box = opts.initial_box << round;
    for (int cand = 0; cand < opts.per_round; ++cand) {
      // Random combinations, same-degree generators with constant weights and
      // lower-degree ones through monomial multiples; kept only if they still
      // generate I minimally.
      std::vector<Polynomial> out;
      bool ok = true;
      for (std::size_t j = 0; j < n && ok; ++j) {
        Polynomial h(a.ring);
        for (std::size_t l = 0; l < n; ++l) {
          if (deg[l] > deg[j]) continue;
          long lam = draw(rng, box);
          if (lam == 0) continue;
          Monomial mono;
          for (int s = 0; s < deg[j] - deg[l]; ++s) mono[rng() % nv] += 1;
          h += gens[l].times_term(mono, k.from_int(lam));
        }
        if (!is_regular_element(a, h)) ok = false;
        out.push_back(h);
      }
      if (!ok) continue;
      Ideal target = Ideal(a.ring, gens) + a.defining();
      if (!(Ideal(a.ring, out) + a.defining() == target)) continue;
      if (minimal_generators(Ideal(a.ring, out), a.A).size() != n) continue;
      return out;
    }
  }
  throw Error("no regular generating set found within the retry budget");
}

}  // namespace reeskit

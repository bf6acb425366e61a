#include "reeskit/verifiers.hpp"

#include <algorithm>
#include <chrono>
#include <functional>
#include <sstream>

namespace reeskit {

std::string to_string(ReportStatus s) {
  switch (s) {
    case ReportStatus::Consistent: return "consistent";
    case ReportStatus::Violation: return "VIOLATION";
    case ReportStatus::Inapplicable: return "inapplicable";
    case ReportStatus::Error: return "error";
  }
  return "?";
}

void TheoremReport::add(std::string name, std::variant<bool, long, std::string> v, std::string cert) {
  verdicts.push_back({std::move(name), std::move(v), std::move(cert)});
}

const Verdict* TheoremReport::find(const std::string& name) const {
  for (const auto& v : verdicts)
    if (v.name == name) return &v;
  return nullptr;
}

bool TheoremReport::flag(const std::string& name) const {
  auto v = find(name);
  if (!v || !std::holds_alternative<bool>(v->value)) throw Error("report " + check + " has no flag " + name);
  return std::get<bool>(v->value);
}

long TheoremReport::integer(const std::string& name) const {
  auto v = find(name);
  if (!v || !std::holds_alternative<long>(v->value)) throw Error("report " + check + " has no integer " + name);
  return std::get<long>(v->value);
}

namespace {

std::string describe(const ReesPresentation& r) {
  std::ostringstream out;
  const auto& y = r.base.ring;
  out << y->field().name() << "[";
  for (std::size_t i = 0; i < y->num_vars(); ++i) out << (i ? "," : "") << y->name(i);
  out << "]";
  if (!r.base.forms.empty()) {
    out << "/(";
    for (std::size_t i = 0; i < r.base.forms.size(); ++i) out << (i ? ", " : "") << r.base.forms[i].to_string();
    out << ")";
  }
  out << ", I = (";
  for (std::size_t i = 0; i < r.gens.size(); ++i) out << (i ? ", " : "") << r.gens[i].to_string();
  out << ")";
  return out.str();
}

TheoremReport start(const std::string& check, const Analysis& a) {
  TheoremReport rep;
  rep.check = check;
  rep.input = describe(a.rees());
  return rep;
}

TheoremReport inapplicable(TheoremReport rep, const std::string& why) {
  rep.status = ReportStatus::Inapplicable;
  rep.note = why;
  return rep;
}

const char* side_name(Side s) { return s == Side::Rees ? "rees" : "ext"; }

bool in_radical_all(const std::vector<Polynomial>& gens, const Ideal& l) {
  return std::all_of(gens.begin(), gens.end(), [&](const Polynomial& g) { return radical_membership(g, l); });
}

// Reduced Gröbner basis: canonical, and far shorter than a list of minors.
std::string ideal_text(const Ideal& l) {
  if (l.is_unit()) return "(1)";
  return Ideal(l.ring(), l.gb()).to_string();
}

bool eventually_zero(PlusStatus s) { return s != PlusStatus::NotPlusTorsion; }

}  // namespace

TheoremReport guarded(const std::string& check, const std::string& input,
                      const std::function<TheoremReport()>& body) {
  auto t0 = std::chrono::steady_clock::now();
  TheoremReport rep;
  try {
    rep = body();
  } catch (const std::exception& ex) {
    rep = TheoremReport{};
    rep.check = check;
    rep.input = input;
    rep.status = ReportStatus::Error;
    rep.note = ex.what();
  }
  rep.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
  return rep;
}

Analysis::Analysis(ReesPresentation r) : r_(std::move(r)), e_(ext_rees_presentation(r_)) {}

const KoszulData& Analysis::koszul(Side s) {
  auto& c = cache(s);
  if (!c.k) c.k = reeskit::koszul(J_min(s), SA(s));
  return *c.k;
}

const AQModule& Analysis::h1(Side s) {
  auto& c = cache(s);
  if (!c.h1) c.h1 = H1(koszul(s));
  return *c.h1;
}

const AQModule& Analysis::d2(Side s) {
  auto& c = cache(s);
  if (!c.d2) c.d2 = D2(koszul(s));
  return *c.d2;
}

const AQModule& Analysis::d3(Side s) {
  auto& c = cache(s);
  if (!c.d3) c.d3 = D3(koszul(s), h1(s));
  return *c.d3;
}

const FreeLocus& Analysis::h1_locus(Side s) {
  auto& c = cache(s);
  if (!c.free) c.free = free_locus(h1(s), R(s), plus(s));
  return *c.free;
}

const LciLocus& Analysis::lci_locus(Side s) {
  auto& c = cache(s);
  if (!c.lci) c.lci = proj_lci_locus(J(s), plus(s));
  return *c.lci;
}

CiData ci_data(const Ideal& k) {
  auto p = QuotientRing::polynomial(k.ring());
  CiData out;
  out.mu = static_cast<long>(minimal_generators(k, p).size());
  out.height = height_of(k, p);
  return out;
}

FreeLocus free_locus(const AQModule& m, const QuotientRing& r, const Ideal& plus) {
  FreeLocus out;
  out.rank = sq_rank(m.m, r);
  if (out.rank >= 1)
    out.fitting = fitting_ideal(presentation(m.m).over(r), out.rank);
  else
    out.fitting = sq_annihilator(m.m) + r.defining();
  out.on_proj = in_radical_all(plus.gens(), out.fitting);
  return out;
}

LciLocus proj_lci_locus(const Ideal& k, const Ideal& plus) {
  const auto& ring = k.ring();
  auto p = QuotientRing::polynomial(ring);
  LciLocus out;
  out.height = height_of(k, p);
  auto gens = minimal_generators(k, p);
  auto pres = presentation(conormal_module(Ideal(ring, gens), p)).over(QuotientRing(k));
  out.fitting = fitting_ideal(pres, out.height);
  out.on_proj = in_radical_all(plus.gens(), out.fitting);
  return out;
}

// ---- t-degree lengths -----------------------------------------------------

namespace {

// All exponent vectors of length n with entries summing to total.
void compositions(std::size_t n, long total, std::vector<long>& cur, const std::function<void()>& visit) {
  if (n == 0) {
    if (total == 0) visit();
    return;
  }
  if (n == 1) {
    cur.push_back(total);
    visit();
    cur.pop_back();
    return;
  }
  for (long v = 0; v <= total; ++v) {
    cur.push_back(v);
    compositions(n - 1, total - v, cur, visit);
    cur.pop_back();
  }
}

struct Bigrading {
  RingPtr ring;
  std::vector<std::size_t> ys, xs;  // variable indices with t-degree 0 and 1
  std::vector<long> x_internal;     // internal degree of each X

  explicit Bigrading(const RingPtr& r) : ring(r) {
    const auto& t = r->grading();
    const auto& p = r->positive_grading();
    for (std::size_t i = 0; i < r->num_vars(); ++i) {
      if (t[i] == 0 && p[i] == 2) {
        ys.push_back(i);
      } else if (t[i] == 1) {
        xs.push_back(i);
        x_internal.push_back((p[i] + 1) / 2);
      } else {
        throw Error("t-degree lengths need y of t-degree 0 and X of t-degree 1");
      }
    }
  }
  long t_degree(const Monomial& m) const { return ring->degree(m); }
  long internal(const Monomial& m) const { return (ring->positive_degree(m) + ring->degree(m)) / 2; }
};

// Number of monomials m * e_comp of t-degree n and internal degree q outside
// the leading module `leads`.
long standard_count(const Bigrading& g, const std::vector<VecTerm>& leads, std::size_t comp, long t_shift,
                    long i_shift, long n, long q) {
  long xdeg = n - t_shift, rest = q - i_shift;
  if (xdeg < 0 || rest < 0) return 0;
  long count = 0;
  std::vector<long> b;
  compositions(g.xs.size(), xdeg, b, [&] {
    long xin = 0;
    for (std::size_t i = 0; i < b.size(); ++i) xin += b[i] * g.x_internal[i];
    long ydeg = rest - xin;
    if (ydeg < 0) return;
    std::vector<long> a;
    compositions(g.ys.size(), ydeg, a, [&] {
      Monomial m;
      for (std::size_t i = 0; i < a.size(); ++i) m[g.ys[i]] = static_cast<int>(a[i]);
      for (std::size_t i = 0; i < b.size(); ++i) m[g.xs[i]] = static_cast<int>(b[i]);
      for (const auto& l : leads)
        if (l.comp == comp && l.mono.divides(m)) return;
      ++count;
    });
  });
  return count;
}

std::vector<VecTerm> leads_of(const Submodule& s) {
  std::vector<VecTerm> out;
  for (const auto& v : s.gb()) out.push_back(v.lead());
  return out;
}

}  // namespace

std::vector<long> t_degree_lengths(const Subquotient& m, const std::vector<long>& t_shifts, int from, int count) {
  std::vector<long> out(static_cast<std::size_t>(std::max(count, 0)), 0);
  if (m.is_zero()) return out;
  const auto& ring = m.base().ring();
  Bigrading g(ring);
  const auto& f = m.ambient();
  if (t_shifts.size() != f.rank) throw Error("t-degree lengths: one t-shift per basis vector");
  std::vector<long> i_shift(f.rank);
  for (std::size_t c = 0; c < f.rank; ++c) i_shift[c] = (f.shift(c) + t_shifts[c]) / 2;

  std::vector<std::pair<long, long>> gens;  // (t-degree, internal degree)
  for (const auto& v : m.numerator().gens()) {
    for (std::size_t c = 0; c < f.rank; ++c) {
      if (v[c].is_zero()) continue;
      const auto& mono = v[c].leading().mono;
      gens.push_back({g.t_degree(mono) + t_shifts[c], g.internal(mono) + i_shift[c]});
      break;
    }
  }

  // (y)^N kills the module
  Ideal ann = sq_annihilator(m);
  int N = 0;
  for (int k = 1; k <= 64 && !N; ++k) {
    bool all = true;
    std::vector<long> a;
    compositions(g.ys.size(), k, a, [&] {
      if (!all) return;
      Monomial mono;
      for (std::size_t i = 0; i < a.size(); ++i) mono[g.ys[i]] = static_cast<int>(a[i]);
      if (!ann.contains(Polynomial::monomial(ring, mono, FieldElem(1)))) all = false;
    });
    if (all) N = k;
  }
  if (!N) throw Error("module is not killed by a power of the base variables (up to 64)");
  long emax = g.x_internal.empty() ? 0 : *std::max_element(g.x_internal.begin(), g.x_internal.end());

  auto zl = leads_of(m.numerator()), bl = leads_of(m.denominator());
  for (int k = 0; k < count; ++k) {
    long n = from + k;
    long qmax = -1;
    for (auto [t, q] : gens)
      if (t <= n) qmax = std::max(qmax, emax * (n - t) + q + N - 1);
    long len = 0;
    for (long q = 0; q <= qmax; ++q)
      for (std::size_t c = 0; c < f.rank; ++c)
        len += standard_count(g, bl, c, t_shifts[c], i_shift[c], n, q) -
               standard_count(g, zl, c, t_shifts[c], i_shift[c], n, q);
    out[static_cast<std::size_t>(k)] = len;
  }
  return out;
}

std::optional<int> polynomial_degree(const std::vector<long>& values) {
  std::vector<long> row = values;
  for (int k = 0; row.size() >= 3; ++k) {
    std::size_t n = row.size();
    if (row[n - 1] == row[n - 2] && row[n - 2] == row[n - 3]) return row[n - 1] == 0 ? k - 1 : k;
    std::vector<long> next;
    for (std::size_t i = 1; i < n; ++i) next.push_back(row[i] - row[i - 1]);
    row = std::move(next);
  }
  return std::nullopt;
}

// ---- verifiers ------------------------------------------------------------

TheoremReport check_rank_formula(Analysis& a) {
  auto rep = start("rank", a);
  const auto& r = a.rees();
  if (!r.base.A.is_domain()) return inapplicable(rep, "base ring not known to be a domain");
  long mu_i = static_cast<long>(r.mu_I());
  rep.add("mu_I", mu_i);
  bool ok = true;
  for (Side s : {Side::Rees, Side::Ext}) {
    std::string tag = side_name(s);
    long rank = sq_rank(a.h1(s).m, a.R(s));
    long mu = static_cast<long>(a.J_min(s).size());
    long rhs = s == Side::Rees ? mu - mu_i + 1 : mu - mu_i;
    rep.add("rank_H1_" + tag, rank, "minors and elimination over " + std::string(s == Side::Rees ? "R" : "R^"));
    rep.add("mu_J_" + tag, mu);
    std::ostringstream eq;
    eq << rank << " = " << rhs;
    bool holds = rank == rhs;
    rep.add("formula_" + tag, holds, eq.str());
    ok = ok && holds;
  }
  rep.status = ok ? ReportStatus::Consistent : ReportStatus::Violation;
  return rep;
}

TheoremReport verify_thm_proj_ci(Analysis& a) {
  auto rep = start("proj-ci", a);
  const auto& r = a.rees();
  if (!r.base.complete_intersection) return inapplicable(rep, "base is not a complete intersection");
  if (!a.char_zero()) return inapplicable(rep, "D3 needs characteristic zero");
  if (!r.R.is_domain()) return inapplicable(rep, "ranks need the base to be a domain");
  std::vector<bool> statement;
  std::vector<bool> raw;
  for (Side s : {Side::Rees, Side::Ext}) {
    const auto& lci = a.lci_locus(s);
    rep.add(std::string("proj_lci_") + side_name(s), lci.on_proj,
            "Fitt_" + std::to_string(lci.height) + "(K/K^2) = " + ideal_text(lci.fitting));
    statement.push_back(lci.on_proj);
    raw.push_back(lci.on_proj);
  }
  for (Side s : {Side::Rees, Side::Ext}) {
    auto st = plus_torsion_status(a.d3(s), a.plus(s));
    const auto& fl = a.h1_locus(s);
    std::string tag = side_name(s);
    rep.add("d3_status_" + tag, to_string(st));
    rep.add("d3_eventually_zero_" + tag, eventually_zero(st));
    rep.add("h1_free_on_proj_" + tag, fl.on_proj,
            "rank " + std::to_string(fl.rank) + ", " + (fl.rank >= 1 ? "Fitt = " : "ann = ") + ideal_text(fl.fitting));
    bool both = eventually_zero(st) && fl.on_proj;
    rep.add("koszul_side_" + tag, both);
    statement.push_back(both);
    raw.push_back(eventually_zero(st));
    raw.push_back(fl.on_proj);
  }
  bool agree = std::all_of(statement.begin(), statement.end(), [&](bool v) { return v == statement[0]; });
  bool raw_agree = std::all_of(raw.begin(), raw.end(), [&](bool v) { return v == raw[0]; });
  rep.add("statements_agree", agree);
  rep.add("six_conditions_equal", raw_agree);
  rep.status = agree ? ReportStatus::Consistent : ReportStatus::Violation;
  return rep;
}

TheoremReport verify_thm_ext_ci(Analysis& a) {
  auto rep = start("ext-ci", a);
  const auto& r = a.rees();
  if (!r.base.complete_intersection) return inapplicable(rep, "base is not a complete intersection");
  if (!a.char_zero()) return inapplicable(rep, "D3 needs characteristic zero");
  if (!a.R(Side::Ext).is_domain()) return inapplicable(rep, "ranks need the base to be a domain");
  auto ci = ci_data(a.J(Side::Ext));
  rep.add("mu_K", ci.mu, "minimal generators of the ideal of R^ in k[y, X, T]");
  rep.add("height_K", ci.height);
  rep.add("complete_intersection", ci.ci());

  long mu_s = static_cast<long>(a.J_min(Side::Ext).size());
  long ht_s = height_of(a.J(Side::Ext), a.SA(Side::Ext));
  rep.add("mu_J_over_S", mu_s);
  rep.add("height_J_over_S", ht_s);
  rep.add("J_regular_sequence_over_S", mu_s == ht_s);

  const auto& h1 = a.h1(Side::Ext);
  int rho = sq_rank(h1.m, a.R(Side::Ext));
  // Minimal graded presentation: Fitt_rank = (1) iff μ = rank, and Fitt_rank-1
  // vanishes over a domain once the rank is rho.
  long mu = h1.is_zero() ? 0 : static_cast<long>(sq_minimal_generators(h1.m, maximal_ideal(a.R(Side::Ext).ring())).mu);
  bool free = mu == rho;
  bool d3_zero = a.d3(Side::Ext).is_zero();
  rep.add("rank_H1", static_cast<long>(rho));
  rep.add("H1_free", free, "mu(H1) = " + std::to_string(mu) + ", rank = " + std::to_string(rho));
  rep.add("D3_zero", d3_zero);
  rep.add("koszul_side", free && d3_zero);
  rep.status = ci.ci() == (free && d3_zero) ? ReportStatus::Consistent : ReportStatus::Violation;
  return rep;
}

TheoremReport verify_min_gen_bound(Analysis& a, std::uint64_t seed, const RandomOptions& opts) {
  auto rep = start("min-gen", a);
  const auto& r = a.rees();
  if (!r.base.complete_intersection) return inapplicable(rep, "base is not a complete intersection");
  if (!r.base.ring->field().is_rational()) return inapplicable(rep, "needs an infinite residue field");
  auto ci = ci_data(a.J(Side::Ext));
  rep.add("ext_complete_intersection", ci.ci());
  if (!ci.ci()) return inapplicable(rep, "R^ is not a complete intersection");

  int h = height_of(r.I(), r.base.A);
  auto red = minimal_reduction(r, h, seed, opts);
  Ideal q(r.base.ring, red.Q);
  long mu_q = static_cast<long>(minimal_generators(q, r.base.A).size());
  std::ostringstream qs;
  for (std::size_t i = 0; i < red.Q.size(); ++i) qs << (i ? ", " : "") << red.Q[i].to_string();
  rep.add("reduction", "(" + qs.str() + ")", "I^" + std::to_string(red.reduction_number + 1) + " = Q I^" +
                                                 std::to_string(red.reduction_number));
  rep.add("reduction_number", static_cast<long>(red.reduction_number));
  rep.add("equimultiple", mu_q == h, "mu(Q) = " + std::to_string(mu_q) + ", height I = " + std::to_string(h));
  if (mu_q != h) return inapplicable(rep, "I is not equimultiple");

  long ed = embdim(QuotientRing(r.base.defining().plus(red.Q)));
  long d = r.base.dim;
  long bound = ed + h - d;
  const auto& h1 = a.h1(Side::Ext);
  long mu_h1 = h1.is_zero() ? 0 : static_cast<long>(sq_minimal_generators(h1.m, maximal_ideal(a.ext().S)).mu);
  rep.add("embdim_A_mod_Q", ed);
  rep.add("height_I", static_cast<long>(h));
  rep.add("dim_A", d);
  rep.add("mu_H1", mu_h1);
  rep.add("bound_value", bound);
  std::ostringstream b;
  if (mu_h1 == bound)
    b << "bound attained: " << mu_h1 << " = " << bound;
  else if (mu_h1 < bound)
    b << "bound holds: " << mu_h1 << " < " << bound;
  else
    b << "bound violated: " << mu_h1 << " > " << bound;
  rep.add("bound", b.str());
  rep.status = mu_h1 <= bound ? ReportStatus::Consistent : ReportStatus::Violation;
  return rep;
}

TheoremReport verify_d2_criteria(Analysis& a) {
  auto rep = start("d2", a);
  bool ok = true;
  std::vector<bool> eventually;
  for (Side s : {Side::Rees, Side::Ext}) {
    std::string tag = side_name(s);
    const auto& d2 = a.d2(s);
    auto st = plus_torsion_status(d2, a.plus(s));
    long mu = static_cast<long>(a.J_min(s).size());
    bool regular = mu == height_of(a.J(s), a.SA(s));
    rep.add("d2_zero_" + tag, d2.is_zero());
    rep.add("d2_status_" + tag, to_string(st));
    rep.add("d2_eventually_zero_" + tag, eventually_zero(st));
    rep.add("J_regular_sequence_" + tag, regular);
    rep.add("h1_unmixed_" + tag, std::string("untested"));
    eventually.push_back(eventually_zero(st));
    if (regular && !d2.is_zero()) ok = false;
  }
  bool agree = eventually[0] == eventually[1];
  rep.add("eventual_vanishing_agrees", agree);
  ok = ok && agree;
  auto t2 = tinv_torsion_status(a.d2(Side::Ext), a.ext().T);
  rep.add("d2_tinv_status_ext", to_string(t2));
  ok = ok && t2 != TinvStatus::NotTorsion;
  if (a.char_zero()) {
    auto t3 = tinv_torsion_status(a.d3(Side::Ext), a.ext().T);
    rep.add("d3_tinv_status_ext", to_string(t3));
    ok = ok && t3 != TinvStatus::NotTorsion;
  }
  rep.status = ok ? ReportStatus::Consistent : ReportStatus::Violation;
  return rep;
}

TheoremReport hilbert_degree_D2(Analysis& a, int i, int window) {
  auto rep = start("hilb", a);
  const auto& r = a.rees();
  if (!r.base.forms.empty()) return inapplicable(rep, "needs a polynomial base ring");
  if (krull_dim(r.I()) != 0) return inapplicable(rep, "I is not primary to the maximal ideal");
  if (std::adjacent_find(r.gen_degrees.begin(), r.gen_degrees.end(), std::not_equal_to<>()) != r.gen_degrees.end())
    return inapplicable(rep, "generators of I have different degrees");
  long d = r.base.dim;
  if (i < 1 || i > d) throw Error("hilb: i must lie in [1, dim A]");
  rep.add("i", static_cast<long>(i));
  rep.add("dim_A", d);

  const auto& d2 = a.d2(Side::Rees);
  const auto& k = a.koszul(Side::Rees);
  std::vector<long> tsh;
  for (const auto& u : k.u) tsh.push_back(*weighted_degree(u, u.ring()->grading()));
  int from = 0;
  for (const auto& g : d2.m.numerator().gens())
    for (std::size_t c = 0; c < g.size(); ++c)
      if (!g[c].is_zero()) {
        from = std::max<int>(from, static_cast<int>(r.S->degree(g[c].leading().mono) + tsh[c]));
        break;
      }
  auto lengths = t_degree_lengths(d2.m, tsh, from, window + 1);
  auto deg = polynomial_degree(lengths);
  std::ostringstream ls;
  for (std::size_t j = 0; j < lengths.size(); ++j) ls << (j ? " " : "") << lengths[j];
  rep.add("lengths", ls.str(), "t-degrees " + std::to_string(from) + ".." + std::to_string(from + window));
  if (!deg) throw Error("hilb: difference table did not stabilize within the window");
  rep.add("degree", static_cast<long>(*deg));
  bool degree_ok = *deg <= d - i - 1;
  rep.add("degree_verdict", degree_ok);

  const auto& lci = a.lci_locus(Side::Rees);
  Ideal off = saturate_ideal(lci.fitting, a.plus(Side::Rees));
  long dim = off.is_unit() ? -1 : krull_dim(off);
  rep.add("non_ci_locus_dim", dim, "Fitt_" + std::to_string(lci.height) + " saturated by R+");
  bool locus_ok = dim <= d - i;
  rep.add("locus_verdict", locus_ok);
  rep.status = degree_ok == locus_ok ? ReportStatus::Consistent : ReportStatus::Violation;
  return rep;
}

TheoremReport gulliksen_locus_check(Analysis& a) {
  auto rep = start("gulliksen", a);
  const auto& r = a.rees();
  if (!r.base.forms.empty()) return inapplicable(rep, "needs a regular base ring");
  if (!r.R.is_domain()) return inapplicable(rep, "ranks need the base to be a domain");
  bool ok = true;
  for (Side s : {Side::Rees, Side::Ext}) {
    std::string tag = side_name(s);
    const auto& fl = a.h1_locus(s);
    int rho = fl.rank;
    const Ideal& f1 = fl.fitting;
    const auto& lci = a.lci_locus(s);
    bool eq = in_radical_all(f1.gb(), lci.fitting) && in_radical_all(lci.fitting.gb(), f1);
    rep.add("rank_H1_" + tag, static_cast<long>(rho));
    rep.add("radicals_equal_" + tag, eq, "Fitt_" + std::to_string(rho) + "(H1) = " + ideal_text(f1) + "; Fitt_" +
                                             std::to_string(lci.height) + "(K/K^2) = " + ideal_text(lci.fitting));
    ok = ok && eq;
  }
  rep.status = ok ? ReportStatus::Consistent : ReportStatus::Violation;
  return rep;
}

}  // namespace reeskit

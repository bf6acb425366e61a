#include "reeskit/modules.hpp"

#include <algorithm>
#include <cstdint>
#include <functional>
#include <numeric>

namespace reeskit {

namespace {

// Quadratic form of f as a symmetric matrix; nullopt unless f is a form of
// standard degree 2.
std::optional<std::vector<std::vector<FieldElem>>> quadratic_form(const Polynomial& f) {
  const Field& k = f.ring()->field();
  std::size_t n = f.ring()->num_vars();
  std::vector<std::vector<FieldElem>> q(n, std::vector<FieldElem>(n, FieldElem(0)));
  FieldElem half = k.inv(k.from_int(2));
  for (const auto& t : f.terms()) {
    if (t.mono.total_degree() != 2) return std::nullopt;
    std::vector<std::size_t> vs;
    for (std::size_t i = 0; i < n; ++i)
      for (int e = 0; e < t.mono[i]; ++e) vs.push_back(i);
    if (vs[0] == vs[1]) {
      q[vs[0]][vs[0]] = t.coef;
    } else {
      q[vs[0]][vs[1]] = q[vs[1]][vs[0]] = k.mul(t.coef, half);
    }
  }
  return q;
}

bool is_square(const Field& k, const FieldElem& a) {
  if (Field::is_zero(a)) return true;
  if (k.is_rational()) {
    if (sgn(a) < 0) return false;
    return mpz_perfect_square_p(a.get_num_mpz_t()) && mpz_perfect_square_p(a.get_den_mpz_t());
  }
  mpz_class p(std::to_string(k.characteristic())), r;
  mpz_class e = (p - 1) / 2;
  mpz_powm(r.get_mpz_t(), a.get_num_mpz_t(), e.get_mpz_t(), p.get_mpz_t());
  return r == 1;
}

}  // namespace

bool principal_is_prime(const Polynomial& f) {
  if (f.is_zero() || f.is_constant()) return false;
  bool linear = std::all_of(f.terms().begin(), f.terms().end(),
                            [](const Term& t) { return t.mono.total_degree() <= 1; });
  if (linear) return true;
  const Field& k = f.ring()->field();
  if (k.characteristic() == 2) return false;
  auto q = quadratic_form(f);
  if (!q) return false;
  auto& m = *q;
  std::size_t n = m.size();
  std::vector<FieldElem> diag;
  // Diagonalize by congruence.
  for (std::size_t c = 0; c < n; ++c) {
    if (Field::is_zero(m[c][c])) {
      std::size_t j = c + 1;
      while (j < n && Field::is_zero(m[j][j])) ++j;
      if (j < n) {
        std::swap(m[c], m[j]);
        for (auto& row : m) std::swap(row[c], row[j]);
      } else {
        j = c + 1;
        while (j < n && Field::is_zero(m[c][j])) ++j;
        if (j == n) continue;
        // x_c <- x_c + x_j
        for (std::size_t i = 0; i < n; ++i) m[c][i] = k.add(m[c][i], m[j][i]);
        for (std::size_t i = 0; i < n; ++i) m[i][c] = k.add(m[i][c], m[i][j]);
      }
    }
    FieldElem piv = m[c][c];
    diag.push_back(piv);
    FieldElem pinv = k.inv(piv);
    for (std::size_t i = c + 1; i < n; ++i) {
      FieldElem factor = k.mul(m[i][c], pinv);
      if (Field::is_zero(factor)) continue;
      for (std::size_t j = c; j < n; ++j) m[i][j] = k.sub(m[i][j], k.mul(factor, m[c][j]));
      for (std::size_t j = c; j < n; ++j) m[j][i] = m[i][j];
    }
  }
  if (diag.size() >= 3) return true;
  if (diag.size() < 2) return false;
  return !is_square(k, k.neg(k.mul(diag[0], diag[1])));
}

QuotientRing::QuotientRing(Ideal defining, DomainFlag domain) : defining_(std::move(defining)), domain_(domain) {
  if (domain_ == DomainFlag::Unknown) {
    const auto& gb = defining_.gb();
    if (gb.empty() || (gb.size() == 1 && principal_is_prime(gb[0]))) domain_ = DomainFlag::Verified;
  }
}

FreeModule::FreeModule(QuotientRing b, std::size_t r, std::vector<long> s)
    : base(std::move(b)), rank(r), shifts(std::move(s)) {
  if (shifts.empty()) shifts.assign(rank, 0);
  if (shifts.size() != rank) throw Error("free module: shift count differs from rank");
}

Element FreeModule::zero() const { return Element(rank, Polynomial(base.ring())); }

Element FreeModule::basis(std::size_t i) const {
  Element e = zero();
  e.at(i) = Polynomial::constant(base.ring(), 1);
  return e;
}

std::optional<long> FreeModule::degree(const Element& v) const {
  std::optional<long> d;
  for (std::size_t i = 0; i < v.size(); ++i)
    for (const auto& t : v[i].terms()) {
      long e = base.ring()->positive_degree(t.mono) + shifts[i];
      if (d && *d != e) throw Error("inhomogeneous module element");
      d = e;
    }
  return d;
}

namespace {

long max_degree(const FreeModule& f, const Element& v) {
  long d = 0;
  bool any = false;
  for (std::size_t i = 0; i < v.size(); ++i)
    for (const auto& t : v[i].terms()) {
      long e = f.base.ring()->positive_degree(t.mono) + f.shifts[i];
      d = any ? std::max(d, e) : e;
      any = true;
    }
  return d;
}

void check_rank(const FreeModule& f, const Element& v) {
  if (v.size() != f.rank) throw Error("element length differs from module rank");
  for (const auto& p : v)
    if (p.ring() != f.base.ring()) throw RingMismatch();
}

// Defining-ideal multiples L * e_i for i < rank.
void append_defining(std::vector<Vec>& out, const QuotientRing& base, std::size_t rank) {
  for (const auto& l : base.defining().gb())
    for (std::uint32_t i = 0; i < rank; ++i) out.push_back(to_vec(l, i));
}

Element slice(const Element& v, std::size_t first, std::size_t count) {
  return Element(v.begin() + first, v.begin() + first + count);
}

bool all_zero(const Element& v) {
  return std::all_of(v.begin(), v.end(), [](const Polynomial& p) { return p.is_zero(); });
}

}  // namespace

Submodule::Submodule(FreeModule ambient, std::vector<Element> gens)
    : ambient_(std::move(ambient)), gens_(std::move(gens)) {
  for (const auto& g : gens_) check_rank(ambient_, g);
}

ModuleSpace Submodule::space() const { return ModuleSpace{ambient_.base.ring(), ambient_.rank, ambient_.shifts}; }

const std::vector<Vec>& Submodule::gb() const {
  std::call_once(cache_->once, [&] {
    std::vector<Vec> in;
    for (const auto& g : gens_) in.push_back(to_vec(g));
    append_defining(in, ambient_.base, ambient_.rank);
    cache_->gb = groebner_basis(space(), std::move(in));
  });
  return cache_->gb;
}

Element Submodule::reduce(const Element& v) const {
  check_rank(ambient_, v);
  auto sp = space();
  return from_vec(sp, normal_form(sp, to_vec(v), gb()));
}

bool Submodule::contains(const Element& v) const {
  check_rank(ambient_, v);
  return normal_form(space(), to_vec(v), gb()).is_zero();
}

bool Submodule::contains(const Submodule& other) const {
  return std::all_of(other.gens().begin(), other.gens().end(), [&](const Element& g) { return contains(g); });
}

bool Submodule::is_zero() const {
  for (const auto& g : gens_)
    for (const auto& p : g)
      if (!ambient_.base.is_zero(p)) return false;
  return true;
}

Submodule Submodule::plus(const Submodule& other) const { return plus(other.gens()); }

Submodule Submodule::plus(const std::vector<Element>& extra) const {
  auto gens = gens_;
  gens.insert(gens.end(), extra.begin(), extra.end());
  return Submodule(ambient_, std::move(gens));
}

bool operator==(const Submodule& a, const Submodule& b) { return a.contains(b) && b.contains(a); }

std::vector<Element> module_gb(const Submodule& s) {
  std::vector<Element> out;
  auto sp = s.space();
  for (const auto& v : s.gb()) out.push_back(from_vec(sp, v));
  return out;
}

Submodule syzygies(const FreeModule& target, const std::vector<Element>& columns) {
  std::size_t n = target.rank, k = columns.size();
  std::vector<long> col_shifts;
  for (const auto& c : columns) {
    check_rank(target, c);
    col_shifts.push_back(max_degree(target, c));
  }
  FreeModule source(target.base, k, col_shifts);
  if (k == 0) return Submodule(source, {});
  std::vector<long> shifts = target.shifts;
  shifts.insert(shifts.end(), col_shifts.begin(), col_shifts.end());
  ModuleSpace big{target.base.ring(), n + k, shifts};
  std::vector<Vec> in;
  for (std::size_t j = 0; j < k; ++j) {
    Vec v = to_vec(columns[j]);
    v.terms.push_back({static_cast<std::uint32_t>(n + j), Monomial{}, FieldElem(1)});
    in.push_back(vec_from_terms(big, std::move(v.terms)));
  }
  append_defining(in, target.base, n);
  std::vector<Element> syz;
  for (const auto& g : groebner_basis(big, std::move(in))) {
    if (g.lead().comp < n) continue;
    syz.push_back(slice(from_vec(big, g), n, k));
  }
  return Submodule(source, std::move(syz));
}

Matrix Matrix::from_columns(const QuotientRing& base, std::size_t rows, const std::vector<Element>& cols) {
  Matrix m{base, rows, cols.size(), {}};
  m.entries.assign(rows * cols.size(), Polynomial(base.ring()));
  for (std::size_t j = 0; j < cols.size(); ++j) {
    if (cols[j].size() != rows) throw Error("matrix column of wrong length");
    for (std::size_t i = 0; i < rows; ++i) m.at(i, j) = cols[j][i];
  }
  return m;
}

Matrix Matrix::from_rows(const QuotientRing& base, std::size_t cols, const std::vector<Element>& rows) {
  Matrix m{base, rows.size(), cols, {}};
  m.entries.reserve(rows.size() * cols);
  for (const auto& r : rows) {
    if (r.size() != cols) throw Error("matrix row of wrong length");
    m.entries.insert(m.entries.end(), r.begin(), r.end());
  }
  return m;
}

Element Matrix::column(std::size_t j) const {
  Element c;
  for (std::size_t i = 0; i < rows; ++i) c.push_back(at(i, j));
  return c;
}

Element Matrix::row(std::size_t i) const { return Element(entries.begin() + i * cols, entries.begin() + (i + 1) * cols); }

Submodule kernel_of_matrix(const Matrix& phi, const FreeModule& target) {
  if (target.rank != phi.rows) throw Error("kernel_of_matrix: target rank differs from row count");
  std::vector<Element> cols;
  for (std::size_t j = 0; j < phi.cols; ++j) cols.push_back(phi.column(j));
  return syzygies(target, cols);
}

Submodule project(const Submodule& s, std::size_t first, std::size_t count, FreeModule target) {
  std::vector<Element> gens;
  for (const auto& g : s.gens()) {
    auto v = slice(g, first, count);
    if (!all_zero(v)) gens.push_back(std::move(v));
  }
  return Submodule(std::move(target), std::move(gens));
}

Submodule intersect(const Submodule& a, const Submodule& b) {
  const FreeModule& f = a.ambient();
  if (f.rank != b.ambient().rank) throw Error("intersect: ambient ranks differ");
  std::size_t n = f.rank;
  std::vector<long> shifts = f.shifts;
  shifts.insert(shifts.end(), f.shifts.begin(), f.shifts.end());
  ModuleSpace big{f.base.ring(), 2 * n, shifts};
  std::vector<Vec> in;
  for (const auto& g : a.gens()) {
    Element e = g;
    e.insert(e.end(), g.begin(), g.end());
    in.push_back(to_vec(e));
  }
  for (const auto& g : b.gens()) in.push_back(to_vec(g));
  append_defining(in, f.base, n);
  std::vector<Element> out;
  for (const auto& g : groebner_basis(big, std::move(in))) {
    if (g.lead().comp < n) continue;
    out.push_back(slice(from_vec(big, g), n, n));
  }
  return Submodule(f, std::move(out));
}

Submodule colon(const Submodule& b, const Polynomial& g) {
  const FreeModule& f = b.ambient();
  std::vector<Element> cols;
  for (std::size_t i = 0; i < f.rank; ++i) {
    Element e = f.zero();
    e[i] = g;
    cols.push_back(std::move(e));
  }
  for (const auto& v : b.gens()) cols.push_back(v);
  return project(syzygies(f, cols), 0, f.rank, f);
}

Submodule colon(const Submodule& b, const Ideal& k) {
  const FreeModule& f = b.ambient();
  std::vector<Element> whole;
  for (std::size_t i = 0; i < f.rank; ++i) whole.push_back(f.basis(i));
  Submodule acc(f, whole);
  bool first = true;
  for (const auto& g : k.gens()) {
    if (g.is_zero()) continue;
    auto c = colon(b, g);
    acc = first ? c : intersect(acc, c);
    first = false;
  }
  return acc;
}

namespace {

Submodule saturate_by(const Submodule& b, const Polynomial& g) {
  Submodule cur = b;
  for (int i = 0; i < 64; ++i) {
    auto next = colon(cur, g);
    if (cur.contains(next)) return cur;
    cur = next;
  }
  throw CapExceeded("module saturation did not stabilize");
}

}  // namespace

Submodule saturate(const Submodule& b, const Ideal& k) {
  const FreeModule& f = b.ambient();
  std::optional<Submodule> acc;
  for (const auto& g : k.gens()) {
    if (g.is_zero()) continue;
    auto s = saturate_by(b, g);
    acc = acc ? intersect(*acc, s) : s;
  }
  if (!acc) {
    std::vector<Element> whole;
    for (std::size_t i = 0; i < f.rank; ++i) whole.push_back(f.basis(i));
    return Submodule(f, whole);
  }
  return *acc;
}

Subquotient::Subquotient(Submodule z, Submodule b) : z_(std::move(z)), b_(std::move(b)) {
  if (z_.ambient().rank != b_.ambient().rank) throw Error("subquotient: ambient ranks differ");
  if (!z_.contains(b_)) throw Error("subquotient: denominator not contained in numerator");
}

Subquotient sq_saturate(const Subquotient& m, const Ideal& k) {
  return Subquotient(intersect(m.numerator(), saturate(m.denominator(), k)), m.denominator());
}

bool sq_is_torsion(const Subquotient& m, const Ideal& k) {
  if (m.is_zero()) return true;
  for (const auto& g : k.gens()) {
    if (g.is_zero()) continue;
    if (!saturate_by(m.denominator(), g).contains(m.numerator())) return false;
  }
  return !k.is_zero();
}

namespace {

// {r : r z ∈ B} as an ideal of P containing L.
Ideal element_annihilator(const Submodule& b, const Element& z) {
  std::vector<Element> cols{z};
  for (const auto& v : b.gens()) cols.push_back(v);
  auto syz = syzygies(b.ambient(), cols);
  std::vector<Polynomial> gens = b.base().defining().gens();
  for (const auto& s : syz.gens())
    if (!s[0].is_zero()) gens.push_back(s[0]);
  return Ideal(b.base().ring(), gens);
}

}  // namespace

Ideal sq_annihilator(const Subquotient& m) {
  auto ring = m.base().ring();
  if (m.is_zero()) return Ideal::unit(ring);
  std::optional<Ideal> acc;
  for (const auto& z : m.numerator().gens()) {
    if (m.denominator().contains(z)) continue;
    auto a = element_annihilator(m.denominator(), z);
    acc = acc ? intersect(*acc, a) : a;
  }
  return *acc;
}

int sq_dim(const Subquotient& m) {
  if (m.is_zero()) return -1;
  return krull_dim(sq_annihilator(m));
}

Ideal maximal_ideal(const RingPtr& ring) {
  std::vector<Polynomial> vars;
  for (std::size_t i = 0; i < ring->num_vars(); ++i) vars.push_back(Polynomial::variable(ring, i));
  return Ideal(ring, vars);
}

MinimalGenerators sq_minimal_generators(const Subquotient& m, const Ideal& n) {
  const auto& ring = m.base().ring();
  Ideal nl = n.plus(m.base().defining().gens());
  for (std::size_t i = 0; i < ring->num_vars(); ++i)
    if (!nl.contains(Polynomial::variable(ring, i)))
      throw Error("minimal generators: N misses variable " + ring->name(i));
  const FreeModule& f = m.ambient();
  std::vector<Element> cand;
  for (const auto& z : m.numerator().gens()) {
    f.degree(z);  // homogeneity check
    if (!m.denominator().contains(z)) cand.push_back(z);
  }
  std::vector<Element> fixed = m.denominator().gens();
  for (const auto& z : cand)
    for (std::size_t v = 0; v < ring->num_vars(); ++v) {
      auto x = Polynomial::variable(ring, v);
      Element e;
      for (const auto& p : z) e.push_back(x * p);
      fixed.push_back(std::move(e));
    }
  std::vector<bool> alive(cand.size(), true);
  for (std::size_t i = 0; i < cand.size(); ++i) {
    std::vector<Element> others = fixed;
    for (std::size_t j = 0; j < cand.size(); ++j)
      if (j != i && alive[j]) others.push_back(cand[j]);
    if (Submodule(f, std::move(others)).contains(cand[i])) alive[i] = false;
  }
  MinimalGenerators out;
  for (std::size_t i = 0; i < cand.size(); ++i)
    if (alive[i]) out.gens.push_back(cand[i]);
  out.mu = out.gens.size();
  return out;
}

std::vector<Polynomial> minimal_generators(const Ideal& l, const QuotientRing& base) {
  FreeModule f(base, 1);
  std::vector<Element> gens;
  for (const auto& g : l.gens()) gens.push_back({g});
  Subquotient m(Submodule(f, gens), Submodule(f, {}));
  std::vector<Polynomial> out;
  for (const auto& e : sq_minimal_generators(m, maximal_ideal(base.ring())).gens) out.push_back(e[0]);
  return out;
}

PresentationMatrix PresentationMatrix::over(const QuotientRing& other) const {
  if (other.ring() != base.ring()) throw RingMismatch();
  PresentationMatrix p = *this;
  p.base = other;
  p.relations.clear();
  for (const auto& r : relations) {
    Element row;
    for (const auto& e : r) row.push_back(other.reduce(e));
    if (all_zero(row)) continue;
    if (std::find(p.relations.begin(), p.relations.end(), row) == p.relations.end()) p.relations.push_back(row);
  }
  // Rows that are combinations of the others over the new ring change neither
  // the module nor its Fitting ideals.
  if (p.relations.size() > 1) {
    FreeModule f(other, num_gens, gen_shifts);
    Subquotient rows(Submodule(f, p.relations), Submodule(f, {}));
    p.relations = sq_minimal_generators(rows, maximal_ideal(other.ring())).gens;
  }
  return p;
}

namespace {

PresentationMatrix present_on(const Subquotient& m, const std::vector<Element>& gens, bool minimal_relations) {
  const FreeModule& f = m.ambient();
  PresentationMatrix p;
  p.base = m.base();
  p.num_gens = gens.size();
  for (const auto& g : gens) p.gen_shifts.push_back(max_degree(f, g));
  if (gens.empty()) return p;
  std::vector<Element> cols = gens;
  for (const auto& b : m.denominator().gens()) cols.push_back(b);
  FreeModule gfree(m.base(), gens.size(), p.gen_shifts);
  auto rel = project(syzygies(f, cols), 0, gens.size(), gfree);
  std::vector<Element> rows;
  if (minimal_relations) {
    rows = sq_minimal_generators(Subquotient(rel, Submodule(gfree, {})), maximal_ideal(m.base().ring())).gens;
  } else {
    for (const auto& r : rel.gens())
      if (!std::all_of(r.begin(), r.end(), [&](const Polynomial& e) { return m.base().is_zero(e); }))
        rows.push_back(r);
  }
  for (auto& r : rows)
    for (auto& e : r) e = m.base().reduce(e);
  p.relations = std::move(rows);
  return p;
}

}  // namespace

PresentationMatrix presentation(const Subquotient& m, bool minimal_relations) {
  auto mg = sq_minimal_generators(m, maximal_ideal(m.base().ring()));
  return present_on(m, mg.gens, minimal_relations);
}

PresentationMatrix naive_presentation(const Subquotient& m) {
  return present_on(m, m.numerator().gens(), false);
}

MatrixCaps& default_matrix_caps() {
  static MatrixCaps caps;
  return caps;
}

Polynomial determinant(const std::vector<std::vector<Polynomial>>& input) {
  std::size_t n = input.size();
  if (n == 0) throw Error("determinant of an empty matrix");
  const auto ring = input[0][0].ring();
  if (n == 1) return input[0][0];
  if (n == 2) return input[0][0] * input[1][1] - input[0][1] * input[1][0];
  auto m = input;
  bool negate = false;
  Polynomial prev = Polynomial::constant(ring, 1);
  for (std::size_t k = 0; k + 1 < n; ++k) {
    if (m[k][k].is_zero()) {
      std::size_t r = k + 1;
      while (r < n && m[r][k].is_zero()) ++r;
      if (r == n) return Polynomial(ring);
      std::swap(m[k], m[r]);
      negate = !negate;
    }
    for (std::size_t i = k + 1; i < n; ++i) {
      for (std::size_t j = k + 1; j < n; ++j)
        m[i][j] = divide_exact(m[i][j] * m[k][k] - m[i][k] * m[k][j], prev);
      m[i][k] = Polynomial(ring);
    }
    prev = m[k][k];
  }
  return negate ? -m[n - 1][n - 1] : m[n - 1][n - 1];
}

namespace {

// The cap bounds the column count and with it the minor size; rows are free
// since structurally empty row subsets are never expanded.
void check_caps(const Matrix& m) {
  auto cap = default_matrix_caps().max_minor;
  if (m.cols > cap)
    throw CapExceeded("matrix " + std::to_string(m.rows) + "x" + std::to_string(m.cols) +
                      " exceeds the minor cap " + std::to_string(cap));
}

// Calls visit on each size-s subset of {0..n-1} in lexicographic order until it returns true.
template <class F>
bool each_subset(std::size_t n, std::size_t s, F&& visit) {
  if (s > n) return false;
  std::vector<std::size_t> idx(s);
  std::iota(idx.begin(), idx.end(), 0);
  while (true) {
    if (visit(idx)) return true;
    std::size_t i = s;
    while (i > 0 && idx[i - 1] == n - s + i - 1) --i;
    if (i == 0) return false;
    ++idx[i - 1];
    for (std::size_t j = i; j < s; ++j) idx[j] = idx[j - 1] + 1;
  }
}

using Square = std::vector<std::vector<Polynomial>>;

// Laplace expansion along the sparsest line; dense blocks go to Bareiss.
Polynomial sparse_det(const Square& a, const RingPtr& ring) {
  std::size_t n = a.size();
  if (n == 0) return Polynomial::constant(ring, FieldElem(1));
  if (n == 1) return a[0][0];
  std::size_t best = n + 1, line = 0;
  bool by_row = true;
  for (std::size_t i = 0; i < n; ++i) {
    std::size_t cr = 0, cc = 0;
    for (std::size_t j = 0; j < n; ++j) {
      cr += !a[i][j].is_zero();
      cc += !a[j][i].is_zero();
    }
    if (cr == 0 || cc == 0) return Polynomial(ring);
    if (cr < best) best = cr, line = i, by_row = true;
    if (cc < best) best = cc, line = i, by_row = false;
  }
  if (best >= 3 && n >= 5) return determinant(a);
  Polynomial out(ring);
  for (std::size_t k = 0; k < n; ++k) {
    const Polynomial& e = by_row ? a[line][k] : a[k][line];
    if (e.is_zero()) continue;
    std::size_t skip_r = by_row ? line : k, skip_c = by_row ? k : line;
    Square sub;
    for (std::size_t i = 0; i < n; ++i) {
      if (i == skip_r) continue;
      std::vector<Polynomial> row;
      for (std::size_t j = 0; j < n; ++j)
        if (j != skip_c) row.push_back(a[i][j]);
      sub.push_back(std::move(row));
    }
    Polynomial term = e * sparse_det(sub, ring);
    if ((skip_r + skip_c) % 2) out -= term;
    else out += term;
  }
  return out;
}

Polynomial minor(const Matrix& m, const std::vector<std::size_t>& rs, const std::vector<std::size_t>& cs) {
  Square sub;
  for (auto r : rs) {
    std::vector<Polynomial> row;
    for (auto c : cs) row.push_back(m.at(r, c));
    sub.push_back(std::move(row));
  }
  return m.base.reduce(sparse_det(sub, m.base.ring()));
}

// Whether the rows' nonzero patterns (bit masks over the chosen columns)
// admit a perfect matching; without one every term of the determinant vanishes.
bool has_matching(const std::vector<std::uint64_t>& masks) {
  std::size_t n = masks.size();
  std::vector<int> owner(64, -1);
  for (std::size_t r = 0; r < n; ++r) {
    std::vector<bool> seen(64, false);
    std::function<bool(std::size_t)> augment = [&](std::size_t row) {
      for (std::size_t c = 0; c < 64; ++c) {
        if (!(masks[row] >> c & 1) || seen[c]) continue;
        seen[c] = true;
        if (owner[c] < 0 || augment(static_cast<std::size_t>(owner[c]))) {
          owner[c] = static_cast<int>(row);
          return true;
        }
      }
      return false;
    };
    if (!augment(r)) return false;
  }
  return true;
}

// Invokes visit on each nonzero s-minor, column subsets outermost, both in
// lexicographic order; stops early when visit returns true. Row subsets that
// are structurally singular on the chosen columns are skipped.
template <class F>
bool each_nonzero_minor(const Matrix& m, std::size_t s, F&& visit) {
  if (m.cols > 64) throw CapExceeded("more than 64 columns");
  std::vector<std::uint64_t> mask(m.rows, 0);
  for (std::size_t r = 0; r < m.rows; ++r)
    for (std::size_t c = 0; c < m.cols; ++c)
      if (!m.at(r, c).is_zero()) mask[r] |= std::uint64_t{1} << c;
  return each_subset(m.cols, s, [&](const std::vector<std::size_t>& cs) {
    std::uint64_t cm = 0;
    for (auto c : cs) cm |= std::uint64_t{1} << c;
    std::vector<std::size_t> live;
    for (std::size_t r = 0; r < m.rows; ++r)
      if (mask[r] & cm) live.push_back(r);
    return each_subset(live.size(), s, [&](const std::vector<std::size_t>& ri) {
      std::vector<std::size_t> rs;
      std::vector<std::uint64_t> local;
      for (auto i : ri) {
        rs.push_back(live[i]);
        std::uint64_t lm = 0;
        for (std::size_t k = 0; k < cs.size(); ++k)
          if (mask[live[i]] >> cs[k] & 1) lm |= std::uint64_t{1} << k;
        local.push_back(lm);
      }
      if (!has_matching(local)) return false;
      auto d = minor(m, rs, cs);
      return !d.is_zero() && visit(d);
    });
  });
}

}  // namespace

Ideal fitting_ideal(const PresentationMatrix& p, int j) {
  if (j < 0) throw Error("fitting ideal index must be non-negative");
  const auto& ring = p.base.ring();
  long s = static_cast<long>(p.num_gens) - j;
  if (s <= 0) return Ideal::unit(ring);
  Matrix m = p.matrix();
  std::vector<Polynomial> gens = p.base.defining().gens();
  if (static_cast<std::size_t>(s) > m.rows) return Ideal(ring, gens);
  check_caps(m);
  std::vector<Polynomial> minors;
  each_nonzero_minor(m, s, [&](const Polynomial& d) {
    auto monic = d.monic();
    if (std::find(minors.begin(), minors.end(), monic) == minors.end()) minors.push_back(monic);
    return false;
  });
  gens.insert(gens.end(), minors.begin(), minors.end());
  return Ideal(ring, gens);
}

int matrix_rank_over_domain(const Matrix& m) {
  if (!m.base.is_domain()) throw Error("rank over a ring not flagged as a domain");
  check_caps(m);
  int rank = 0;
  for (std::size_t s = 1; s <= std::min(m.rows, m.cols); ++s) {
    if (!each_nonzero_minor(m, s, [](const Polynomial&) { return true; })) break;
    rank = static_cast<int>(s);
  }
  return rank;
}

std::vector<std::size_t> independent_rows(const Matrix& m) {
  if (!m.base.is_domain()) throw Error("rank over a ring not flagged as a domain");
  std::vector<Element> rows;
  std::vector<std::size_t> origin;
  for (std::size_t i = 0; i < m.rows; ++i) {
    Element r = m.row(i);
    for (auto& e : r) e = m.base.reduce(e);
    rows.push_back(std::move(r));
    origin.push_back(i);
  }
  std::size_t top = 0;
  for (std::size_t c = 0; c < m.cols && top < rows.size(); ++c) {
    std::size_t piv = top;
    while (piv < rows.size() && rows[piv][c].is_zero()) ++piv;
    if (piv == rows.size()) continue;
    std::swap(rows[top], rows[piv]);
    std::swap(origin[top], origin[piv]);
    const Element p = rows[top];
    for (std::size_t i = top + 1; i < rows.size(); ++i) {
      if (rows[i][c].is_zero()) continue;
      Polynomial a = rows[i][c];
      for (std::size_t j = c; j < m.cols; ++j) rows[i][j] = m.base.reduce(p[c] * rows[i][j] - a * p[j]);
    }
    ++top;
  }
  origin.resize(top);
  std::sort(origin.begin(), origin.end());
  return origin;
}

int matrix_rank_by_elimination(const Matrix& m) { return static_cast<int>(independent_rows(m).size()); }

Subquotient conormal_module(const Ideal& l, const QuotientRing& base) {
  FreeModule f(base, 1);
  std::vector<Element> z, b;
  for (const auto& g : l.gens()) z.push_back({g});
  const auto& gs = l.gens();
  for (std::size_t i = 0; i < gs.size(); ++i)
    for (std::size_t j = i; j < gs.size(); ++j) b.push_back({gs[i] * gs[j]});
  return Subquotient(Submodule(f, z), Submodule(f, b));
}

int sq_rank(const Subquotient& m) { return sq_rank(m, m.base()); }

int sq_rank(const Subquotient& m, const QuotientRing& over) {
  if (!over.is_domain()) throw Error("rank over a ring not flagged as a domain");
  auto p = presentation(m).over(over);
  if (p.num_gens == 0) return 0;
  auto mat = p.matrix();
  auto keep = independent_rows(mat);
  int r = static_cast<int>(keep.size());
  // The minors route runs on the rows elimination picked, which must then be
  // independent on their own.
  std::vector<Element> rows;
  for (auto i : keep) rows.push_back(mat.row(i));
  mat = Matrix::from_rows(mat.base, mat.cols, rows);
  if (r != matrix_rank_over_domain(mat)) throw Error("rank: minors and elimination disagree");
  return static_cast<int>(p.num_gens) - r;
}

}  // namespace reeskit

#include "reeskit/aq_homology.hpp"

#include <algorithm>

namespace reeskit {

namespace {

long positive_degree_of(const Polynomial& f) {
  const auto& w = f.ring()->positive_grading();
  if (!f.is_homogeneous(w)) throw Error("Koszul complex on an inhomogeneous element: " + f.to_string());
  return *weighted_degree(f, w);
}

// Columns reduced over the base; a zero column stays zero.
Matrix reduced_columns(const QuotientRing& base, std::size_t rows, std::vector<Element> cols) {
  for (auto& c : cols)
    for (auto& e : c) e = base.reduce(e);
  return Matrix::from_columns(base, rows, cols);
}

Submodule kernel_in(const Matrix& d, const FreeModule& source, const FreeModule& target) {
  if (source.rank == 0) return Submodule(source, {});
  if (target.rank == 0) {
    std::vector<Element> all;
    for (std::size_t i = 0; i < source.rank; ++i) all.push_back(source.basis(i));
    return Submodule(source, all);
  }
  return Submodule(source, kernel_of_matrix(d, target).gens());
}

Submodule image_in(const Matrix& d, const FreeModule& target) {
  std::vector<Element> cols;
  for (std::size_t j = 0; j < d.cols; ++j) cols.push_back(d.column(j));
  return Submodule(target, cols);
}

bool is_char_zero(const QuotientRing& q) { return q.ring()->field().characteristic() == 0; }

}  // namespace

std::size_t KoszulData::pair_index(std::size_t a, std::size_t b) const {
  if (a > b) std::swap(a, b);
  auto it = std::find(pairs.begin(), pairs.end(), std::make_pair(a, b));
  if (it == pairs.end()) throw Error("pair index out of range");
  return static_cast<std::size_t>(it - pairs.begin());
}

bool composes_to_zero(const Matrix& a, const Matrix& b) {
  if (a.cols != b.rows) throw Error("composes_to_zero: shapes do not match");
  for (std::size_t j = 0; j < b.cols; ++j)
    for (std::size_t i = 0; i < a.rows; ++i) {
      Polynomial acc(a.base.ring());
      for (std::size_t k = 0; k < a.cols; ++k) acc += a.at(i, k) * b.at(k, j);
      if (!a.base.is_zero(acc)) return false;
    }
  return true;
}

KoszulData koszul(const std::vector<Polynomial>& input, const QuotientRing& base) {
  KoszulData k;
  k.base = base;
  for (const auto& f : input) k.u.push_back(base.reduce(f));
  const std::size_t s = k.u.size();
  std::vector<long> deg;
  for (const auto& f : k.u) {
    if (f.is_zero()) throw Error("Koszul complex on an element that is zero in the base");
    deg.push_back(positive_degree_of(f));
  }
  for (std::size_t a = 0; a < s; ++a)
    for (std::size_t b = a + 1; b < s; ++b) k.pairs.push_back({a, b});
  for (std::size_t a = 0; a < s; ++a)
    for (std::size_t b = a + 1; b < s; ++b)
      for (std::size_t c = b + 1; c < s; ++c) k.triples.push_back({a, b, c});

  std::vector<long> s2, s3;
  for (auto [a, b] : k.pairs) s2.push_back(deg[a] + deg[b]);
  for (const auto& t : k.triples) s3.push_back(deg[t[0]] + deg[t[1]] + deg[t[2]]);
  k.K0 = FreeModule(base, 1, {0});
  k.K1 = FreeModule(base, s, deg);
  k.K2 = FreeModule(base, k.pairs.size(), s2);
  k.K3 = FreeModule(base, k.triples.size(), s3);

  const RingPtr& ring = base.ring();
  std::vector<Element> c1, c2, c3;
  for (const auto& f : k.u) c1.push_back({f});
  for (auto [a, b] : k.pairs) {
    Element col = k.K1.zero();
    col[b] = k.u[a];
    col[a] = -k.u[b];
    c2.push_back(std::move(col));
  }
  for (const auto& t : k.triples) {
    Element col = k.K2.zero();
    col[k.pair_index(t[1], t[2])] = k.u[t[0]];
    col[k.pair_index(t[0], t[2])] = -k.u[t[1]];
    col[k.pair_index(t[0], t[1])] = k.u[t[2]];
    c3.push_back(std::move(col));
  }
  k.d1 = reduced_columns(base, 1, c1);
  k.d2 = reduced_columns(base, s, c2);
  k.d3 = reduced_columns(base, k.pairs.size(), c3);
  if (!composes_to_zero(k.d1, k.d2) || !composes_to_zero(k.d2, k.d3))
    throw Error("Koszul differentials do not compose to zero");
  k.minimal = s == 0 || minimal_generators(Ideal(ring, k.u), base).size() == s;
  return k;
}

AQModule H1(const KoszulData& k) {
  Submodule z = kernel_in(k.d1, k.K1, k.K0);
  return {Subquotient(z, image_in(k.d2, k.K1)), AQTag::H1, "ker d1 / im d2"};
}

AQModule H2(const KoszulData& k) {
  Submodule z = kernel_in(k.d2, k.K2, k.K1);
  return {Subquotient(z, image_in(k.d3, k.K2)), AQTag::H2, "ker d2 / im d3"};
}

AQModule D2(const KoszulData& k) {
  Submodule z = kernel_in(k.d1, k.K1, k.K0);
  Submodule b = image_in(k.d2, k.K1);
  std::vector<Element> ju;
  for (std::size_t i = 0; i < k.K1.rank; ++i)
    for (const auto& f : k.u) {
      Element v = k.K1.zero();
      v[i] = f;
      ju.push_back(std::move(v));
    }
  Submodule zj = intersect(z, Submodule(k.K1, ju));
  Ideal uj = k.base.defining().plus(k.u);
  for (const auto& g : zj.gens())
    for (const auto& e : g)
      if (!uj.contains(e)) throw Error("D2 generator with nonzero image in (base/(u))^s");
  return {Subquotient(zj, b), AQTag::D2, "ker(H1 -> (base/(u))^s)"};
}

Matrix wedge_map(const AQModule& h1, const KoszulData& k) {
  if (!is_char_zero(k.base)) throw Error("wedge map needs characteristic zero");
  if (h1.tag != AQTag::H1) throw Error("wedge map needs H1");
  std::vector<Element> gens;
  if (!h1.is_zero()) gens = sq_minimal_generators(h1.m, maximal_ideal(k.base.ring())).gens;
  std::vector<Element> cols;
  for (std::size_t i = 0; i < gens.size(); ++i)
    for (std::size_t j = i + 1; j < gens.size(); ++j) {
      const auto& z = gens[i];
      const auto& w = gens[j];
      Element col = k.K2.zero();
      for (std::size_t p = 0; p < k.pairs.size(); ++p) {
        auto [a, b] = k.pairs[p];
        col[p] = k.base.reduce(z[a] * w[b] - z[b] * w[a]);
      }
      cols.push_back(std::move(col));
    }
  Matrix m = Matrix::from_columns(k.base, k.K2.rank, cols);
  if (m.cols > 0 && !composes_to_zero(k.d2, m)) throw Error("wedge product is not a cycle");
  return m;
}

AQModule D3(const KoszulData& k) { return D3(k, H1(k)); }

AQModule D3(const KoszulData& k, const AQModule& h1) {
  if (!is_char_zero(k.base)) throw Error("D3 through Koszul homology needs characteristic zero");
  AQModule h2 = H2(k);
  Matrix w = wedge_map(h1, k);
  std::vector<Element> extra;
  for (std::size_t j = 0; j < w.cols; ++j) extra.push_back(w.column(j));
  Submodule b = h2.m.denominator().plus(extra);
  return {Subquotient(h2.m.numerator(), b), AQTag::D3, "coker(Λ²H1 -> H2)"};
}

std::string to_string(AQTag t) {
  switch (t) {
    case AQTag::H1: return "H1";
    case AQTag::H2: return "H2";
    case AQTag::D2: return "D2";
    case AQTag::D3: return "D3";
  }
  return "?";
}

std::string to_string(PlusStatus s) {
  switch (s) {
    case PlusStatus::Zero: return "zero";
    case PlusStatus::PlusTorsionNonzero: return "plus-torsion-nonzero";
    case PlusStatus::NotPlusTorsion: return "not-plus-torsion";
  }
  return "?";
}

std::string to_string(TinvStatus s) {
  switch (s) {
    case TinvStatus::Zero: return "zero";
    case TinvStatus::Torsion: return "torsion";
    case TinvStatus::NotTorsion: return "not-torsion";
  }
  return "?";
}

PlusStatus plus_torsion_status(const AQModule& m, const Ideal& plus) {
  if (m.is_zero()) return PlusStatus::Zero;
  return sq_is_torsion(m.m, plus) ? PlusStatus::PlusTorsionNonzero : PlusStatus::NotPlusTorsion;
}

TinvStatus tinv_torsion_status(const AQModule& m, const Polynomial& t) {
  if (m.is_zero()) return TinvStatus::Zero;
  return sq_is_torsion(m.m, Ideal(t.ring(), {t})) ? TinvStatus::Torsion : TinvStatus::NotTorsion;
}

}  // namespace reeskit

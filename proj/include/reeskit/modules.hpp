#pragma once

#include <memory>
#include <mutex>
#include <string>
#include <vector>

#include "reeskit/ideal.hpp"

namespace reeskit {

enum class DomainFlag { Unknown, Asserted, Verified };

/// P / L for a polynomial ring P. Elements are represented by lifts in P.
class QuotientRing {
 public:
  QuotientRing() = default;
  explicit QuotientRing(Ideal defining, DomainFlag domain = DomainFlag::Unknown);
  static QuotientRing polynomial(RingPtr ring) { return QuotientRing(Ideal::zero(ring), DomainFlag::Verified); }

  const RingPtr& ring() const { return defining_.ring(); }
  const Ideal& defining() const { return defining_; }
  bool is_domain() const { return domain_ != DomainFlag::Unknown; }
  DomainFlag domain_flag() const { return domain_; }
  QuotientRing asserted_domain() const { return QuotientRing(defining_, DomainFlag::Asserted); }

  Polynomial reduce(const Polynomial& f) const { return defining_.reduce(f); }
  bool is_zero(const Polynomial& f) const { return defining_.contains(f); }
  bool equal(const Polynomial& f, const Polynomial& g) const { return is_zero(f - g); }

 private:
  Ideal defining_;
  DomainFlag domain_ = DomainFlag::Unknown;
};

/// Primality of a principal ideal when cheaply decidable: degree-one
/// generators and quadratic forms (by rank and discriminant). Otherwise false.
bool principal_is_prime(const Polynomial& f);

using Element = std::vector<Polynomial>;

struct FreeModule {
  QuotientRing base;
  std::size_t rank = 0;
  std::vector<long> shifts;  // degrees of the basis vectors, positive grading

  FreeModule() = default;
  FreeModule(QuotientRing b, std::size_t r, std::vector<long> s = {});
  long shift(std::size_t i) const { return shifts[i]; }
  Element zero() const;
  Element basis(std::size_t i) const;
  /// Degree of a homogeneous element, nullopt for zero, throws if inhomogeneous.
  std::optional<long> degree(const Element& v) const;
};

/// Submodule of a free module over P/L, generated by lifts. Its Gröbner basis
/// is taken in P^n over the lifts plus L * e_i, so it describes the
/// preimage in P^n.
class Submodule {
 public:
  Submodule() = default;
  Submodule(FreeModule ambient, std::vector<Element> gens);

  const FreeModule& ambient() const { return ambient_; }
  const std::vector<Element>& gens() const { return gens_; }
  const QuotientRing& base() const { return ambient_.base; }
  ModuleSpace space() const;

  const std::vector<Vec>& gb() const;
  Element reduce(const Element& v) const;
  bool contains(const Element& v) const;
  bool contains(const Submodule& other) const;
  bool is_zero() const;
  Submodule plus(const Submodule& other) const;
  Submodule plus(const std::vector<Element>& extra) const;

 private:
  struct Cache {
    std::once_flag once;
    std::vector<Vec> gb;
  };
  FreeModule ambient_;
  std::vector<Element> gens_;
  std::shared_ptr<Cache> cache_ = std::make_shared<Cache>();
};

bool operator==(const Submodule& a, const Submodule& b);

/// Module GB as elements of the ambient free module.
std::vector<Element> module_gb(const Submodule& s);

/// Syzygies over P/L of the columns (each an element of `target`); the result
/// lives in a free module whose basis vector j has the degree of column j.
Submodule syzygies(const FreeModule& target, const std::vector<Element>& columns);

/// Matrix over a quotient ring: rows x cols entries, column j is the image of
/// the j-th basis vector of the source.
struct Matrix {
  QuotientRing base;
  std::size_t rows = 0, cols = 0;
  std::vector<Polynomial> entries;  // row-major

  static Matrix from_columns(const QuotientRing& base, std::size_t rows, const std::vector<Element>& cols);
  static Matrix from_rows(const QuotientRing& base, std::size_t cols, const std::vector<Element>& rows);
  const Polynomial& at(std::size_t i, std::size_t j) const { return entries[i * cols + j]; }
  Polynomial& at(std::size_t i, std::size_t j) { return entries[i * cols + j]; }
  Element column(std::size_t j) const;
  Element row(std::size_t i) const;
};

/// ker of the matrix as a map R^cols -> R^rows; source shifts default to the
/// column degrees.
Submodule kernel_of_matrix(const Matrix& phi, const FreeModule& target);

Submodule intersect(const Submodule& a, const Submodule& b);
/// {v : g v ∈ B} and {v : K v ⊆ B} inside B's ambient module.
Submodule colon(const Submodule& b, const Polynomial& g);
Submodule colon(const Submodule& b, const Ideal& k);
Submodule saturate(const Submodule& b, const Ideal& k);
/// Submodule of `target` spanned by coordinates [first, first + count) of s's generators.
Submodule project(const Submodule& s, std::size_t first, std::size_t count, FreeModule target);

/// Z / B with B ⊆ Z checked on construction.
class Subquotient {
 public:
  Subquotient() = default;
  Subquotient(Submodule z, Submodule b);
  const Submodule& numerator() const { return z_; }
  const Submodule& denominator() const { return b_; }
  const FreeModule& ambient() const { return z_.ambient(); }
  const QuotientRing& base() const { return z_.base(); }
  bool is_zero() const { return b_.contains(z_); }

 private:
  Submodule z_, b_;
};

Subquotient sq_saturate(const Subquotient& m, const Ideal& k);
bool sq_is_torsion(const Subquotient& m, const Ideal& k);
/// Ideal of P (containing L) whose image in P/L is the annihilator.
Ideal sq_annihilator(const Subquotient& m);
int sq_dim(const Subquotient& m);

struct MinimalGenerators {
  std::size_t mu = 0;
  std::vector<Element> gens;
};

/// Graded Nakayama: drops g while g ∈ (others) + N*Z + B. Needs homogeneous
/// generators and N containing every variable.
MinimalGenerators sq_minimal_generators(const Subquotient& m, const Ideal& n);
/// The ideal generated by all variables.
Ideal maximal_ideal(const RingPtr& ring);
/// Minimal generators of an ideal of P/L modulo L.
std::vector<Polynomial> minimal_generators(const Ideal& l, const QuotientRing& base);

/// coker(relations) with relation rows over base, generator degrees in shifts.
struct PresentationMatrix {
  QuotientRing base;
  std::size_t num_gens = 0;
  std::vector<long> gen_shifts;
  std::vector<Element> relations;

  Matrix matrix() const { return Matrix::from_rows(base, num_gens, relations); }
  /// Same module presented over another quotient ring of the same polynomial
  /// ring; the rows are cut down to a minimal generating set of the relations.
  PresentationMatrix over(const QuotientRing& other) const;
};

/// Presentation on minimal generators; the relation set is Nakayama-minimal
/// when `minimal_relations` is set.
PresentationMatrix presentation(const Subquotient& m, bool minimal_relations = true);
/// Presentation on the given (not minimalized) generators of Z.
PresentationMatrix naive_presentation(const Subquotient& m);

struct MatrixCaps {
  std::size_t max_minor = 12;
};
MatrixCaps& default_matrix_caps();

Polynomial determinant(const std::vector<std::vector<Polynomial>>& m);
Ideal fitting_ideal(const PresentationMatrix& p, int j);
/// Rank over a domain by exhaustive minors with early exit.
int matrix_rank_over_domain(const Matrix& m);
/// Rank by fraction-free elimination with normal forms; independent of minors.
int matrix_rank_by_elimination(const Matrix& m);
/// Indices of a maximal independent set of rows found by that elimination.
std::vector<std::size_t> independent_rows(const Matrix& m);
/// L / L^2 as a subquotient of the rank-one free module over base.
Subquotient conormal_module(const Ideal& l, const QuotientRing& base);

int sq_rank(const Subquotient& m);
int sq_rank(const Subquotient& m, const QuotientRing& over);

}  // namespace reeskit

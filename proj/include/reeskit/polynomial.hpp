#pragma once

#include <map>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "reeskit/field.hpp"
#include "reeskit/monomial.hpp"

namespace reeskit {

class PolyRing;
using RingPtr = std::shared_ptr<const PolyRing>;

/// Polynomial ring k[x_1..x_n] with a term order and two gradings: `grading`
/// is the user-facing Z-grading (weights may be zero or negative, e.g. deg T =
/// -1), `positive_grading` is a strictly positive grading every ideal built by
/// the toolkit is homogeneous for; graded Nakayama arguments use it.
class PolyRing {
 public:
  static RingPtr make(Field field, std::vector<std::string> names, MonomialOrder order,
                      std::vector<int> grading = {}, std::vector<int> positive_grading = {});

  const Field& field() const { return field_; }
  std::size_t num_vars() const { return names_.size(); }
  const std::vector<std::string>& names() const { return names_; }
  const std::string& name(std::size_t i) const { return names_[i]; }
  std::optional<std::size_t> index_of(const std::string& name) const;
  const MonomialOrder& order() const { return order_; }
  const std::vector<int>& grading() const { return grading_; }
  const std::vector<int>& positive_grading() const { return positive_; }

  long degree(const Monomial& m) const;           // w.r.t. grading()
  long positive_degree(const Monomial& m) const;  // w.r.t. positive_grading()

 private:
  PolyRing() = default;
  Field field_;
  std::vector<std::string> names_;
  MonomialOrder order_;
  std::vector<int> grading_;
  std::vector<int> positive_;
};

struct Term {
  Monomial mono;
  FieldElem coef;
};

/// Sparse polynomial; terms strictly descending in the ring's order with no
/// zero coefficients. The zero polynomial has no terms.
class Polynomial {
 public:
  Polynomial() = default;
  explicit Polynomial(RingPtr ring) : ring_(std::move(ring)) {}

  static Polynomial constant(RingPtr ring, const FieldElem& c);
  static Polynomial variable(RingPtr ring, std::size_t i);
  static Polynomial variable(RingPtr ring, const std::string& name);
  static Polynomial monomial(RingPtr ring, const Monomial& m, const FieldElem& c);
  /// Builds from arbitrary terms: sorts, merges duplicates, drops zeros.
  static Polynomial from_terms(RingPtr ring, std::vector<Term> terms);

  const RingPtr& ring() const { return ring_; }
  const std::vector<Term>& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  bool is_constant() const { return terms_.empty() || (terms_.size() == 1 && terms_[0].mono.is_one()); }
  std::size_t size() const { return terms_.size(); }
  const Term& leading() const { return terms_.front(); }

  Polynomial monic() const;
  Polynomial scaled(const FieldElem& c) const;
  Polynomial times_term(const Monomial& m, const FieldElem& c) const;
  bool is_homogeneous(const std::vector<int>& weights) const;
  bool check_canonical() const;

  std::string to_string() const;

  Polynomial& operator+=(const Polynomial& g);
  Polynomial& operator-=(const Polynomial& g);
  friend Polynomial operator+(Polynomial f, const Polynomial& g) { return f += g; }
  friend Polynomial operator-(Polynomial f, const Polynomial& g) { return f -= g; }
  friend Polynomial operator-(const Polynomial& f);
  friend Polynomial operator*(const Polynomial& f, const Polynomial& g);
  friend bool operator==(const Polynomial& f, const Polynomial& g);

 private:
  RingPtr ring_;
  std::vector<Term> terms_;
  friend Polynomial combine(const Polynomial&, const Polynomial&, const FieldElem&);
};

Polynomial poly_add(const Polynomial& f, const Polynomial& g);
Polynomial poly_mul(const Polynomial& f, const Polynomial& g);
Polynomial pow(const Polynomial& f, unsigned e);
/// f + c*g in one merge pass.
Polynomial combine(const Polynomial& f, const Polynomial& g, const FieldElem& c);

/// Max over terms of the grading() degree; nullopt for the zero polynomial.
std::optional<long> weighted_degree(const Polynomial& f);
std::optional<long> weighted_degree(const Polynomial& f, const std::vector<int>& weights);

/// Rewrites f in `target`, matching variables by name. Throws if f uses a
/// variable the target lacks.
Polynomial map_by_names(const Polynomial& f, const RingPtr& target);
/// Substitutes images[i] for variable i of f's ring; images live in one ring.
Polynomial substitute(const Polynomial& f, const std::vector<Polynomial>& images, const RingPtr& target);

/// Parses "y1^2 + 3/2*y1*y2 - 1"; multiplication must be explicit.
Polynomial parse_polynomial(const std::string& text, const RingPtr& ring);

void require_same_ring(const Polynomial& f, const Polynomial& g);

}  // namespace reeskit

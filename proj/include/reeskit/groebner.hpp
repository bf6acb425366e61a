#pragma once

#include <cstdint>
#include <vector>

#include "reeskit/polynomial.hpp"

namespace reeskit {

class CapExceeded : public Error {
 public:
  using Error::Error;
};

/// One term c * m * e_comp of a free-module element.
struct VecTerm {
  std::uint32_t comp;
  Monomial mono;
  FieldElem coef;
};

/// Element of a free module P^r, terms strictly descending in position-over-term
/// order: a lower component index is larger, ties broken by the ring's order.
struct Vec {
  std::vector<VecTerm> terms;
  bool is_zero() const { return terms.empty(); }
  const VecTerm& lead() const { return terms.front(); }
};

/// The free module P^rank the engine works in. Shifts are the degrees of the
/// basis vectors in the ring's positive grading.
struct ModuleSpace {
  RingPtr ring;
  std::size_t rank = 1;
  std::vector<long> shifts;  // empty means all zero

  long shift(std::size_t i) const { return shifts.empty() ? 0 : shifts[i]; }
  long degree(const VecTerm& t) const { return ring->positive_degree(t.mono) + shift(t.comp); }
};

struct GbOptions {
  std::size_t max_pairs = 0;  // 0 = unlimited
};

/// Process-wide default used when callers pass no options (the CLI's --max-pairs).
GbOptions& default_gb_options();

Cmp pot_compare(const MonomialOrder& order, const VecTerm& a, const VecTerm& b);

Vec to_vec(const std::vector<Polynomial>& entries);
Vec to_vec(const Polynomial& f, std::uint32_t comp = 0);
std::vector<Polynomial> from_vec(const ModuleSpace& space, const Vec& v);
Vec vec_from_terms(const ModuleSpace& space, std::vector<VecTerm> terms);

/// f + c * m * g.
Vec vec_combine(const ModuleSpace& space, const Vec& f, const Vec& g, const FieldElem& c,
                const Monomial& m);
Vec vec_scale(const ModuleSpace& space, const Vec& f, const FieldElem& c);
Vec vec_monic(const ModuleSpace& space, const Vec& f);
bool vec_equal(const Vec& a, const Vec& b);

/// Full reduction of f by the list g (any list; a remainder in the Gröbner
/// sense only when g is a Gröbner basis).
Vec normal_form(const ModuleSpace& space, const Vec& f, const std::vector<Vec>& g);

/// Reduced Gröbner basis of the submodule generated by gens (Buchberger with
/// the normal selection strategy and both Buchberger criteria).
std::vector<Vec> groebner_basis(const ModuleSpace& space, std::vector<Vec> gens,
                                const GbOptions& opts = default_gb_options());

/// S-vector of two elements with leads in the same component.
Vec s_vector(const ModuleSpace& space, const Vec& f, const Vec& g);

/// Every S-vector reduces to zero (the Buchberger criterion).
bool satisfies_buchberger_criterion(const ModuleSpace& space, const std::vector<Vec>& gb);

}  // namespace reeskit

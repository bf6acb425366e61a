#pragma once

#include <random>
#include <string>
#include <vector>

#include "reeskit/ideal.hpp"

namespace testing_util {

using namespace reeskit;

inline RingPtr ring(const std::vector<std::string>& names, const std::string& order = "degrevlex",
                    Field k = Field::rationals()) {
  MonomialOrder o = order == "lex" ? MonomialOrder::lex(names.size()) : MonomialOrder::degrevlex(names.size());
  return PolyRing::make(k, names, o);
}

inline Polynomial P(const RingPtr& r, const std::string& s) { return parse_polynomial(s, r); }

inline Ideal I(const RingPtr& r, const std::vector<std::string>& gens) {
  std::vector<Polynomial> ps;
  for (const auto& g : gens) ps.push_back(P(r, g));
  return Ideal(r, ps);
}

/// Random polynomial with small integer coefficients and bounded exponents.
inline Polynomial random_poly(const RingPtr& r, std::mt19937_64& rng, int terms = 4, int maxexp = 2) {
  std::vector<Term> ts;
  std::uniform_int_distribution<int> coef(-5, 5), ex(0, maxexp);
  for (int i = 0; i < terms; ++i) {
    Monomial m;
    for (std::size_t v = 0; v < r->num_vars(); ++v) m[v] = ex(rng);
    ts.push_back({m, FieldElem(coef(rng))});
  }
  return Polynomial::from_terms(r, ts);
}

}  // namespace testing_util

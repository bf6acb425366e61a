#pragma once

#include <cstdint>
#include <random>
#include <string>
#include <vector>

#include "reeskit/modules.hpp"

namespace reeskit {

/// A = k[y] / (f_1..f_c) with homogeneous forms in the standard grading.
struct BaseRing {
  RingPtr ring;  // k[y]
  std::vector<Polynomial> forms;
  QuotientRing A;
  int dim = 0;              // d = dim A
  bool complete_intersection = false;  // height (f) = c

  /// Checks forms are homogeneous of degree >= 2 and form a regular sequence.
  static BaseRing make(RingPtr ring, std::vector<Polynomial> forms);
  /// Same without the degree and regular-sequence requirements.
  static BaseRing make_unchecked(RingPtr ring, std::vector<Polynomial> forms);
  Ideal defining() const { return Ideal(ring, forms); }
  Ideal maximal() const { return maximal_ideal(ring); }
};

/// k[y] with the given variable names, degrevlex, standard grading.
RingPtr standard_ring(Field k, const std::vector<std::string>& names);

/// Rees algebra R(I) = S/J, S = A[X_1..X_r], realized in k[y, X] where the
/// defining ideal carries the forms f as well.
struct ReesPresentation {
  BaseRing base;
  std::vector<Polynomial> gens;  // minimal homogeneous generators a_i of I
  std::vector<int> gen_degrees;  // internal degrees e_i
  RingPtr S;                     // k[y, X]
  QuotientRing SA;               // A[X]
  Ideal J;                       // J + (f) inside k[y, X]
  QuotientRing R;                // R(I)
  Ideal plus;                    // (X_1..X_r), whose image is R(I)_+
  std::vector<Polynomial> J_min; // minimal generators of J over A[X]

  Ideal I() const { return Ideal(base.ring, gens); }
  std::size_t mu_I() const { return gens.size(); }
};

/// Extended Rees algebra R̂(I) = Ŝ/Ĵ with Ŝ = A[X, T], T mapping to t^-1.
struct ExtReesPresentation {
  RingPtr S;                      // k[y, X, T]
  QuotientRing SA;                // A[X, T]
  Ideal J;                        // Ĵ + (f), from JŜ + (T X_i - a_i)
  Ideal J_kernel;                 // the same ideal by elimination
  QuotientRing R;                 // R̂(I)
  Polynomial T;
  Ideal plus;                     // (X_1..X_r)
  std::vector<Polynomial> J_min;  // minimal generators of Ĵ over A[X, T]
};

/// Gradings used in S and Ŝ: the user grading is the t-degree (y: 0, X: 1,
/// T: -1); the positive grading is 2 * internal degree - t-degree.
ReesPresentation rees_presentation(const BaseRing& a, const std::vector<Polynomial>& gens);
ExtReesPresentation ext_rees_presentation(const ReesPresentation& r);
/// G_I(A) = Ŝ / (Ĵ + (T)).
QuotientRing assoc_graded(const ExtReesPresentation& e);

/// height of L in P/L0: dim P/L0 - dim P/(L + L0).
int height_of(const Ideal& l, const QuotientRing& ambient);
/// μ of the ideal generated by the variables, modulo the defining ideal.
int embdim(const QuotientRing& q);
/// Whether a is a nonzerodivisor on A.
bool is_regular_element(const BaseRing& a, const Polynomial& x);

struct SuperficialCertificate {
  Polynomial x;                    // in k[y]
  std::vector<long> coefficients;  // x = Σ λ_i a_i
  int c = 0;
  int n0 = 0;
  int verified_through = 0;  // direct identity checked for n0 <= n <= this
  std::string method;        // "gr-torsion" plus "direct-colon" window
  int candidates_tried = 0;
};

struct RandomOptions {
  int rounds = 8;
  int per_round = 16;
  long initial_box = 4;
  int window = 6;     // direct colon identity checked for n <= window
  int red_cap = 10;   // reduction-number cap
};
RandomOptions& default_random_options();

/// x = Σ λ_i a_i for the given coefficients. Checks the gr-criterion (the
/// annihilator of x* in G_I(A) is G_+-torsion) and, on success, the direct
/// identity ((I^{n+1} : x) ∩ I^c = I^n in A) for n0 <= n <= window.
std::optional<SuperficialCertificate> certify_superficial(const ReesPresentation& r, const ExtReesPresentation& e,
                                                         const std::vector<long>& coefficients,
                                                         const RandomOptions& opts = default_random_options());
/// Direct identity at one n, usable as an independent re-check.
bool superficial_identity_holds(const BaseRing& a, const Ideal& i, const Polynomial& x, int c, int n);

SuperficialCertificate superficial_element(const ReesPresentation& r, std::uint64_t seed,
                                           const RandomOptions& opts = default_random_options());

struct ReductionCertificate {
  std::vector<Polynomial> Q;  // in k[y]
  int reduction_number = 0;
  std::vector<SuperficialCertificate> sequence;
};

/// Least n <= cap with I^{n+1} = Q I^n modulo the base forms, at the origin
/// when Q is inhomogeneous; nullopt past cap.
std::optional<int> reduction_number(const BaseRing& a, const Ideal& i, const Ideal& q, int cap);
ReductionCertificate minimal_reduction(const ReesPresentation& r, int height, std::uint64_t seed,
                                       const RandomOptions& opts = default_random_options());

/// Minimal generators of I that are nonzerodivisors on A.
std::vector<Polynomial> regular_generators(const BaseRing& a, const std::vector<Polynomial>& gens,
                                           std::uint64_t seed, const RandomOptions& opts = default_random_options());

/// Integer in [-box, box]. Uses raw engine output with a fixed reduction so
/// runs agree across standard libraries.
long draw(std::mt19937_64& rng, long box);

}  // namespace reeskit

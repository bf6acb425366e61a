#pragma once

#include <string>
#include <utility>
#include <vector>

#include "reeskit/modules.hpp"

namespace reeskit {

/// Koszul complex K(u) over `base` up to degree 3:
///   K3 --d3--> K2 --d2--> K1 --d1--> K0.
/// d(e_a ∧ e_b) = u_a e_b - u_b e_a, d(e_a ∧ e_b ∧ e_c) = u_a e_bc - u_b e_ac + u_c e_ab.
/// Basis of K2 and K3 in lexicographic order of index pairs and triples.
struct KoszulData {
  QuotientRing base;
  std::vector<Polynomial> u;
  std::vector<std::pair<std::size_t, std::size_t>> pairs;
  std::vector<std::vector<std::size_t>> triples;
  FreeModule K0, K1, K2, K3;  // shifts in the positive grading
  Matrix d1, d2, d3;
  bool minimal = true;  // u is a minimal generating set of (u)

  std::size_t pair_index(std::size_t a, std::size_t b) const;
};

/// Throws if u is inhomogeneous or if d1 d2 or d2 d3 fails to vanish. A
/// non-minimal u only clears `minimal`.
KoszulData koszul(const std::vector<Polynomial>& u, const QuotientRing& base);

enum class AQTag { H1, H2, D2, D3 };
std::string to_string(AQTag t);

struct AQModule {
  Subquotient m;
  AQTag tag;
  std::string provenance;
  bool is_zero() const { return m.is_zero(); }
};

AQModule H1(const KoszulData& k);
AQModule H2(const KoszulData& k);
/// ker(H1 -> (base/(u))^s): cycles with entries in (u), modulo boundaries.
AQModule D2(const KoszulData& k);
/// Columns z ∧ w for pairs of minimal generators of H1; each is checked to be
/// a d2-cycle. Characteristic zero only.
Matrix wedge_map(const AQModule& h1, const KoszulData& k);
/// coker(Λ²H1 -> H2), i.e. Z2 / (B2 + image of wedge_map).
AQModule D3(const KoszulData& k);
AQModule D3(const KoszulData& k, const AQModule& h1);

enum class PlusStatus { Zero, PlusTorsionNonzero, NotPlusTorsion };
enum class TinvStatus { Zero, Torsion, NotTorsion };
std::string to_string(PlusStatus s);
std::string to_string(TinvStatus s);

/// Torsion with respect to `plus`, the ideal (X_1..X_r) of the ambient ring.
PlusStatus plus_torsion_status(const AQModule& m, const Ideal& plus);
/// Torsion with respect to the element T.
TinvStatus tinv_torsion_status(const AQModule& m, const Polynomial& t);

/// Column-wise check that a * b vanishes over a's base.
bool composes_to_zero(const Matrix& a, const Matrix& b);

}  // namespace reeskit

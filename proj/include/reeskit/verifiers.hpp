#pragma once

#include <functional>
#include <optional>
#include <string>
#include <variant>
#include <vector>

#include "reeskit/aq_homology.hpp"
#include "reeskit/rees.hpp"

namespace reeskit {

enum class ReportStatus { Consistent, Violation, Inapplicable, Error };
std::string to_string(ReportStatus s);

struct Verdict {
  std::string name;
  std::variant<bool, long, std::string> value;
  std::string certificate;  // empty when the value speaks for itself
};

struct TheoremReport {
  std::string check;  // rank, proj-ci, ext-ci, min-gen, d2, hilb, gulliksen
  std::string input;
  std::vector<Verdict> verdicts;
  ReportStatus status = ReportStatus::Consistent;
  std::string note;
  double seconds = 0;

  void add(std::string name, std::variant<bool, long, std::string> v, std::string cert = {});
  const Verdict* find(const std::string& name) const;
  bool flag(const std::string& name) const;     // throws unless a bool verdict
  long integer(const std::string& name) const;  // throws unless an integer verdict
};

enum class Side { Rees, Ext };

/// μ and height of an ideal of a polynomial ring generated by forms; equal
/// exactly when the quotient is a complete intersection.
struct CiData {
  long mu = 0;
  long height = 0;
  bool ci() const { return mu == height; }
};
CiData ci_data(const Ideal& k);

struct FreeLocus {
  int rank = 0;
  Ideal fitting;  // Fitt_rank, or the annihilator when rank is 0
  bool on_proj = false;  // every X_i lies in the radical
};
/// M over the domain R (M annihilated by R's defining ideal).
FreeLocus free_locus(const AQModule& m, const QuotientRing& r, const Ideal& plus);

struct LciLocus {
  int height = 0;
  Ideal fitting;  // Fitt_height(K/K^2) read over P/K
  bool on_proj = false;
};
/// K an ideal of a polynomial ring P, with P/K equidimensional.
LciLocus proj_lci_locus(const Ideal& k, const Ideal& plus);

/// A Rees algebra and its extended version with Koszul homology of J and Ĵ
/// computed on demand and kept.
class Analysis {
 public:
  explicit Analysis(ReesPresentation r);

  const ReesPresentation& rees() const { return r_; }
  const ExtReesPresentation& ext() const { return e_; }
  const QuotientRing& R(Side s) const { return s == Side::Rees ? r_.R : e_.R; }
  const QuotientRing& SA(Side s) const { return s == Side::Rees ? r_.SA : e_.SA; }
  /// Defining ideal in the polynomial ring, forms of A included.
  const Ideal& J(Side s) const { return s == Side::Rees ? r_.J : e_.J; }
  const std::vector<Polynomial>& J_min(Side s) const { return s == Side::Rees ? r_.J_min : e_.J_min; }
  const Ideal& plus(Side s) const { return s == Side::Rees ? r_.plus : e_.plus; }
  bool char_zero() const { return r_.base.ring->field().characteristic() == 0; }

  const KoszulData& koszul(Side s);
  const AQModule& h1(Side s);
  const AQModule& d2(Side s);
  const AQModule& d3(Side s);
  const FreeLocus& h1_locus(Side s);
  const LciLocus& lci_locus(Side s);

 private:
  struct Cache {
    std::optional<KoszulData> k;
    std::optional<AQModule> h1, d2, d3;
    std::optional<FreeLocus> free;
    std::optional<LciLocus> lci;
  };
  Cache& cache(Side s) { return s == Side::Rees ? rees_cache_ : ext_cache_; }
  ReesPresentation r_;
  ExtReesPresentation e_;
  Cache rees_cache_, ext_cache_;
};

/// Lengths of the t-degree pieces n = from .. from + count - 1 of a bigraded
/// module over k[y, X] (y: t-degree 0, X: t-degree 1). Basis vector c has
/// t-degree t_shifts[c]. The module must be killed by a power of (y).
std::vector<long> t_degree_lengths(const Subquotient& m, const std::vector<long>& t_shifts, int from, int count);

/// Degree of the polynomial eventually agreeing with the values: the least k
/// whose k-th differences end in three equal entries; -1 for eventually zero.
/// nullopt when no such row exists.
std::optional<int> polynomial_degree(const std::vector<long>& values);

TheoremReport check_rank_formula(Analysis& a);
TheoremReport verify_thm_proj_ci(Analysis& a);
TheoremReport verify_thm_ext_ci(Analysis& a);
TheoremReport verify_min_gen_bound(Analysis& a, std::uint64_t seed,
                                   const RandomOptions& opts = default_random_options());
TheoremReport verify_d2_criteria(Analysis& a);
TheoremReport hilbert_degree_D2(Analysis& a, int i, int window = 8);
TheoremReport gulliksen_locus_check(Analysis& a);

/// Runs `body` with timing and converts an escaping exception into an Error
/// report for `check`.
TheoremReport guarded(const std::string& check, const std::string& input,
                      const std::function<TheoremReport()>& body);

}  // namespace reeskit

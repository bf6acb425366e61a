#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"
#include "reeskit/verifiers.hpp"
#include "suite.hpp"

using namespace reeskit;
using namespace testing_util;

namespace {

Analysis analysis(const std::vector<std::string>& forms, const std::vector<std::string>& gens) {
  return Analysis(rees(y2(), forms, gens));
}

AQModule module_of(Submodule num, Submodule den) { return {Subquotient(std::move(num), std::move(den)), AQTag::H1, "test"}; }

std::string text(const TheoremReport& r, const std::string& name) {
  const auto* v = r.find(name);
  REQUIRE(v != nullptr);
  return std::get<std::string>(v->value);
}

}  // namespace

TEST_CASE("polynomial degree from a difference table") {
  CHECK(polynomial_degree({0, 0, 0, 0}) == -1);
  CHECK(polynomial_degree({5, 3, 0, 0, 0}) == -1);
  CHECK(polynomial_degree({4, 4, 4}) == 0);
  CHECK(polynomial_degree({1, 2, 3, 4, 5}) == 1);
  CHECK(polynomial_degree({0, 1, 4, 9, 16, 25}) == 2);
  // 2^n never settles
  CHECK_FALSE(polynomial_degree({1, 2, 4, 8, 16, 32}).has_value());
  CHECK_FALSE(polynomial_degree({1, 2}).has_value());
}

TEST_CASE("t-degree lengths of the fiber cone of the maximal ideal") {
  // R(m)/m R(m) = k[X1, X2]: the t-degree n piece has length n + 1.
  auto r = rees(y2(), {}, {"y1", "y2"});
  FreeModule f(r.R, 1);
  std::vector<Element> ys;
  for (const auto& g : r.base.ring->names()) ys.push_back({P(r.S, g)});
  Subquotient fiber(Submodule(f, {f.basis(0)}), Submodule(f, ys));
  auto l = t_degree_lengths(fiber, {0}, 0, 7);
  for (int n = 0; n < 7; ++n) CHECK(l[static_cast<std::size_t>(n)] == n + 1);
  CHECK(polynomial_degree(l) == 1);

  // shifting the generator to t-degree 2 moves the window
  auto s = t_degree_lengths(fiber, {2}, 0, 4);
  CHECK(s == std::vector<long>{0, 0, 1, 2});

  // R(m) itself is not killed by a power of (y)
  Subquotient whole(Submodule(f, {f.basis(0)}), Submodule(f, {}));
  CHECK_THROWS(t_degree_lengths(whole, {0}, 0, 3));
}

TEST_CASE("free locus") {
  auto r = rees(y2(), {}, {"y1", "y2"});
  FreeModule f1(r.R, 1);
  auto free = free_locus(module_of(Submodule(f1, {f1.basis(0)}), Submodule(f1, {})), r.R, r.plus);
  CHECK(free.rank == 1);
  CHECK(free.fitting.is_unit());
  CHECK(free.on_proj);

  // R ⊕ R/(y1): not free along V(y1), which meets Proj
  FreeModule f2(r.R, 2);
  auto m = module_of(Submodule(f2, {f2.basis(0), f2.basis(1)}), Submodule(f2, {{Polynomial(r.S), P(r.S, "y1")}}));
  auto fl = free_locus(m, r.R, r.plus);
  CHECK(fl.rank == 1);
  CHECK(fl.fitting.contains(P(r.S, "y1")));
  CHECK_FALSE(fl.fitting.is_unit());
  CHECK_FALSE(fl.on_proj);

  // torsion module supported on V(R+) only: rank 0, free on Proj
  auto tor = module_of(Submodule(f1, {f1.basis(0)}), Submodule(f1, {{P(r.S, "X1")}, {P(r.S, "X2")}}));
  auto tl = free_locus(tor, r.R, r.plus);
  CHECK(tl.rank == 0);
  CHECK(tl.on_proj);
}

TEST_CASE("lci locus") {
  auto a = analysis({}, {"y1", "y2"});
  const auto& l = a.lci_locus(Side::Rees);
  CHECK(l.height == 1);
  CHECK(l.fitting.is_unit());
  CHECK(l.on_proj);

  auto b = analysis({}, {"y1^2", "y1*y2", "y2^2"});
  CHECK(b.lci_locus(Side::Rees).on_proj);
  // principal I: Ĵ = (T X1 - y1)
  auto c = analysis({}, {"y1"});
  CHECK(c.lci_locus(Side::Ext).on_proj);
  CHECK(c.lci_locus(Side::Ext).fitting.is_unit());
}

TEST_CASE("ci data") {
  auto r = ring({"x", "y", "z"});
  auto ci = ci_data(I(r, {"x*y", "z^2"}));
  CHECK(ci.mu == 2);
  CHECK(ci.height == 2);
  CHECK(ci.ci());
  auto tw = ci_data(I(r, {"x*y", "x*z", "y*z"}));
  CHECK(tw.mu == 3);
  CHECK(tw.height == 2);
  CHECK_FALSE(tw.ci());
}

TEST_CASE("rank formula on the suite") {
  for (const auto& c : suite()) {
    Analysis a(rees(y2(), c.forms, c.gens));
    auto rep = check_rank_formula(a);
    CAPTURE(rep.input);
    CHECK(rep.status == ReportStatus::Consistent);
    long mu_i = rep.integer("mu_I");
    CHECK(rep.integer("rank_H1_rees") == rep.integer("mu_J_rees") - mu_i + 1);
    CHECK(rep.integer("rank_H1_ext") == rep.integer("mu_J_ext") - mu_i);
  }
  auto m = analysis({}, {"y1", "y2"});
  auto rep = check_rank_formula(m);
  CHECK(rep.integer("rank_H1_rees") == 0);
  CHECK(rep.integer("rank_H1_ext") == 0);
  auto sq = analysis({}, {"y1^2", "y1*y2", "y2^2"});
  CHECK(check_rank_formula(sq).integer("rank_H1_rees") == 1);
}

TEST_CASE("rank formula in one variable") {
  auto y = standard_ring(Field::rationals(), {"y1"});
  Analysis a(rees_presentation(BaseRing::make(y, {}), {P(y, "y1")}));
  auto rep = check_rank_formula(a);
  CHECK(rep.status == ReportStatus::Consistent);
  CHECK(rep.integer("rank_H1_ext") == 0);
}

TEST_CASE("proj-ci agreement") {
  auto m = analysis({}, {"y1", "y2"});
  auto rep = verify_thm_proj_ci(m);
  CHECK(rep.status == ReportStatus::Consistent);
  for (const char* s : {"proj_lci_rees", "proj_lci_ext", "koszul_side_rees", "koszul_side_ext"}) CHECK(rep.flag(s));

  auto sq = analysis({}, {"y1^2", "y1*y2", "y2^2"});
  auto r2 = verify_thm_proj_ci(sq);
  CHECK(r2.status == ReportStatus::Consistent);
  CHECK(r2.flag("statements_agree"));
  CHECK(r2.flag("proj_lci_rees"));

  auto hyp = analysis({"y1^2 + y2^2"}, {"y1", "y2"});
  CHECK(verify_thm_proj_ci(hyp).status == ReportStatus::Consistent);

  auto fp = Analysis(rees_presentation(BaseRing::make(standard_ring(Field::prime(7), {"y1", "y2"}), {}),
                                       {P(standard_ring(Field::prime(7), {"y1", "y2"}), "y1")}));
  CHECK(verify_thm_proj_ci(fp).status == ReportStatus::Inapplicable);
}

TEST_CASE("ext-ci agreement") {
  auto m = analysis({}, {"y1", "y2"});
  auto rep = verify_thm_ext_ci(m);
  CHECK(rep.status == ReportStatus::Consistent);
  CHECK(rep.integer("mu_K") == 2);
  CHECK(rep.integer("height_K") == 2);
  CHECK(rep.flag("complete_intersection"));
  CHECK(rep.flag("H1_free"));
  CHECK(rep.flag("D3_zero"));

  auto p = analysis({}, {"y1"});
  auto rp = verify_thm_ext_ci(p);
  CHECK(rp.flag("complete_intersection"));
  CHECK(rp.flag("koszul_side"));

  auto sq = analysis({}, {"y1^2", "y1*y2", "y2^2"});
  auto rs = verify_thm_ext_ci(sq);
  CHECK(rs.status == ReportStatus::Consistent);
  CHECK_FALSE(rs.flag("complete_intersection"));
  CHECK_FALSE(rs.flag("koszul_side"));

  // hypersurface: Ĵ needs three generators over A[X, T] but has height two
  // there, while the ideal of R^ in k[y, X, T] is a complete intersection
  auto hyp = analysis({"y1^2 + y2^2"}, {"y1", "y2"});
  auto rh = verify_thm_ext_ci(hyp);
  CHECK(rh.status == ReportStatus::Consistent);
  CHECK(rh.integer("mu_J_over_S") == 3);
  CHECK(rh.integer("height_J_over_S") == 2);
  CHECK_FALSE(rh.flag("J_regular_sequence_over_S"));
  CHECK(rh.flag("complete_intersection") == rh.flag("koszul_side"));
}

TEST_CASE("min-gen bound on the hypersurface") {
  auto hyp = analysis({"y1^2 + y2^2"}, {"y1", "y2"});
  auto rep = verify_min_gen_bound(hyp, 1);
  CHECK(rep.status == ReportStatus::Consistent);
  CHECK(rep.integer("embdim_A_mod_Q") == 1);
  CHECK(rep.integer("height_I") == 1);
  CHECK(rep.integer("dim_A") == 1);
  CHECK(rep.integer("mu_H1") == 1);
  CHECK(rep.integer("bound_value") == 1);
  CHECK(text(rep, "bound") == "bound attained: 1 = 1");

  auto m = analysis({}, {"y1", "y2"});
  auto rm = verify_min_gen_bound(m, 1);
  CHECK(rm.integer("mu_H1") == 0);
  CHECK(rm.integer("mu_H1") <= rm.integer("bound_value"));

  auto sq = analysis({}, {"y1^2", "y1*y2", "y2^2"});
  CHECK(verify_min_gen_bound(sq, 1).status == ReportStatus::Inapplicable);
}

TEST_CASE("d2 criteria") {
  auto m = analysis({}, {"y1", "y2"});
  auto rep = verify_d2_criteria(m);
  CHECK(rep.status == ReportStatus::Consistent);
  CHECK(rep.flag("d2_zero_rees"));
  CHECK(rep.flag("d2_zero_ext"));
  CHECK(text(rep, "h1_unmixed_rees") == "untested");

  auto sq = analysis({}, {"y1^2", "y1*y2", "y2^2"});
  auto r2 = verify_d2_criteria(sq);
  CHECK(r2.status == ReportStatus::Consistent);
  CHECK(r2.flag("eventual_vanishing_agrees"));

  auto hyp = analysis({"y1^2 + y2^2"}, {"y1", "y2"});
  auto rh = verify_d2_criteria(hyp);
  CHECK(rh.status == ReportStatus::Consistent);
  CHECK_FALSE(rh.flag("d2_zero_rees"));
  CHECK(text(rh, "d2_status_rees") == "plus-torsion-nonzero");
  CHECK(rh.flag("d2_zero_ext"));
  for (const char* s : {"d2_tinv_status_ext", "d3_tinv_status_ext"}) CHECK(text(rh, s) != "not-torsion");
}

TEST_CASE("hilbert degree of D2") {
  auto m = analysis({}, {"y1", "y2"});
  auto rep = hilbert_degree_D2(m, 2);
  CHECK(rep.status == ReportStatus::Consistent);
  CHECK(rep.integer("degree") == -1);
  CHECK(rep.flag("degree_verdict"));

  auto ci = analysis({}, {"y1^2", "y2^2"});
  CHECK(hilbert_degree_D2(ci, 2).integer("degree") == -1);

  auto sq = analysis({}, {"y1^2", "y1*y2", "y2^2"});
  for (int i : {1, 2}) {
    auto r = hilbert_degree_D2(sq, i);
    CAPTURE(i);
    CHECK(r.status == ReportStatus::Consistent);
    CHECK(r.flag("degree_verdict") == r.flag("locus_verdict"));
  }

  auto mixed = analysis({}, {"y1^3", "y1*y2", "y2^3"});
  CHECK(hilbert_degree_D2(mixed, 1).status == ReportStatus::Inapplicable);
  auto line = analysis({}, {"y1"});
  CHECK(hilbert_degree_D2(line, 1).status == ReportStatus::Inapplicable);
}

TEST_CASE("gulliksen locus") {
  for (auto gens : std::vector<std::vector<std::string>>{{"y1", "y2"}, {"y1^2", "y1*y2", "y2^2"}, {"y1^2", "y1*y2"}}) {
    auto a = analysis({}, gens);
    auto rep = gulliksen_locus_check(a);
    CAPTURE(rep.input);
    CHECK(rep.status == ReportStatus::Consistent);
    CHECK(rep.flag("radicals_equal_rees"));
    CHECK(rep.flag("radicals_equal_ext"));
  }
  auto hyp = analysis({"y1^2 + y2^2"}, {"y1", "y2"});
  CHECK(gulliksen_locus_check(hyp).status == ReportStatus::Inapplicable);
}

TEST_CASE("guarded turns exceptions into error reports") {
  auto rep = guarded("rank", "nothing", []() -> TheoremReport { throw Error("boom"); });
  CHECK(rep.status == ReportStatus::Error);
  CHECK(rep.check == "rank");
  CHECK(rep.note == "boom");
  auto ok = guarded("rank", "x", [] {
    TheoremReport r;
    r.check = "rank";
    r.add("flag", true);
    return r;
  });
  CHECK(ok.status == ReportStatus::Consistent);
  CHECK(ok.flag("flag"));
  CHECK_THROWS(ok.integer("flag"));
  CHECK(ok.find("missing") == nullptr);
}

#include <doctest.h>

#include <algorithm>

#include "gen.hpp"
#include "spectral_oracles.hpp"
#include "spectra/errors.hpp"
#include "spectra/spectral.hpp"

using namespace spectra;

namespace {

Poly P(const char* s) { return Poly::parse(s); }

WeierstrassModel model_u4_v6() { return build_model(0, 1, BaseKind::p1_explicit, P("u^4"), P("v^6")); }

bool has_section_base_point(const CurveCertificate& c) {
  if (!c.witness.contains("base_points_found")) return false;
  for (const auto& w : c.witness["base_points_found"]) {
    if (w.contains("point") && w["point"] == "section") return true;
  }
  return false;
}

}  // namespace

TEST_CASE("forced vanishing examples") {
  const ForcedVanishing a = forced_vanishing(3, 2, 5);
  CHECK(a.indices == std::vector<int>{3});
  CHECK(a.not_integral);
  CHECK_FALSE(a.not_reduced);
  const ForcedVanishing b = forced_vanishing(3, 2, 2);
  CHECK(b.indices == std::vector<int>{2, 3});
  CHECK(b.not_reduced);
  CHECK(forced_vanishing(2, 1, 10).indices.empty());
}

TEST_CASE("property: forced vanishing shrinks as e grows") {
  for (int r = 2; r <= 6; ++r)
    for (int d = 1; d <= 3; ++d)
      for (int e = 0; e < 20; ++e) {
        const auto now = forced_vanishing(r, d, e).indices;
        const auto next = forced_vanishing(r, d, e + 1).indices;
        CHECK(std::includes(now.begin(), now.end(), next.begin(), next.end()));
      }
}

TEST_CASE("grr degree examples") {
  CHECK(grr_degree(0, 5) == -5);
  CHECK(grr_degree(0, 0) == 0);
  CHECK(grr_degree(3, 7) == -4);
}

TEST_CASE("spectral polynomial in the pole-order basis") {
  const WeierstrassModel m = model_u4_v6();
  const SpectralData sd2 = SpectralData::from_forms(2, 3, {{0, P("u^3")}, {2, P("v")}});
  CHECK(spectral_polynomial(m, sd2) == P("u^3 + v*x"));
  const SpectralData sd3 = SpectralData::from_forms(3, 3, {{0, P("u^3")}, {2, P("v")}, {3, Poly(2)}});
  CHECK(spectral_polynomial(m, sd3) == P("u^3 + v*x + 2*y"));
  const SpectralData sd5 =
      SpectralData::from_forms(5, 5, {{0, P("u^5")}, {2, P("v^3")}, {3, P("u^2")}, {4, P("v")}, {5, Poly(1)}});
  CHECK(spectral_polynomial(m, sd5) == P("u^5 + v^3*x + u^2*y + v*x^2 + x*y"));
  const SpectralData bad = SpectralData::from_forms(2, 3, {{0, P("u^2")}, {2, P("v")}});
  CHECK_THROWS_AS(spectral_polynomial(m, bad), DomainError);
}

TEST_CASE("monomial count equals registry h0 on P1") {
  for (int r = 2; r <= 6; ++r)
    for (int d = 1; d <= 3; ++d) {
      const WeierstrassModel m = build_model(0, d, BaseKind::abstract);
      for (int e = 0; e <= 20; ++e) {
        const H0Answer h = h0_on_surface(m, {SheafKind::o_r_sigma, r, LineBundleClass::generic(e)});
        CHECK(h.exact);
        CHECK(h.lower == monomial_count_p1(r, d, e));
      }
    }
}

TEST_CASE("reducedness examples") {
  const WeierstrassModel m = model_u4_v6();
  SpectralData sd = SpectralData::from_forms(3, 3, {{0, P("u^3")}, {2, Poly()}, {3, Poly()}});
  CHECK(reducedness_test(m, sd).verdict == Verdict::no);

  const WeierstrassModel generic = build_model(0, 1, BaseKind::p1_explicit, P("u^4 + 2*v^4"), P("u^6 - v^6 + u*v^5"));
  const SpectralData ok = SpectralData::from_forms(2, 2, {{0, P("u^2 + v^2")}, {2, Poly(1)}});
  const CurveCertificate c = reducedness_test(generic, ok, {16, 7});
  CHECK(c.verdict == Verdict::yes);
  CHECK(c.witness.contains("b"));

  const Poly sq = P("(u-v)^2");
  const SpectralData planted = SpectralData::from_forms(2, 4, {{0, sq * P("u^2 + v^2")}, {2, sq}});
  const CurveCertificate np = reducedness_test(generic, planted, {16, 7});
  CHECK(np.verdict == Verdict::no);
}

TEST_CASE("smoothness examples") {
  const WeierstrassModel m = model_u4_v6();
  const SpectralData sd = SpectralData::from_forms(2, 3, {{0, P("u^3 + 2*u*v^2 - v^3")}, {2, P("u + 3*v")}});
  const CurveCertificate s = smoothness_test(m, sd, 1);
  const Poly h = oracle::branch_form(m, sd.form(0), sd.form(2));
  CHECK(oracle::binary_form_squarefree(h, 4 * 3 - 2) == true);
  CHECK(s.verdict == Verdict::yes);
  CHECK(reducedness_test(m, sd).verdict != Verdict::no);

  // Planted node: H = -s0^3 - u^4 s0 + v^6 has a double root at u = 0.
  const SpectralData node = SpectralData::from_forms(2, 2, {{0, P("u^2 + v^2")}, {2, Poly(1)}});
  CHECK_FALSE(oracle::binary_form_squarefree(oracle::branch_form(m, node.form(0), node.form(2)), 6));
  const CurveCertificate n = smoothness_test(m, node, 1);
  CHECK(n.verdict == Verdict::no);
  CHECK(n.witness["rule"] == "rational-singular-point");

  const WeierstrassModel bad = build_model(0, 1, BaseKind::p1_explicit, Poly(), P("v^6"), ModelOptions{true});
  CHECK_THROWS_AS(smoothness_test(bad, sd, 1), HypothesisViolation);
}

TEST_CASE("connectedness examples") {
  CHECK(connectedness_certificate(2, 1, 3, 0).verdict == Verdict::yes);
  CHECK(connectedness_certificate(3, 1, 2, 0).verdict == Verdict::unknown);
  CHECK(connectedness_certificate(2, 1, 1, 1).verdict == Verdict::unknown);
}

TEST_CASE("base point freeness examples") {
  CHECK(base_point_free(build_model(0, 1, BaseKind::abstract), 2, 2).verdict == Verdict::yes);
  CHECK(base_point_free(build_model(0, 1, BaseKind::abstract), 2, 1).verdict == Verdict::no);
  CHECK(base_point_free(build_model(1, 1, BaseKind::abstract), 3, 5).verdict == Verdict::yes);
  const CurveCertificate c = base_point_free(model_u4_v6(), 2, 1, {100, 3});
  CHECK(c.verdict == Verdict::no);
  CHECK(has_section_base_point(c));
}

TEST_CASE("regularity and genus") {
  CHECK(regularity_inference(true) == Verdict::yes);
  CHECK(regularity_inference(false) == Verdict::unknown);
  CHECK(spectral_genus(2, 1, 3, 0) == 4);
  CHECK(spectral_genus(1, 3, 0, 2) == 2);
  CHECK(spectral_genus(2, 1, 2, 0) == 2);
}

TEST_CASE("property: genus formula against the double-cover model") {
  // A smooth double cover branched along a squarefree form of degree 2k has
  // genus k - 1; the branch form has degree 4e - 2.
  for (int e = 2; e <= 8; ++e) {
    const int branch_degree = 4 * e - 2;
    CHECK(spectral_genus(2, 1, e, 0) == branch_degree / 2 - 1);
  }
}

TEST_CASE("property: integrality never contradicts forced vanishing") {
  testgen::Gen gen(31);
  const WeierstrassModel m = model_u4_v6();
  for (int trial = 0; trial < 8; ++trial) {
    const int r = 3, e = 3 + trial % 2;
    std::map<int, Poly> forms{{0, gen.binary_form(e, 3)}, {2, gen.binary_form(e - 2, 3)}, {3, Poly()}};
    const SpectralData sd = SpectralData::from_forms(r, e, forms);
    const CurveCertificate red = reducedness_test(m, sd, {8, 1});
    const CurveCertificate sm = smoothness_test(m, sd, 1);
    const CurveCertificate con = connectedness_certificate(r, 1, e, 0);
    const CurveCertificate in = integrality_test(m, sd, red, sm, con);
    CHECK(in.verdict == Verdict::no);
    if (sm.verdict == Verdict::yes) CHECK(red.verdict != Verdict::no);
  }
}

TEST_CASE("validation of spectral data") {
  SpectralData sd = SpectralData::from_forms(2, 1, {{0, P("u")}, {2, P("u")}});
  CHECK_THROWS_AS(sd.validate(1), DomainError);
  SpectralData all_zero = SpectralData::from_forms(2, 2, {{0, Poly()}, {2, Poly()}});
  CHECK_THROWS_AS(all_zero.validate(1), DomainError);
}

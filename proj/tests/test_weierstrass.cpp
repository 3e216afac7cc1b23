#include <doctest.h>

#include "gen.hpp"
#include "spectra/errors.hpp"
#include "spectra/weierstrass.hpp"

using namespace spectra;

namespace {

Poly P(const char* s) { return Poly::parse(s); }

WeierstrassModel model_u4_v6() { return build_model(0, 1, BaseKind::p1_explicit, P("u^4"), P("v^6")); }

std::vector<int> degrees(const SheafSum& s) {
  std::vector<int> out;
  for (const auto& l : s.summands) out.push_back(l.degree);
  return out;
}

}  // namespace

TEST_CASE("build_model examples") {
  const WeierstrassModel m = model_u4_v6();
  CHECK(m.report.delta_squarefree == Check::holds);
  CHECK(m.report.disjoint_zeros == Check::holds);
  const FiberSummary fs = singular_fibers(m);
  CHECK(fs.nodal_fiber_count == 12);
  CHECK(fs.total_with_multiplicity == 12);
  CHECK_THROWS_AS(build_model(0, 1, BaseKind::p1_explicit, P("u^4"), P("u^6")), HypothesisViolation);
  CHECK_THROWS_AS(build_model(1, 0, BaseKind::abstract), HypothesisViolation);
  CHECK_THROWS_AS(build_model(0, 1, BaseKind::p1_explicit, P("u^3"), P("v^6")), DomainError);
  CHECK_THROWS_AS(build_model(1, 1, BaseKind::p1_explicit, P("u^4"), P("v^6")), DomainError);
  CHECK_THROWS_AS(build_model(0, 1, BaseKind::p1_explicit, Poly(), Poly()), HypothesisViolation);
}

TEST_CASE("cusps can be downgraded to a warning") {
  const WeierstrassModel m = build_model(0, 1, BaseKind::p1_explicit, P("u^4"), P("u^6"), {true});
  CHECK_FALSE(m.supported());
  CHECK(m.report.disjoint_zeros == Check::fails);
  CHECK_FALSE(m.report.warnings.empty());
}

TEST_CASE("discriminant examples") {
  // Oracle: expand -16(4 a4^3 + 27 a6^2) term by term.
  const DiscriminantInfo info = discriminant_section(model_u4_v6());
  REQUIRE(info.section.has_value());
  CHECK(*info.section == P("-64*u^12 - 432*v^12"));
  CHECK(info.degree == 12);

  const WeierstrassModel m0 = build_model(0, 1, BaseKind::p1_explicit, Poly(), P("v^6"), ModelOptions{true});
  CHECK(*m0.delta == P("-432*v^12"));
  CHECK(m0.report.delta_squarefree == Check::fails);
  CHECK(squarefree_part(*m0.delta) != m0.delta->monic());

  const WeierstrassModel m2 = build_model(0, 2, BaseKind::p1_explicit, P("u^8 + v^8"), P("u^12 - 2*u^6*v^6 + 3*v^12"));
  CHECK(discriminant_section(m2).degree == 24);
  CHECK(discriminant_section(m2).section->total_degree() == 24);
  CHECK(discriminant_section(build_model(2, 3, BaseKind::abstract)).degree == 36);
  CHECK_FALSE(discriminant_section(build_model(2, 3, BaseKind::abstract)).section.has_value());
}

TEST_CASE("singular fibers of a model with rational nodes") {
  // a4 = -3 (u^2 - v^2)^2... choose a4, a6 with a rational nodal fiber at u = 0:
  // Delta(0, 1) = 0 when 4 a4^3 = -27 a6^2, e.g. a4 = -3 v^4 + u^4, a6 = 2 v^6.
  const WeierstrassModel m = build_model(0, 1, BaseKind::p1_explicit, P("u^4 - 3*v^4"), P("2*v^6"));
  const FiberSummary fs = singular_fibers(m);
  CHECK(fs.total_with_multiplicity == 12);
  bool found_origin = false;
  for (const auto& f : fs.fibers) {
    if (f.point && f.point->first == 0) {
      found_origin = true;
      CHECK(f.type.rfind("I", 0) == 0);
    }
  }
  CHECK(found_origin);
}

TEST_CASE("pushforward registry examples") {
  const WeierstrassModel m = build_model(1, 2, BaseKind::abstract);
  CHECK(degrees(pushforward(m, {SheafKind::o_r_sigma, 3, std::nullopt}).r0) == std::vector<int>{-4, -6, 0});
  CHECK(pushforward(m, {SheafKind::o_r_sigma, -2, std::nullopt}).r0.rank() == 0);
  CHECK(degrees(pushforward(m, {SheafKind::sym_theta, 2, std::nullopt}).r0) == std::vector<int>{-4});
  const Pushforward iz = pushforward(m, {SheafKind::ideal_z, 0, std::nullopt});
  CHECK(degrees(iz.r0) == std::vector<int>{-24});
  CHECK(degrees(*iz.r1) == std::vector<int>{-2});
  CHECK_THROWS_AS(pushforward(m, {SheafKind::sym_omega, -1, std::nullopt}), UnsupportedRegistry);
}

TEST_CASE("property: registry rank and degree under twists") {
  for (int d = 1; d <= 3; ++d) {
    for (int g = 0; g <= 2; ++g) {
      const WeierstrassModel m = build_model(g, d, BaseKind::abstract);
      for (int r = 2; r <= 6; ++r) {
        for (int e = -3; e <= 12; ++e) {
          const Pushforward p = pushforward(m, {SheafKind::o_r_sigma, r, LineBundleClass::generic(e)});
          CHECK(p.r0.rank() == r);
          CHECK(p.r0.degree() == r * e - d * (r * (r + 1) / 2 - 1));
        }
      }
    }
  }
}

TEST_CASE("property: symmetric powers of the cotangent bundle") {
  for (int g = 0; g <= 4; ++g) {
    const WeierstrassModel m = build_model(g, 1, BaseKind::abstract);
    for (int r = 0; r <= 8; ++r) {
      CHECK(h0_on_surface(m, {SheafKind::sym_omega, r, std::nullopt}) ==
            h0(LineBundleClass::canonical_power(r, g), g));
    }
  }
}

TEST_CASE("property: relative duality degrees") {
  for (int d = 1; d <= 3; ++d) {
    const WeierstrassModel m = build_model(0, d, BaseKind::abstract);
    for (int r = 1; r <= 6; ++r) {
      const Pushforward p = pushforward(m, {SheafKind::o_r_sigma, -r, std::nullopt});
      std::vector<int> expected;
      for (int i = 2; i <= r; ++i) expected.push_back((i - 1) * d);
      expected.push_back(-d);
      CHECK(p.r0.rank() == 0);
      CHECK(degrees(*p.r1) == expected);
    }
  }
}

TEST_CASE("property: discriminant degree is 12d") {
  testgen::Gen gen(21);
  for (int trial = 0; trial < 12; ++trial) {
    const int d = 1 + trial % 2;
    const Poly a4 = gen.binary_form(4 * d, 3), a6 = gen.binary_form(6 * d, 3);
    WeierstrassModel m;
    try {
      m = build_model(0, d, BaseKind::p1_explicit, a4, a6, {true});
    } catch (const HypothesisViolation&) {
      continue;
    }
    CHECK(m.delta->total_degree() == 12 * d);
    CHECK(singular_fibers(m).total_with_multiplicity == 12 * d);
  }
}

TEST_CASE("canonical bundle and Kodaira-Spencer degree") {
  CHECK(canonical_bundle(build_model(0, 1, BaseKind::abstract)).base_class.degree == -1);
  CHECK(canonical_bundle(build_model(1, 3, BaseKind::abstract)).base_class.degree == 3);
  CHECK(canonical_bundle(build_model(1, 3, BaseKind::abstract)).pulled_back);
  CHECK(kodaira_spencer(build_model(0, 1, BaseKind::abstract)).degree == 8);
  CHECK(kodaira_spencer(build_model(1, 1, BaseKind::abstract)).degree == 10);
  CHECK(kodaira_spencer(build_model(3, 2, BaseKind::abstract)).degree == 24);
  CHECK(kodaira_spencer(build_model(0, 1, BaseKind::abstract)).nonzero_section);
}

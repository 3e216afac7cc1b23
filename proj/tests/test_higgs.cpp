#include <doctest.h>

#include <algorithm>

#include "gen.hpp"
#include "spectra/errors.hpp"
#include "spectra/higgs.hpp"

using namespace spectra;

namespace {

// Riemann-Roch on a curve of genus g for the canonical power K^i, i >= 1.
int h0_canonical_power_rr(int i, int g) {
  if (g == 0) return 0;
  if (g == 1) return 1;
  if (i == 1) return g;
  return i * (2 * g - 2) - g + 1;
}

bool has_rule(const std::vector<Reason>& reasons, const std::string& rule) {
  return std::any_of(reasons.begin(), reasons.end(), [&](const Reason& r) { return r.rule == rule; });
}

BundleNumerics vertical_bundle(int r, long long c2, Fiberwise fw = Fiberwise::regular_all) {
  BundleNumerics b;
  b.r = r;
  b.c2 = c2;
  b.vertical_det = true;
  b.fiberwise = fw;
  return b;
}

}  // namespace

TEST_CASE("hitchin_dim examples") {
  CHECK(hitchin_dim(0, 3) == 0);
  CHECK(hitchin_dim(1, 3) == 3);
  CHECK(hitchin_dim(2, 2) == 5);
  CHECK_THROWS_AS(hitchin_dim(-1, 2), DomainError);
}

TEST_CASE("property: hitchin_dim against term-by-term Riemann-Roch") {
  for (int g = 0; g <= 6; ++g) {
    for (int r = 1; r <= 8; ++r) {
      int sum = 0;
      for (int i = 1; i <= r; ++i) sum += h0_canonical_power_rr(i, g);
      CHECK(hitchin_dim(g, r) == sum);
      if (g >= 2) CHECK(hitchin_dim(g, r) == g + (g - 1) * (r * r - 1));
    }
  }
}

TEST_CASE("lambda_degrees examples") {
  const LambdaDegrees a = lambda_degrees(2, 1, 3, 0);
  CHECK(a.degrees == std::vector<std::pair<int, int>>{{0, -6}, {2, -4}});
  CHECK(a.all_negative);
  const LambdaDegrees b = lambda_degrees(3, 2, 4, 2);
  CHECK(b.degrees == std::vector<std::pair<int, int>>{{0, -4}, {2, 0}, {3, 2}});
  CHECK_FALSE(b.all_negative);
  const LambdaDegrees c = lambda_degrees(2, 1, 0, 0);
  CHECK(c.degrees == std::vector<std::pair<int, int>>{{0, -3}, {2, -1}});
  CHECK(c.all_negative);
}

TEST_CASE("vertical_only examples") {
  CHECK(vertical_only(Verdict::yes, true).verdict == Verdict::yes);
  const ClassVerdict at = vertical_only(Verdict::no, true, FiberBundleDesc::atiyah(2));
  CHECK(at.verdict == Verdict::no);
  REQUIRE_FALSE(at.reasons.empty());
  CHECK(at.reasons.front().inputs["rank_full"] == 3);
  CHECK(vertical_only(Verdict::yes, true, FiberBundleDesc::split_pair(1)).verdict == Verdict::no);
  CHECK(vertical_only(Verdict::unknown, true).verdict == Verdict::unknown);
  CHECK(vertical_only(Verdict::yes, false).verdict == Verdict::unknown);
}

TEST_CASE("scalar_only examples") {
  const ClassVerdict a = scalar_only(2, 1, 3, 0, Verdict::yes, Verdict::unknown, Verdict::yes);
  CHECK(a.verdict == Verdict::yes);
  CHECK(a.dim == 0);
  const ClassVerdict b = scalar_only(2, 1, 3, 2, Verdict::unknown, Verdict::yes, Verdict::yes);
  CHECK(b.verdict == Verdict::unknown);
  const ClassVerdict c = scalar_only(3, 2, 10, 1, Verdict::yes, Verdict::unknown, Verdict::yes);
  CHECK(c.verdict == Verdict::yes);
  CHECK(c.dim == 1);
  CHECK(scalar_only(3, 2, 10, 1, Verdict::yes, Verdict::unknown, Verdict::unknown).verdict == Verdict::unknown);
  for (const Reason& r : c.reasons) CHECK_FALSE(r.anchor.empty());
}

TEST_CASE("discriminant and End numerics") {
  CHECK(discriminant_numbers(vertical_bundle(2, 3)).delta == 12);
  CHECK(discriminant_numbers(vertical_bundle(2, 3)).bogomolov == 12);
  BundleNumerics line;
  line.r = 1;
  line.c1_sq = 5;
  line.c2 = 2;
  line.vertical_det = false;
  CHECK(discriminant_numbers(line).delta == 4);
  CHECK(discriminant_numbers(vertical_bundle(2, 0)).delta == 0);

  const BundleNumerics w = end_bundle_numerics(vertical_bundle(2, 3));
  CHECK(w.r == 4);
  CHECK(w.c1_sq == 0);
  CHECK(w.c2 == 12);
  CHECK(discriminant_numbers(w).delta == 96);
  const BundleNumerics w1 = end_bundle_numerics(line);
  CHECK((w1.r == 1 && w1.c1_sq == 0 && w1.c2 == 0));
  const BundleNumerics w3 = end_bundle_numerics(vertical_bundle(3, 0));
  CHECK((w3.r == 9 && w3.c2 == 0));
}

TEST_CASE("property: End discriminant identity") {
  testgen::Gen gen(41);
  for (int k = 0; k < 200; ++k) {
    const BundleNumerics v = vertical_bundle(gen.integer(2, 9), gen.integer(-50, 50));
    const long long dv = discriminant_numbers(v).delta;
    const long long dw = discriminant_numbers(end_bundle_numerics(v)).delta;
    CHECK(dw == 2LL * v.r * v.r * dv);
  }
}

TEST_CASE("conjecture_verdict examples") {
  const WeierstrassModel m = build_model(0, 1, BaseKind::abstract);
  const HiggsVerdict holds = conjecture_verdict(m, vertical_bundle(2, 2), {std::nullopt, assumed_smooth_member()});
  CHECK(holds.conjecture_case == ConjectureCase::holds);
  CHECK(holds.genericity == "assumed");
  CHECK(conjecture_verdict(m, vertical_bundle(2, 1), {}).conjecture_case == ConjectureCase::not_applicable);
  const WeierstrassModel m1 = build_model(1, 1, BaseKind::abstract);
  CHECK(conjecture_verdict(m1, vertical_bundle(3, 5), {}).conjecture_case == ConjectureCase::unknown);

  BundleNumerics nonvertical = vertical_bundle(2, 3);
  nonvertical.vertical_det = false;
  nonvertical.c1_sq = 1;
  CHECK_THROWS_AS(conjecture_verdict(m, nonvertical, {}), DomainError);
}

TEST_CASE("property: classification invariants over a parameter lattice") {
  const Verdict vs[] = {Verdict::yes, Verdict::no, Verdict::unknown};
  for (int g = 0; g <= 3; ++g) {
    for (int d = 1; d <= 3; ++d) {
      const WeierstrassModel m = build_model(g, d, BaseKind::abstract);
      for (int r = 2; r <= 4; ++r) {
        for (int e = 0; e <= 3 * r * d + 2 * g; ++e) {
          for (Verdict red : vs) {
            for (Verdict in : vs) {
              ClassifyInput ci;
              ci.bundle = vertical_bundle(r, e);
              ci.spectral_reduced = red;
              ci.spectral_integral = in;
              ci.fiberwise_regular = Verdict::yes;
              ci.certs.smooth = assumed_smooth_member();
              const HiggsVerdict hv = classify(m, ci);
              const ClassVerdict sc = scalar_only(r, d, e, g, red, in, Verdict::yes);
              const Verdict reduced = in == Verdict::yes ? Verdict::yes : red;
              if (sc.verdict == Verdict::yes) CHECK(vertical_only(reduced, true).verdict == Verdict::yes);
              if (hv.conjecture_case == ConjectureCase::holds) {
                CHECK(e >= r * d + 2 * g);
                CHECK(has_rule(hv.reasons, "conjecture:base-point-free"));
                CHECK(has_rule(hv.reasons, "conjecture:smooth-member"));
                CHECK(has_rule(hv.reasons, "conjecture:regularity"));
                CHECK(has_rule(hv.reasons, "scalar:reduced-threshold"));
                CHECK(hv.higgs_space == HiggsSpace::scalar_only);
                CHECK(hv.scalar_dim == g);
              } else {
                CHECK(e < r * d + 2 * g);
              }
              for (const Reason& rs : hv.reasons) CHECK_FALSE(rs.anchor.empty());
            }
          }
        }
      }
    }
  }
}

#include "spectra/weierstrass.hpp"

#include "spectra/errors.hpp"

namespace spectra {

std::string to_string(Check c) {
  switch (c) {
    case Check::holds: return "holds";
    case Check::fails: return "fails";
    case Check::assumed: return "assumed";
  }
  return "assumed";
}

LineBundleClass WeierstrassModel::fundamental_power(int k) const {
  if (k == 0) return LineBundleClass::trivial();
  return LineBundleClass::unknown(k * d);
}

Poly discriminant_poly(const Poly& a4, const Poly& a6) {
  return (a4.pow(3) * Rat(4) + a6.pow(2) * Rat(27)) * Rat(-16);
}

namespace {

const VarSet kBase{Var::u, Var::v};

void require_binary_form(const Poly& p, int degree, const char* name) {
  for (Var w : p.support().list()) {
    if (!kBase.contains(w)) throw DomainError(std::string(name) + " must be a binary form in u, v");
  }
  if (!p.is_homogeneous(kBase, degree)) {
    throw DomainError(std::string(name) + " must be homogeneous of degree " + std::to_string(degree));
  }
}

UPoly dehomogenize(const Poly& form) {
  return form.specialize({{Var::v, Rat(1)}}).shrink_vars().to_upoly(Var::u);
}

Poly homogenize(const UPoly& p, int degree) {
  Poly out = Poly().with_vars(kBase);
  for (int k = 0; k <= p.degree(); ++k) {
    Exps e{};
    e[static_cast<size_t>(Var::u)] = k;
    e[static_cast<size_t>(Var::v)] = degree - k;
    out += Poly::monomial(e, p.coeff(k));
  }
  return out;
}

}  // namespace

WeierstrassModel build_model(int g, int d, BaseKind kind, std::optional<Poly> a4, std::optional<Poly> a6,
                             ModelOptions options) {
  if (g < 0) throw DomainError("base genus must be nonnegative");
  if (d < 0) throw DomainError("degree of the fundamental line bundle must be nonnegative");
  if (d == 0) throw HypothesisViolation("isotrivial fibration (d = 0) is excluded");
  WeierstrassModel m;
  m.g = g;
  m.d = d;
  m.kind = kind;
  if (kind == BaseKind::abstract) return m;

  if (g != 0) throw DomainError("explicit models require the projective line as base (g = 0)");
  if (!a4 || !a6) throw DomainError("explicit models require both a4 and a6");
  require_binary_form(*a4, 4 * d, "a4");
  require_binary_form(*a6, 6 * d, "a6");
  m.a4 = a4->with_vars(kBase);
  m.a6 = a6->with_vars(kBase);
  m.delta = discriminant_poly(*m.a4, *m.a6);
  if (m.delta->is_zero()) throw HypothesisViolation("degenerate model: discriminant vanishes identically");
  m.report.delta_nonzero = Check::holds;

  const Poly common = gcd(*m.a4, *m.a6);
  if (!common.is_constant()) {
    const std::string where = "a4 and a6 share the factor " + common.to_string();
    if (!options.allow_cusps) throw HypothesisViolation("cuspidal fiber: " + where);
    m.report.disjoint_zeros = Check::fails;
    m.report.warnings.push_back("cuspidal fibers allowed (" + where + "); downstream verdicts are unsupported");
  } else {
    m.report.disjoint_zeros = Check::holds;
  }

  const Poly sqf = squarefree_part(*m.delta);
  if (sqf.total_degree() == m.delta->total_degree()) {
    m.report.delta_squarefree = Check::holds;
  } else {
    m.report.delta_squarefree = Check::fails;
    m.report.warnings.push_back("discriminant is not reduced; the total space is singular");
  }
  return m;
}

DiscriminantInfo discriminant_section(const WeierstrassModel& m) { return {12 * m.d, m.delta}; }

FiberSummary singular_fibers(const WeierstrassModel& m) {
  FiberSummary out;
  out.total_with_multiplicity = 12 * m.d;
  if (!m.explicit_p1()) {
    // Only the count is known: 12d nodal fibers with a reduced discriminant.
    out.nodal_fiber_count = 12 * m.d;
    return out;
  }
  out.explicit_locations = true;
  const int n = 12 * m.d;
  const UPoly delta = dehomogenize(*m.delta);
  const UPoly a4 = dehomogenize(*m.a4);
  const UPoly a6 = dehomogenize(*m.a6);
  const UPoly cusp_locus = gcd(a4, a6);

  auto fiber_type = [](bool cusp, int mult) -> std::string {
    if (cusp) return mult == 2 ? "II" : "cuspidal";
    return "I" + std::to_string(mult);
  };
  auto record = [&](SingularFiber f, bool cusp) {
    f.type = fiber_type(cusp, f.multiplicity);
    if (!cusp) out.nodal_fiber_count += f.count;
    out.fibers.push_back(std::move(f));
  };

  const int at_infinity = n - delta.degree();
  if (at_infinity > 0) {
    const bool cusp = m.a4->coeff(Exps{4 * m.d, 0, 0, 0, 0}) == 0 && m.a6->coeff(Exps{6 * m.d, 0, 0, 0, 0}) == 0;
    SingularFiber f;
    f.point = P1Point{Rat(1), Rat(0)};
    f.multiplicity = at_infinity;
    record(f, cusp);
  }
  for (const auto& [factor, mult] : squarefree_decomposition(delta)) {
    UPoly rest = factor;
    const auto roots = rational_roots(factor);
    if (roots) {
      for (const Rat& r : *roots) {
        SingularFiber f;
        f.point = P1Point{r, Rat(1)};
        f.multiplicity = mult;
        record(f, a4(r) == 0 && a6(r) == 0);
        rest = rest / UPoly(std::vector<Rat>{-r, 1});
      }
    }
    if (rest.degree() <= 0) continue;
    const UPoly cusp_part = gcd(rest, cusp_locus);
    const UPoly nodal_part = rest / cusp_part;
    for (const auto& [part, cusp] : {std::pair{nodal_part, false}, std::pair{cusp_part, true}}) {
      if (part.degree() <= 0) continue;
      SingularFiber f;
      f.locus = homogenize(part.monic(), part.degree());
      f.count = part.degree();
      f.multiplicity = mult;
      record(f, cusp);
    }
  }
  return out;
}

int SheafSum::degree() const {
  int total = 0;
  for (const auto& s : summands) total += s.degree;
  return total;
}

Pushforward pushforward(const WeierstrassModel& m, const SheafExpr& expr) {
  Pushforward out;
  const auto L = [&m](int k) { return m.fundamental_power(k); };
  switch (expr.kind) {
    case SheafKind::o_r_sigma: {
      const int r = expr.r;
      if (r > 0) {
        for (int i = 2; i <= r; ++i) out.r0.summands.push_back(L(-i));
        out.r0.summands.push_back(L(0));
        out.r1 = SheafSum{};
      } else if (r == 0) {
        out.r0.summands.push_back(L(0));
        out.r1 = SheafSum{{L(-1)}};
      } else {
        const int s = -r;
        SheafSum r1;
        for (int i = 2; i <= s; ++i) r1.summands.push_back(L(i - 1));
        r1.summands.push_back(L(-1));
        out.r1 = r1;
      }
      break;
    }
    case SheafKind::ideal_z:
      out.r0.summands.push_back(L(-12));
      out.r1 = SheafSum{{L(-1)}};
      break;
    case SheafKind::sym_omega:
      if (expr.r < 0) throw UnsupportedRegistry("symmetric power with negative exponent");
      out.r0.summands.push_back(LineBundleClass::canonical_power(expr.r, m.g));
      break;
    case SheafKind::sym_theta:
      if (expr.r < 0) throw UnsupportedRegistry("symmetric power with negative exponent");
      out.r0.summands.push_back(L(-expr.r));
      break;
  }
  if (expr.twist) {
    expr.twist->validate(m.g);
    for (auto& s : out.r0.summands) s = tensor(s, *expr.twist, m.g);
    if (out.r1) {
      for (auto& s : out.r1->summands) s = tensor(s, *expr.twist, m.g);
    }
  }
  return out;
}

H0Answer h0_on_surface(const WeierstrassModel& m, const SheafExpr& expr, H0Policy policy) {
  H0Answer total = H0Answer::exactly(0);
  for (const auto& s : pushforward(m, expr).r0.summands) {
    const H0Answer a = h0(s, m.g, policy);
    total.lower += a.lower;
    total.upper += a.upper;
    total.exact = total.exact && a.exact;
  }
  return total;
}

CanonicalBundle canonical_bundle(const WeierstrassModel& m) {
  return {tensor(LineBundleClass::canonical_power(1, m.g), m.fundamental_power(1), m.g), true};
}

KodairaSpencer kodaira_spencer(const WeierstrassModel& m) {
  KodairaSpencer ks;
  ks.degree = 10 * m.d + 2 * m.g - 2;
  ks.positive = ks.degree > 0;
  ks.nonnegative = ks.degree >= 0;
  ks.nonzero_section = m.d > 0;
  return ks;
}

}  // namespace spectra

#include "spectra/symkernel.hpp"

#include <algorithm>
#include <random>

#include "spectra/errors.hpp"

namespace spectra {

SymPresentation delta_matrix(const Poly& f, const Poly& g, int r) {
  if (r < 2) throw DomainError("symmetric power must be at least 2");
  const Poly common = gcd(f, g);
  if (!common.is_constant()) {
    throw HypothesisViolation("f and g are not coprime: gcd = " + common.to_string());
  }
  SymPresentation p{r, f, g, PolyMatrix(static_cast<size_t>(r + 1), PolyVector(static_cast<size_t>(r)))};
  for (int j = 0; j < r; ++j) {
    p.delta[static_cast<size_t>(j)][static_cast<size_t>(j)] = -f;
    p.delta[static_cast<size_t>(j + 1)][static_cast<size_t>(j)] = g;
  }
  return p;
}

PolyVector kernel_generator(const SymPresentation& p) {
  PolyVector omega;
  for (int i = 0; i <= p.r; ++i) omega.push_back(p.f.pow(i) * p.g.pow(p.r - i));
  for (int j = 0; j < p.r; ++j) {
    Poly acc;
    for (int i = 0; i <= p.r; ++i) acc += omega[static_cast<size_t>(i)] * p.delta[static_cast<size_t>(i)][static_cast<size_t>(j)];
    if (!acc.is_zero()) throw Falsification("omega does not annihilate column " + std::to_string(j));
  }
  return omega;
}

bool associates(const PolyVector& a, const PolyVector& b) {
  if (a.size() != b.size()) return false;
  std::optional<Rat> ratio;
  for (size_t i = 0; i < a.size(); ++i) {
    if (a[i].is_zero() != b[i].is_zero()) return false;
    if (a[i].is_zero()) continue;
    if (!ratio) ratio = a[i].leading_coeff() / b[i].leading_coeff();
    if (!(a[i] == b[i] * *ratio)) return false;
  }
  return ratio.has_value() || a.empty() || std::all_of(a.begin(), a.end(), [](const Poly& x) { return x.is_zero(); });
}

PolyVector kernel_solver(const SymPresentation& p) {
  const PolyMatrix dt = transpose(p.delta, p.r);
  const auto basis = nullspace(dt, p.r + 1);
  if (basis.size() != 1) {
    throw Falsification("kernel of delta^T has rank " + std::to_string(basis.size()) + ", expected 1");
  }
  if (!associates(basis.front(), kernel_generator(p))) {
    throw Falsification("solver kernel is not associate to (g^r, f g^{r-1}, ..., f^r)");
  }
  return basis.front();
}

PolyVector expand_factorization(const SymPresentation& p, const PolyVector& psi) {
  if (static_cast<int>(psi.size()) != p.r) throw DomainError("psi must have r coefficients");
  // (gX - fY) * psi_k X^k Y^{r-1-k} contributes g psi_k to X^{k+1} and -f psi_k to X^k.
  PolyVector out(static_cast<size_t>(p.r + 1));
  for (int k = 0; k < p.r; ++k) {
    out[static_cast<size_t>(k + 1)] += p.g * psi[static_cast<size_t>(k)];
    out[static_cast<size_t>(k)] -= p.f * psi[static_cast<size_t>(k)];
  }
  return out;
}

namespace {

Poly random_poly_xy(std::mt19937_64& rng, int max_degree) {
  std::uniform_int_distribution<int> c(-3, 3);
  Poly out;
  for (int d = 0; d <= max_degree; ++d) {
    for (int i = 0; i <= d; ++i) {
      Exps e{};
      e[static_cast<size_t>(Var::x)] = i;
      e[static_cast<size_t>(Var::y)] = d - i;
      out += Poly::monomial(e, c(rng));
    }
  }
  return out;
}

}  // namespace

TorsionFreeReport torsion_free_witness(const SymPresentation& p, int samples, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  const PolyVector omega = kernel_generator(p);
  TorsionFreeReport report;
  for (int s = 0; s < samples; ++s) {
    WitnessSample ws;
    for (int k = 0; k < p.r; ++k) ws.psi.push_back(random_poly_xy(rng, 2));
    ws.vector = expand_factorization(p, ws.psi);
    ws.annihilated = dot(omega, ws.vector).is_zero();
    const SolveResult sol = solve_polynomial(p.delta, ws.vector);
    ws.in_image = sol.status == SolveStatus::ok && mat_vec(p.delta, sol.solution) == ws.vector;
    if (ws.in_image) ws.preimage = sol.solution;
    if (!ws.annihilated || !ws.in_image) {
      throw Falsification("sample " + std::to_string(s) + " of ker(omega) is not in image(delta)");
    }
    ++report.passed;
    report.samples.push_back(std::move(ws));
  }
  for (int s = 0; s < samples; ++s) {
    PolyVector x;
    for (int i = 0; i <= p.r; ++i) x.push_back(random_poly_xy(rng, 2));
    ++report.converse_checked;
    if (dot(omega, x).is_zero()) continue;
    const SolveResult sol = solve_polynomial(p.delta, x);
    if (sol.status == SolveStatus::ok) ++report.converse_failures;
  }
  if (report.converse_failures > 0) throw Falsification("a vector outside ker(omega) lies in image(delta)");
  return report;
}

}  // namespace spectra

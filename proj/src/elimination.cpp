#include "spectra/elimination.hpp"

#include <algorithm>

#include "spectra/errors.hpp"

namespace spectra {

TXPoly to_txpoly(const Poly& p, Var t, Var x) {
  TXPoly out;
  for (const auto& c : p.coefficients_in(x)) out.push_back(c.shrink_vars().to_upoly(t));
  return out;
}

namespace {

void trim(TXPoly& p) {
  while (!p.empty() && p.back().is_zero()) p.pop_back();
}

TXPoly reduce(TXPoly p, const UPoly& m) {
  for (auto& c : p) c = c % m;
  trim(p);
  return p;
}

/// Inverse of a modulo m when gcd(a, m) = 1.
UPoly inverse_mod(const UPoly& a, const UPoly& m) {
  const UXgcd g = xgcd(a, m);
  if (g.g.degree() != 0) throw Falsification("inverse_mod: not a unit");
  return g.s % m;
}

TXPoly scale(const TXPoly& p, const UPoly& c, const UPoly& m) {
  TXPoly out;
  out.reserve(p.size());
  for (const auto& coeff : p) out.push_back((coeff * c) % m);
  trim(out);
  return out;
}

/// a mod b over Q[t]/(m) for monic b.
TXPoly remainder(TXPoly a, const TXPoly& b, const UPoly& m) {
  const size_t db = b.size() - 1;
  while (a.size() >= b.size()) {
    const UPoly c = a.back();
    const size_t shift = a.size() - b.size();
    for (size_t i = 0; i <= db; ++i) a[shift + i] = (a[shift + i] - c * b[i]) % m;
    a.pop_back();
    trim(a);
  }
  return a;
}

using Branches = std::vector<ComponentGcd>;

/// Splits m by the leading coefficient of p when it is a zero divisor.
/// Returns the factor pair, or nullopt when the coefficient is a unit.
std::optional<std::pair<UPoly, UPoly>> split_on(const UPoly& lc, const UPoly& m) {
  const UPoly g = gcd(lc, m);
  if (g.degree() <= 0) return std::nullopt;
  if (g.degree() >= m.degree()) throw Falsification("d5: leading coefficient reduced to zero");
  return std::pair{g, (m / g).monic()};
}

Branches make_monic(const UPoly& m, const TXPoly& a) {
  if (a.empty()) return {{m, {}}};
  if (auto s = split_on(a.back(), m)) {
    Branches out = make_monic(s->first, reduce(a, s->first));
    Branches rest = make_monic(s->second, reduce(a, s->second));
    out.insert(out.end(), rest.begin(), rest.end());
    return out;
  }
  return {{m, scale(a, inverse_mod(a.back(), m), m)}};
}

Branches gcd_split(const UPoly& m, TXPoly a, TXPoly b) {
  a = reduce(std::move(a), m);
  b = reduce(std::move(b), m);
  for (;;) {
    if (b.empty()) return make_monic(m, a);
    if (auto s = split_on(b.back(), m)) {
      Branches out = gcd_split(s->first, a, b);
      Branches rest = gcd_split(s->second, a, b);
      out.insert(out.end(), rest.begin(), rest.end());
      return out;
    }
    b = scale(b, inverse_mod(b.back(), m), m);
    TXPoly r = remainder(std::move(a), b, m);
    a = std::move(b);
    b = std::move(r);
  }
}

}  // namespace

std::vector<ComponentGcd> d5_gcd(const UPoly& modulus, const std::vector<TXPoly>& polys) {
  if (modulus.degree() < 1) throw DomainError("d5_gcd: modulus must have positive degree");
  Branches branches{{modulus.monic(), {}}};
  for (const auto& p : polys) {
    Branches next;
    for (const auto& br : branches) {
      Branches out = gcd_split(br.modulus, br.gcd, p);
      next.insert(next.end(), out.begin(), out.end());
    }
    branches = std::move(next);
  }
  return branches;
}

UPoly fiber_gcd(const std::vector<Poly>& polys, Var t, Var x, const Rat& t0) {
  UPoly g;
  for (const auto& p : polys) {
    const UPoly s = p.specialize({{t, t0}}).shrink_vars().to_upoly(x);
    g = gcd(g, s);
    if (g.degree() == 0) break;
  }
  return g;
}

namespace {

UPoly specialize_t(const Poly& p, Var t, Var x, const Rat& t0) {
  return p.specialize({{t, t0}}).shrink_vars().to_upoly(x);
}

/// gcd of polynomials in {t, x}. A fiber t = t0 on which the leading
/// x-coefficient survives bounds the x-degree of the gcd; when that bound is
/// zero the gcd lives in Q[t] and is a gcd of univariate coefficients.
Poly joint_gcd(const std::vector<Poly>& live, Var t, Var x, std::mt19937_64& rng) {
  std::uniform_int_distribution<int> pick(-50, 50);
  for (int attempt = 0; attempt < 8; ++attempt) {
    const Rat t0(pick(rng));
    bool degree_kept = false;
    UPoly g;
    for (const auto& p : live) {
      const UPoly s = specialize_t(p, t, x, t0);
      if (p.involves(x) && s.degree() == p.degree_in(x)) degree_kept = true;
      g = gcd(g, s);
    }
    if (!degree_kept || g.is_zero()) continue;
    if (g.degree() > 0) break;
    UPoly acc;
    for (const auto& p : live) {
      for (const Poly& c : p.coefficients_in(x)) {
        if (!c.is_zero()) acc = gcd(acc, c.shrink_vars().to_upoly(t));
      }
      if (acc.degree() == 0) return Poly(1);
    }
    return Poly::from_upoly(acc, t);
  }
  Poly g0 = live.front();
  for (const auto& p : live) {
    g0 = gcd(g0, p);
    if (g0.is_constant()) break;
  }
  return g0;
}

}  // namespace

CommonZeros common_zeros(const std::vector<Poly>& polys, Var t, Var x, std::mt19937_64& rng) {
  CommonZeros out;
  std::vector<Poly> live;
  for (const auto& p : polys) {
    for (Var w : p.support().list()) {
      if (w != t && w != x) throw DomainError("common_zeros: inputs must be supported in {t, x}");
    }
    if (!p.is_zero()) live.push_back(p.shrink_vars());
  }
  if (live.empty()) throw DomainError("common_zeros: all inputs are zero");

  const Poly g0 = joint_gcd(live, t, x, rng);
  if (!g0.is_constant()) {
    out.curve = g0;
    return out;
  }

  UPoly pure_t;
  std::vector<Poly> with_x;
  for (const auto& p : live) {
    if (p.involves(x)) {
      with_x.push_back(p);
    } else {
      pure_t = gcd(pure_t, p.to_upoly(t));
    }
  }

  UPoly r = pure_t;
  if (with_x.size() >= 2) {
    std::uniform_int_distribution<int> coeff(1, 97);
    auto combo = [&]() {
      Poly acc;
      for (const auto& p : with_x) acc += p * Rat(coeff(rng));
      return acc;
    };
    int found = 0;
    for (int attempt = 0; attempt < 12 && found < 3; ++attempt) {
      const UPoly res = resultant_dense(combo(), combo(), x, t);
      if (res.is_zero()) continue;
      r = gcd(r, res);
      ++found;
      if (r.degree() == 0) break;
    }
    if (found == 0) throw Falsification("common_zeros: every resultant vanished despite a trivial gcd");
  } else if (r.is_zero()) {
    throw Falsification("common_zeros: single polynomial with trivial gcd");
  }
  if (r.degree() <= 0) return out;
  r = squarefree_part(r);

  const auto roots = rational_roots(r);
  if (!roots) {
    out.rational_search_skipped = true;
  } else {
    for (const Rat& t0 : *roots) {
      const UPoly g = fiber_gcd(live, t, x, t0);
      if (g.degree() != 0) out.rational_fibers.emplace_back(t0, g);
      r = r / UPoly(std::vector<Rat>{-t0, 1});
    }
  }
  if (r.degree() <= 0) return out;

  std::vector<TXPoly> tx;
  tx.reserve(live.size());
  for (const auto& p : live) tx.push_back(to_txpoly(p, t, x));
  for (auto& comp : d5_gcd(r, tx)) {
    if (comp.gcd.size() != 1) out.algebraic.push_back(std::move(comp));
  }
  return out;
}

}  // namespace spectra

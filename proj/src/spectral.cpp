#include "spectra/spectral.hpp"

#include <algorithm>
#include <random>
#include <set>

#include "spectra/errors.hpp"

namespace spectra {

std::string to_string(Verdict v) {
  switch (v) {
    case Verdict::yes: return "yes";
    case Verdict::no: return "no";
    case Verdict::unknown: return "unknown";
  }
  return "unknown";
}

std::string to_string(CurveProperty p) {
  switch (p) {
    case CurveProperty::reduced: return "reduced";
    case CurveProperty::integral: return "integral";
    case CurveProperty::smooth: return "smooth";
    case CurveProperty::connected: return "connected";
    case CurveProperty::base_point_free: return "base_point_free";
  }
  return "reduced";
}

std::vector<int> SpectralData::indices(int r) {
  std::vector<int> out{0};
  for (int i = 2; i <= r; ++i) out.push_back(i);
  return out;
}

SpectralData SpectralData::from_forms(int r, int e, const std::map<int, Poly>& forms) {
  SpectralData sd;
  sd.r = r;
  sd.e = e;
  sd.mu = LineBundleClass::unknown(e);
  for (int i : indices(r)) {
    auto it = forms.find(i);
    sd.sections[i] = SectionEntry::of(it == forms.end() ? Poly() : it->second);
  }
  return sd;
}

bool SpectralData::is_explicit() const {
  return std::all_of(sections.begin(), sections.end(),
                     [](const auto& kv) { return kv.second.kind != SectionEntry::Kind::nonzero_unknown; });
}

const SectionEntry& SpectralData::entry(int i) const {
  auto it = sections.find(i);
  if (it == sections.end()) throw DomainError("spectral data has no section with index " + std::to_string(i));
  return it->second;
}

Poly SpectralData::form(int i) const {
  const SectionEntry& s = entry(i);
  if (s.kind == SectionEntry::Kind::nonzero_unknown) {
    throw DomainError("section s_" + std::to_string(i) + " is not explicit");
  }
  return s.kind == SectionEntry::Kind::form ? s.form.with_vars({Var::u, Var::v}) : Poly().with_vars({Var::u, Var::v});
}

void SpectralData::validate(int d) const {
  if (r < 2) throw DomainError("spectral rank must be at least 2");
  if (mu.degree != e) throw DomainError("degree of mu must equal e");
  std::set<int> expected;
  for (int i : indices(r)) expected.insert(i);
  for (const auto& [i, s] : sections) {
    if (!expected.count(i)) throw DomainError("unexpected section index " + std::to_string(i));
  }
  bool any_nonzero = false;
  const VarSet base{Var::u, Var::v};
  for (int i : indices(r)) {
    const SectionEntry& s = entry(i);
    const int deg = e - i * d;
    if (!s.is_zero()) any_nonzero = true;
    if (deg < 0 && !s.is_zero()) {
      throw DomainError("s_" + std::to_string(i) + " must vanish: its degree " + std::to_string(deg) + " is negative");
    }
    if (s.kind == SectionEntry::Kind::form && !s.form.is_zero()) {
      for (Var w : s.form.support().list()) {
        if (!base.contains(w)) throw DomainError("s_" + std::to_string(i) + " must be a binary form in u, v");
      }
      if (!s.form.is_homogeneous(base, deg)) {
        throw DomainError("s_" + std::to_string(i) + " must be homogeneous of degree " + std::to_string(deg));
      }
    }
  }
  if (!any_nonzero) throw DomainError("spectral data with all sections zero");
}

int sigma_multiplicity(int r, const std::vector<int>& zero_indices) {
  const std::set<int> zeros(zero_indices.begin(), zero_indices.end());
  int top = 0;
  for (int i : SpectralData::indices(r)) {
    if (!zeros.count(i)) top = std::max(top, i);
  }
  return r - top;
}

ForcedVanishing forced_vanishing(int r, int d, int e) {
  if (r < 2) throw DomainError("spectral rank must be at least 2");
  if (d < 1) throw DomainError("d must be at least 1");
  ForcedVanishing out;
  for (int j = 2; j <= r; ++j) {
    if (e < j * d) out.indices.push_back(j);
  }
  out.sigma_multiplicity = sigma_multiplicity(r, out.indices);
  out.not_integral = out.sigma_multiplicity >= 1;
  out.not_reduced = out.sigma_multiplicity >= 2;
  return out;
}

int grr_degree(int deg_delta, int e) { return deg_delta - e; }

Poly pole_order_monomial(int i) {
  if (i < 0 || i == 1) throw DomainError("no monomial of pole order " + std::to_string(i));
  Exps e{};
  e[static_cast<size_t>(Var::x)] = i % 2 == 0 ? i / 2 : (i - 3) / 2;
  e[static_cast<size_t>(Var::y)] = i % 2;
  return Poly::monomial(e, 1);
}

Poly weierstrass_poly(const WeierstrassModel& m) {
  if (!m.explicit_p1()) throw DomainError("explicit model required");
  const Poly x = Poly::variable(Var::x);
  const Poly y = Poly::variable(Var::y);
  return y * y - x.pow(3) - *m.a4 * x - *m.a6;
}

Poly spectral_polynomial(const WeierstrassModel& m, const SpectralData& sd) {
  if (!m.explicit_p1()) throw DomainError("explicit model required");
  if (!sd.is_explicit()) throw DomainError("explicit sections required");
  sd.validate(m.d);
  Poly f = Poly().with_vars({Var::u, Var::v, Var::x, Var::y});
  for (int i : SpectralData::indices(sd.r)) f += sd.form(i) * pole_order_monomial(i);
  return f;
}

Poly vertical_gcd(const SpectralData& sd) {
  Poly g;
  for (int i : SpectralData::indices(sd.r)) {
    const Poly s = sd.form(i);
    if (s.is_zero()) continue;
    g = g.is_zero() ? s.monic() : gcd(g, s);
  }
  return g;
}

namespace {

nlohmann::json point_json(const Rat& p, const Rat& q) { return nlohmann::json::array({to_string(p), to_string(q)}); }

std::vector<int> zero_indices(const SpectralData& sd) {
  std::vector<int> out;
  for (int i : SpectralData::indices(sd.r)) {
    if (sd.entry(i).is_zero()) out.push_back(i);
  }
  return out;
}

struct BaseSampler {
  explicit BaseSampler(std::uint64_t seed) : rng(seed) {}
  std::pair<Rat, Rat> next(bool allow_infinity) {
    for (;;) {
      const int p = num(rng);
      const int q = allow_infinity ? den0(rng) : den(rng);
      if (p == 0 && q == 0) continue;
      if (q == 0) return {Rat(1), Rat(0)};
      Rat a(p, q);
      a.canonicalize();
      return {a, Rat(1)};
    }
  }
  std::mt19937_64 rng;
  std::uniform_int_distribution<int> num{-12, 12};
  std::uniform_int_distribution<int> den{1, 6};
  std::uniform_int_distribution<int> den0{0, 6};
};

std::map<Var, Rat> at(const std::pair<Rat, Rat>& b) { return {{Var::u, b.first}, {Var::v, b.second}}; }

struct FiberCount {
  bool distinct = false;
  int pole_order = 0;
  UPoly norm;
  std::string failure;
};

/// Decides whether C meets the smooth fiber E_b in r distinct points.
FiberCount count_fiber_points(const WeierstrassModel& m, const SpectralData& sd, const std::pair<Rat, Rat>& b) {
  FiberCount fc;
  const auto pt = at(b);
  std::vector<Rat> even, odd;
  for (int i : SpectralData::indices(sd.r)) {
    const Rat s = sd.form(i).eval(pt);
    if (s != 0) fc.pole_order = std::max(fc.pole_order, i);
    std::vector<Rat>& target = i % 2 == 0 ? even : odd;
    const size_t slot = static_cast<size_t>(i % 2 == 0 ? i / 2 : (i - 3) / 2);
    if (target.size() <= slot) target.resize(slot + 1);
    target[slot] += s;
  }
  const UPoly a(even);
  const UPoly bpol(odd);
  const UPoly g(std::vector<Rat>{m.a6->eval(pt), m.a4->eval(pt), 0, 1});
  fc.norm = a * a - bpol * bpol * g;
  if (sd.r - fc.pole_order >= 2) {
    fc.failure = "section point repeated";
    return fc;
  }
  if (fc.norm.is_zero()) {
    fc.failure = "fiber contained in C";
    return fc;
  }
  UPoly doubled(1);
  for (const auto& [factor, mult] : squarefree_decomposition(fc.norm)) {
    if (mult > 2) {
      fc.failure = "affine point of multiplicity > 1";
      return fc;
    }
    if (mult == 2) doubled = doubled * factor;
  }
  if (doubled.degree() > 0) {
    // A double root of the norm is harmless only when it comes from the two
    // distinct points (x0, ±y0), i.e. A and B both vanish and y0 != 0.
    if (!(a % doubled).is_zero() || !(bpol % doubled).is_zero() || gcd(doubled, g).degree() > 0) {
      fc.failure = "affine point of multiplicity > 1";
      return fc;
    }
  }
  fc.distinct = true;
  return fc;
}

}  // namespace

CurveCertificate reducedness_test(const WeierstrassModel& m, const SpectralData& sd, SpecializationOptions opts) {
  CurveCertificate cert;
  cert.property = CurveProperty::reduced;
  if (!m.explicit_p1() || !sd.is_explicit()) throw DomainError("reducedness test needs explicit model and sections");
  sd.validate(m.d);

  const auto zeros = zero_indices(sd);
  const int mult = sigma_multiplicity(sd.r, zeros);
  if (mult >= 2) {
    cert.verdict = Verdict::no;
    cert.witness = {{"rule", "sigma-multiplicity"}, {"zero_indices", zeros}, {"sigma_multiplicity", mult}};
    cert.reason = "C contains the section with multiplicity " + std::to_string(mult);
    return cert;
  }
  const Poly g = vertical_gcd(sd);
  const Poly g_sqf = squarefree_part(g);
  if (g_sqf.total_degree() != g.total_degree()) {
    const Poly repeated = gcd(g, g.derivative(Var::u).is_zero() ? g.derivative(Var::v) : g.derivative(Var::u));
    cert.verdict = Verdict::no;
    cert.witness = {{"rule", "vertical-square"}, {"common_factor", g.to_string()}, {"repeated", repeated.to_string()}};
    cert.reason = "the sections share a repeated factor: a multiple fiber component";
    return cert;
  }

  BaseSampler sampler(opts.seed);
  int tried = 0;
  const int max_draws = std::max(50, 20 * opts.trials);
  for (int draw = 0; draw < max_draws && tried < opts.trials; ++draw) {
    const auto b = sampler.next(false);
    if (m.delta->eval(at(b)) == 0) continue;
    ++tried;
    if (g.eval(at(b)) == 0) continue;
    const FiberCount fc = count_fiber_points(m, sd, b);
    if (!fc.distinct) continue;
    cert.verdict = Verdict::yes;
    cert.witness = {{"rule", "distinct-fiber-points"},
                    {"b", point_json(b.first, b.second)},
                    {"points", sd.r},
                    {"pole_order", fc.pole_order},
                    {"norm", Poly::from_upoly(fc.norm, Var::x).to_string()},
                    {"vertical_gcd", g.to_string()},
                    {"trial", tried}};
    cert.reason = "a smooth fiber meets C in r distinct points and the vertical part is squarefree";
    return cert;
  }
  cert.verdict = Verdict::unknown;
  cert.witness = {{"trials", tried}};
  cert.reason = "no specialization separated the points of C";
  return cert;
}

CurveCertificate connectedness_certificate(int r, int d, int e, int g) {
  if (r < 2) throw DomainError("spectral rank must be at least 2");
  CurveCertificate cert;
  cert.property = CurveProperty::connected;
  nlohmann::json degrees = nlohmann::json::array();
  bool vanishing = true;
  for (int i : SpectralData::indices(r)) {
    const int deg = (i - 1) * d - e;
    const H0Answer a = h0(LineBundleClass::unknown(deg), g);
    degrees.push_back({{"i", i}, {"degree", deg}});
    vanishing = vanishing && a.exact && a.upper == 0;
  }
  cert.witness = {{"degrees", degrees}};
  if (vanishing) {
    cert.verdict = Verdict::yes;
    cert.reason = "all degrees (i-1)d - e are negative, so h0(O_C) = 1";
  } else {
    cert.verdict = Verdict::unknown;
    cert.reason = "some degree (i-1)d - e is nonnegative";
  }
  return cert;
}

CurveCertificate integrality_test(const WeierstrassModel& m, const SpectralData& sd, const CurveCertificate& reduced,
                                  const CurveCertificate& smooth, const CurveCertificate& connected) {
  CurveCertificate cert;
  cert.property = CurveProperty::integral;
  sd.validate(m.d);
  if (sd.entry(sd.r).is_zero()) {
    cert.verdict = Verdict::no;
    cert.witness = {{"rule", "section-component"}, {"zero_index", sd.r}};
    cert.reason = "s_r = 0, so C contains the section";
    return cert;
  }
  if (sd.is_explicit()) {
    const Poly g = vertical_gcd(sd);
    if (!g.is_constant()) {
      cert.verdict = Verdict::no;
      cert.witness = {{"rule", "vertical-component"}, {"common_factor", g.to_string()}};
      cert.reason = "the sections share a factor, so C contains fibers";
      return cert;
    }
  }
  if (reduced.verdict == Verdict::no) {
    cert.verdict = Verdict::no;
    cert.witness = {{"rule", "not-reduced"}, {"reduced", reduced.witness}};
    cert.reason = "C is not reduced";
    return cert;
  }
  if (smooth.verdict == Verdict::yes && connected.verdict == Verdict::yes) {
    cert.verdict = Verdict::yes;
    cert.witness = {{"rule", "smooth-and-connected"}, {"smooth", smooth.witness}, {"connected", connected.witness}};
    cert.reason = "a smooth connected curve is integral";
    cert.certified = smooth.certified && connected.certified;
    return cert;
  }
  cert.verdict = Verdict::unknown;
  cert.reason = "neither an obstruction nor a smooth connected certificate";
  return cert;
}

namespace {

struct SamplePoint {
  std::pair<Rat, Rat> b;
  bool at_section = false;
  Rat x0;
  Rat c;  // y0^2
};

bool basis_vanishes_at(const WeierstrassModel& m, int r, int e, const SamplePoint& pt) {
  const auto b = at(pt.b);
  for (int i : SpectralData::indices(r)) {
    if (pt.at_section && i != r) continue;
    const Poly mono = pole_order_monomial(i);
    const int j = mono.degree_in(Var::x);
    const int k = mono.degree_in(Var::y);
    if (!pt.at_section) {
      if (j > 0 && pt.x0 == 0) continue;
      if (k > 0 && pt.c == 0) continue;
    }
    for (const Poly& s : section_basis_p1(e - i * m.d)) {
      if (s.eval(b) != 0) return false;
    }
  }
  return true;
}

}  // namespace

CurveCertificate base_point_free(const WeierstrassModel& m, int r, int e, BasePointOptions opts) {
  if (r < 2) throw DomainError("spectral rank must be at least 2");
  CurveCertificate cert;
  cert.property = CurveProperty::base_point_free;
  const int threshold = r * m.d + 2 * m.g;
  const bool criterion = e >= threshold;
  const bool forced = e < r * m.d;
  cert.witness = {{"threshold", threshold}, {"e", e}};

  nlohmann::json found = nlohmann::json::array();
  int sampled = 0;
  if (m.explicit_p1()) {
    BaseSampler sampler(opts.seed);
    std::mt19937_64 xr(opts.seed ^ 0x9e3779b97f4a7c15ULL);
    std::uniform_int_distribution<int> xs(-10, 10);
    for (int k = 0; k < opts.samples; ++k) {
      SamplePoint pt;
      pt.b = sampler.next(true);
      pt.at_section = k % 4 == 0;
      if (!pt.at_section) {
        pt.x0 = Rat(xs(xr));
        pt.c = pt.x0 * pt.x0 * pt.x0 + m.a4->eval(at(pt.b)) * pt.x0 + m.a6->eval(at(pt.b));
      }
      ++sampled;
      if (basis_vanishes_at(m, r, e, pt) && found.size() < 5) {
        nlohmann::json w = {{"b", point_json(pt.b.first, pt.b.second)}};
        if (pt.at_section) {
          w["point"] = "section";
        } else {
          w["x"] = to_string(pt.x0);
          w["y_squared"] = to_string(pt.c);
        }
        found.push_back(w);
      }
    }
    cert.witness["samples"] = sampled;
    cert.witness["base_points_found"] = found;
  }

  if (criterion) {
    if (!found.empty()) throw Falsification("base point found although e >= rd + 2g");
    cert.verdict = Verdict::yes;
    cert.witness["rule"] = "threshold";
    cert.reason = "e >= rd + 2g";
    return cert;
  }
  if (forced) {
    cert.verdict = Verdict::no;
    cert.witness["rule"] = "section-in-base-locus";
    cert.witness["forced_index"] = r;
    cert.reason = "e < rd forces s_r = 0 for every member, so the section lies in the base locus";
    return cert;
  }
  if (!found.empty()) {
    cert.verdict = Verdict::no;
    cert.witness["rule"] = "sampled-base-point";
    cert.reason = "a sampled point is a common zero of all sections";
    return cert;
  }
  cert.verdict = Verdict::unknown;
  cert.reason = "threshold not met and no base point found";
  return cert;
}

Verdict regularity_inference(bool cover_smooth_over_b) { return cover_smooth_over_b ? Verdict::yes : Verdict::unknown; }

int spectral_genus(int r, int d, int e, int g) { return 1 + r * e - r * (r - 1) * d / 2 + r * (g - 1); }

int monomial_count_p1(int r, int d, int e) {
  int total = 0;
  for (int i : SpectralData::indices(r)) total += static_cast<int>(section_basis_p1(e - i * d).size());
  return total;
}

}  // namespace spectra

#include "spectra/upoly.hpp"

#include <algorithm>
#include <map>

#include "spectra/errors.hpp"

namespace spectra {

UPoly::UPoly(std::vector<Rat> coeffs) : coeffs_(std::move(coeffs)) { trim(); }

UPoly::UPoly(long constant) : UPoly(Rat(constant)) {}

UPoly::UPoly(const Rat& constant) {
  if (constant != 0) coeffs_.push_back(constant);
}

UPoly UPoly::monomial(int degree, const Rat& coeff) {
  if (degree < 0) throw DomainError("negative monomial degree");
  std::vector<Rat> c(static_cast<size_t>(degree) + 1);
  c.back() = coeff;
  return UPoly(std::move(c));
}

void UPoly::trim() {
  while (!coeffs_.empty() && coeffs_.back() == 0) coeffs_.pop_back();
}

Rat UPoly::coeff(int i) const {
  if (i < 0 || i > degree()) return 0;
  return coeffs_[static_cast<size_t>(i)];
}

const Rat& UPoly::leading() const {
  if (coeffs_.empty()) throw DomainError("leading coefficient of zero polynomial");
  return coeffs_.back();
}

Rat UPoly::operator()(const Rat& at) const {
  Rat acc = 0;
  for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) acc = acc * at + *it;
  return acc;
}

UPoly UPoly::derivative() const {
  if (coeffs_.size() <= 1) return {};
  std::vector<Rat> d(coeffs_.size() - 1);
  for (size_t i = 1; i < coeffs_.size(); ++i) d[i - 1] = coeffs_[i] * static_cast<long>(i);
  return UPoly(std::move(d));
}

UPoly UPoly::monic() const {
  if (is_zero()) return {};
  UPoly out = *this;
  const Rat lc = leading();
  for (auto& c : out.coeffs_) c /= lc;
  return out;
}

UPoly UPoly::primitive_integer() const {
  if (is_zero()) return {};
  Int den_lcm = 1;
  for (const auto& c : coeffs_) mpz_lcm(den_lcm.get_mpz_t(), den_lcm.get_mpz_t(), c.get_den_mpz_t());
  Int content = 0;
  for (const auto& c : coeffs_) {
    Int scaled = c.get_num() * (den_lcm / c.get_den());
    mpz_gcd(content.get_mpz_t(), content.get_mpz_t(), scaled.get_mpz_t());
  }
  if (leading() < 0) content = -content;
  UPoly out = *this;
  Rat factor(den_lcm, content);
  factor.canonicalize();
  for (auto& c : out.coeffs_) c *= factor;
  return out;
}

UPoly& UPoly::operator+=(const UPoly& other) {
  if (other.coeffs_.size() > coeffs_.size()) coeffs_.resize(other.coeffs_.size());
  for (size_t i = 0; i < other.coeffs_.size(); ++i) coeffs_[i] += other.coeffs_[i];
  trim();
  return *this;
}

UPoly& UPoly::operator-=(const UPoly& other) {
  if (other.coeffs_.size() > coeffs_.size()) coeffs_.resize(other.coeffs_.size());
  for (size_t i = 0; i < other.coeffs_.size(); ++i) coeffs_[i] -= other.coeffs_[i];
  trim();
  return *this;
}

UPoly& UPoly::operator*=(const UPoly& other) {
  if (is_zero() || other.is_zero()) {
    coeffs_.clear();
    return *this;
  }
  std::vector<Rat> prod(coeffs_.size() + other.coeffs_.size() - 1);
  for (size_t i = 0; i < coeffs_.size(); ++i) {
    if (coeffs_[i] == 0) continue;
    for (size_t j = 0; j < other.coeffs_.size(); ++j) prod[i + j] += coeffs_[i] * other.coeffs_[j];
  }
  coeffs_ = std::move(prod);
  trim();
  return *this;
}

UPoly& UPoly::operator*=(const Rat& scalar) {
  if (scalar == 0) {
    coeffs_.clear();
    return *this;
  }
  for (auto& c : coeffs_) c *= scalar;
  return *this;
}

std::pair<UPoly, UPoly> UPoly::divmod(const UPoly& a, const UPoly& b) {
  if (b.is_zero()) throw DomainError("polynomial division by zero");
  if (a.degree() < b.degree()) return {UPoly{}, a};
  std::vector<Rat> rem = a.coeffs_;
  std::vector<Rat> quo(static_cast<size_t>(a.degree() - b.degree()) + 1);
  const Rat& lc = b.leading();
  const int db = b.degree();
  for (int k = a.degree(); k >= db; --k) {
    const Rat c = rem[static_cast<size_t>(k)] / lc;
    quo[static_cast<size_t>(k - db)] = c;
    if (c == 0) continue;
    for (int j = 0; j <= db; ++j) rem[static_cast<size_t>(k - db + j)] -= c * b.coeffs_[static_cast<size_t>(j)];
  }
  return {UPoly(std::move(quo)), UPoly(std::move(rem))};
}

UPoly operator%(const UPoly& a, const UPoly& b) { return UPoly::divmod(a, b).second; }
UPoly operator/(const UPoly& a, const UPoly& b) { return UPoly::divmod(a, b).first; }

UPoly gcd(const UPoly& a, const UPoly& b) {
  // Euclid on primitive integer representatives keeps coefficients small.
  UPoly x = a.primitive_integer();
  UPoly y = b.primitive_integer();
  while (!y.is_zero()) {
    UPoly r = (x % y).primitive_integer();
    x = std::move(y);
    y = std::move(r);
  }
  return x.monic();
}

UXgcd xgcd(const UPoly& a, const UPoly& b) {
  UPoly r0 = a, r1 = b;
  UPoly s0 = 1, s1 = 0;
  UPoly t0 = 0, t1 = 1;
  while (!r1.is_zero()) {
    auto [q, r] = UPoly::divmod(r0, r1);
    r0 = std::move(r1);
    r1 = std::move(r);
    UPoly s2 = s0 - q * s1;
    s0 = std::move(s1);
    s1 = std::move(s2);
    UPoly t2 = t0 - q * t1;
    t0 = std::move(t1);
    t1 = std::move(t2);
  }
  if (r0.is_zero()) return {UPoly{}, UPoly{}, UPoly{}};
  const Rat inv = 1 / r0.leading();
  return {r0 * inv, s0 * inv, t0 * inv};
}

UPoly squarefree_part(const UPoly& p) {
  if (p.is_zero()) throw DomainError("squarefree part of zero");
  if (p.degree() == 0) return 1;
  return (p / gcd(p, p.derivative())).monic();
}

std::vector<std::pair<UPoly, int>> squarefree_decomposition(const UPoly& p) {
  if (p.is_zero()) throw DomainError("squarefree decomposition of zero");
  std::vector<std::pair<UPoly, int>> out;
  if (p.degree() == 0) return out;
  const UPoly dp = p.derivative();
  UPoly a = gcd(p, dp);
  // b and c share the scaling of p; the identity d = c - b' needs that.
  UPoly b = p / a;
  UPoly c = dp / a;
  UPoly d = c - b.derivative();
  for (int k = 1; b.degree() > 0; ++k) {
    if (k > p.degree()) throw Falsification("squarefree decomposition did not terminate");
    UPoly f = gcd(b, d);
    if (f.degree() > 0) out.emplace_back(f, k);
    b = b / f;
    c = d / f;
    d = c - b.derivative();
  }
  return out;
}

namespace {

std::vector<Int> positive_divisors(Int n) {
  if (n < 0) n = -n;
  std::vector<Int> small, large;
  for (Int i = 1; i * i <= n; ++i) {
    if (n % i == 0) {
      small.push_back(i);
      if (i * i != n) large.push_back(n / i);
    }
  }
  small.insert(small.end(), large.rbegin(), large.rend());
  return small;
}

}  // namespace

std::optional<std::vector<Rat>> rational_roots(const UPoly& p, const Int& bound) {
  if (p.is_zero()) throw DomainError("rational roots of zero polynomial");
  std::vector<Rat> roots;
  UPoly q = p.primitive_integer();
  int low = 0;
  while (q.coeff(low) == 0) ++low;
  if (low > 0) {
    roots.emplace_back(0);
    std::vector<Rat> shifted(q.coeffs().begin() + low, q.coeffs().end());
    q = UPoly(std::move(shifted));
  }
  if (q.degree() > 0) {
    q = squarefree_part(q).primitive_integer();
    const Int a0 = abs(q.coeff(0).get_num());
    const Int an = abs(q.leading().get_num());
    if (a0 > bound || an > bound) return std::nullopt;
    const auto nums = positive_divisors(a0);
    const auto dens = positive_divisors(an);
    if (nums.size() * dens.size() > 200000) return std::nullopt;
    for (const auto& den : dens) {
      for (const auto& num : nums) {
        Int g;
        mpz_gcd(g.get_mpz_t(), num.get_mpz_t(), den.get_mpz_t());
        if (g != 1) continue;
        for (int sign : {1, -1}) {
          Rat cand(num * sign, den);
          cand.canonicalize();
          if (q(cand) == 0) roots.push_back(cand);
        }
      }
    }
  }
  std::sort(roots.begin(), roots.end());
  return roots;
}

UPoly interpolate(const std::vector<Rat>& xs, const std::vector<Rat>& ys) {
  if (xs.size() != ys.size()) throw DomainError("interpolation size mismatch");
  const size_t n = xs.size();
  std::vector<Rat> dd = ys;
  for (size_t level = 1; level < n; ++level) {
    for (size_t i = n - 1; i >= level; --i) {
      const Rat gap = xs[i] - xs[i - level];
      if (gap == 0) throw DomainError("interpolation nodes not distinct");
      dd[i] = (dd[i] - dd[i - 1]) / gap;
    }
  }
  UPoly out;
  for (size_t i = n; i-- > 0;) {
    out = out * UPoly(std::vector<Rat>{-xs[i], 1}) + UPoly(dd[i]);
  }
  return out;
}

}  // namespace spectra

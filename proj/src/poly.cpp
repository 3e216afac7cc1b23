#include "spectra/poly.hpp"

#include <algorithm>
#include <cctype>
#include <numeric>
#include <sstream>

#include "spectra/errors.hpp"

namespace spectra {

char var_name(Var var) {
  static constexpr std::array<char, kNumVars> names{'u', 'v', 't', 'x', 'y'};
  return names[static_cast<size_t>(var)];
}

std::optional<Var> var_from_name(std::string_view name) {
  if (name.size() != 1) return std::nullopt;
  for (Var v : kAllVars) {
    if (var_name(v) == name[0]) return v;
  }
  return std::nullopt;
}

bool DegLexGreater::operator()(const Exps& a, const Exps& b) const {
  const int da = std::accumulate(a.begin(), a.end(), 0);
  const int db = std::accumulate(b.begin(), b.end(), 0);
  if (da != db) return da > db;
  return a > b;
}

VarSet::VarSet(std::initializer_list<Var> vars) {
  for (Var v : vars) insert(v);
}

VarSet& VarSet::insert(Var var) {
  bits_ = static_cast<std::uint8_t>(bits_ | (1U << static_cast<int>(var)));
  return *this;
}

VarSet& VarSet::erase(Var var) {
  bits_ = static_cast<std::uint8_t>(bits_ & ~(1U << static_cast<int>(var)));
  return *this;
}

VarSet VarSet::united(VarSet other) const {
  VarSet out;
  out.bits_ = static_cast<std::uint8_t>(bits_ | other.bits_);
  return out;
}

std::vector<Var> VarSet::list() const {
  std::vector<Var> out;
  for (Var v : kAllVars) {
    if (contains(v)) out.push_back(v);
  }
  return out;
}

// ---------------------------------------------------------------------------

Poly::Poly(long constant) : Poly(Rat(constant)) {}

Poly::Poly(const Rat& constant) {
  if (constant != 0) terms_.emplace(Exps{}, constant);
}

Poly Poly::variable(Var var) {
  Exps e{};
  e[static_cast<size_t>(var)] = 1;
  return monomial(e, 1);
}

Poly Poly::monomial(const Exps& exps, const Rat& coeff) {
  Poly p;
  for (Var v : kAllVars) {
    const int k = exps[static_cast<size_t>(v)];
    if (k < 0) throw DomainError("negative exponent");
    if (k > 0) p.vars_.insert(v);
  }
  if (coeff != 0) p.terms_.emplace(exps, coeff);
  return p;
}

Poly Poly::from_upoly(const UPoly& p, Var var) {
  Poly out;
  out.vars_.insert(var);
  for (int k = 0; k <= p.degree(); ++k) {
    const Rat c = p.coeff(k);
    if (c == 0) continue;
    Exps e{};
    e[static_cast<size_t>(var)] = k;
    out.terms_.emplace(e, c);
  }
  return out;
}

Poly Poly::with_vars(VarSet extra) const {
  Poly out = *this;
  out.vars_ = vars_.united(extra);
  return out;
}

Poly Poly::shrink_vars() const {
  Poly out = *this;
  out.vars_ = support();
  return out;
}

VarSet Poly::support() const {
  VarSet s;
  for (const auto& [e, c] : terms_) {
    for (Var v : kAllVars) {
      if (e[static_cast<size_t>(v)] > 0) s.insert(v);
    }
  }
  return s;
}

bool Poly::is_constant() const {
  return terms_.empty() || (terms_.size() == 1 && terms_.begin()->first == Exps{});
}

Rat Poly::constant_value() const {
  if (!is_constant()) throw DomainError("polynomial is not constant: " + to_string());
  return terms_.empty() ? Rat(0) : terms_.begin()->second;
}

bool Poly::involves(Var var) const { return degree_in(var) > 0; }

int Poly::degree_in(Var var) const {
  if (terms_.empty()) return -1;
  int d = 0;
  for (const auto& [e, c] : terms_) d = std::max(d, e[static_cast<size_t>(var)]);
  return d;
}

int Poly::total_degree() const {
  if (terms_.empty()) return -1;
  const Exps& e = terms_.begin()->first;
  return std::accumulate(e.begin(), e.end(), 0);
}

bool Poly::is_homogeneous(VarSet in, int deg) const {
  for (const auto& [e, c] : terms_) {
    int d = 0;
    for (Var v : in.list()) d += e[static_cast<size_t>(v)];
    if (d != deg) return false;
  }
  return true;
}

Rat Poly::coeff(const Exps& exps) const {
  auto it = terms_.find(exps);
  return it == terms_.end() ? Rat(0) : it->second;
}

const Rat& Poly::leading_coeff() const {
  if (terms_.empty()) throw DomainError("leading coefficient of zero polynomial");
  return terms_.begin()->second;
}

const Exps& Poly::leading_exps() const {
  if (terms_.empty()) throw DomainError("leading term of zero polynomial");
  return terms_.begin()->first;
}

void Poly::add_term(const Exps& exps, const Rat& coeff) {
  if (coeff == 0) return;
  auto [it, inserted] = terms_.emplace(exps, coeff);
  if (!inserted) {
    it->second += coeff;
    if (it->second == 0) terms_.erase(it);
  }
}

Poly& Poly::operator+=(const Poly& other) {
  vars_ = vars_.united(other.vars_);
  for (const auto& [e, c] : other.terms_) add_term(e, c);
  return *this;
}

Poly& Poly::operator-=(const Poly& other) {
  vars_ = vars_.united(other.vars_);
  for (const auto& [e, c] : other.terms_) add_term(e, -c);
  return *this;
}

Poly& Poly::operator*=(const Poly& other) {
  Poly out;
  out.vars_ = vars_.united(other.vars_);
  for (const auto& [ea, ca] : terms_) {
    for (const auto& [eb, cb] : other.terms_) {
      Exps e;
      for (size_t i = 0; i < e.size(); ++i) e[i] = ea[i] + eb[i];
      out.add_term(e, ca * cb);
    }
  }
  *this = std::move(out);
  return *this;
}

Poly& Poly::operator*=(const Rat& scalar) {
  if (scalar == 0) {
    terms_.clear();
    return *this;
  }
  for (auto& [e, c] : terms_) c *= scalar;
  return *this;
}

Poly Poly::derivative(Var var) const {
  Poly out;
  out.vars_ = vars_;
  const auto idx = static_cast<size_t>(var);
  for (const auto& [e, c] : terms_) {
    if (e[idx] == 0) continue;
    Exps d = e;
    d[idx] -= 1;
    out.add_term(d, c * e[idx]);
  }
  return out;
}

Poly Poly::pow(int exponent) const {
  if (exponent < 0) throw DomainError("negative polynomial power");
  Poly result = Poly(1).with_vars(vars_);
  Poly base = *this;
  while (exponent > 0) {
    if (exponent & 1) result *= base;
    exponent >>= 1;
    if (exponent > 0) base *= base;
  }
  return result;
}

Poly Poly::substitute(Var var, const Poly& value) const {
  const auto idx = static_cast<size_t>(var);
  std::vector<Poly> powers{Poly(1)};
  VarSet declared = vars_;
  declared.erase(var);
  Poly out = Poly().with_vars(declared.united(value.vars_));
  for (const auto& [e, c] : terms_) {
    const int k = e[idx];
    while (static_cast<int>(powers.size()) <= k) powers.push_back(powers.back() * value);
    Exps rest = e;
    rest[idx] = 0;
    out += Poly::monomial(rest, c) * powers[static_cast<size_t>(k)];
  }
  return out.with_vars(declared.united(value.vars_));
}

Poly Poly::specialize(const std::map<Var, Rat>& assignment) const {
  Poly out;
  out.vars_ = vars_;
  for (const auto& [v, val] : assignment) out.vars_.erase(v);
  for (const auto& [e, c] : terms_) {
    Exps rest = e;
    Rat coeff = c;
    for (const auto& [v, val] : assignment) {
      const auto idx = static_cast<size_t>(v);
      if (rest[idx] == 0) continue;
      Rat p;
      mpz_pow_ui(p.get_num_mpz_t(), val.get_num_mpz_t(), static_cast<unsigned long>(rest[idx]));
      mpz_pow_ui(p.get_den_mpz_t(), val.get_den_mpz_t(), static_cast<unsigned long>(rest[idx]));
      coeff *= p;
      rest[idx] = 0;
    }
    out.add_term(rest, coeff);
  }
  return out;
}

Rat Poly::eval(const std::map<Var, Rat>& assignment) const {
  for (Var v : vars_.united(support()).list()) {
    if (assignment.find(v) == assignment.end()) {
      throw DomainError(std::string("missing value for variable ") + var_name(v));
    }
  }
  return specialize(assignment).constant_value();
}

std::vector<Poly> Poly::coefficients_in(Var var) const {
  const int deg = degree_in(var);
  VarSet rest = vars_;
  rest.erase(var);
  std::vector<Poly> out(static_cast<size_t>(std::max(deg + 1, 0)), Poly().with_vars(rest));
  const auto idx = static_cast<size_t>(var);
  for (const auto& [e, c] : terms_) {
    Exps r = e;
    r[idx] = 0;
    out[static_cast<size_t>(e[idx])].add_term(r, c);
  }
  return out;
}

Poly Poly::from_coefficients(const std::vector<Poly>& coeffs, Var var) {
  Poly out = Poly().with_vars(VarSet{var});
  const Poly xv = variable(var);
  Poly power(1);
  for (const auto& c : coeffs) {
    out += c * power;
    power *= xv;
  }
  return out;
}

UPoly Poly::to_upoly(Var var) const {
  std::vector<Rat> c(static_cast<size_t>(std::max(degree_in(var) + 1, 0)));
  const auto idx = static_cast<size_t>(var);
  for (const auto& [e, coeff] : terms_) {
    for (Var w : kAllVars) {
      if (w != var && e[static_cast<size_t>(w)] != 0) {
        throw DomainError(std::string("polynomial is not univariate in ") + var_name(var));
      }
    }
    c[static_cast<size_t>(e[idx])] = coeff;
  }
  return UPoly(std::move(c));
}

Poly Poly::monic() const {
  if (is_zero()) return *this;
  return *this * (1 / leading_coeff());
}

std::string Poly::to_string() const {
  if (terms_.empty()) return "0";
  std::ostringstream out;
  bool first = true;
  for (const auto& [e, c] : terms_) {
    const bool negative = c < 0;
    const Rat mag = negative ? Rat(-c) : c;
    if (first) {
      if (negative) out << "-";
    } else {
      out << (negative ? " - " : " + ");
    }
    first = false;
    std::vector<std::string> factors;
    const bool has_vars = e != Exps{};
    if (mag != 1 || !has_vars) factors.push_back(spectra::to_string(mag));
    for (Var v : kAllVars) {
      const int k = e[static_cast<size_t>(v)];
      if (k == 0) continue;
      std::string f(1, var_name(v));
      if (k > 1) f += "^" + std::to_string(k);
      factors.push_back(f);
    }
    for (size_t i = 0; i < factors.size(); ++i) out << (i ? "*" : "") << factors[i];
  }
  return out.str();
}

// ---------------------------------------------------------------------------
// Parser

namespace {

class Parser {
 public:
  explicit Parser(std::string_view text) : text_(text) {}

  Poly run() {
    Poly p = expr();
    skip_ws();
    if (pos_ != text_.size()) fail("unexpected character");
    return p;
  }

 private:
  [[noreturn]] void fail(const std::string& what) const {
    throw ParseError(what + " at position " + std::to_string(pos_) + " in '" + std::string(text_) + "'");
  }

  void skip_ws() {
    while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
  }

  char peek() {
    skip_ws();
    return pos_ < text_.size() ? text_[pos_] : '\0';
  }

  bool starts_factor() {
    const char c = peek();
    return c == '(' || std::isdigit(static_cast<unsigned char>(c)) || std::isalpha(static_cast<unsigned char>(c));
  }

  Poly expr() {
    Poly acc = term();
    for (;;) {
      const char c = peek();
      if (c == '+') {
        ++pos_;
        acc += term();
      } else if (c == '-') {
        ++pos_;
        acc -= term();
      } else {
        return acc;
      }
    }
  }

  Poly term() {
    Poly acc = unary();
    for (;;) {
      const char c = peek();
      if (c == '*') {
        ++pos_;
        acc *= unary();
      } else if (c == '/') {
        ++pos_;
        const Poly d = unary();
        if (!d.is_constant() || d.is_zero()) fail("division by a non-constant or zero");
        acc *= 1 / d.constant_value();
      } else if (starts_factor()) {
        acc *= unary();
      } else {
        return acc;
      }
    }
  }

  Poly unary() {
    const char c = peek();
    if (c == '-') {
      ++pos_;
      return -unary();
    }
    if (c == '+') {
      ++pos_;
      return unary();
    }
    return power();
  }

  Poly power() {
    Poly base = primary();
    if (peek() == '^') {
      ++pos_;
      skip_ws();
      const size_t start = pos_;
      while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) ++pos_;
      if (start == pos_) fail("expected exponent");
      const std::string digits(text_.substr(start, pos_ - start));
      if (digits.size() > 4) fail("exponent too large");
      return base.pow(std::stoi(digits));
    }
    return base;
  }

  Poly primary() {
    const char c = peek();
    if (c == '(') {
      ++pos_;
      Poly inner = expr();
      if (peek() != ')') fail("expected ')'");
      ++pos_;
      return inner;
    }
    if (std::isdigit(static_cast<unsigned char>(c))) {
      const size_t start = pos_;
      while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) ++pos_;
      return Poly(Rat(Int(std::string(text_.substr(start, pos_ - start)), 10)));
    }
    if (std::isalpha(static_cast<unsigned char>(c))) {
      auto v = var_from_name(text_.substr(pos_, 1));
      if (!v) fail(std::string("unknown variable '") + c + "'");
      ++pos_;
      return Poly::variable(*v);
    }
    fail(c == '\0' ? "unexpected end of input" : "unexpected character");
  }

  std::string_view text_;
  size_t pos_ = 0;
};

}  // namespace

Poly Poly::parse(std::string_view text) { return Parser(text).run(); }

// ---------------------------------------------------------------------------
// Division, gcd, squarefree part, resultants

std::optional<Poly> divide_exact(const Poly& p, const Poly& divisor) {
  if (divisor.is_zero()) throw DomainError("division by zero polynomial");
  Poly rem = p;
  Poly quo = Poly().with_vars(p.vars());
  const Exps& dl = divisor.leading_exps();
  const Rat& dc = divisor.leading_coeff();
  while (!rem.is_zero()) {
    const Exps& rl = rem.leading_exps();
    Exps q;
    for (size_t i = 0; i < q.size(); ++i) {
      q[i] = rl[i] - dl[i];
      if (q[i] < 0) return std::nullopt;
    }
    const Poly step = Poly::monomial(q, rem.leading_coeff() / dc);
    quo += step;
    rem -= step * divisor;
  }
  return quo.with_vars(p.vars());
}

namespace {

void trim(std::vector<Poly>& c) {
  while (!c.empty() && c.back().is_zero()) c.pop_back();
}

Poly exact(const Poly& p, const Poly& d) {
  auto q = divide_exact(p, d);
  if (!q) throw Falsification("expected exact division failed: (" + p.to_string() + ") / (" + d.to_string() + ")");
  return *q;
}

}  // namespace

Poly prem(const Poly& p, const Poly& q, Var var) {
  if (q.is_zero()) throw DomainError("pseudo-remainder by zero");
  std::vector<Poly> a = p.coefficients_in(var);
  const std::vector<Poly> b = q.coefficients_in(var);
  const int dq = static_cast<int>(b.size()) - 1;
  const Poly& lc = b.back();
  int e = std::max(static_cast<int>(a.size()) - dq, 0);
  while (!a.empty() && static_cast<int>(a.size()) - 1 >= dq) {
    const Poly lead = a.back();
    const int shift = static_cast<int>(a.size()) - 1 - dq;
    for (auto& c : a) c *= lc;
    for (int j = 0; j <= dq; ++j) a[static_cast<size_t>(shift + j)] -= lead * b[static_cast<size_t>(j)];
    trim(a);
    --e;
  }
  Poly out = Poly::from_coefficients(a, var) * lc.pow(std::max(e, 0));
  return out.with_vars(p.vars().united(q.vars()));
}

namespace {

Poly gcd_rec(const Poly& p, const Poly& q);

Poly content_rec(const Poly& p, Var var) {
  Poly c;
  for (const auto& coeff : p.coefficients_in(var)) {
    if (coeff.is_zero()) continue;
    c = c.is_zero() ? coeff.monic() : gcd_rec(c, coeff);
    if (c.is_constant()) return Poly(1);
  }
  return c;
}

Poly gcd_prs(const Poly& p, const Poly& q) {
  if (p.is_zero()) return q.monic();
  if (q.is_zero()) return p.monic();
  if (p.is_constant() || q.is_constant()) return Poly(1);
  const VarSet s = p.support().united(q.support());
  // Main variable: the highest-index variable occurring, so contents live in
  // the earlier variables.
  const Var v = s.list().back();
  if (!p.involves(v)) return gcd_rec(p, content_rec(q, v));
  if (!q.involves(v)) return gcd_rec(content_rec(p, v), q);
  const Poly cp = content_rec(p, v);
  const Poly cq = content_rec(q, v);
  Poly a = exact(p, cp);
  Poly b = exact(q, cq);
  const Poly c = gcd_rec(cp, cq);
  if (a.degree_in(v) < b.degree_in(v)) std::swap(a, b);
  while (!b.is_zero()) {
    Poly r = prem(a, b, v);
    a = std::move(b);
    b = r.is_zero() ? Poly() : exact(r, content_rec(r, v));
  }
  Poly g = a.involves(v) ? exact(a, content_rec(a, v)) : Poly(1);
  return (c * g).monic();
}


using Groups = std::map<Exps, UPoly, DegLexGreater>;

/// p as a polynomial in the variables other than w, coefficients in Q[w].
Groups group_by(const Poly& p, Var w) {
  const auto k = static_cast<size_t>(w);
  std::map<Exps, std::vector<Rat>, DegLexGreater> acc;
  for (const auto& [e, c] : p.terms()) {
    Exps o = e;
    const auto dw = static_cast<size_t>(o[k]);
    o[k] = 0;
    auto& slot = acc[o];
    if (slot.size() <= dw) slot.resize(dw + 1);
    slot[dw] = c;
  }
  Groups out;
  for (auto& [o, c] : acc) out.emplace(o, UPoly(std::move(c)));
  return out;
}

Poly ungroup(const Groups& g, Var w) {
  const auto k = static_cast<size_t>(w);
  Poly out;
  for (const auto& [o, c] : g) {
    for (int i = 0; i <= c.degree(); ++i) {
      if (c.coeff(i) == 0) continue;
      Exps e = o;
      e[k] = i;
      out += Poly::monomial(e, c.coeff(i));
    }
  }
  return out;
}

UPoly group_content(const Groups& g) {
  UPoly c;
  for (const auto& [o, coeff] : g) {
    c = c.is_zero() ? coeff.monic() : gcd(c, coeff);
    if (c.degree() == 0) break;
  }
  return c;
}

void divide_groups(Groups& g, const UPoly& c) {
  for (auto& [o, coeff] : g) coeff = coeff / c;
}

/// Dense evaluation/interpolation gcd in one variable w, recursing on the
/// images. Every candidate is confirmed by trial division, so unlucky
/// evaluation points cost time but never correctness. Returns nullopt when
/// the point budget runs out.
std::optional<Poly> gcd_interp(const Poly& p, const Poly& q, const std::vector<Var>& vars) {
  Var w = vars.front();
  int best_deg = -1;
  for (Var cand : vars) {
    const int dm = std::min(p.degree_in(cand), q.degree_in(cand));
    if (best_deg < 0 || dm < best_deg) {
      best_deg = dm;
      w = cand;
    }
  }
  Groups gp = group_by(p, w);
  Groups gq = group_by(q, w);
  const UPoly cp = group_content(gp);
  const UPoly cq = group_content(gq);
  const Poly cg = Poly::from_upoly(gcd(cp, cq), w);
  divide_groups(gp, cp);
  divide_groups(gq, cq);
  const Poly pp = ungroup(gp, w);
  const Poly qq = ungroup(gq, w);
  if (pp.is_constant() || qq.is_constant()) return cg;
  const UPoly& lp = gp.begin()->second;
  const UPoly& lq = gq.begin()->second;
  const UPoly gamma = gcd(lp, lq);
  const size_t needed = static_cast<size_t>(std::min(pp.degree_in(w), qq.degree_in(w)) + gamma.degree()) + 1;

  std::vector<Rat> pts;
  std::vector<Poly> images;
  std::optional<Exps> lead;
  const DegLexGreater greater;
  const long budget = 4 * static_cast<long>(needed) + 40;
  for (long k = 0; k < budget; ++k) {
    const Rat w0(k % 2 == 0 ? k / 2 : -(k + 1) / 2);
    if (lp(w0) == 0 || lq(w0) == 0) continue;
    const Poly g0 = gcd_rec(pp.specialize({{w, w0}}), qq.specialize({{w, w0}}));
    if (g0.is_constant()) return cg;
    const Exps lm = g0.leading_exps();
    if (lead && greater(lm, *lead)) continue;
    if (!lead || greater(*lead, lm)) {
      lead = lm;
      pts.clear();
      images.clear();
    }
    pts.push_back(w0);
    images.push_back(g0 * gamma(w0));
    if (pts.size() < needed) continue;

    std::map<Exps, std::vector<Rat>, DegLexGreater> values;
    for (size_t i = 0; i < images.size(); ++i) {
      for (const auto& [e, c] : images[i].terms()) {
        auto& slot = values[e];
        slot.resize(pts.size());
        slot[i] = c;
      }
    }
    Groups h;
    for (auto& [e, ys] : values) {
      ys.resize(pts.size());
      h.emplace(e, interpolate(pts, ys));
    }
    divide_groups(h, group_content(h));
    const Poly cand = ungroup(h, w);
    if (divide_exact(pp, cand) && divide_exact(qq, cand)) return (cg * cand).monic();
  }
  return std::nullopt;
}

Poly gcd_rec(const Poly& p, const Poly& q) {
  if (p.is_zero()) return q.monic();
  if (q.is_zero()) return p.monic();
  if (p.is_constant() || q.is_constant()) return Poly(1);
  const std::vector<Var> vars = p.support().united(q.support()).list();
  if (vars.size() == 1) {
    return Poly::from_upoly(gcd(p.shrink_vars().to_upoly(vars[0]), q.shrink_vars().to_upoly(vars[0])), vars[0]);
  }
  if (auto g = gcd_interp(p, q, vars)) return *g;
  return gcd_prs(p, q);
}

}  // namespace

Poly content_in(const Poly& p, Var var) {
  if (p.is_zero()) return p;
  return content_rec(p, var);
}

Poly primitive_part_in(const Poly& p, Var var) {
  if (p.is_zero()) return p;
  return exact(p, content_rec(p, var));
}

Poly gcd(const Poly& p, const Poly& q) {
  if (p.is_zero() && q.is_zero()) throw DomainError("gcd of two zero polynomials");
  return gcd_rec(p, q).with_vars(p.vars().united(q.vars()));
}

Poly squarefree_part(const Poly& p) {
  if (p.is_zero()) throw DomainError("squarefree part of zero");
  if (p.is_constant()) return Poly(1).with_vars(p.vars());
  const Var v = p.support().list().back();
  const Poly c = content_rec(p, v);
  const Poly pp = exact(p, c);
  const Poly core = exact(pp, gcd_rec(pp, pp.derivative(v)));
  return (squarefree_part(c) * core).monic().with_vars(p.vars());
}

namespace {

Poly bareiss_det(std::vector<std::vector<Poly>> m) {
  const size_t n = m.size();
  if (n == 0) return Poly(1);
  Poly prev(1);
  int sign = 1;
  for (size_t k = 0; k + 1 < n; ++k) {
    if (m[k][k].is_zero()) {
      size_t swap_row = k + 1;
      while (swap_row < n && m[swap_row][k].is_zero()) ++swap_row;
      if (swap_row == n) return Poly();
      std::swap(m[k], m[swap_row]);
      sign = -sign;
    }
    for (size_t i = k + 1; i < n; ++i) {
      for (size_t j = k + 1; j < n; ++j) {
        Poly num = m[k][k] * m[i][j] - m[i][k] * m[k][j];
        m[i][j] = exact(num, prev);
      }
      m[i][k] = Poly();
    }
    prev = m[k][k];
  }
  Poly det = m[n - 1][n - 1];
  return sign < 0 ? -det : det;
}

}  // namespace

Poly resultant(const Poly& p, const Poly& q, Var var) {
  if (!p.involves(var) && !q.involves(var)) {
    throw DomainError(std::string("resultant: variable ") + var_name(var) + " occurs in neither input");
  }
  VarSet out_vars = p.vars().united(q.vars());
  out_vars.erase(var);
  if (p.is_zero() || q.is_zero()) return Poly().with_vars(out_vars);
  const auto a = p.coefficients_in(var);
  const auto b = q.coefficients_in(var);
  const int m = static_cast<int>(a.size()) - 1;
  const int n = static_cast<int>(b.size()) - 1;
  if (m == 0) return a[0].pow(n).with_vars(out_vars);
  if (n == 0) return b[0].pow(m).with_vars(out_vars);
  const auto size = static_cast<size_t>(m + n);
  std::vector<std::vector<Poly>> syl(size, std::vector<Poly>(size));
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j <= m; ++j) syl[static_cast<size_t>(i)][static_cast<size_t>(i + j)] = a[static_cast<size_t>(m - j)];
  }
  for (int i = 0; i < m; ++i) {
    for (int j = 0; j <= n; ++j) syl[static_cast<size_t>(n + i)][static_cast<size_t>(i + j)] = b[static_cast<size_t>(n - j)];
  }
  return bareiss_det(std::move(syl)).with_vars(out_vars);
}

namespace {

Rat numeric_det(std::vector<std::vector<Rat>> m) {
  const size_t n = m.size();
  Rat det = 1;
  for (size_t k = 0; k < n; ++k) {
    size_t piv = k;
    while (piv < n && m[piv][k] == 0) ++piv;
    if (piv == n) return 0;
    if (piv != k) {
      std::swap(m[piv], m[k]);
      det = -det;
    }
    det *= m[k][k];
    for (size_t i = k + 1; i < n; ++i) {
      if (m[i][k] == 0) continue;
      const Rat f = m[i][k] / m[k][k];
      for (size_t j = k; j < n; ++j) m[i][j] -= f * m[k][j];
    }
  }
  return det;
}

}  // namespace

UPoly resultant_dense(const Poly& p, const Poly& q, Var x, Var t) {
  for (const Poly* f : {&p, &q}) {
    for (Var w : f->support().list()) {
      if (w != x && w != t) throw DomainError("resultant_dense: inputs must be supported in {t, x}");
    }
  }
  if (p.is_zero() || q.is_zero()) return {};
  const auto a = p.coefficients_in(x);
  const auto b = q.coefficients_in(x);
  const int m = static_cast<int>(a.size()) - 1;
  const int n = static_cast<int>(b.size()) - 1;
  auto to_u = [t](const std::vector<Poly>& c) {
    std::vector<UPoly> out;
    out.reserve(c.size());
    for (const auto& ci : c) out.push_back(ci.to_upoly(t));
    return out;
  };
  const auto ua = to_u(a);
  const auto ub = to_u(b);
  int dta = 0, dtb = 0;
  for (const auto& c : ua) dta = std::max(dta, c.degree());
  for (const auto& c : ub) dtb = std::max(dtb, c.degree());
  const int bound = m * dtb + n * dta;
  const auto size = static_cast<size_t>(m + n);
  std::vector<Rat> xs, ys;
  for (int k = 0; k <= bound; ++k) {
    const Rat at(k);
    std::vector<std::vector<Rat>> syl(size, std::vector<Rat>(size));
    for (int i = 0; i < n; ++i) {
      for (int j = 0; j <= m; ++j) syl[static_cast<size_t>(i)][static_cast<size_t>(i + j)] = ua[static_cast<size_t>(m - j)](at);
    }
    for (int i = 0; i < m; ++i) {
      for (int j = 0; j <= n; ++j) syl[static_cast<size_t>(n + i)][static_cast<size_t>(i + j)] = ub[static_cast<size_t>(n - j)](at);
    }
    xs.push_back(at);
    ys.push_back(numeric_det(std::move(syl)));
  }
  return interpolate(xs, ys);
}

}  // namespace spectra

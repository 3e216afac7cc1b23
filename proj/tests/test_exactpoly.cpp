#include <doctest.h>

#include "gen.hpp"
#include "spectra/errors.hpp"
#include "spectra/poly.hpp"

using namespace spectra;

namespace {

Poly P(const char* s) { return Poly::parse(s); }
const Var U = Var::u, V = Var::v, T = Var::t, X = Var::x, Y = Var::y;

// Res(a - z, q; z) for monic linear first argument is q evaluated at z = a.
Poly res_linear_oracle(const Poly& a, const Poly& q, Var z) { return q.substitute(z, a); }

}  // namespace

TEST_CASE("rational canonical form") {
  const Rat q = parse_rat("-6/4");
  CHECK(q.get_num() == -3);
  CHECK(q.get_den() == 2);
  CHECK(to_string(parse_rat("+10/5")) == "2");
  CHECK_THROWS_AS(parse_rat("1/0"), ParseError);
  CHECK_THROWS_AS(parse_rat("abc"), ParseError);
}

TEST_CASE("parser and printer round trip") {
  const Poly p = P("4*u^12 + 27 v^12");
  CHECK(p.total_degree() == 12);
  CHECK(p.coeff({12, 0, 0, 0, 0}) == 4);
  CHECK(Poly::parse(p.to_string()) == p);
  CHECK(P("(x-y)^2/3") == (P("x") - P("y")) * (P("x") - P("y")) * Rat(1, 3));
  CHECK_THROWS_AS(P("x + "), ParseError);
  CHECK_THROWS_AS(P("q"), ParseError);
}

TEST_CASE("gcd examples") {
  CHECK(gcd(P("x^2-y^2"), P("x-y")) == P("x-y"));
  CHECK(gcd(P("x"), P("y")) == Poly(1));
  const Poly d = P("4*u^12+27*v^12");
  CHECK(gcd(d, d.derivative(U)) == Poly(1));
  // Independent check: coprime in u iff the Sylvester resultant is nonzero.
  CHECK_FALSE(resultant(d, d.derivative(U), U).is_zero());
  CHECK_THROWS_AS(gcd(Poly(), Poly()), DomainError);
}

TEST_CASE("squarefree examples") {
  CHECK(squarefree_part(P("(u-v)^2*(u+v)")) == P("(u-v)*(u+v)"));
  const Poly d = P("4*u^12+27*v^12");
  CHECK(squarefree_part(d) == d.monic());
  CHECK(squarefree_part(Poly(5)) == Poly(1));
  CHECK_THROWS_AS(squarefree_part(Poly()), DomainError);
}

TEST_CASE("resultant examples") {
  CHECK(resultant(P("y^2-x"), P("y-1"), Y) == P("1-x"));
  CHECK(resultant(P("x-t"), P("x^2-t"), X) == P("t^2-t"));
  CHECK(resultant(P("x-t"), P("x^2-t"), X) == res_linear_oracle(P("t"), P("x^2-t"), X));
  // Standard convention lc(p)^deg q * prod q(roots of p): W(0) = -x^3 - x.
  const Poly w = P("y^2-x^3-x");
  CHECK(resultant(P("y"), w, Y) == P("-x^3-x"));
  CHECK(resultant(P("y"), w, Y) == res_linear_oracle(Poly(0), w, Y));
  CHECK_THROWS_AS(resultant(P("x"), P("x+1"), Y), DomainError);
}

TEST_CASE("eval examples") {
  CHECK(P("x^2+y").eval({{X, 2}, {Y, 3}}) == 7);
  CHECK(P("-16*(4*u^12+27*v^12)").eval({{U, 0}, {V, 1}}) == -432);
  CHECK(Poly().eval({}) == 0);
  CHECK_THROWS_AS((void)P("x+y").eval({{X, 1}}), DomainError);
}

TEST_CASE("property: gcd divides both inputs and recovers planted factors") {
  testgen::Gen gen(11);
  for (int trial = 0; trial < 60; ++trial) {
    const Poly h = gen.nonconstant({X, Y}, 2, 3);
    const Poly a = gen.poly({X, Y}, 2, 3) * h;
    const Poly b = gen.poly({X, Y}, 2, 3) * h;
    if (a.is_zero() && b.is_zero()) continue;
    const Poly g = gcd(a, b);
    CHECK(divide_exact(a, g).has_value());
    CHECK(divide_exact(b, g).has_value());
    if (!a.is_zero() && !b.is_zero()) CHECK(divide_exact(g, h.monic()).has_value());
    CHECK(prem(a, g, X).is_zero());
  }
}

TEST_CASE("property: squarefree part ignores repeated factors") {
  testgen::Gen gen(12);
  for (int trial = 0; trial < 40; ++trial) {
    const Poly p = gen.nonconstant({U, V}, 2, 3);
    const Poly q = gen.nonconstant({V, U}, 2, 3);
    CHECK(squarefree_part(p * p * q) == squarefree_part(p * q));
  }
}

TEST_CASE("property: resultant vanishes iff a common factor involves the variable") {
  testgen::Gen gen(13);
  for (int trial = 0; trial < 40; ++trial) {
    const Poly a = gen.nonconstant({X, T}, 2, 3);
    const Poly b = gen.nonconstant({X, T}, 2, 3);
    const bool plant = trial % 2 == 0;
    const Poly h = plant ? gen.nonconstant({X, T}, 1, 3) : Poly(1);
    const Poly p = a * h, q = b * h;
    const Poly r = resultant(p, q, X);
    const bool shared = gcd(p, q).degree_in(X) > 0;
    CHECK(r.is_zero() == shared);
    if (plant) CHECK(r.is_zero());
    if (!r.is_zero()) {
      const UPoly dense = resultant_dense(p, q, X, T);
      CHECK(Poly::from_upoly(dense, T) == r);
    }
  }
}

TEST_CASE("property: evaluation is a ring homomorphism") {
  testgen::Gen gen(14);
  for (int trial = 0; trial < 50; ++trial) {
    const Poly p = gen.poly({U, V, X}, 3, 4, true);
    const Poly q = gen.poly({U, V, X}, 3, 4, true);
    const std::map<Var, Rat> at{{U, gen.rat(5)}, {V, gen.rat(5)}, {X, gen.rat(5)}};
    const Poly pv = p.with_vars({U, V, X}), qv = q.with_vars({U, V, X});
    CHECK((pv + qv).eval(at) == pv.eval(at) + qv.eval(at));
    CHECK((pv * qv).eval(at) == pv.eval(at) * qv.eval(at));
  }
}

TEST_CASE("univariate helpers") {
  const UPoly x = UPoly::identity();
  const UPoly p = (x - UPoly(1)) * (x - UPoly(1)) * (x + UPoly(2)) * UPoly(Rat(-3));
  const auto dec = squarefree_decomposition(p);
  REQUIRE(dec.size() == 2);
  CHECK(dec[0].second == 1);
  CHECK(dec[0].first == x + UPoly(2));
  CHECK(dec[1].second == 2);
  CHECK(dec[1].first == x - UPoly(1));
  const auto roots = rational_roots(p * (UPoly(Rat(2)) * x - UPoly(1)));
  REQUIRE(roots.has_value());
  CHECK(*roots == std::vector<Rat>{Rat(-2), Rat(1, 2), Rat(1)});
  const UXgcd eg = xgcd(x * x - UPoly(1), x - UPoly(1));
  CHECK(eg.g == x - UPoly(1));
  CHECK(eg.s * (x * x - UPoly(1)) + eg.t * (x - UPoly(1)) == eg.g);
  const UPoly f = interpolate({0, 1, 2, 3}, {1, 2, 5, 10});
  CHECK(f == x * x + UPoly(1));
}

#include <random>

#include "doctest.h"
#include "qadm/error.hpp"
#include "qadm/mpoly.hpp"
#include "qadm/symkernel.hpp"

using namespace qadm;

namespace {

MPoly P(const char* s) { return MPoly::parse(s); }
Exponent E(int e) { return static_cast<Exponent>(e); }

// Random polynomial in x, y, z with small coefficients.
MPoly random_poly(std::mt19937& rng) {
  std::uniform_int_distribution<int> coeff(-4, 4), expo(0, 3), count(0, 4);
  MPoly p;
  const int n = count(rng);
  for (int i = 0; i < n; ++i)
    p += MPoly::monomial(Rational(coeff(rng), 1 + expo(rng)),
                         {{"x", E(expo(rng))}, {"y", E(expo(rng))}, {"z", E(expo(rng) % 2)}});
  return p;
}

}  // namespace

TEST_SUITE("symkernel") {
  TEST_CASE("rationals stay reduced") {
    const Rational r(6, -4);
    CHECK(r.str() == "-3/2");
    CHECK(r.den_str() == "2");
    CHECK((Rational(1, 3) + Rational(1, 6)).str() == "1/2");
    CHECK(Rational::parse("-10/4") == Rational(-5, 2));
    CHECK_THROWS_AS(Rational::parse("1/0"), Error);
    CHECK_THROWS_AS(Rational::parse("abc"), ParseError);
  }

  TEST_CASE("basic arithmetic") {
    CHECK((P("x+1") * P("x-1")) == P("x^2-1"));
    CHECK(P("y").pow(0) == MPoly(1));
    CHECK((P("x") - P("x")).is_zero());
    CHECK(P("2*x*y^2 + 1/3").str() == P(P("2*x*y^2 + 1/3").str().c_str()).str());
  }

  TEST_CASE("exact division recovers the quotient") {
    const MPoly g = P("x^3 + a2*x^2 + a1*x + a0");
    const MPoly num = P("x*u^2 + b*u*x") - P("x") * g;
    const MPoly q = exact_div(num, P("x"));
    CHECK(q == P("u^2 + b*u") - g);
    CHECK(q * P("x") == num);
    CHECK_THROWS_AS(exact_div(P("x^2+1"), P("x")), Error);
  }

  TEST_CASE("substitution") {
    CHECK(P("y^2-x^3").substitute({{"y", P("x*u+b")}}) == P("x^2*u^2 + 2*b*x*u + b^2 - x^3"));
    CHECK(P("x^2+a0").substitute({{"a0", P("b0^2")}}) == P("x^2+b0^2"));
    const MPoly p = P("x*y + 3");
    CHECK(p.substitute({}) == p);
  }

  TEST_CASE("parse errors carry a position") {
    try {
      (void)P("x^^2");
      FAIL("expected a parse error");
    } catch (const ParseError& e) {
      CHECK(e.position() == 2);
    }
  }

  TEST_CASE("squarefree decomposition") {
    auto sq = squarefree_decomposition(P("x^3*(x-1)^2"));
    REQUIRE(sq.factors.size() == 2);
    CHECK(sq.factors[0].factor == P("x-1"));
    CHECK(sq.factors[0].multiplicity == 2);
    CHECK(sq.factors[1].factor == P("x"));
    CHECK(sq.factors[1].multiplicity == 3);

    sq = squarefree_decomposition(P("x^2-1"));
    REQUIRE(sq.factors.size() == 1);
    CHECK(sq.factors[0].multiplicity == 1);

    const MPoly f = P("x^5 + 2*x^4 + x^3");
    sq = squarefree_decomposition(f);
    REQUIRE(sq.factors.size() == 2);
    CHECK(sq.factors[0].factor == P("x+1"));
    CHECK(sq.factors[1].factor == P("x"));
    CHECK(sq.reconstruct() == f);

    CHECK_THROWS_AS(squarefree_decomposition(P("x*y")), Error);
  }

  TEST_CASE("weighted degree") {
    CHECK(weighted_degree(P("y^2-x^3"), {{"x", 2}, {"y", 3}}) == 6);
    CHECK(weighted_degree(P("y^2-x^3-a0"), {{"x", 2}, {"y", 3}, {"a0", 6}}) == 6);
    CHECK_FALSE(weighted_degree(P("x+y"), {{"x", 1}, {"y", 2}}).has_value());
    CHECK_THROWS_AS(weighted_degree(P("x+z"), {{"x", 1}}), Error);
  }

  TEST_CASE("center of mass section") {
    CHECK(center_of_mass_section({1, 2, 1}) == P("y + x"));
    CHECK(center_of_mass_section({3, 0, 5}) == P("y"));
    CHECK_THROWS_AS(center_of_mass_section({1, 1, 0}), Error);
  }

  TEST_CASE("ring axioms on random triples") {
    std::mt19937 rng(17);
    for (int i = 0; i < 200; ++i) {
      const MPoly a = random_poly(rng), b = random_poly(rng), c = random_poly(rng);
      CHECK((a * b) * c == a * (b * c));
      CHECK(a * (b + c) == a * b + a * c);
      CHECK(a + b == b + a);
      CHECK(MPoly::parse(a.str()) == a);
    }
  }

  TEST_CASE("squarefree round trip on random products") {
    std::mt19937 rng(5);
    std::uniform_int_distribution<int> root(-3, 3), mult(1, 3), count(1, 3);
    for (int i = 0; i < 60; ++i) {
      MPoly f(Rational(1 + i % 3, 2));
      const int n = count(rng);
      for (int j = 0; j < n; ++j) f *= (P("x") - MPoly(root(rng))).pow(static_cast<std::uint64_t>(mult(rng)));
      const auto sq = squarefree_decomposition(f);
      CHECK(sq.reconstruct() == f);
    }
  }

  TEST_CASE("center of mass section is equivariant") {
    // Substituting y -> a*y + b*x into the form and recomputing gives a*s
    // with s rewritten in the new coordinates.
    std::mt19937 rng(11);
    std::uniform_int_distribution<int> c(-5, 5);
    for (int trial = 0; trial < 50; ++trial) {
      const int d = 2 + trial % 3;
      std::vector<Rational> coeffs;
      for (int i = 0; i <= d; ++i) coeffs.push_back(Rational(c(rng)));
      if (coeffs.back().is_zero()) coeffs.back() = Rational(1);
      Rational a(c(rng)), b(c(rng));
      if (a.is_zero()) a = Rational(2);
      MPoly form;
      for (int i = 0; i <= d; ++i)
        form += MPoly::monomial(coeffs[static_cast<std::size_t>(i)],
                                {{"x", static_cast<Exponent>(d - i)}, {"y", static_cast<Exponent>(i)}});
      const MPoly moved = form.substitute({{"y", MPoly(a) * P("y") + MPoly(b) * P("x")}});
      std::vector<Rational> moved_coeffs;
      for (int i = 0; i <= d; ++i) {
        MPoly m = moved.coefficient("x", static_cast<Exponent>(d - i)).coefficient("y", static_cast<Exponent>(i));
        moved_coeffs.push_back(m.is_zero() ? Rational(0) : m.constant_value());
      }
      const MPoly s = center_of_mass_section(coeffs);
      const MPoly s_moved = center_of_mass_section(moved_coeffs);
      CHECK(s.substitute({{"y", MPoly(a) * P("y") + MPoly(b) * P("x")}}) == MPoly(a) * s_moved);
    }
  }

  TEST_CASE("weighted degree is additive") {
    const WeightAssignment w{{"x", 2}, {"y", 3}, {"z", 1}};
    std::mt19937 rng(3);
    std::uniform_int_distribution<int> e(0, 3);
    for (int i = 0; i < 100; ++i) {
      const MPoly p = MPoly::monomial(1, {{"x", E(e(rng))}, {"y", E(e(rng))}}) + MPoly::monomial(2, {{"z", 6}});
      const MPoly q = MPoly::monomial(-1, {{"x", E(e(rng))}, {"z", E(e(rng))}});
      const auto dp = weighted_degree(p, w), dq = weighted_degree(q, w);
      if (dp && dq) CHECK(weighted_degree(p * q, w) == *dp + *dq);
    }
  }
}

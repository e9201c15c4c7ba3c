#include <random>

#include "doctest.h"
#include "oracles/oracles.hpp"
#include "qadm/error.hpp"
#include "qadm/singularity.hpp"

using namespace qadm;

namespace {

MPoly P(const char* s) { return MPoly::parse(s); }

std::vector<std::string> profile_types(const MPoly& f, std::optional<Rational> marked = std::nullopt) {
  std::vector<std::string> out;
  for (const auto& e : classify_branch_profile(f, marked)) out.push_back(e.type.str());
  return out;
}

}  // namespace

TEST_SUITE("singularity") {
  TEST_CASE("classification of branch profiles") {
    CHECK(profile_types(P("x^3*(x-1)")) == std::vector<std::string>{"A2"});
    CHECK(profile_types(P("(x-2)^2"), Rational(2)) == std::vector<std::string>{"D2"});
    CHECK(profile_types(P("(x-1)*(x-2)*(x+5)")).empty());
    CHECK(profile_types(P("(x-1)*(x-2)"), Rational(1)) == std::vector<std::string>{"D1"});
    // Two conjugate double roots are two A1 points.
    CHECK(profile_types(P("(x^2+1)^2*x")) == std::vector<std::string>{"A1", "A1"});
  }

  TEST_CASE("classification is invariant under affine changes of x") {
    std::mt19937 rng(29);
    std::uniform_int_distribution<int> r(-4, 4);
    const std::vector<MPoly> samples{P("x^3*(x-1)^2*(x+2)"), P("(x^2-2)^2*(x-1)"), P("x*(x-1)*(x-3)^4")};
    for (const auto& f : samples)
      for (int trial = 0; trial < 10; ++trial) {
        int a = r(rng);
        if (a == 0) a = 3;
        const MPoly g = f.substitute({{"x", MPoly(a) * P("x") + MPoly(r(rng))}});
        CHECK(profile_types(g) == profile_types(f));
      }
  }

  TEST_CASE("versal families and weights") {
    const VersalFamily a2 = versal(SingType::A(2));
    CHECK(a2.equation == P("y^2 - x^3 - a1*x - a0"));
    CHECK(a2.weights == WeightAssignment{{"x", 2}, {"y", 3}, {"a1", 4}, {"a0", 6}});

    const VersalFamily a3 = versal(SingType::A(3));
    CHECK(a3.weights == WeightAssignment{{"x", 1}, {"y", 2}, {"a2", 2}, {"a1", 3}, {"a0", 4}});

    const VersalFamily d4 = versal(SingType::D(4));
    CHECK(d4.equation == P("x*y^2 + b*y - x^3 - a2*x^2 - a1*x - a0"));
    CHECK(d4.weights == WeightAssignment{{"x", 1}, {"y", 1}, {"b", 2}, {"a2", 1}, {"a1", 2}, {"a0", 3}});
  }

  TEST_CASE("versal families are quasi-homogeneous with Tjurina-many parameters") {
    for (int n = 2; n <= 20; ++n)
      for (SingType t : {SingType::A(n), SingType::D(n < 3 ? 3 : n)}) {
        const VersalFamily f = versal(t);
        CHECK(weighted_degree(f.equation, f.weights).has_value());
        CHECK(f.params.size() == tjurina_basis(t).size());
      }
  }

  TEST_CASE("Tjurina bases") {
    CHECK(tjurina_basis(SingType::A(2)) == std::vector<MPoly>{P("1"), P("x")});
    const auto a5 = tjurina_basis(SingType::A(5));
    REQUIRE(a5.size() == 5);
    for (int i = 0; i < 5; ++i) CHECK(a5[static_cast<std::size_t>(i)] == P("x").pow(static_cast<std::uint64_t>(i)));
    CHECK(tjurina_basis(SingType::D(4)).size() == 4);
    CHECK(tjurina_basis(SingType::D(2)).size() == 2);
    CHECK_THROWS_AS(tjurina_basis(SingType::D(1)), Error);
  }

  TEST_CASE("Tjurina bases agree with the linear-algebra oracle") {
    for (int n = 1; n <= 12; ++n) {
      const SingType a = SingType::A(n);
      CHECK(oracle::is_monomial_basis(oracle::tjurina_ideal(a), tjurina_basis(a)));
      if (n >= 3) {
        const SingType d = SingType::D(n);
        CHECK(oracle::is_monomial_basis(oracle::tjurina_ideal(d), tjurina_basis(d)));
      }
    }
    auto d2 = tjurina_basis(SingType::D(2));
    d2.push_back(MPoly(1));
    CHECK(oracle::is_monomial_basis(oracle::tjurina_ideal(SingType::D(2)), d2));
  }

  TEST_CASE("delta invariants") {
    CHECK(delta_invariant(SingType::A(1)) == 1);
    CHECK(delta_invariant(SingType::A(2)) == 1);
    CHECK(delta_invariant(SingType::A(5)) == 3);
    CHECK(delta_invariant(SingType::D(1)) == 0);
    CHECK(delta_invariant(SingType::D(2)) == 1);
    CHECK(delta_invariant(SingType::D(4)) == 3);
    CHECK(delta_invariant(SingType::D(5)) == 3);
  }

  TEST_CASE("log canonical thresholds") {
    CHECK(lct(SingType::A(2)) == Rational(5, 6));
    CHECK(lct(SingType::A(1)) == Rational(1));
    CHECK(lct(SingType::D(4)) == Rational(2, 3));
    CHECK(lct_window_check(2) == Rational(5, 6));
    CHECK(lct_window_check(1) == Rational(1));
    CHECK(lct_window_check(9) == Rational(3, 5));
    for (int k = 1; k <= 50; ++k) CHECK(lct_window_check(k) == lct(SingType::A(k)));
  }

  TEST_CASE("thresholds") {
    CHECK(thresholds_to_types(Rational(1, 3), std::nullopt, 6).a_bound == 2);
    CHECK(thresholds_to_types(Rational(1, 2), std::nullopt, 6).a_bound == 1);
    const TypeBounds b = thresholds_to_types(Rational(1, 4), Rational(1, 2), 3);
    CHECK(b.a_bound == 2);
    CHECK(b.d_bound == 2);
    // At larger n the D window is no longer cut off.
    const TypeBounds wide = thresholds_to_types(Rational(1, 4), Rational(1, 2), 8);
    CHECK(wide.a_bound == 3);
    CHECK(wide.d_bound == 2);
    CHECK(wide.d_bound_raw == 2);
    CHECK_THROWS_AS(thresholds_to_types(Rational(3, 4), std::nullopt, 4), Error);
  }

  TEST_CASE("window endpoints map consistently") {
    for (int k = 1; k <= 15; ++k) {
      const Rational right(1, k + 1), left(1, k + 2);
      CHECK(thresholds_to_types(right, std::nullopt, 30).a_bound == k);
      CHECK(thresholds_to_types(left, std::nullopt, 30).a_bound == k + 1);
      const Rational mid = (left + right) / Rational(2);
      CHECK(thresholds_to_types(mid, std::nullopt, 30).a_bound == k);
    }
  }

  TEST_CASE("A to D transform") {
    const VersalFamily d = a_to_d_transform(versal_with_section(4));
    CHECK(d.equation == P("x*u^2 + u*b - x^3 - a2*x^2 - a1*x - a0"));
    const VersalFamily d3 = a_to_d_transform(versal_with_section(3));
    CHECK(d3.equation == P("x*u^2 + u*b - x^2 - a1*x - a0"));
    for (int n = 3; n <= 12; ++n) {
      const VersalFamily t = a_to_d_transform(versal_with_section(n));
      std::map<std::string, MPoly> zero;
      for (const auto& p : t.params) zero[p] = MPoly(0);
      CHECK(t.equation.substitute(zero) == P("x") * (P("u^2") - P("x").pow(static_cast<std::uint64_t>(n - 2))));
    }
    CHECK_THROWS_AS(a_to_d_transform(versal(SingType::A(3))), Error);
  }

  TEST_CASE("normal form") {
    const NormalForm a = normal_form(P("(x-1)^3*(x+3)"));
    CHECK(a.coeffs == std::vector<Rational>{-6, 8, -3});
    const NormalForm b = normal_form(P("x^2*(x-3)"));
    // (x+1)^2 (x-2) = x^3 - 3x - 2
    CHECK(b.coeffs == std::vector<Rational>{-3, -2});
    CHECK_FALSE(b.all_zero);
    const NormalForm c = normal_form(P("x^5"));
    CHECK(c.all_zero);
    CHECK(normal_form(P("(x-7)^5")).all_zero);
  }

  TEST_CASE("weighted projective coordinates") {
    CHECK(wps_weights(5, false) == std::vector<std::int64_t>{2, 3, 4, 5, 6});
    CHECK(wps_weights(4, false) == std::vector<std::int64_t>{4, 6, 8, 10});
    CHECK(wps_weights(5, true) == std::vector<std::int64_t>{5, 2, 4, 6, 8});
    CHECK(wps_equal({1, 1}, {1, 1}, {2, 3}));
    CHECK(wps_equal({1, 1}, {4, 8}, {2, 3}));
    CHECK_FALSE(wps_equal({1, 1}, {4, 9}, {2, 3}));
  }

  TEST_CASE("weighted projective weights are the versal parameter weights") {
    for (int n = 2; n <= 12; ++n) {
      auto w = wps_weights(n, false);
      std::sort(w.begin(), w.end());
      CHECK(w == versal_parameter_weights(SingType::A(n)));
    }
  }
}

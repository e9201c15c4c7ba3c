#include <random>

#include "doctest.h"
#include "qadm/error.hpp"
#include "qadm/singularity.hpp"
#include "qadm/stablered.hpp"

using namespace qadm;

namespace {

MPoly P(const char* s) { return MPoly::parse(s); }
MPoly X(int e) { return MPoly::var("x").pow(static_cast<std::uint64_t>(e)); }

std::map<std::string, Rational> zero_spec(const ChartFamily& c) {
  std::map<std::string, Rational> s;
  for (const auto& p : c.params) s[p] = Rational(0);
  return s;
}

}  // namespace

TEST_SUITE("stablered") {
  TEST_CASE("base change") {
    const BaseChange b2 = base_change(2);
    CHECK(b2.substitution.at("a1") == P("b1^2"));
    CHECK(b2.substitution.at("a0") == P("b0^3"));
    CHECK(b2.equation == P("y^2 - x^3 - b1^2*x - b0^3"));
    CHECK(base_change(1).substitution.at("a0") == P("b0^2"));
    for (int k = 1; k <= 8; ++k) {
      const BaseChange b = base_change(k);
      CHECK(weighted_degree(b.equation, b.weights).has_value());
    }
    CHECK_THROWS_AS(base_change(0), Error);
  }

  TEST_CASE("charts") {
    // The x-term carries u^(k+1-j), as the substitution b1 -> u dictates.
    CHECK(chart(2, 1).equation == P("y^2 - x^3 - u^2*x - c0^3*u^3"));
    CHECK(chart(2, 0).equation == P("y^2 - x^3 - c1^2*u^2*x - u^3"));
    CHECK_THROWS_AS(chart(3, 3), Error);
    CHECK_THROWS_AS(chart(3, -1), Error);
    for (int k = 1; k <= 8; ++k)
      for (int j = 0; j < k; ++j) {
        const ChartFamily c = chart(k, j);
        CHECK(c.equation.substitute({{"u", MPoly(0)}}) == P("y^2") - X(k + 1));
        std::map<std::string, MPoly> zero;
        for (const auto& p : c.params) zero[p] = MPoly(0);
        CHECK(c.equation.substitute(zero) ==
              P("y^2") - X(k + 1) - MPoly::var("u").pow(static_cast<std::uint64_t>(k + 1 - j)) * X(j));
      }
  }

  TEST_CASE("charts agree on overlaps") {
    for (int k = 1; k <= 6; ++k)
      for (int a = 0; a < k; ++a)
        for (int b = 0; b < k; ++b) CHECK(charts_agree(k, a, b));
  }

  TEST_CASE("tails are quasi-homogeneous of degree 2(k+1)") {
    for (int k = 1; k <= 8; ++k)
      for (int j = 0; j < k; ++j) {
        const TailFamily t = tail_family(chart(k, j));
        CHECK(t.degree == 2 * (k + 1));
        CHECK(t.weights.at("x") == 2);
        CHECK(t.weights.at("u") == 2);
        CHECK(t.weights.at("y") == k + 1);
      }
    CHECK(tail_family(chart(1, 0)).equation == P("y^2 - x^2 - u^2"));
    CHECK_THROWS_AS(tail_with_branch(3, P("x^4 + u")), Error);
  }

  TEST_CASE("attaching points") {
    CHECK(attaching_points(3) == 2);
    CHECK(attaching_points(2) == 1);
    for (int k = 1; k <= 12; ++k) CHECK(attaching_points(k) == (k % 2 ? 2 : 1));
  }

  TEST_CASE("central fibers") {
    for (int k = 1; k <= 8; ++k)
      for (int j = 0; j < k; ++j) {
        const CentralFiber f = central_fiber(chart(k, j));
        CHECK(f.matches_normal_form);
        CHECK(f.attaching == attaching_points(k));
        CHECK(leading_form_certificate(chart(k, j)).holds());
      }
  }

  TEST_CASE("tail membership") {
    // Generic parameters give a smooth tail.
    const ChartFamily c = chart(4, 1);
    const TailFamily t = tail_family(c);
    std::map<std::string, Rational> generic{{"c0", Rational(3)}, {"c2", Rational(-1, 2)}, {"c3", Rational(5)}};
    CHECK(verify_tail_membership(t, generic).codim == 0);

    // The chart's own x^j term keeps the multiplicity at j.
    const StratumLabel l = verify_tail_membership(t, zero_spec(c));
    CHECK(l.singularities.empty());
    const StratumLabel l3 = verify_tail_membership(tail_family(chart(4, 3)), zero_spec(chart(4, 3)));
    CHECK(l3.singularities == std::vector<SingType>{SingType::A(2)});

    // Branch x^k (x - u): an A_(k-1) on the tail, still inside the target.
    for (int k = 2; k <= 6; ++k) {
      const TailFamily tk = tail_with_branch(k, X(k) * (P("x") - P("u")));
      const StratumLabel lk = verify_tail_membership(tk, {});
      CHECK(lk.singularities == std::vector<SingType>{SingType::A(k - 1)});
    }

    CHECK_THROWS_AS(verify_tail_membership(tail_with_branch(3, X(4)), {}), Error);
    CHECK_THROWS_AS(verify_tail_membership(t, {{"c0", Rational(1)}}), Error);
    CHECK_THROWS_AS(verify_tail_membership(t, {{"c9", Rational(1)}, {"c0", 1}, {"c2", 1}, {"c3", 1}}), Error);
  }

  TEST_CASE("random specializations never reach multiplicity k+1") {
    std::mt19937 rng(2024);
    std::uniform_int_distribution<int> num(-6, 6), den(1, 4);
    for (int k = 1; k <= 6; ++k)
      for (int j = 0; j < k; ++j) {
        const ChartFamily c = chart(k, j);
        const TailFamily t = tail_family(c);
        for (int trial = 0; trial < 20; ++trial) {
          std::map<std::string, Rational> spec;
          for (const auto& p : c.params) spec[p] = Rational(num(rng), den(rng));
          CHECK_NOTHROW(verify_tail_membership(t, spec));
        }
      }
  }

  TEST_CASE("genus is preserved by replacing a singularity with its tail") {
    // A cover with an A_k point versus the same cover with a generic tail
    // glued in: both trees have the same arithmetic genus, and the tail
    // alone has genus floor(k/2).
    const int n = 8;
    for (int k = 1; k <= 6; ++k) {
      const ChartFamily c = chart(k, 0);
      std::map<std::string, Rational> spec;
      int i = 2;
      for (const auto& p : c.params) spec[p] = Rational(i++, 3);
      const MarkedTree tail = tail_tree(tail_family(c), spec);
      CHECK(arithmetic_genus(tail) == k / 2);

      MarkedTree singular;
      singular.components.push_back({{{0, true, false}, {k + 1, false, false}}});
      for (int s = 0; s < n - k; ++s) singular.components[0].points.push_back({1, false, false});

      MarkedTree glued;
      glued.components.push_back({{{0, true, false}}});
      for (int s = 0; s < n - k; ++s) glued.components[0].points.push_back({1, false, false});
      Component far;
      for (const auto& p : tail.components[0].points)
        if (!p.tau) far.points.push_back(p);
      glued.components.push_back(far);
      glued.edges = {{0, 1}};
      CHECK(arithmetic_genus(glued) == arithmetic_genus(singular));
      CHECK(arithmetic_genus(singular) == n / 2);
    }
  }

  TEST_CASE("A-side pipeline record") {
    const AStableReduction r = a_stable_reduction(4);
    CHECK(r.charts.size() == 4);
    CHECK(r.transitions_agree);
    const AStableReduction one = a_stable_reduction(4, 2, std::map<std::string, Rational>{{"c0", 1}, {"c1", 2}, {"c3", 3}});
    REQUIRE(one.charts.size() == 1);
    CHECK(one.charts[0].label.has_value());
    CHECK_THROWS_AS(a_stable_reduction(4, 7), Error);
    CHECK_THROWS_AS(a_stable_reduction(4, std::nullopt, std::map<std::string, Rational>{{"zz", 1}}), Error);
  }

  TEST_CASE("D-side pipeline") {
    const DStableReduction top = d_stable_reduction(4, 3, 3);
    CHECK(top.transform_matches);
    CHECK(top.identity);

    const DStableReduction r = d_stable_reduction(4, 1, 2);
    CHECK(r.transform_matches);
    CHECK_FALSE(r.charts.empty());
    for (const auto& c : r.charts) {
      CHECK(c.sections_on_curve);
      CHECK(c.tail_quasi_homogeneous);
      CHECK_FALSE(c.refinement.empty());
      for (const auto& t : c.refinement)
        for (auto s : label_of(t).singularities)
          CHECK((s == SingType::A(1) || s == SingType::D(1) || s == SingType::D(2)));
    }
    CHECK_THROWS_AS(d_stable_reduction(4, 1, 3), Error);
    CHECK_THROWS_AS(d_stable_reduction(2, 1, 1), Error);
    const DStableReduction clamped = d_stable_reduction(4, 6, 4);
    CHECK(clamped.k == 3);
    CHECK(clamped.notes.size() == 2);
  }
}

#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "qadm/mpoly.hpp"
#include "qadm/rational.hpp"
#include "qadm/symkernel.hpp"
#include "qadm/trees.hpp"

namespace qadm {

// ---- A side ---------------------------------------------------------------

struct BaseChange {
  int k = 0;
  std::map<std::string, MPoly> substitution;  // a_i -> b_i^(k+1-i)
  MPoly equation;                             // versal(A_k) after substitution
  WeightAssignment weights;                   // b_i inherit weight(a_i)/(k+1-i)
};

BaseChange base_change(int k);

// One affine piece of the blown-up base: b_j -> u, b_i -> u c_i (i != j).
struct ChartFamily {
  int k = 0;
  int j = 0;
  MPoly equation;
  std::string exceptional = "u";
  std::vector<std::string> params;  // c_i, i != j
  WeightAssignment weights;         // x:2, u:2, y:k+1, c_i:0
};

ChartFamily chart(int k, int j);

// Rewrites chart `to` in the coordinates of chart `from` on their overlap and
// compares with the equation of `from`. Reciprocals of the transition
// coordinate are carried as a formal inverse and cancelled.
bool charts_agree(int k, int from, int to);

struct TailFamily {
  int k = 0;
  MPoly equation;  // y^2 - branch(x, u)
  WeightAssignment weights;
  std::int64_t degree = 0;
  std::vector<std::string> params;
};

// Throws NotQuasiHomogeneous unless the weighted degree is 2(k+1).
TailFamily tail_family(const ChartFamily& c);
// Tail y^2 = branch for an explicit quasi-homogeneous branch form in x, u.
TailFamily tail_with_branch(int k, const MPoly& branch);

// Number of points of y^2 = x^(k+1) in P(2, k+1), by counting orbits.
int attaching_points(int k);

// Branch polynomial of the tail on the affine piece u = 1 after the
// parameter specialization.
MPoly tail_branch_polynomial(const TailFamily& t, const std::map<std::string, Rational>& spec);

// Throws DegenerateSpecialization on a root of multiplicity k+1.
StratumLabel verify_tail_membership(const TailFamily& t, const std::map<std::string, Rational>& spec);

// The tail as a single-component tree with the attaching point as tau.
MarkedTree tail_tree(const TailFamily& t, const std::map<std::string, Rational>& spec);

// Symbolic reason why no specialization of chart j reaches multiplicity
// k+1: the x^k coefficient vanishes identically while the x^j coefficient is 1.
struct LeadingFormCertificate {
  bool subleading_vanishes = false;
  bool chart_term_is_unit = false;
  bool holds() const { return subleading_vanishes && chart_term_is_unit; }
};

LeadingFormCertificate leading_form_certificate(const ChartFamily& c);

struct CentralFiber {
  MPoly strict_transform;  // chart equation at u = 0
  bool matches_normal_form = false;
  TailFamily tail;
  int attaching = 0;
};

CentralFiber central_fiber(const ChartFamily& c);

struct AChartReport {
  ChartFamily chart;
  CentralFiber fiber;
  LeadingFormCertificate certificate;
  std::optional<StratumLabel> label;  // present when a specialization was requested
};

struct AStableReduction {
  int k = 0;
  BaseChange base;
  std::vector<AChartReport> charts;
  bool transitions_agree = false;
};

// All charts, or only `only_chart`; `spec` specializes the c parameters.
AStableReduction a_stable_reduction(int k, std::optional<int> only_chart = std::nullopt,
                                    const std::optional<std::map<std::string, Rational>>& spec = std::nullopt);

// ---- D side ---------------------------------------------------------------

struct SectionPair {
  MPoly x;  // the section is {x = 0, y = value}
  MPoly y;
};

struct DChart {
  std::string param;  // base parameter sent to u
  MPoly equation;
  std::vector<SectionPair> sections;
  bool sections_on_curve = false;
  WeightAssignment tail_weights;
  std::optional<std::int64_t> tail_degree;
  bool tail_quasi_homogeneous = false;
  MPoly central_branch;  // branch polynomial at c = 0, u = 1
  MarkedTree central_tail;
  StratumLabel central_label;
  std::vector<MarkedTree> refinement;  // strata of window (k, l) over the central tail
};

struct DStableReduction {
  int n = 0;
  int k = 0;  // after clamping to n-1
  int l = 0;
  std::vector<std::string> notes;
  MPoly with_section;
  MPoly d_family;
  bool transform_matches = false;
  std::map<std::string, std::int64_t> base_change_exponents;
  std::vector<DChart> charts;
  bool identity = false;  // every refinement is the central tail itself
};

// Throws IllegalTarget unless 1 <= l <= min(k+1, n).
DStableReduction d_stable_reduction(int n, int k, int l);

}  // namespace qadm

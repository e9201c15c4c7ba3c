#pragma once

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "qadm/rational.hpp"
#include "qadm/singularity.hpp"

namespace qadm {

// Weights (1, beta, alpha^d) on the section at infinity, the marked point
// and the branch points. The section always has weight 1.
struct WeightVector {
  Rational branch_weight;
  std::optional<Rational> chi_weight;
  int branch_degree = 0;

  bool pointed() const { return chi_weight.has_value(); }
  // Throws WeightOutOfRange unless 0 < alpha <= 1/2 and 0 < beta <= 1 - alpha.
  void validate() const;
  // Unclamped (a_bound, d_bound) of these weights.
  TypeBounds bounds() const;

  // An interior representative of the window pair (a_bound, d_bound).
  static WeightVector for_window(int a_bound, std::optional<int> d_bound, int branch_degree);
};

struct MarkedPoint {
  int mult = 0;
  bool tau = false;
  bool chi = false;
  bool operator==(const MarkedPoint&) const = default;
};

struct Component {
  std::vector<MarkedPoint> points;
};

struct MarkedTree {
  std::vector<Component> components;
  std::vector<std::pair<int, int>> edges;

  int branch_degree() const;
  bool pointed() const;
  int tau_component() const;
};

// Throws InvalidTree on structural problems (not a tree, tau missing or
// repeated, chi repeated, tau carrying branch multiplicity, empty points).
void validate_tree(const MarkedTree& t);

// Isomorphism invariant: the tree rooted at the tau component, with sorted
// point keys and sorted child certificates.
std::string canonical_form(const MarkedTree& t);
// Same tree with components in canonical preorder and points sorted.
MarkedTree canonicalize(const MarkedTree& t);

struct Violation {
  int component = 0;
  int point = -1;  // -1 for the component degree condition
  Rational value;  // offending point weight or component degree
  std::string str() const;
};

struct StabilityReport {
  bool stable = true;
  std::vector<Violation> violations;
};

Rational point_weight(const MarkedPoint& p, const WeightVector& w);
Rational component_degree(const MarkedTree& t, int component, const WeightVector& w);
StabilityReport is_stable(const MarkedTree& t, const WeightVector& w);

struct OddPoints {
  std::vector<int> odd_edges;  // indices into MarkedTree::edges
  bool tau_odd = false;
};

OddPoints odd_points(const MarkedTree& t);
std::vector<int> parity_certificate(const MarkedTree& t);
int arithmetic_genus(const MarkedTree& t);

struct StratumLabel {
  bool in_delta_irr = false;
  bool in_delta_red = false;
  bool in_delta_w = false;
  int codim = 0;
  std::vector<SingType> singularities;
  bool operator==(const StratumLabel&) const = default;
};

// Label read off the multiplicity data, without a stability check.
StratumLabel label_of(const MarkedTree& t);
// Throws Unstable unless is_stable(t, w).
StratumLabel stratum_label(const MarkedTree& t, const WeightVector& w);

// Contracts every component of non-positive degree under `to`, merging its
// markings onto the attaching point. Throws IllegalReduction when the
// window pair of `from` does not precede that of `to`.
MarkedTree contract(const MarkedTree& t, const WeightVector& from, const WeightVector& to);

struct EnumerateOptions {
  std::optional<int> max_codim;
  int size_limit = 10;
  unsigned threads = 1;
};

// All w-stable trees up to isomorphism, sorted by (codim, canonical form).
// n is the index of the moduli problem: branch degree n+1 unpointed, n pointed.
std::vector<MarkedTree> enumerate_strata(int n, const WeightVector& w, const EnumerateOptions& opts = {});

std::string to_dot(const MarkedTree& t);

}  // namespace qadm

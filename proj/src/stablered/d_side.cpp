#include <algorithm>

#include "qadm/error.hpp"
#include "qadm/singularity.hpp"
#include "qadm/stablered.hpp"

namespace qadm {

namespace {

// "b" -> "c_b", "a3" -> "c3"; likewise for the base-change coordinates.
std::string renamed(const std::string& param, const std::string& prefix) {
  return param == "b" ? prefix + "_b" : prefix + param.substr(1);
}

MarkedTree pointed_tail_tree(const MPoly& branch, int degree) {
  const auto profile = classify_branch_profile(branch, Rational(0));
  Component comp;
  comp.points.push_back({0, true, false});
  bool chi_placed = false;
  int clustered = 0;
  for (const auto& e : profile) {
    const bool marked = e.type.kind == SingKind::D;
    comp.points.push_back({static_cast<int>(e.multiplicity), false, marked});
    chi_placed = chi_placed || marked;
    clustered += static_cast<int>(e.multiplicity);
  }
  for (int i = clustered; i < degree; ++i) comp.points.push_back({1, false, false});
  if (!chi_placed) comp.points.push_back({0, false, true});
  MarkedTree t;
  t.components.push_back(std::move(comp));
  return canonicalize(t);
}

}  // namespace

DStableReduction d_stable_reduction(int n, int k, int l) {
  if (n < 3) fail(ErrorKind::UnsupportedIndex, "D-side reduction needs n >= 3");
  if (k < 1 || l < 1 || l > std::min(k + 1, n))
    fail(ErrorKind::IllegalTarget, "target (" + std::to_string(k) + ", " + std::to_string(l) + ") violates 1 <= l <= min(k+1, n)");
  DStableReduction r;
  r.n = n;
  r.k = std::min(k, n - 1);
  r.l = std::min(l, n - 1);
  if (r.k != k) r.notes.push_back("k clamped from " + std::to_string(k) + " to " + std::to_string(r.k));
  if (r.l != l) r.notes.push_back("l clamped from " + std::to_string(l) + " to " + std::to_string(r.l));

  // The D_n family as the A_(n-1) family carrying the section x = y = 0.
  const VersalFamily with_section = versal_with_section(n);
  r.with_section = with_section.equation;
  const VersalFamily d = a_to_d_transform(with_section);
  r.d_family = d.equation;
  r.transform_matches = d.equation == versal(SingType::D(n)).equation.rename({{"y", "u"}});

  // Base change p = t_p^w(p) turns every parameter into a weight-one coordinate.
  std::map<std::string, MPoly> to_base;
  for (const auto& p : with_section.params) {
    const std::int64_t w = with_section.weights.at(p);
    r.base_change_exponents[p] = w;
    to_base[p] = MPoly::var(renamed(p, "t")).pow(static_cast<std::uint64_t>(w));
  }
  const MPoly based = with_section.equation.substitute(to_base);
  const std::int64_t wx = with_section.weights.at("x"), wy = with_section.weights.at("y");

  const WeightVector top = WeightVector::for_window(n - 1, n - 1, n);
  const WeightVector target = WeightVector::for_window(r.k, r.l, n);
  const auto strata = enumerate_strata(n, target);

  const MPoly u = MPoly::var("u");
  for (const auto& q : with_section.params) {
    DChart ch;
    ch.param = q;
    std::map<std::string, MPoly> sub;
    std::map<std::string, MPoly> centre{{"u", MPoly(1)}};
    for (const auto& p : with_section.params) {
      const std::string t = renamed(p, "t"), c = renamed(p, "c");
      if (p == q) {
        sub[t] = u;
      } else {
        sub[t] = u * MPoly::var(c);
        centre[c] = MPoly(0);
        ch.tail_weights[c] = 0;
      }
    }
    ch.equation = based.substitute(sub);

    const MPoly b_pullback = to_base.at("b").substitute(sub);
    ch.sections = {{MPoly(0), MPoly(0)}, {MPoly(0), b_pullback}};
    ch.sections_on_curve = true;
    for (const auto& s : ch.sections)
      if (!ch.equation.substitute({{"x", s.x}, {"y", s.y}}).is_zero()) ch.sections_on_curve = false;

    ch.tail_weights["x"] = wx;
    ch.tail_weights["u"] = 1;
    ch.tail_weights["y"] = wy;
    ch.tail_degree = weighted_degree(ch.equation, ch.tail_weights);
    ch.tail_quasi_homogeneous = ch.tail_degree && *ch.tail_degree == 2 * wy;

    // y^2 - b y - rest = (y - b/2)^2 - (rest + b^2/4).
    const MPoly y = MPoly::var("y");
    const MPoly rest = y * y - b_pullback * y - ch.equation;
    const MPoly branch = rest + MPoly(Rational(1, 4)) * b_pullback * b_pullback;
    ch.central_branch = branch.substitute(centre);
    ch.central_tail = pointed_tail_tree(ch.central_branch, n);
    ch.central_label = stratum_label(ch.central_tail, top);

    const std::string key = canonical_form(ch.central_tail);
    for (const auto& t : strata)
      if (canonical_form(contract(t, target, top)) == key) ch.refinement.push_back(t);
    r.charts.push_back(std::move(ch));
  }
  r.identity = std::all_of(r.charts.begin(), r.charts.end(), [](const DChart& c) {
    return c.refinement.size() == 1 && canonical_form(c.refinement[0]) == canonical_form(c.central_tail);
  });
  return r;
}

}  // namespace qadm

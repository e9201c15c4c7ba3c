#include "qadm/error.hpp"
#include "qadm/trees.hpp"

namespace qadm {

namespace {

void check_compatible(const MarkedTree& t, const WeightVector& w) {
  validate_tree(t);
  w.validate();
  if (t.pointed() != w.pointed())
    fail(ErrorKind::PreconditionViolated, t.pointed() ? "tree carries chi but the weights have no chi weight"
                                                      : "weights carry a chi weight but the tree has no chi");
  if (t.branch_degree() != w.branch_degree)
    fail(ErrorKind::PreconditionViolated, "tree branch degree " + std::to_string(t.branch_degree()) +
                                              " differs from weight branch degree " + std::to_string(w.branch_degree));
}

}  // namespace

Rational point_weight(const MarkedPoint& p, const WeightVector& w) {
  Rational r = Rational(p.mult) * w.branch_weight;
  if (p.tau) r += Rational(1);
  if (p.chi) {
    if (!w.chi_weight) fail(ErrorKind::PreconditionViolated, "chi point without a chi weight");
    r += *w.chi_weight;
  }
  return r;
}

Rational component_degree(const MarkedTree& t, int component, const WeightVector& w) {
  if (component < 0 || component >= static_cast<int>(t.components.size()))
    fail(ErrorKind::PreconditionViolated, "component index out of range");
  int incident = 0;
  for (const auto& [a, b] : t.edges)
    if (a == component || b == component) ++incident;
  Rational d(incident - 2);
  for (const auto& p : t.components[static_cast<std::size_t>(component)].points) d += point_weight(p, w);
  return d;
}

StabilityReport is_stable(const MarkedTree& t, const WeightVector& w) {
  check_compatible(t, w);
  StabilityReport rep;
  for (std::size_t c = 0; c < t.components.size(); ++c) {
    const auto& pts = t.components[c].points;
    for (std::size_t i = 0; i < pts.size(); ++i) {
      Rational pw = point_weight(pts[i], w);
      if (pw > Rational(1)) rep.violations.push_back({static_cast<int>(c), static_cast<int>(i), pw});
    }
    Rational deg = component_degree(t, static_cast<int>(c), w);
    if (deg.sign() <= 0) rep.violations.push_back({static_cast<int>(c), -1, deg});
  }
  rep.stable = rep.violations.empty();
  return rep;
}

}  // namespace qadm

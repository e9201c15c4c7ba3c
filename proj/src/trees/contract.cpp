#include <stdexcept>

#include "qadm/error.hpp"
#include "qadm/trees.hpp"

namespace qadm {

namespace {

void check_legal(const WeightVector& from, const WeightVector& to) {
  if (from.pointed() != to.pointed()) fail(ErrorKind::IllegalReduction, "source and target weights differ in pointedness");
  if (from.branch_degree != to.branch_degree) fail(ErrorKind::IllegalReduction, "source and target branch degrees differ");
  const TypeBounds a = from.bounds(), b = to.bounds();
  if (a.a_bound_raw > b.a_bound_raw)
    fail(ErrorKind::IllegalReduction, "A-window " + std::to_string(a.a_bound_raw) + " does not precede " + std::to_string(b.a_bound_raw));
  if (a.d_bound_raw && *a.d_bound_raw > *b.d_bound_raw)
    fail(ErrorKind::IllegalReduction, "D-window " + std::to_string(*a.d_bound_raw) + " does not precede " + std::to_string(*b.d_bound_raw));
}

int degree_in_tree(const MarkedTree& t, int v) {
  int d = 0;
  for (const auto& [a, b] : t.edges)
    if (a == v || b == v) ++d;
  return d;
}

// Removes leaf v, replacing it by one point on its neighbour that carries
// the sum of its multiplicities and its markings.
MarkedTree collapse_leaf(const MarkedTree& t, int v) {
  int neighbour = -1;
  for (const auto& [a, b] : t.edges) {
    if (a == v) neighbour = b;
    if (b == v) neighbour = a;
  }
  MarkedPoint merged;
  for (const auto& p : t.components[static_cast<std::size_t>(v)].points) {
    merged.mult += p.mult;
    merged.chi = merged.chi || p.chi;
    merged.tau = merged.tau || p.tau;
  }
  MarkedTree out;
  std::vector<int> remap(t.components.size(), -1);
  for (std::size_t i = 0; i < t.components.size(); ++i) {
    if (static_cast<int>(i) == v) continue;
    remap[i] = static_cast<int>(out.components.size());
    out.components.push_back(t.components[i]);
  }
  out.components[static_cast<std::size_t>(remap[static_cast<std::size_t>(neighbour)])].points.push_back(merged);
  for (const auto& [a, b] : t.edges)
    if (a != v && b != v) out.edges.emplace_back(remap[static_cast<std::size_t>(a)], remap[static_cast<std::size_t>(b)]);
  return out;
}

}  // namespace

MarkedTree contract(const MarkedTree& t, const WeightVector& from, const WeightVector& to) {
  check_legal(from, to);
  auto rep = is_stable(t, from);
  if (!rep.stable) fail(ErrorKind::Unstable, "input tree is not stable under the source weights");
  MarkedTree cur = t;
  for (bool changed = true; changed;) {
    changed = false;
    for (int v = 0; v < static_cast<int>(cur.components.size()); ++v) {
      if (component_degree(cur, v, to).sign() > 0) continue;
      if (v == cur.tau_component())
        fail(ErrorKind::IllegalReduction, "target weights leave the tau component unstable (window beyond the branch degree)");
      if (degree_in_tree(cur, v) != 1) throw std::logic_error("a non-leaf component destabilized during contraction");
      cur = collapse_leaf(cur, v);
      changed = true;
      break;
    }
  }
  rep = is_stable(cur, to);
  if (!rep.stable) {
    std::string msg = "no stable contraction under the target weights:";
    for (const auto& v : rep.violations) msg += " " + v.str() + ";";
    fail(ErrorKind::IllegalReduction, msg);
  }
  return canonicalize(cur);
}

}  // namespace qadm

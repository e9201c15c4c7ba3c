#include <algorithm>
#include <functional>
#include <map>
#include <sstream>
#include <tuple>

#include "qadm/error.hpp"
#include "qadm/trees.hpp"

namespace qadm {

namespace {

std::vector<std::vector<int>> adjacency(const MarkedTree& t) {
  std::vector<std::vector<int>> adj(t.components.size());
  for (const auto& [a, b] : t.edges) {
    adj[static_cast<std::size_t>(a)].push_back(b);
    adj[static_cast<std::size_t>(b)].push_back(a);
  }
  return adj;
}

int local_degree(const Component& c) {
  int d = 0;
  for (const auto& p : c.points) d += p.mult;
  return d;
}

auto point_order(const MarkedPoint& p) { return std::make_tuple(!p.tau, p.mult, p.chi); }

std::string point_key(const MarkedPoint& p) {
  if (p.tau) return "t";
  return std::to_string(p.mult) + (p.chi ? "c" : "");
}

// Far-side branch degree of each component when the tree hangs from the tau component.
struct Rooted {
  std::vector<int> parent;
  std::vector<int> order;  // preorder
  std::vector<int> subtree_degree;
};

Rooted root_at_tau(const MarkedTree& t) {
  const auto adj = adjacency(t);
  Rooted r;
  const std::size_t n = t.components.size();
  r.parent.assign(n, -1);
  r.subtree_degree.assign(n, 0);
  const int root = t.tau_component();
  std::vector<int> stack{root};
  std::vector<bool> seen(n, false);
  seen[static_cast<std::size_t>(root)] = true;
  while (!stack.empty()) {
    int v = stack.back();
    stack.pop_back();
    r.order.push_back(v);
    for (int w : adj[static_cast<std::size_t>(v)]) {
      if (seen[static_cast<std::size_t>(w)]) continue;
      seen[static_cast<std::size_t>(w)] = true;
      r.parent[static_cast<std::size_t>(w)] = v;
      stack.push_back(w);
    }
  }
  for (auto it = r.order.rbegin(); it != r.order.rend(); ++it) {
    auto v = static_cast<std::size_t>(*it);
    r.subtree_degree[v] += local_degree(t.components[v]);
    if (r.parent[v] >= 0) r.subtree_degree[static_cast<std::size_t>(r.parent[v])] += r.subtree_degree[v];
  }
  return r;
}

// The child endpoint of an edge in the rooted tree.
int far_end(const Rooted& r, const std::pair<int, int>& e) {
  return r.parent[static_cast<std::size_t>(e.second)] == e.first ? e.second : e.first;
}

}  // namespace

void WeightVector::validate() const {
  if (branch_weight.sign() <= 0 || branch_weight > Rational(1, 2))
    fail(ErrorKind::WeightOutOfRange, "branch weight " + branch_weight.str() + " outside (0, 1/2]");
  if (chi_weight && (chi_weight->sign() <= 0 || *chi_weight > Rational(1) - branch_weight))
    fail(ErrorKind::WeightOutOfRange, "chi weight " + chi_weight->str() + " outside (0, 1 - branch weight]");
  if (branch_degree < 1) fail(ErrorKind::PreconditionViolated, "branch degree must be positive");
}

TypeBounds WeightVector::bounds() const {
  validate();
  const int n = pointed() ? branch_degree : branch_degree - 1;
  return thresholds_to_types(branch_weight, chi_weight, std::max(2, n));
}

WeightVector WeightVector::for_window(int a_bound, std::optional<int> d_bound, int branch_degree) {
  if (a_bound < 1) fail(ErrorKind::PreconditionViolated, "A-bound must be at least 1");
  if (d_bound && (*d_bound < 1 || *d_bound > a_bound + 1))
    fail(ErrorKind::PreconditionViolated, "D-bound must lie in [1, A-bound + 1]");
  WeightVector w;
  w.branch_degree = branch_degree;
  // Midpoint of (1/(a+2), 1/(a+1)); strictly below 1/(a+1) so that 1 - d*alpha > 0.
  w.branch_weight = (Rational(1, a_bound + 2) + Rational(1, a_bound + 1)) / Rational(2);
  if (d_bound) w.chi_weight = Rational(1) - Rational(*d_bound) * w.branch_weight;
  return w;
}

int MarkedTree::branch_degree() const {
  int d = 0;
  for (const auto& c : components) d += local_degree(c);
  return d;
}

bool MarkedTree::pointed() const {
  for (const auto& c : components)
    for (const auto& p : c.points)
      if (p.chi) return true;
  return false;
}

int MarkedTree::tau_component() const {
  for (std::size_t i = 0; i < components.size(); ++i)
    for (const auto& p : components[i].points)
      if (p.tau) return static_cast<int>(i);
  fail(ErrorKind::InvalidTree, "no point carries tau");
}

void validate_tree(const MarkedTree& t) {
  const int n = static_cast<int>(t.components.size());
  if (n == 0) fail(ErrorKind::InvalidTree, "tree has no components");
  if (static_cast<int>(t.edges.size()) != n - 1) fail(ErrorKind::InvalidTree, "edge count must be components - 1");
  for (const auto& [a, b] : t.edges) {
    if (a < 0 || b < 0 || a >= n || b >= n) fail(ErrorKind::InvalidTree, "edge endpoint out of range");
    if (a == b) fail(ErrorKind::InvalidTree, "self-loop");
  }
  int taus = 0, chis = 0;
  for (const auto& c : t.components) {
    for (const auto& p : c.points) {
      if (p.mult < 0) fail(ErrorKind::InvalidTree, "negative multiplicity");
      if (p.tau) {
        ++taus;
        if (p.mult != 0) fail(ErrorKind::InvalidTree, "the tau point must have multiplicity 0");
      }
      if (p.chi) ++chis;
      if (p.mult == 0 && !p.tau && !p.chi) fail(ErrorKind::InvalidTree, "point carries no marking");
    }
  }
  if (taus != 1) fail(ErrorKind::InvalidTree, "exactly one point must carry tau");
  if (chis > 1) fail(ErrorKind::InvalidTree, "at most one point may carry chi");
  // Connectedness.
  const auto adj = adjacency(t);
  std::vector<bool> seen(static_cast<std::size_t>(n), false);
  std::vector<int> stack{0};
  seen[0] = true;
  int count = 0;
  while (!stack.empty()) {
    int v = stack.back();
    stack.pop_back();
    ++count;
    for (int w : adj[static_cast<std::size_t>(v)])
      if (!seen[static_cast<std::size_t>(w)]) {
        seen[static_cast<std::size_t>(w)] = true;
        stack.push_back(w);
      }
  }
  if (count != n) fail(ErrorKind::InvalidTree, "components are not connected");
}

std::string canonical_form(const MarkedTree& t) {
  validate_tree(t);
  const auto adj = adjacency(t);
  std::function<std::string(int, int)> cert = [&](int v, int parent) {
    auto pts = t.components[static_cast<std::size_t>(v)].points;
    std::sort(pts.begin(), pts.end(), [](const MarkedPoint& a, const MarkedPoint& b) { return point_order(a) < point_order(b); });
    std::vector<std::string> kids;
    for (int w : adj[static_cast<std::size_t>(v)])
      if (w != parent) kids.push_back(cert(w, v));
    std::sort(kids.begin(), kids.end());
    std::string s = "(";
    for (std::size_t i = 0; i < pts.size(); ++i) s += (i ? "," : "") + point_key(pts[i]);
    s += "|";
    for (const auto& k : kids) s += k;
    return s + ")";
  };
  return cert(t.tau_component(), -1);
}

MarkedTree canonicalize(const MarkedTree& t) {
  validate_tree(t);
  const auto adj = adjacency(t);
  std::function<std::string(int, int)> cert;
  std::map<std::pair<int, int>, std::string> memo;
  cert = [&](int v, int parent) -> std::string {
    auto key = std::make_pair(v, parent);
    if (auto it = memo.find(key); it != memo.end()) return it->second;
    auto pts = t.components[static_cast<std::size_t>(v)].points;
    std::sort(pts.begin(), pts.end(), [](const MarkedPoint& a, const MarkedPoint& b) { return point_order(a) < point_order(b); });
    std::vector<std::string> kids;
    for (int w : adj[static_cast<std::size_t>(v)])
      if (w != parent) kids.push_back(cert(w, v));
    std::sort(kids.begin(), kids.end());
    std::string s = "(";
    for (std::size_t i = 0; i < pts.size(); ++i) s += (i ? "," : "") + point_key(pts[i]);
    s += "|";
    for (const auto& k : kids) s += k;
    s += ")";
    memo.emplace(key, s);
    return s;
  };
  MarkedTree out;
  std::function<void(int, int, int)> emit = [&](int v, int parent, int out_parent) {
    Component c = t.components[static_cast<std::size_t>(v)];
    std::sort(c.points.begin(), c.points.end(), [](const MarkedPoint& a, const MarkedPoint& b) { return point_order(a) < point_order(b); });
    const int me = static_cast<int>(out.components.size());
    out.components.push_back(std::move(c));
    if (out_parent >= 0) out.edges.emplace_back(out_parent, me);
    std::vector<std::pair<std::string, int>> kids;
    for (int w : adj[static_cast<std::size_t>(v)])
      if (w != parent) kids.emplace_back(cert(w, v), w);
    std::sort(kids.begin(), kids.end());
    for (const auto& [k, w] : kids) emit(w, v, me);
  };
  emit(t.tau_component(), -1, -1);
  return out;
}

std::string Violation::str() const {
  std::ostringstream os;
  if (point >= 0)
    os << "component " << component << " point " << point << ": weight " << value << " exceeds 1";
  else
    os << "component " << component << ": degree " << value << " is not positive";
  return os.str();
}

OddPoints odd_points(const MarkedTree& t) {
  validate_tree(t);
  const Rooted r = root_at_tau(t);
  OddPoints out;
  for (std::size_t i = 0; i < t.edges.size(); ++i) {
    int child = far_end(r, t.edges[i]);
    if (r.subtree_degree[static_cast<std::size_t>(child)] % 2 != 0) out.odd_edges.push_back(static_cast<int>(i));
  }
  out.tau_odd = t.branch_degree() % 2 != 0;
  return out;
}

namespace {

// Ramification points of the normalized cover over each component: odd
// branch clusters, odd nodes and an odd section at infinity.
std::vector<int> ramification_counts(const MarkedTree& t, const OddPoints& odd, bool clusters) {
  std::vector<int> r(t.components.size(), 0);
  for (std::size_t i = 0; i < t.components.size(); ++i) {
    for (const auto& p : t.components[i].points) {
      if (clusters)
        r[i] += p.mult % 2;
      else
        r[i] += p.mult;
      if (p.tau && odd.tau_odd) ++r[i];
    }
  }
  for (int e : odd.odd_edges) {
    ++r[static_cast<std::size_t>(t.edges[static_cast<std::size_t>(e)].first)];
    ++r[static_cast<std::size_t>(t.edges[static_cast<std::size_t>(e)].second)];
  }
  return r;
}

}  // namespace

std::vector<int> parity_certificate(const MarkedTree& t) {
  const OddPoints odd = odd_points(t);
  auto out = ramification_counts(t, odd, false);
  for (std::size_t i = 0; i < out.size(); ++i)
    if (out[i] % 2 != 0)
      fail(ErrorKind::ParityViolation, "component " + std::to_string(i) + " has odd corrected degree " + std::to_string(out[i]));
  return out;
}

int arithmetic_genus(const MarkedTree& t) {
  const OddPoints odd = odd_points(t);
  const auto r = ramification_counts(t, odd, true);
  int genus_sum = 0, cover_components = 0, delta = 0;
  for (std::size_t i = 0; i < r.size(); ++i) {
    if (r[i] % 2 != 0)
      fail(ErrorKind::ParityViolation, "component " + std::to_string(i) + " has an odd number of ramification points");
    if (r[i] > 0) {
      genus_sum += r[i] / 2 - 1;
      cover_components += 1;
    } else {
      cover_components += 2;
    }
    // The cover carries an A_(m-1) over every cluster of multiplicity m,
    // including the one under the marked point.
    for (const auto& p : t.components[i].points)
      if (p.mult >= 2) delta += delta_invariant(SingType::A(p.mult - 1));
  }
  const int odd_edges = static_cast<int>(odd.odd_edges.size());
  const int nodes = 2 * (static_cast<int>(t.edges.size()) - odd_edges) + odd_edges;
  return genus_sum + delta + nodes - cover_components + 1;
}

StratumLabel label_of(const MarkedTree& t) {
  validate_tree(t);
  StratumLabel out;
  out.in_delta_red = !t.edges.empty();
  out.codim = static_cast<int>(t.edges.size());
  for (const auto& c : t.components) {
    for (const auto& p : c.points) {
      if (p.mult >= 1) out.codim += p.mult - 1;
      if (p.chi) {
        if (p.mult >= 1) {
          out.in_delta_w = true;
          out.codim += 1;
          out.singularities.push_back(SingType::D(p.mult));
        }
        if (p.mult >= 2) out.in_delta_irr = true;
      } else if (p.mult >= 2) {
        out.in_delta_irr = true;
        out.singularities.push_back(SingType::A(p.mult - 1));
      }
    }
  }
  std::sort(out.singularities.begin(), out.singularities.end());
  return out;
}

StratumLabel stratum_label(const MarkedTree& t, const WeightVector& w) {
  auto rep = is_stable(t, w);
  if (!rep.stable) {
    std::string msg = "tree is not stable:";
    for (const auto& v : rep.violations) msg += " " + v.str() + ";";
    fail(ErrorKind::Unstable, msg);
  }
  return label_of(t);
}

std::string to_dot(const MarkedTree& t) {
  validate_tree(t);
  std::ostringstream os;
  os << "graph marked_tree {\n  node [shape=box];\n";
  for (std::size_t i = 0; i < t.components.size(); ++i) {
    os << "  c" << i << " [label=\"";
    bool first = true;
    for (const auto& p : t.components[i].points) {
      if (!first) os << ", ";
      first = false;
      if (p.tau) os << "tau";
      if (p.chi) os << (p.tau ? "+" : "") << "chi";
      if (p.mult > 0) os << ((p.tau || p.chi) ? ":" : "") << p.mult;
    }
    os << "\"];\n";
  }
  const OddPoints odd = odd_points(t);
  for (std::size_t i = 0; i < t.edges.size(); ++i) {
    bool is_odd = std::find(odd.odd_edges.begin(), odd.odd_edges.end(), static_cast<int>(i)) != odd.odd_edges.end();
    os << "  c" << t.edges[i].first << " -- c" << t.edges[i].second;
    if (is_odd) os << " [style=dashed, label=\"odd\"]";
    os << ";\n";
  }
  os << "}\n";
  return os.str();
}

}  // namespace qadm

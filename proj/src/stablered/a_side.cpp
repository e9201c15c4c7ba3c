#include <algorithm>
#include <numeric>

#include "qadm/error.hpp"
#include "qadm/singularity.hpp"
#include "qadm/stablered.hpp"

namespace qadm {

namespace {

std::string b_name(int i) { return "b" + std::to_string(i); }
std::string c_name(int i) { return "c" + std::to_string(i); }

void check_k(int k) {
  if (k < 1) fail(ErrorKind::UnsupportedIndex, "stable reduction needs k >= 1");
}

// Orbits of the solutions of y^2 = x^e (x != 0) in the weighted projective
// line with weights (wx, wy). With x normalized to 1, y = +-1 and the
// stabilizer mu_wx acts on y through mu_(wx / gcd(wx, wy)).
int weighted_point_count(std::int64_t wx, std::int64_t wy) {
  const std::int64_t order = wx / std::gcd(wx, wy);
  return order % 2 == 0 ? 1 : 2;
}

// Cancels every product c * inv, where inv stands for 1/c.
MPoly cancel_inverse(const MPoly& p, const std::string& c, const std::string& inv) {
  const int ic = p.var_index(c), ii = p.var_index(inv);
  if (ic < 0 || ii < 0) return p;
  std::vector<std::pair<Exponents, Rational>> terms;
  for (const auto& [ex, coeff] : p.terms()) {
    Exponents e = ex;
    const Exponent m = std::min(e[static_cast<std::size_t>(ic)], e[static_cast<std::size_t>(ii)]);
    e[static_cast<std::size_t>(ic)] -= m;
    e[static_cast<std::size_t>(ii)] -= m;
    terms.emplace_back(std::move(e), coeff);
  }
  return MPoly::from_terms(p.variables(), terms);
}

}  // namespace

BaseChange base_change(int k) {
  check_k(k);
  const VersalFamily fam = versal(SingType::A(k));
  BaseChange bc;
  bc.k = k;
  bc.weights["x"] = fam.weights.at("x");
  bc.weights["y"] = fam.weights.at("y");
  for (int i = 0; i < k; ++i) {
    const std::string a = "a" + std::to_string(i);
    const std::int64_t e = k + 1 - i;
    const std::int64_t wa = fam.weights.at(a);
    if (wa % e != 0) fail(ErrorKind::NotQuasiHomogeneous, "weight of " + a + " is not divisible by " + std::to_string(e));
    bc.substitution[a] = MPoly::var(b_name(i)).pow(static_cast<std::uint64_t>(e));
    bc.weights[b_name(i)] = wa / e;
  }
  bc.equation = fam.equation.substitute(bc.substitution);
  if (!weighted_degree(bc.equation, bc.weights))
    fail(ErrorKind::NotQuasiHomogeneous, "base-changed family is not quasi-homogeneous");
  return bc;
}

ChartFamily chart(int k, int j) {
  check_k(k);
  if (j < 0 || j >= k) fail(ErrorKind::ChartOutOfRange, "chart index " + std::to_string(j) + " outside [0, " + std::to_string(k - 1) + "]");
  const BaseChange bc = base_change(k);
  const MPoly u = MPoly::var("u");
  std::map<std::string, MPoly> sub;
  ChartFamily c;
  c.k = k;
  c.j = j;
  for (int i = 0; i < k; ++i) {
    if (i == j) {
      sub[b_name(i)] = u;
    } else {
      sub[b_name(i)] = u * MPoly::var(c_name(i));
      c.params.push_back(c_name(i));
      c.weights[c_name(i)] = 0;
    }
  }
  c.equation = bc.equation.substitute(sub);
  c.weights["x"] = 2;
  c.weights["u"] = 2;
  c.weights["y"] = k + 1;
  return c;
}

bool charts_agree(int k, int from, int to) {
  const ChartFamily a = chart(k, from), b = chart(k, to);
  if (from == to) return true;
  const std::string c_to = c_name(to), inv = "inv_" + c_name(to);
  std::map<std::string, MPoly> sub;
  sub["u"] = MPoly::var("u") * MPoly::var(c_to);
  for (const auto& p : b.params) sub[p] = p == c_name(from) ? MPoly::var(inv) : MPoly::var(p) * MPoly::var(inv);
  const MPoly moved = cancel_inverse(b.equation.substitute(sub), c_to, inv);
  return moved == a.equation;
}

TailFamily tail_with_branch(int k, const MPoly& branch) {
  check_k(k);
  TailFamily t;
  t.k = k;
  const MPoly y = MPoly::var("y");
  t.equation = y * y - branch;
  t.weights = {{"x", 2}, {"u", 2}, {"y", k + 1}};
  for (const auto& v : t.equation.variables()) {
    if (t.weights.count(v)) continue;
    t.weights[v] = 0;
    t.params.push_back(v);
  }
  auto d = weighted_degree(t.equation, t.weights);
  if (!d || *d != 2 * (k + 1))
    fail(ErrorKind::NotQuasiHomogeneous, "tail equation " + t.equation.str() + " is not of weighted degree " + std::to_string(2 * (k + 1)));
  t.degree = *d;
  return t;
}

TailFamily tail_family(const ChartFamily& c) {
  const MPoly y = MPoly::var("y");
  TailFamily t = tail_with_branch(c.k, y * y - c.equation);
  t.params = c.params;
  return t;
}

int attaching_points(int k) {
  check_k(k);
  return weighted_point_count(2, k + 1);
}

MPoly tail_branch_polynomial(const TailFamily& t, const std::map<std::string, Rational>& spec) {
  std::map<std::string, MPoly> sub{{"u", MPoly(1)}};
  for (const auto& [name, v] : spec) {
    if (std::find(t.params.begin(), t.params.end(), name) == t.params.end())
      fail(ErrorKind::PreconditionViolated, "unknown tail parameter " + name);
    sub[name] = MPoly(v);
  }
  for (const auto& p : t.params)
    if (!spec.count(p)) fail(ErrorKind::PreconditionViolated, "tail parameter " + p + " is not specialized");
  const MPoly y = MPoly::var("y");
  return (y * y - t.equation).substitute(sub);
}

MarkedTree tail_tree(const TailFamily& t, const std::map<std::string, Rational>& spec) {
  const MPoly branch = tail_branch_polynomial(t, spec);
  const auto profile = classify_branch_profile(branch, std::nullopt);
  Component comp;
  comp.points.push_back({0, true, false});
  int clustered = 0;
  for (const auto& e : profile) {
    comp.points.push_back({static_cast<int>(e.multiplicity), false, false});
    clustered += static_cast<int>(e.multiplicity);
  }
  const int degree = static_cast<int>(branch.degree_in("x"));
  for (int i = clustered; i < degree; ++i) comp.points.push_back({1, false, false});
  MarkedTree tree;
  tree.components.push_back(std::move(comp));
  return canonicalize(tree);
}

StratumLabel verify_tail_membership(const TailFamily& t, const std::map<std::string, Rational>& spec) {
  const MarkedTree tree = tail_tree(t, spec);
  for (const auto& p : tree.components[0].points)
    if (p.mult >= t.k + 1)
      fail(ErrorKind::DegenerateSpecialization, "branch points collide with multiplicity " + std::to_string(p.mult));
  if (t.k == 1) return label_of(tree);
  return stratum_label(tree, WeightVector::for_window(t.k - 1, std::nullopt, t.k + 1));
}

LeadingFormCertificate leading_form_certificate(const ChartFamily& c) {
  const MPoly y = MPoly::var("y");
  const MPoly branch = y * y - c.equation;
  LeadingFormCertificate cert;
  cert.subleading_vanishes = branch.coefficient("x", static_cast<Exponent>(c.k)).is_zero();
  cert.chart_term_is_unit = branch.coefficient("x", static_cast<Exponent>(c.j)).substitute({{"u", MPoly(1)}}) == MPoly(1);
  return cert;
}

CentralFiber central_fiber(const ChartFamily& c) {
  CentralFiber f;
  f.strict_transform = c.equation.substitute({{"u", MPoly(0)}});
  f.matches_normal_form = f.strict_transform == singularity_normal_form(SingType::A(c.k));
  f.tail = tail_family(c);
  f.attaching = weighted_point_count(f.tail.weights.at("x"), f.tail.weights.at("y"));
  return f;
}

AStableReduction a_stable_reduction(int k, std::optional<int> only_chart,
                                    const std::optional<std::map<std::string, Rational>>& spec) {
  AStableReduction r;
  r.k = k;
  r.base = base_change(k);
  for (int j = 0; j < k; ++j) {
    if (only_chart && *only_chart != j) continue;
    AChartReport rep;
    rep.chart = chart(k, j);
    rep.fiber = central_fiber(rep.chart);
    rep.certificate = leading_form_certificate(rep.chart);
    if (spec) {
      std::map<std::string, Rational> own;
      for (const auto& p : rep.chart.params)
        if (auto it = spec->find(p); it != spec->end()) own.emplace(p, it->second);
      rep.label = verify_tail_membership(rep.fiber.tail, own);
    }
    r.charts.push_back(std::move(rep));
  }
  if (only_chart && r.charts.empty())
    fail(ErrorKind::ChartOutOfRange, "chart index " + std::to_string(*only_chart) + " outside [0, " + std::to_string(k - 1) + "]");
  if (spec)
    for (const auto& [name, v] : *spec)
      if (std::none_of(r.charts.begin(), r.charts.end(), [&](const AChartReport& c) {
            return std::find(c.chart.params.begin(), c.chart.params.end(), name) != c.chart.params.end();
          }))
        fail(ErrorKind::PreconditionViolated, "unknown chart parameter " + name);
  r.transitions_agree = true;
  for (int a = 0; a < k; ++a)
    for (int b = 0; b < k; ++b)
      if (a != b && !charts_agree(k, a, b)) r.transitions_agree = false;
  return r;
}

}  // namespace qadm

#include "qadm/error.hpp"
#include "qadm/singularity.hpp"

namespace qadm {

namespace {

std::string a_name(int i) { return "a" + std::to_string(i); }

MPoly xpow(int e) { return MPoly::var("x").pow(static_cast<std::uint64_t>(e)); }

}  // namespace

VersalFamily versal(SingType t) {
  VersalFamily fam;
  const int n = t.index;
  const MPoly x = MPoly::var("x"), y = MPoly::var("y");
  if (t.kind == SingKind::A) {
    if (n < 1) fail(ErrorKind::UnsupportedIndex, "A index must be at least 1");
    MPoly branch = xpow(n + 1);
    for (int i = n - 1; i >= 0; --i) {
      branch += MPoly::var(a_name(i)) * xpow(i);
      fam.params.push_back(a_name(i));
    }
    fam.equation = y * y - branch;
    const bool even = n % 2 == 0;
    fam.weights["x"] = even ? 2 : 1;
    fam.weights["y"] = even ? n + 1 : (n + 1) / 2;
    for (int i = 0; i < n; ++i) fam.weights[a_name(i)] = even ? 2 * (n + 1 - i) : n + 1 - i;
    return fam;
  }
  if (n < 3) fail(ErrorKind::UnsupportedIndex, "versal family of D" + std::to_string(n) + " needs index >= 3");
  MPoly b = MPoly::var("b");
  MPoly rest = xpow(n - 1);
  fam.params.push_back("b");
  for (int i = n - 2; i >= 0; --i) {
    rest += MPoly::var(a_name(i)) * xpow(i);
    fam.params.push_back(a_name(i));
  }
  fam.equation = x * y * y + b * y - rest;
  const bool even = n % 2 == 0;
  fam.weights["x"] = even ? 1 : 2;
  fam.weights["y"] = even ? (n - 2) / 2 : n - 2;
  fam.weights["b"] = even ? n / 2 : n;
  for (int i = 0; i <= n - 2; ++i) fam.weights[a_name(i)] = even ? n - 1 - i : 2 * (n - 1 - i);
  return fam;
}

VersalFamily versal_with_section(int n) {
  if (n < 2) fail(ErrorKind::UnsupportedIndex, "with-section family needs n >= 2");
  VersalFamily fam;
  const MPoly y = MPoly::var("y"), b = MPoly::var("b");
  MPoly rest = xpow(n);
  fam.params.push_back("b");
  for (int i = n - 2; i >= 0; --i) {
    rest += MPoly::var(a_name(i)) * xpow(i + 1);
    fam.params.push_back(a_name(i));
  }
  fam.equation = y * y - b * y - rest;
  // y = x u + b forces weight(y) = weight(b); the rest is inherited from D_n.
  const bool even = n % 2 == 0;
  fam.weights["x"] = even ? 1 : 2;
  fam.weights["b"] = even ? n / 2 : n;
  fam.weights["y"] = fam.weights["b"];
  for (int i = 0; i <= n - 2; ++i) fam.weights[a_name(i)] = even ? n - 1 - i : 2 * (n - 1 - i);
  return fam;
}

VersalFamily a_to_d_transform(const VersalFamily& fam) {
  const std::string& xs = fam.curve_vars[0];
  const std::string& ys = fam.curve_vars[1];
  const MPoly x = MPoly::var(xs);
  MPoly substituted = fam.equation.substitute({{ys, x * MPoly::var("u") + MPoly::var("b")}});
  VersalFamily out;
  out.equation = exact_div(substituted, x);
  out.curve_vars = {xs, "u"};
  out.params = fam.params;
  out.weights = fam.weights;
  auto wx = fam.weights.find(xs), wy = fam.weights.find(ys);
  if (wx != fam.weights.end() && wy != fam.weights.end()) {
    out.weights.erase(ys);
    out.weights["u"] = wy->second - wx->second;
  }
  return out;
}

MPoly singularity_normal_form(SingType t) {
  const MPoly x = MPoly::var("x"), y = MPoly::var("y");
  if (t.kind == SingKind::A) {
    if (t.index < 1) fail(ErrorKind::UnsupportedIndex, "A index must be at least 1");
    return y * y - xpow(t.index + 1);
  }
  if (t.index < 2) fail(ErrorKind::UnsupportedIndex, "D1 has no plane normal form");
  // D2: the marked node, presented through its A1 germ.
  if (t.index == 2) return y * y - x * x;
  return x * y * y - xpow(t.index - 1);
}

}  // namespace qadm

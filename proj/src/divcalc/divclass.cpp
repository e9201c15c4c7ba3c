#include <algorithm>

#include "qadm/divcalc.hpp"
#include "qadm/error.hpp"

namespace qadm {

namespace {

void accumulate(std::map<std::string, MPoly>& m, const std::string& name, const MPoly& c) {
  auto it = m.find(name);
  if (it == m.end()) {
    if (!c.is_zero()) m.emplace(name, c);
    return;
  }
  it->second += c;
  if (it->second.is_zero()) m.erase(it);
}

std::string join_terms(const std::map<std::string, MPoly>& m, const std::vector<std::string>& order) {
  std::string out;
  for (const auto& name : order) {
    auto it = m.find(name);
    if (it == m.end()) continue;
    const MPoly& c = it->second;
    std::string term;
    if (c == MPoly(1))
      term = name;
    else if (c == MPoly(-1))
      term = "-" + name;
    else if (c.is_constant())
      term = c.str() + "*" + name;
    else
      term = "(" + c.str() + ")*" + name;
    if (!out.empty()) out += term[0] == '-' ? " - " + term.substr(1) : " + " + term;
    else out = term;
  }
  return out.empty() ? "0" : out;
}

MPoly half() { return MPoly(Rational(1, 2)); }

}  // namespace

const std::vector<std::string>& basis_symbols() {
  static const std::vector<std::string> v{basis::psi_tau,  basis::psi_sigma, basis::psi_chi,        basis::delta_s,
                                          basis::delta_even, basis::delta_odd, basis::delta_sigma_chi};
  return v;
}

const std::vector<std::string>& hdivisor_symbols() {
  static const std::vector<std::string> v{hbasis::canonical, hbasis::delta_irr, hbasis::delta_red, hbasis::delta_w};
  return v;
}

void check_basis_symbol(const std::string& name) {
  const auto& v = basis_symbols();
  if (std::find(v.begin(), v.end(), name) == v.end()) fail(ErrorKind::PreconditionViolated, "unknown basis symbol " + name);
}

void check_hdivisor_symbol(const std::string& name) {
  const auto& v = hdivisor_symbols();
  if (std::find(v.begin(), v.end(), name) == v.end()) fail(ErrorKind::PreconditionViolated, "unknown divisor symbol " + name);
}

MPoly alpha() { return MPoly::var("alpha"); }
MPoly beta() { return MPoly::var("beta"); }

DivClass DivClass::symbol(const std::string& name, const MPoly& coeff) {
  check_basis_symbol(name);
  DivClass d;
  accumulate(d.coeffs_, name, coeff);
  return d;
}

MPoly DivClass::coefficient(const std::string& name) const {
  auto it = coeffs_.find(name);
  return it == coeffs_.end() ? MPoly() : it->second;
}

bool DivClass::pointed() const {
  return coeffs_.count(basis::psi_chi) > 0 || coeffs_.count(basis::delta_sigma_chi) > 0;
}

std::map<std::string, Rational> DivClass::evaluate(const Rational& a, const std::optional<Rational>& b) const {
  std::map<std::string, Rational> values{{"alpha", a}};
  if (b) values.emplace("beta", *b);
  std::map<std::string, Rational> out;
  for (const auto& [name, c] : coeffs_) {
    Rational v = c.evaluate(values);
    if (!v.is_zero()) out.emplace(name, v);
  }
  return out;
}

std::string DivClass::str() const { return join_terms(coeffs_, basis_symbols()); }

DivClass& DivClass::operator+=(const DivClass& o) {
  for (const auto& [name, c] : o.coeffs_) accumulate(coeffs_, name, c);
  return *this;
}

DivClass& DivClass::operator-=(const DivClass& o) {
  for (const auto& [name, c] : o.coeffs_) accumulate(coeffs_, name, -c);
  return *this;
}

DivClass& DivClass::operator*=(const MPoly& c) {
  std::map<std::string, MPoly> out;
  for (const auto& [name, v] : coeffs_) accumulate(out, name, v * c);
  coeffs_ = std::move(out);
  return *this;
}

HDivisor& HDivisor::add(const std::string& name, const MPoly& coeff) {
  check_hdivisor_symbol(name);
  if (name == hbasis::delta_w && !pointed_) fail(ErrorKind::PreconditionViolated, "delta_W needs a pointed divisor");
  accumulate(coeffs_, name, coeff);
  return *this;
}

std::string HDivisor::str() const { return join_terms(coeffs_, hdivisor_symbols()); }

DivClass psi_total(bool pointed) {
  DivClass d = DivClass::symbol(basis::psi_tau) + DivClass::symbol(basis::psi_sigma);
  if (pointed) d += DivClass::symbol(basis::psi_chi);
  return d;
}

DivClass canonical_class(bool pointed) {
  DivClass d = psi_total(pointed) - DivClass::symbol(basis::delta_s) - DivClass::symbol(basis::delta_even, MPoly(2)) -
               DivClass::symbol(basis::delta_odd, MPoly(Rational(3, 2)));
  if (pointed) d += DivClass::symbol(basis::delta_sigma_chi, half());
  return d;
}

DivClass k_M0A(bool pointed) {
  return psi_total(pointed) - DivClass::symbol(basis::delta_even, MPoly(2)) - DivClass::symbol(basis::delta_odd, MPoly(2));
}

DivClass transport(const HDivisor& h) {
  DivClass out;
  for (const auto& [name, c] : h.coefficients()) {
    DivClass image;
    if (name == hbasis::canonical) {
      image = canonical_class(h.pointed());
    } else if (name == hbasis::delta_irr) {
      image = DivClass::symbol(basis::delta_s, MPoly(2));
    } else if (name == hbasis::delta_red) {
      image = DivClass::symbol(basis::delta_even) + DivClass::symbol(basis::delta_odd, half());
    } else {
      image = DivClass::symbol(basis::delta_sigma_chi, half());
    }
    out += c * image;
  }
  return out;
}

DivClass ample_template(bool pointed) {
  DivClass d = psi_total(pointed) + DivClass::symbol(basis::delta_s, MPoly(2) * alpha()) - DivClass::symbol(basis::delta_even) -
               DivClass::symbol(basis::delta_odd);
  if (pointed) d += DivClass::symbol(basis::delta_sigma_chi, alpha() + beta());
  return d;
}

HDivisor log_canonical_divisor(bool pointed) {
  HDivisor h(pointed);
  h.add(hbasis::canonical, MPoly(1));
  h.add(hbasis::delta_irr, alpha() + half());
  h.add(hbasis::delta_red, MPoly(1));
  if (pointed) h.add(hbasis::delta_w, MPoly(2) * alpha() + MPoly(2) * beta() - MPoly(1));
  return h;
}

bool ample_form_check(const DivClass& c, const Rational& a, const std::optional<Rational>& b) {
  if (a.sign() <= 0 || a > Rational(1, 2)) return false;
  if (b && (b->sign() <= 0 || *b > Rational(1) - a)) return false;
  const bool pointed = b.has_value();
  if (c.pointed() && !pointed) return false;
  return c.evaluate(a, b) == ample_template(pointed).evaluate(a, b);
}

std::vector<IdentityCheck> identity_suite() {
  std::vector<IdentityCheck> out;
  auto add = [&](std::string name, DivClass lhs, DivClass rhs) {
    const bool holds = lhs == rhs;
    out.push_back({std::move(name), std::move(lhs), std::move(rhs), holds});
  };
  for (bool pointed : {false, true}) {
    const std::string tag = pointed ? "pointed" : "unpointed";
    add("transport of the " + tag + " log canonical divisor", transport(log_canonical_divisor(pointed)), ample_template(pointed));
    DivClass hurwitz = k_M0A(pointed) - DivClass::symbol(basis::delta_s) + DivClass::symbol(basis::delta_odd, half());
    if (pointed) hurwitz += DivClass::symbol(basis::delta_sigma_chi, half());
    add("Hurwitz correction of the " + tag + " canonical class", hurwitz, canonical_class(pointed));
  }
  add("pointed minus unpointed canonical class", canonical_class(true) - canonical_class(false),
      DivClass::symbol(basis::psi_chi) + DivClass::symbol(basis::delta_sigma_chi, half()));
  return out;
}

}  // namespace qadm

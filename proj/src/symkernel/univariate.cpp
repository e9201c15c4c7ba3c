#include "qadm/error.hpp"
#include "qadm/symkernel.hpp"

namespace qadm {

namespace {

using Dense = std::vector<Rational>;

void trim(Dense& a) {
  while (!a.empty() && a.back().is_zero()) a.pop_back();
}

Dense derivative(const Dense& a) {
  Dense d;
  for (std::size_t i = 1; i < a.size(); ++i) d.push_back(a[i] * Rational(static_cast<long>(i)));
  trim(d);
  return d;
}

Dense sub(Dense a, const Dense& b) {
  if (a.size() < b.size()) a.resize(b.size());
  for (std::size_t i = 0; i < b.size(); ++i) a[i] -= b[i];
  trim(a);
  return a;
}

// Quotient and remainder of a by nonzero b.
std::pair<Dense, Dense> divmod(Dense a, const Dense& b) {
  trim(a);
  if (a.size() < b.size()) return {Dense{}, a};
  Dense q(a.size() - b.size() + 1);
  const Rational& lb = b.back();
  while (a.size() >= b.size() && !a.empty()) {
    std::size_t shift = a.size() - b.size();
    Rational c = a.back() / lb;
    q[shift] = c;
    for (std::size_t i = 0; i < b.size(); ++i) a[i + shift] -= c * b[i];
    a.pop_back();
    trim(a);
  }
  trim(q);
  return {q, a};
}

Dense monic(Dense a) {
  trim(a);
  if (a.empty()) return a;
  Rational l = a.back();
  for (auto& c : a) c /= l;
  return a;
}

Dense gcd(Dense a, Dense b) {
  trim(a);
  trim(b);
  while (!b.empty()) {
    auto r = divmod(a, b).second;
    a = std::move(b);
    b = std::move(r);
  }
  return monic(a);
}

Dense exact_quotient(const Dense& a, const Dense& b) { return divmod(a, b).first; }

bool is_one(const Dense& a) { return a.size() == 1 && a[0].is_one(); }

}  // namespace

std::vector<Rational> univariate_coefficients(const MPoly& f, std::string* variable) {
  if (f.variables().size() > 1) fail(ErrorKind::NotUnivariate, "expected a univariate polynomial, got " + f.str());
  Dense out;
  if (f.variables().empty()) {
    if (!f.is_zero()) out.push_back(f.constant_value());
    if (variable) variable->clear();
    return out;
  }
  if (variable) *variable = f.variables()[0];
  out.resize(f.total_degree() + 1);
  for (const auto& [e, c] : f.terms()) out[e[0]] = c;
  return out;
}

MPoly univariate_from_coefficients(const std::vector<Rational>& coeffs, const std::string& variable) {
  std::vector<std::pair<Exponents, Rational>> terms;
  for (std::size_t i = 0; i < coeffs.size(); ++i)
    if (!coeffs[i].is_zero()) terms.emplace_back(Exponents{static_cast<Exponent>(i)}, coeffs[i]);
  return MPoly::from_terms({variable}, terms);
}

MPoly SquarefreeDecomposition::reconstruct() const {
  MPoly p(leading_coefficient);
  for (const auto& f : factors) p *= f.factor.pow(f.multiplicity);
  return p;
}

SquarefreeDecomposition squarefree_decomposition(const MPoly& f) {
  if (f.is_zero()) fail(ErrorKind::PreconditionViolated, "squarefree decomposition of zero");
  SquarefreeDecomposition out;
  Dense a = univariate_coefficients(f, &out.variable);
  out.leading_coefficient = a.back();
  if (a.size() == 1) return out;
  Dense b = monic(a);
  Dense d = derivative(b);
  Dense g = gcd(b, d);
  Dense bi = exact_quotient(b, g);
  Dense ci = exact_quotient(d, g);
  Dense di = sub(ci, derivative(bi));
  unsigned i = 1;
  while (!is_one(bi)) {
    Dense ai = gcd(bi, di);
    if (!is_one(ai)) out.factors.push_back({univariate_from_coefficients(ai, out.variable), i});
    Dense next_b = exact_quotient(bi, ai);
    ci = exact_quotient(di, ai);
    di = sub(ci, derivative(next_b));
    bi = std::move(next_b);
    ++i;
  }
  return out;
}

}  // namespace qadm

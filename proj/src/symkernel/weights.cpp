#include "qadm/error.hpp"
#include "qadm/symkernel.hpp"

namespace qadm {

std::optional<std::int64_t> weighted_degree(const MPoly& p, const WeightAssignment& w) {
  std::vector<std::int64_t> wv;
  for (const auto& v : p.variables()) {
    auto it = w.find(v);
    if (it == w.end()) fail(ErrorKind::PreconditionViolated, "no weight assigned to variable " + v);
    if (it->second < 0) fail(ErrorKind::PreconditionViolated, "negative weight for variable " + v);
    wv.push_back(it->second);
  }
  std::optional<std::int64_t> deg;
  for (const auto& [e, c] : p.terms()) {
    std::int64_t d = 0;
    for (std::size_t i = 0; i < e.size(); ++i) d += wv[i] * static_cast<std::int64_t>(e[i]);
    if (deg && *deg != d) return std::nullopt;
    deg = d;
  }
  return deg;
}

MPoly center_of_mass_section(const std::vector<Rational>& coeffs, const std::string& x, const std::string& y) {
  if (coeffs.size() < 2) fail(ErrorKind::PreconditionViolated, "need a binary form of degree at least 1");
  const long d = static_cast<long>(coeffs.size()) - 1;
  const Rational& a0 = coeffs[coeffs.size() - 1];
  const Rational& a1 = coeffs[coeffs.size() - 2];
  if (a0.is_zero()) fail(ErrorKind::DivisorMeetsInfinity, "coefficient of y^d vanishes");
  return MPoly::var(y) + MPoly(a1 / (Rational(d) * a0)) * MPoly::var(x);
}

}  // namespace qadm

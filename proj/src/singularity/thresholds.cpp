#include <algorithm>

#include "qadm/error.hpp"
#include "qadm/singularity.hpp"

namespace qadm {

TypeBounds thresholds_to_types(const Rational& branch_weight, const std::optional<Rational>& chi_weight, int n) {
  if (n < 2) fail(ErrorKind::PreconditionViolated, "n must be at least 2");
  if (branch_weight.sign() <= 0 || branch_weight > Rational(1, 2))
    fail(ErrorKind::WeightOutOfRange, "branch weight " + branch_weight.str() + " outside (0, 1/2]");
  TypeBounds out;
  // 1/(a+2) < w <= 1/(a+1)  <=>  a + 1 = floor(1/w)
  out.a_bound_raw = static_cast<int>((Rational(1) / branch_weight).floor().get_si()) - 1;
  out.a_bound = std::min(out.a_bound_raw, n - 1);
  out.a_out_of_range = out.a_bound != out.a_bound_raw;
  if (chi_weight) {
    const Rational& beta = *chi_weight;
    if (beta.sign() <= 0 || beta > Rational(1) - branch_weight)
      fail(ErrorKind::WeightOutOfRange, "chi weight " + beta.str() + " outside (0, 1 - " + branch_weight.str() + "]");
    // 1 - (d+1) w < beta <= 1 - d w  <=>  d = floor((1 - beta)/w)
    int raw = static_cast<int>(((Rational(1) - beta) / branch_weight).floor().get_si());
    out.d_bound_raw = raw;
    out.d_bound = std::min(raw, std::min(out.a_bound + 1, n - 1));
    out.d_out_of_range = *out.d_bound != raw;
  }
  return out;
}

NormalForm normal_form(const MPoly& f) {
  std::string var;
  auto c = univariate_coefficients(f, &var);
  if (c.size() < 2 || !c.back().is_one())
    fail(ErrorKind::PreconditionViolated, "normal form needs a monic polynomial of positive degree: " + f.str());
  const long deg = static_cast<long>(c.size()) - 1;  // n + 1
  const Rational shift = c[c.size() - 2] / Rational(deg);
  const MPoly x = MPoly::var(var);
  auto t = univariate_coefficients(f.substitute({{var, x - MPoly(shift)}}));
  t.resize(c.size());
  NormalForm out;
  out.all_zero = true;
  for (long i = deg - 2; i >= 0; --i) {
    out.coeffs.push_back(t[static_cast<std::size_t>(i)]);
    if (!t[static_cast<std::size_t>(i)].is_zero()) out.all_zero = false;
  }
  return out;
}

}  // namespace qadm

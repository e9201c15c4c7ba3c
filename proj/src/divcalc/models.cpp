#include "qadm/divcalc.hpp"
#include "qadm/error.hpp"
#include "qadm/singularity.hpp"

namespace qadm {

namespace {

void check_weights(const Rational& a, const std::optional<Rational>& b) {
  if (a.sign() <= 0 || a > Rational(1, 2)) fail(ErrorKind::WeightOutOfRange, "alpha " + a.str() + " outside (0, 1/2]");
  if (b && (b->sign() <= 0 || *b > Rational(1) - a))
    fail(ErrorKind::WeightOutOfRange, "beta " + b->str() + " outside (0, 1 - alpha]");
}

}  // namespace

Discrepancy discrepancy(Direction dir, int k, int l, const Rational& a, const std::optional<Rational>& b) {
  check_weights(a, b);
  Discrepancy d;
  if (dir == Direction::GrowK) {
    if (k < 1) fail(ErrorKind::PreconditionViolated, "k must be at least 1");
    d.value = Rational(1) - Rational(k + 2) * a;
  } else {
    if (l < 1) fail(ErrorKind::PreconditionViolated, "l must be at least 1");
    if (!b) fail(ErrorKind::PreconditionViolated, "growing l needs a chi weight");
    d.value = Rational(1) - Rational(l + 1) * a - *b;
  }
  d.sign = d.value.sign();
  return d;
}

LogMmpModel log_mmp_model(int n, const Rational& a, const std::optional<Rational>& b) {
  LogMmpModel m;
  if (!b) {
    if (a <= Rational(1, 2) || a > Rational(1))
      fail(ErrorKind::WeightOutOfRange, "alpha " + a.str() + " outside (1/2, 1]");
    const TypeBounds tb = thresholds_to_types(a - Rational(1, 2), std::nullopt, n);
    m.k = tb.a_bound;
    m.k_out_of_range = tb.a_out_of_range;
    m.description = "H_" + std::to_string(n) + "[" + std::to_string(m.k) + "] = Proj R(H_" + std::to_string(n) +
                    "[1], K + " + a.str() + "*delta_irr + delta_red)";
    return m;
  }
  check_weights(a, b);
  const TypeBounds tb = thresholds_to_types(a, b, n);
  m.k = tb.a_bound;
  m.l = tb.d_bound;
  m.k_out_of_range = tb.a_out_of_range;
  m.l_out_of_range = tb.d_out_of_range;
  m.on_half_line = a + *b == Rational(1, 2);
  const Rational irr = a + Rational(1, 2);
  const Rational w = Rational(2) * a + Rational(2) * *b - Rational(1);
  m.description = "H_" + std::to_string(n) + "[" + std::to_string(m.k) + "," + std::to_string(*m.l) + "] = Proj R(H_" +
                  std::to_string(n) + "[1,1], K + " + irr.str() + "*delta_irr + (" + w.str() + ")*delta_W + delta_red)";
  return m;
}

}  // namespace qadm

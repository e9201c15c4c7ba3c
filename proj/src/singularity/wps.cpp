#include <algorithm>

#include "qadm/error.hpp"
#include "qadm/singularity.hpp"

namespace qadm {

std::vector<std::int64_t> wps_weights(int n, bool pointed) {
  std::vector<std::int64_t> w;
  if (!pointed) {
    if (n < 2) fail(ErrorKind::PreconditionViolated, "unpointed weights need n >= 2");
    const std::int64_t scale = n % 2 == 1 ? 1 : 2;
    for (std::int64_t i = 2; i <= n + 1; ++i) w.push_back(scale * i);
    return w;
  }
  if (n < 4) fail(ErrorKind::PreconditionViolated, "pointed weights need n >= 4");
  if (n % 2 == 0) {
    w.push_back(n / 2);
    for (std::int64_t i = 1; i <= n - 1; ++i) w.push_back(i);
  } else {
    w.push_back(n);
    for (std::int64_t i = 1; i <= n - 1; ++i) w.push_back(2 * i);
  }
  return w;
}

bool wps_equal(const std::vector<Rational>& p, const std::vector<Rational>& q, const std::vector<std::int64_t>& w) {
  if (p.size() != q.size() || p.size() != w.size())
    fail(ErrorKind::PreconditionViolated, "coordinate vectors and weights must have equal length");
  auto zero = [](const std::vector<Rational>& v) {
    return std::all_of(v.begin(), v.end(), [](const Rational& r) { return r.is_zero(); });
  };
  if (zero(p) || zero(q)) fail(ErrorKind::ZeroVector, "weighted projective point cannot be the zero vector");
  for (auto wi : w)
    if (wi <= 0) fail(ErrorKind::PreconditionViolated, "weights must be positive");
  std::vector<std::size_t> support;
  for (std::size_t i = 0; i < p.size(); ++i) {
    if (p[i].is_zero() != q[i].is_zero()) return false;
    if (!p[i].is_zero()) support.push_back(i);
  }
  for (std::size_t a = 0; a < support.size(); ++a) {
    for (std::size_t b = a + 1; b < support.size(); ++b) {
      std::size_t i = support[a], j = support[b];
      Rational ri = q[i] / p[i], rj = q[j] / p[j];
      if (ri.pow(w[j]) != rj.pow(w[i])) return false;
    }
  }
  return true;
}

std::vector<std::int64_t> versal_parameter_weights(SingType t) {
  const VersalFamily fam = versal(t);
  std::vector<std::int64_t> w;
  for (const auto& p : fam.params) w.push_back(fam.weights.at(p));
  std::sort(w.begin(), w.end());
  return w;
}

}  // namespace qadm

#include "qadm/error.hpp"
#include "qadm/singularity.hpp"

namespace qadm {

std::string SingType::str() const { return (kind == SingKind::A ? "A" : "D") + std::to_string(index); }

int delta_invariant(SingType t) {
  if (t.index < 1) fail(ErrorKind::UnsupportedIndex, "index must be positive: " + t.str());
  if (t.kind == SingKind::A) return (t.index + 1) / 2;
  if (t.index == 1) return 0;
  if (t.index == 2) return 1;
  return (t.index + 2) / 2;
}

Rational lct(SingType t) {
  if (t.kind == SingKind::A) {
    if (t.index < 1) fail(ErrorKind::UnsupportedIndex, "A index must be at least 1");
    return Rational(t.index + 3) / Rational(2 * (t.index + 1));
  }
  if (t.index < 2) fail(ErrorKind::UnsupportedIndex, "lct of D" + std::to_string(t.index) + " is undefined");
  return Rational(t.index) / Rational(2 * (t.index - 1));
}

Rational lct_window_check(int k) {
  if (k < 1) fail(ErrorKind::PreconditionViolated, "k must be at least 1");
  Rational v = Rational(1, 2) + Rational(1, k + 1);
  if (v != lct(SingType::A(k))) throw std::logic_error("window endpoint differs from lct(A" + std::to_string(k) + ")");
  return v;
}

}  // namespace qadm

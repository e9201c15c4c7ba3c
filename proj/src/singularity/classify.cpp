#include <algorithm>

#include "qadm/error.hpp"
#include "qadm/singularity.hpp"

namespace qadm {

std::vector<ProfileEntry> classify_branch_profile(const MPoly& f, const std::optional<Rational>& marked) {
  if (f.is_zero()) fail(ErrorKind::PreconditionViolated, "branch polynomial must be nonzero");
  const SquarefreeDecomposition sq = squarefree_decomposition(f);
  std::vector<ProfileEntry> out;
  for (const auto& [g, m] : sq.factors) {
    Exponent roots = g.total_degree();
    if (marked && g.evaluate({{sq.variable, *marked}}).is_zero()) {
      out.push_back({SingType::D(static_cast<int>(m)), m, g});
      --roots;
    }
    if (m < 2) continue;
    for (Exponent r = 0; r < roots; ++r) out.push_back({SingType::A(static_cast<int>(m) - 1), m, g});
  }
  std::stable_sort(out.begin(), out.end(), [](const ProfileEntry& a, const ProfileEntry& b) { return a.type < b.type; });
  return out;
}

}  // namespace qadm

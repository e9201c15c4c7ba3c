#include <algorithm>
#include <map>

#include "qadm/error.hpp"
#include "qadm/singularity.hpp"

namespace qadm {

namespace {

using Mono = std::pair<Exponent, Exponent>;  // (deg_x, deg_y)

struct Grading {
  std::int64_t wx, wy;
  std::int64_t of(const Mono& m) const { return wx * m.first + wy * m.second; }
};

// Monomials of weighted degree d, y-heavy first so that they become pivots.
std::vector<Mono> monomials_of_degree(const Grading& g, std::int64_t d) {
  std::vector<Mono> out;
  for (std::int64_t b = d / g.wy; b >= 0; --b) {
    std::int64_t rest = d - b * g.wy;
    if (rest % g.wx == 0) out.emplace_back(static_cast<Exponent>(rest / g.wx), static_cast<Exponent>(b));
  }
  return out;
}

std::map<Mono, Rational> as_xy(const MPoly& p) {
  std::map<Mono, Rational> out;
  int ix = p.var_index("x"), iy = p.var_index("y");
  if (static_cast<int>(p.variables().size()) != (ix >= 0) + (iy >= 0))
    fail(ErrorKind::PreconditionViolated, "expected a polynomial in x, y: " + p.str());
  for (const auto& [e, c] : p.terms()) {
    Exponent a = ix >= 0 ? e[static_cast<std::size_t>(ix)] : 0;
    Exponent b = iy >= 0 ? e[static_cast<std::size_t>(iy)] : 0;
    out.emplace(Mono{a, b}, c);
  }
  return out;
}

// Non-pivot columns of the span of rows, after Gaussian elimination with
// pivots taken in column order.
std::vector<std::size_t> free_columns(std::vector<std::vector<Rational>> rows, std::size_t ncols) {
  std::vector<bool> pivot(ncols, false);
  std::size_t r = 0;
  for (std::size_t c = 0; c < ncols && r < rows.size(); ++c) {
    std::size_t sel = r;
    while (sel < rows.size() && rows[sel][c].is_zero()) ++sel;
    if (sel == rows.size()) continue;
    std::swap(rows[r], rows[sel]);
    Rational inv = Rational(1) / rows[r][c];
    for (auto& v : rows[r]) v *= inv;
    for (std::size_t i = 0; i < rows.size(); ++i) {
      if (i == r || rows[i][c].is_zero()) continue;
      Rational f = rows[i][c];
      for (std::size_t j = c; j < ncols; ++j) rows[i][j] -= f * rows[r][j];
    }
    pivot[c] = true;
    ++r;
  }
  std::vector<std::size_t> out;
  for (std::size_t c = 0; c < ncols; ++c)
    if (!pivot[c]) out.push_back(c);
  return out;
}

// Monomial basis of K[x,y]/I for an ideal generated by weighted-homogeneous
// polynomials of finite colength. Each graded piece I_d is spanned by
// monomial multiples of the generators, so the computation is exact degree by degree.
std::vector<Mono> graded_quotient_basis(const std::vector<MPoly>& gens, const Grading& g) {
  struct Gen {
    std::map<Mono, Rational> terms;
    std::int64_t degree;
  };
  std::vector<Gen> hg;
  WeightAssignment w{{"x", g.wx}, {"y", g.wy}};
  for (const auto& p : gens) {
    if (p.is_zero()) continue;
    auto d = weighted_degree(p, w);
    if (!d) fail(ErrorKind::NotQuasiHomogeneous, "generator is not weighted homogeneous: " + p.str());
    hg.push_back({as_xy(p), *d});
  }
  const std::int64_t span = std::max(g.wx, g.wy);
  const std::int64_t limit = 4096;
  std::vector<Mono> basis;
  std::int64_t zero_run = 0;
  for (std::int64_t d = 0; d < limit; ++d) {
    auto cols = monomials_of_degree(g, d);
    if (cols.empty()) {
      ++zero_run;
    } else {
      std::map<Mono, std::size_t> col_of;
      for (std::size_t i = 0; i < cols.size(); ++i) col_of[cols[i]] = i;
      std::vector<std::vector<Rational>> rows;
      for (const auto& gen : hg) {
        if (gen.degree > d) continue;
        for (const Mono& m : monomials_of_degree(g, d - gen.degree)) {
          std::vector<Rational> row(cols.size());
          for (const auto& [t, c] : gen.terms) row[col_of.at({t.first + m.first, t.second + m.second})] = c;
          rows.push_back(std::move(row));
        }
      }
      auto fc = free_columns(std::move(rows), cols.size());
      for (std::size_t c : fc) basis.push_back(cols[c]);
      zero_run = fc.empty() ? zero_run + 1 : 0;
    }
    if (zero_run >= span && d >= span) return basis;
  }
  fail(ErrorKind::PreconditionViolated, "quotient is not finite-dimensional within the degree limit");
}

MPoly mono_poly(const Mono& m) {
  return MPoly::monomial(Rational(1), {{"x", m.first}, {"y", m.second}});
}

}  // namespace

std::vector<MPoly> tjurina_basis(SingType t) {
  if (t.kind == SingKind::D && t.index < 2)
    fail(ErrorKind::UnsupportedIndex, "D1 is a marked smooth point and has no Tjurina algebra");
  const MPoly f = singularity_normal_form(t);
  const MPoly fx = f.derivative("x"), fy = f.derivative("y");
  Grading g{1, 1};
  if (t.kind == SingKind::A || t.index >= 3) {
    const VersalFamily fam = versal(t);
    g = Grading{fam.weights.at("x"), fam.weights.at("y")};
  }
  std::vector<Mono> basis;
  if (t.kind == SingKind::D && t.index == 2) {
    // Deformations of the node together with its marked branch point:
    // m / (f, m * J(f)).
    const MPoly x = MPoly::var("x"), y = MPoly::var("y");
    basis = graded_quotient_basis({f, x * fx, y * fx, x * fy, y * fy}, g);
    basis.erase(std::remove(basis.begin(), basis.end(), Mono{0, 0}), basis.end());
  } else {
    basis = graded_quotient_basis({f, fx, fy}, g);
  }
  std::sort(basis.begin(), basis.end(), [](const Mono& a, const Mono& b) {
    if (a.first + a.second != b.first + b.second) return a.first + a.second < b.first + b.second;
    return a > b;
  });
  std::vector<MPoly> out;
  for (const auto& m : basis) out.push_back(mono_poly(m));
  return out;
}

}  // namespace qadm

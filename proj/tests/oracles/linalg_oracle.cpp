#include <stdexcept>

#include "oracles/oracles.hpp"

namespace oracle {

using qadm::SingKind;
using qadm::SingType;

bool Echelon::insert(std::map<int, Rational> row) {
  while (!row.empty()) {
    auto lead = row.begin();
    auto piv = pivots_.find(lead->first);
    if (piv == pivots_.end()) {
      const Rational inv = Rational(1) / lead->second;
      for (auto& [c, v] : row) v *= inv;
      pivots_.emplace(lead->first, std::move(row));
      return true;
    }
    const Rational factor = lead->second;
    for (const auto& [c, v] : piv->second) {
      Rational& slot = row[c];
      slot -= factor * v;
      if (slot.is_zero()) row.erase(c);
    }
  }
  return false;
}

namespace {

// Monomials x^a y^b of total degree < N, indexed by degree then a.
int monomial_index(int a, int b) {
  const int d = a + b;
  return d * (d + 1) / 2 + a;
}

std::pair<int, int> xy_exponents(const MPoly& p, const qadm::Exponents& e) {
  int a = 0, b = 0;
  for (std::size_t i = 0; i < e.size(); ++i) {
    const std::string& v = p.variables()[i];
    if (v == "x") a = static_cast<int>(e[i]);
    else if (v == "y") b = static_cast<int>(e[i]);
    else throw std::invalid_argument("oracle expects polynomials in x, y");
  }
  return {a, b};
}

// Rows spanning I + m^N modulo m^N, fed into `ech`.
void load_ideal(Echelon& ech, const std::vector<MPoly>& gens, int N) {
  for (const auto& g : gens)
    for (int s = 0; s < N; ++s)
      for (int i = 0; i <= s; ++i) {
        std::map<int, Rational> row;
        for (const auto& [e, c] : g.terms()) {
          auto [a, b] = xy_exponents(g, e);
          a += i;
          b += s - i;
          if (a + b < N) row[monomial_index(a, b)] += c;
        }
        std::erase_if(row, [](const auto& kv) { return kv.second.is_zero(); });
        if (!row.empty()) ech.insert(std::move(row));
      }
}

}  // namespace

std::size_t truncated_quotient_dim(const std::vector<MPoly>& generators, int N) {
  Echelon ech;
  load_ideal(ech, generators, N);
  return static_cast<std::size_t>(N * (N + 1) / 2) - ech.rank();
}

// Equal dimensions at N and N+1 mean m^N lies in I + m^(N+1); by Nakayama
// that puts m^N inside the local ideal. Every ideal used here is supported
// at the origin, so the local and global quotients agree.
std::size_t quotient_dim(const std::vector<MPoly>& generators) {
  std::size_t prev = truncated_quotient_dim(generators, 1);
  for (int N = 2; N < 200; ++N) {
    const std::size_t cur = truncated_quotient_dim(generators, N);
    if (cur == prev) return cur;
    prev = cur;
  }
  throw std::runtime_error("quotient dimension did not stabilize");
}

bool is_monomial_basis(const std::vector<MPoly>& generators, const std::vector<MPoly>& basis) {
  const std::size_t dim = quotient_dim(generators);
  if (basis.size() != dim) return false;
  int N = 1;
  while (truncated_quotient_dim(generators, N) != dim) ++N;
  Echelon ech;
  load_ideal(ech, generators, N);
  for (const auto& m : basis) {
    if (m.size() != 1) return false;
    const auto& [e, c] = *m.terms().begin();
    auto [a, b] = xy_exponents(m, e);
    if (a + b >= N || !ech.insert({{monomial_index(a, b), c}})) return false;
  }
  return true;
}

std::vector<MPoly> tjurina_ideal(SingType t) {
  const MPoly x = MPoly::var("x"), y = MPoly::var("y");
  MPoly f;
  if (t.kind == SingKind::A) {
    f = y * y - x.pow(static_cast<std::uint64_t>(t.index + 1));
  } else if (t.index == 2) {
    f = y * y - x * x;
    const MPoly fx = f.derivative("x"), fy = f.derivative("y");
    return {f, x * fx, y * fx, x * fy, y * fy};
  } else if (t.index >= 3) {
    f = x * y * y - x.pow(static_cast<std::uint64_t>(t.index - 1));
  } else {
    throw std::invalid_argument("no Tjurina ideal for " + t.str());
  }
  return {f, f.derivative("x"), f.derivative("y")};
}

std::size_t tjurina_dim(SingType t) {
  const std::size_t d = quotient_dim(tjurina_ideal(t));
  // The marked node is measured inside the maximal ideal.
  return t.kind == SingKind::D && t.index == 2 ? d - 1 : d;
}

}  // namespace oracle

#pragma once

#include <array>
#include <compare>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "qadm/mpoly.hpp"
#include "qadm/rational.hpp"
#include "qadm/symkernel.hpp"

namespace qadm {

enum class SingKind { A, D };

struct SingType {
  SingKind kind = SingKind::A;
  int index = 1;

  static SingType A(int k) { return {SingKind::A, k}; }
  static SingType D(int l) { return {SingKind::D, l}; }

  std::string str() const;  // "A2", "D4"
  auto operator<=>(const SingType&) const = default;
};

// Local genus drop. D1 is a marked smooth ramification point and D2 a
// marked node; from D3 on the value is that of x(y^2 - x^(l-2)).
int delta_invariant(SingType t);

struct VersalFamily {
  MPoly equation;
  std::array<std::string, 2> curve_vars{"x", "y"};
  std::vector<std::string> params;
  WeightAssignment weights;
};

// A_n: y^2 - (x^(n+1) + a_(n-1) x^(n-1) + ... + a0).
// D_n: x y^2 + b y - (x^(n-1) + a_(n-2) x^(n-2) + ... + a0), n >= 3.
VersalFamily versal(SingType t);

// The miniversal family of A_(n-1) together with the section x = y = 0:
// y^2 - b y - x^n - a_(n-2) x^(n-1) - ... - a0 x, weighted like D_n.
VersalFamily versal_with_section(int n);

// Substitutes y = x u + b and divides by x. Throws NotDivisible when the
// input is not in with-section form.
VersalFamily a_to_d_transform(const VersalFamily& fam);

// Monomial basis of the Tjurina algebra of the normal form, as monomials in x, y.
// D2 uses the marked-node presentation m / (f, m J(f)) with f = y^2 - x^2.
std::vector<MPoly> tjurina_basis(SingType t);

// Normal form used for a given type (y^2 - x^(n+1) or x y^2 - x^(n-1)).
MPoly singularity_normal_form(SingType t);

Rational lct(SingType t);
Rational lct_window_check(int k);

// Result of locating weights in the windows
//   1/(a+2) < branch_weight <= 1/(a+1),
//   1 - (d+1) branch_weight < chi_weight <= 1 - d branch_weight.
// The *_raw fields are the unclamped solutions; the clamped values respect
// a <= n-1 and d <= min(a+1, n-1).
struct TypeBounds {
  int a_bound = 0;
  int a_bound_raw = 0;
  bool a_out_of_range = false;
  std::optional<int> d_bound;
  std::optional<int> d_bound_raw;
  bool d_out_of_range = false;
};

TypeBounds thresholds_to_types(const Rational& branch_weight, const std::optional<Rational>& chi_weight, int n);

struct NormalForm {
  std::vector<Rational> coeffs;  // a_(n-1), ..., a0
  bool all_zero = false;
};

// Translates a monic univariate polynomial of degree n+1 so that its x^n
// coefficient vanishes.
NormalForm normal_form(const MPoly& f);

std::vector<std::int64_t> wps_weights(int n, bool pointed);
bool wps_equal(const std::vector<Rational>& p, const std::vector<Rational>& q, const std::vector<std::int64_t>& w);
// Sorted G_m weights of the versal parameters of t.
std::vector<std::int64_t> versal_parameter_weights(SingType t);

struct ProfileEntry {
  SingType type;
  unsigned multiplicity = 0;
  MPoly witness;  // squarefree factor whose roots carry this multiplicity
};

std::vector<ProfileEntry> classify_branch_profile(const MPoly& f, const std::optional<Rational>& marked);

}  // namespace qadm

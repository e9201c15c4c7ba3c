#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "qadm/mpoly.hpp"
#include "qadm/rational.hpp"

namespace qadm {

// Variable name -> G_m weight. Weight 0 marks a variable that is carried
// along as a coefficient parameter (tail families over chart coordinates).
using WeightAssignment = std::map<std::string, std::int64_t>;

// Common weighted degree of all terms, or nullopt if the terms disagree
// (or the polynomial is zero). Throws PreconditionViolated for an
// unweighted variable or a negative weight.
std::optional<std::int64_t> weighted_degree(const MPoly& p, const WeightAssignment& w);

struct SquarefreeFactor {
  MPoly factor;  // monic, squarefree
  unsigned multiplicity;
};

struct SquarefreeDecomposition {
  std::string variable;  // empty for constants
  Rational leading_coefficient;
  std::vector<SquarefreeFactor> factors;  // increasing multiplicity

  MPoly reconstruct() const;
};

// Yun's algorithm over Q. Throws NotUnivariate for two or more variables
// and PreconditionViolated for the zero polynomial.
SquarefreeDecomposition squarefree_decomposition(const MPoly& f);

// Dense coefficients of a univariate polynomial, lowest degree first.
// Throws NotUnivariate.
std::vector<Rational> univariate_coefficients(const MPoly& f, std::string* variable = nullptr);
MPoly univariate_from_coefficients(const std::vector<Rational>& coeffs, const std::string& variable);

// Section y + a1/(d*a0) * x for the binary form a_d x^d + ... + a1 x y^(d-1) + a0 y^d,
// given coefficients a_d, ..., a0. Throws DivisorMeetsInfinity when a0 = 0.
MPoly center_of_mass_section(const std::vector<Rational>& coeffs_high_to_low,
                             const std::string& x = "x", const std::string& y = "y");

}  // namespace qadm

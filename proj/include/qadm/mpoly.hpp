#pragma once

#include <cstdint>
#include <map>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "qadm/rational.hpp"

namespace qadm {

using Exponent = std::uint32_t;
using Exponents = std::vector<Exponent>;

// Orders exponent vectors so that the grlex-largest comes first.
struct GrlexGreater {
  bool operator()(const Exponents& a, const Exponents& b) const;
};

// Sparse multivariate polynomial over Q.
//
// Canonical form: the variable list is exactly the set of variables that
// occur, sorted alphabetically, and terms are kept in descending grlex
// order with no zero coefficients. Two polynomials are equal iff their
// canonical forms are identical.
class MPoly {
 public:
  using TermMap = std::map<Exponents, Rational, GrlexGreater>;

  MPoly() = default;
  MPoly(const Rational& c);  // NOLINT(google-explicit-constructor)
  MPoly(long c) : MPoly(Rational(c)) {}  // NOLINT(google-explicit-constructor)
  MPoly(int c) : MPoly(Rational(c)) {}   // NOLINT(google-explicit-constructor)

  static MPoly var(const std::string& name);
  static MPoly monomial(const Rational& c,
                        const std::vector<std::pair<std::string, Exponent>>& powers);
  // Parses the text grammar; throws ParseError with a byte position.
  static MPoly parse(std::string_view text);

  std::string str() const;

  const std::vector<std::string>& variables() const { return vars_; }
  const TermMap& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  bool is_constant() const { return vars_.empty(); }
  Rational constant_value() const;  // requires is_constant()
  std::size_t size() const { return terms_.size(); }
  bool has_var(const std::string& name) const { return var_index(name) >= 0; }
  int var_index(const std::string& name) const;

  Exponent degree_in(const std::string& name) const;
  Exponent total_degree() const;
  // Leading term in grlex order; requires a nonzero polynomial.
  std::pair<Exponents, Rational> leading_term() const;

  // Coefficient of name^e, as a polynomial in the remaining variables.
  MPoly coefficient(const std::string& name, Exponent e) const;
  MPoly derivative(const std::string& name) const;

  // Simultaneous substitution; unbound variables pass through.
  MPoly substitute(const std::map<std::string, MPoly>& bindings) const;
  MPoly rename(const std::map<std::string, std::string>& names) const;
  // Every variable must be bound.
  Rational evaluate(const std::map<std::string, Rational>& values) const;

  MPoly pow(std::uint64_t e) const;

  MPoly operator-() const;
  MPoly& operator+=(const MPoly& o);
  MPoly& operator-=(const MPoly& o);
  MPoly& operator*=(const MPoly& o);
  friend MPoly operator+(MPoly a, const MPoly& b) { return a += b; }
  friend MPoly operator-(MPoly a, const MPoly& b) { return a -= b; }
  friend MPoly operator*(MPoly a, const MPoly& b) { return a *= b; }
  friend bool operator==(const MPoly& a, const MPoly& b) {
    return a.vars_ == b.vars_ && a.terms_ == b.terms_;
  }
  friend bool operator!=(const MPoly& a, const MPoly& b) { return !(a == b); }

  // Builds from raw parts and canonicalizes. Exponent vectors must have
  // vars.size() entries.
  static MPoly from_terms(std::vector<std::string> vars,
                          const std::vector<std::pair<Exponents, Rational>>& terms);

 private:
  void canonicalize();
  TermMap embedded(const std::vector<std::string>& universe) const;

  std::vector<std::string> vars_;
  TermMap terms_;
};

// Exact division; throws NotDivisible on a nonzero remainder.
MPoly exact_div(const MPoly& p, const MPoly& q);

}  // namespace qadm

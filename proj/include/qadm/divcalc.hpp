#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "qadm/mpoly.hpp"
#include "qadm/rational.hpp"

namespace qadm {

// Basis symbols on the moduli of weighted pointed rational curves.
namespace basis {
inline constexpr const char* psi_tau = "psi_tau";
inline constexpr const char* psi_sigma = "psi_sigma";
inline constexpr const char* psi_chi = "psi_chi";
inline constexpr const char* delta_s = "Delta_s";
inline constexpr const char* delta_even = "Delta_even";
inline constexpr const char* delta_odd = "Delta_odd";
inline constexpr const char* delta_sigma_chi = "Delta_sigma_chi";
}  // namespace basis

// Symbols of the cover-stack divisors.
namespace hbasis {
inline constexpr const char* canonical = "K_H";
inline constexpr const char* delta_irr = "delta_irr";
inline constexpr const char* delta_red = "delta_red";
inline constexpr const char* delta_w = "delta_W";
}  // namespace hbasis

// Coefficients are polynomials in the symbols "alpha" and "beta".
const std::vector<std::string>& basis_symbols();
const std::vector<std::string>& hdivisor_symbols();

class DivClass {
 public:
  DivClass() = default;
  static DivClass symbol(const std::string& name, const MPoly& coeff = MPoly(1));

  const std::map<std::string, MPoly>& coefficients() const { return coeffs_; }
  MPoly coefficient(const std::string& name) const;
  bool is_zero() const { return coeffs_.empty(); }
  bool pointed() const;

  // Numeric coefficients at the given weights. beta may be omitted when unused.
  std::map<std::string, Rational> evaluate(const Rational& alpha, const std::optional<Rational>& beta) const;
  std::string str() const;

  DivClass& operator+=(const DivClass& o);
  DivClass& operator-=(const DivClass& o);
  DivClass& operator*=(const MPoly& c);
  friend DivClass operator+(DivClass a, const DivClass& b) { return a += b; }
  friend DivClass operator-(DivClass a, const DivClass& b) { return a -= b; }
  friend DivClass operator*(const MPoly& c, DivClass a) { return a *= c; }
  friend bool operator==(const DivClass& a, const DivClass& b) { return a.coeffs_ == b.coeffs_; }

 private:
  std::map<std::string, MPoly> coeffs_;  // zero coefficients are never stored
  friend class HDivisor;
};

class HDivisor {
 public:
  explicit HDivisor(bool pointed = false) : pointed_(pointed) {}
  HDivisor& add(const std::string& name, const MPoly& coeff);

  bool pointed() const { return pointed_; }
  const std::map<std::string, MPoly>& coefficients() const { return coeffs_; }
  std::string str() const;

 private:
  bool pointed_;
  std::map<std::string, MPoly> coeffs_;
};

// Unknown symbol names throw PreconditionViolated.
void check_basis_symbol(const std::string& name);
void check_hdivisor_symbol(const std::string& name);

MPoly alpha();
MPoly beta();

DivClass psi_total(bool pointed);
DivClass canonical_class(bool pointed);
DivClass k_M0A(bool pointed);
DivClass transport(const HDivisor& h);

// psi + 2 alpha Delta_s (+ (alpha + beta) Delta_sigma_chi) - Delta_even - Delta_odd.
DivClass ample_template(bool pointed);
// The log canonical divisors whose models are studied.
HDivisor log_canonical_divisor(bool pointed);

bool ample_form_check(const DivClass& c, const Rational& alpha, const std::optional<Rational>& beta);

struct IdentityCheck {
  std::string name;
  DivClass lhs;
  DivClass rhs;
  bool holds = false;
};

std::vector<IdentityCheck> identity_suite();

enum class Direction { GrowK, GrowL };

struct Discrepancy {
  Rational value;
  int sign = 0;
};

// 1 - (k+2) alpha, or 1 - (l+1) alpha - beta.
Discrepancy discrepancy(Direction dir, int k, int l, const Rational& alpha, const std::optional<Rational>& beta);

struct LogMmpModel {
  int k = 0;
  std::optional<int> l;
  bool k_out_of_range = false;
  bool l_out_of_range = false;
  bool on_half_line = false;  // alpha + beta = 1/2
  std::string description;
};

// Unpointed: alpha is the delta_irr coefficient, in (1/2, 1].
// Pointed: alpha, beta are the branch and chi weights.
LogMmpModel log_mmp_model(int n, const Rational& alpha, const std::optional<Rational>& beta);

}  // namespace qadm

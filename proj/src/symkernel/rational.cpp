#include "qadm/rational.hpp"

#include <cctype>
#include <ostream>

#include "qadm/error.hpp"

namespace qadm {

const char* error_name(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::NotDivisible: return "NotDivisible";
    case ErrorKind::NotUnivariate: return "NotUnivariate";
    case ErrorKind::DivisorMeetsInfinity: return "DivisorMeetsInfinity";
    case ErrorKind::UnsupportedIndex: return "UnsupportedIndex";
    case ErrorKind::WeightOutOfRange: return "WeightOutOfRange";
    case ErrorKind::ZeroVector: return "ZeroVector";
    case ErrorKind::ParityViolation: return "ParityViolation";
    case ErrorKind::Unstable: return "Unstable";
    case ErrorKind::IllegalReduction: return "IllegalReduction";
    case ErrorKind::TooLarge: return "TooLarge";
    case ErrorKind::ChartOutOfRange: return "ChartOutOfRange";
    case ErrorKind::NotQuasiHomogeneous: return "NotQuasiHomogeneous";
    case ErrorKind::DegenerateSpecialization: return "DegenerateSpecialization";
    case ErrorKind::IllegalTarget: return "IllegalTarget";
    case ErrorKind::ExponentOverflow: return "ExponentOverflow";
    case ErrorKind::PreconditionViolated: return "PreconditionViolated";
    case ErrorKind::ParseError: return "ParseError";
    case ErrorKind::InvalidTree: return "InvalidTree";
  }
  return "Unknown";
}

Rational::Rational(long num, long den) {
  if (den == 0) fail(ErrorKind::PreconditionViolated, "zero denominator");
  v_ = mpq_class(num, den);
  v_.canonicalize();
}

Rational Rational::parse(std::string_view text) {
  std::size_t i = 0;
  auto digits = [&](std::size_t start) {
    std::size_t j = start;
    while (j < text.size() && std::isdigit(static_cast<unsigned char>(text[j]))) ++j;
    if (j == start) throw ParseError(start, "expected digits in rational literal");
    return j;
  };
  bool neg = false;
  if (i < text.size() && (text[i] == '-' || text[i] == '+')) {
    neg = text[i] == '-';
    ++i;
  }
  std::size_t end = digits(i);
  mpz_class num(std::string(text.substr(i, end - i)), 10);
  mpz_class den(1);
  if (end < text.size() && text[end] == '/') {
    std::size_t dend = digits(end + 1);
    den = mpz_class(std::string(text.substr(end + 1, dend - end - 1)), 10);
    if (den == 0) throw ParseError(end + 1, "zero denominator");
    end = dend;
  }
  if (end != text.size()) throw ParseError(end, "trailing characters in rational literal");
  mpq_class q(num, den);
  q.canonicalize();
  if (neg) q = -q;
  return Rational(q);
}

std::string Rational::str() const { return v_.get_str(); }

std::int64_t Rational::to_int64() const {
  if (!is_integer()) fail(ErrorKind::PreconditionViolated, "not an integer: " + str());
  const mpz_class& n = v_.get_num();
  if (!n.fits_slong_p()) fail(ErrorKind::PreconditionViolated, "integer out of range: " + str());
  return n.get_si();
}

mpz_class Rational::floor() const {
  mpz_class q;
  mpz_fdiv_q(q.get_mpz_t(), v_.get_num_mpz_t(), v_.get_den_mpz_t());
  return q;
}

mpz_class Rational::ceil() const {
  mpz_class q;
  mpz_cdiv_q(q.get_mpz_t(), v_.get_num_mpz_t(), v_.get_den_mpz_t());
  return q;
}

Rational& Rational::operator/=(const Rational& o) {
  if (o.is_zero()) fail(ErrorKind::PreconditionViolated, "division by zero");
  v_ /= o.v_;
  return *this;
}

Rational Rational::pow(std::int64_t e) const {
  if (e < 0) return Rational(1) / pow(-e);
  mpz_class n, d;
  mpz_pow_ui(n.get_mpz_t(), v_.get_num_mpz_t(), static_cast<unsigned long>(e));
  mpz_pow_ui(d.get_mpz_t(), v_.get_den_mpz_t(), static_cast<unsigned long>(e));
  return Rational(mpq_class(n, d));
}

std::ostream& operator<<(std::ostream& os, const Rational& r) { return os << r.str(); }

}  // namespace qadm

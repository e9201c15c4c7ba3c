#include <cctype>
#include <limits>
#include <sstream>

#include "qadm/error.hpp"
#include "qadm/mpoly.hpp"

namespace qadm {

namespace {

bool ident_start(char c) { return std::isalpha(static_cast<unsigned char>(c)) || c == '_'; }
bool ident_char(char c) { return std::isalnum(static_cast<unsigned char>(c)) || c == '_'; }
bool digit(char c) { return std::isdigit(static_cast<unsigned char>(c)) != 0; }

// expr   := [sign] term { sign term }
// term   := factor { ['*'] factor }
// factor := sign factor | primary [ '^' uint ]
// primary:= uint [ '/' uint ] | ident | '(' expr ')'
class Parser {
 public:
  explicit Parser(std::string_view s) : s_(s) {}

  MPoly run() {
    skip();
    if (pos_ == s_.size()) throw ParseError(pos_, "empty polynomial");
    MPoly p = expr();
    skip();
    if (pos_ != s_.size()) throw ParseError(pos_, std::string("unexpected character '") + s_[pos_] + "'");
    return p;
  }

 private:
  void skip() {
    while (pos_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[pos_]))) ++pos_;
  }
  bool peek(char c) {
    skip();
    return pos_ < s_.size() && s_[pos_] == c;
  }
  bool factor_starts() {
    skip();
    if (pos_ >= s_.size()) return false;
    char c = s_[pos_];
    return digit(c) || ident_start(c) || c == '(';
  }

  MPoly expr() {
    MPoly acc;
    bool first = true;
    while (true) {
      skip();
      int sign = 1;
      if (pos_ < s_.size() && (s_[pos_] == '+' || s_[pos_] == '-')) {
        sign = s_[pos_] == '-' ? -1 : 1;
        ++pos_;
      } else if (!first) {
        break;
      }
      MPoly t = term();
      acc += sign < 0 ? -t : t;
      first = false;
    }
    return acc;
  }

  MPoly term() {
    MPoly acc = factor();
    while (true) {
      if (peek('*')) {
        ++pos_;
        acc *= factor();
      } else if (factor_starts()) {
        acc *= factor();
      } else {
        break;
      }
    }
    return acc;
  }

  MPoly factor() {
    skip();
    if (pos_ < s_.size() && (s_[pos_] == '-' || s_[pos_] == '+')) {
      bool neg = s_[pos_] == '-';
      ++pos_;
      MPoly f = factor();
      return neg ? -f : f;
    }
    MPoly base = primary();
    if (peek('^')) {
      ++pos_;
      skip();
      std::size_t start = pos_;
      if (pos_ >= s_.size() || !digit(s_[pos_])) throw ParseError(pos_, "expected non-negative integer exponent");
      unsigned long long e = 0;
      while (pos_ < s_.size() && digit(s_[pos_])) {
        e = e * 10 + static_cast<unsigned long long>(s_[pos_] - '0');
        if (e > std::numeric_limits<Exponent>::max()) throw ParseError(start, "exponent too large");
        ++pos_;
      }
      base = base.pow(e);
    }
    return base;
  }

  MPoly primary() {
    skip();
    if (pos_ >= s_.size()) throw ParseError(pos_, "unexpected end of input");
    char c = s_[pos_];
    if (c == '(') {
      std::size_t open = pos_;
      ++pos_;
      MPoly inner = expr();
      if (!peek(')')) throw ParseError(pos_ < s_.size() ? pos_ : open, "expected ')'");
      ++pos_;
      return inner;
    }
    if (digit(c)) {
      std::size_t start = pos_;
      while (pos_ < s_.size() && digit(s_[pos_])) ++pos_;
      std::size_t end = pos_;
      if (pos_ < s_.size() && s_[pos_] == '/') {
        ++pos_;
        if (pos_ >= s_.size() || !digit(s_[pos_])) throw ParseError(pos_, "expected denominator digits");
        while (pos_ < s_.size() && digit(s_[pos_])) ++pos_;
        end = pos_;
      }
      try {
        return MPoly(Rational::parse(s_.substr(start, end - start)));
      } catch (const ParseError& e) {
        throw ParseError(start + e.position(), "invalid rational literal");
      }
    }
    if (ident_start(c)) {
      std::size_t start = pos_;
      while (pos_ < s_.size() && ident_char(s_[pos_])) ++pos_;
      return MPoly::var(std::string(s_.substr(start, pos_ - start)));
    }
    throw ParseError(pos_, std::string("unexpected character '") + c + "'");
  }

  std::string_view s_;
  std::size_t pos_ = 0;
};

}  // namespace

MPoly MPoly::parse(std::string_view text) { return Parser(text).run(); }

std::string MPoly::str() const {
  if (terms_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (const auto& [e, c] : terms_) {
    std::string mono;
    for (std::size_t i = 0; i < e.size(); ++i) {
      if (e[i] == 0) continue;
      if (!mono.empty()) mono += '*';
      mono += vars_[i];
      if (e[i] > 1) mono += '^' + std::to_string(e[i]);
    }
    Rational mag = c.abs();
    std::string body;
    if (mono.empty())
      body = mag.str();
    else if (mag.is_one())
      body = mono;
    else
      body = mag.str() + '*' + mono;
    if (first)
      os << (c.sign() < 0 ? "-" : "") << body;
    else
      os << (c.sign() < 0 ? " - " : " + ") << body;
    first = false;
  }
  return os.str();
}

}  // namespace qadm

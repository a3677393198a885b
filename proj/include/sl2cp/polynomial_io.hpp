#pragma once

// Text form of polynomials: terms in graded-lex order (largest first),
// e.g. "z0^3 - 4*z0*z1^2 - 4*z0*z2*z3". The parser also accepts
// parentheses and integer powers of subexpressions.

#include <gmpxx.h>

#include <cctype>
#include <string>
#include <string_view>

#include "sl2cp/error.hpp"
#include "sl2cp/polynomial.hpp"

namespace sl2cp {

inline std::string to_text(const MultiPoly& p) {
  if (p.is_zero()) return "0";
  std::string out;
  bool first = true;
  for (const auto& [m, c] : p.terms()) {
    const bool negative = c < 0;
    const mpz_class magnitude = abs(c);
    if (first) {
      if (negative) out += "-";
    } else {
      out += negative ? " - " : " + ";
    }
    first = false;

    std::string mono;
    for (std::size_t v = 0; v < kNumVars; ++v) {
      if (m[v] == 0) continue;
      if (!mono.empty()) mono += "*";
      mono += "z" + std::to_string(v);
      if (m[v] > 1) mono += "^" + std::to_string(m[v]);
    }
    if (mono.empty()) {
      out += magnitude.get_str();
    } else if (magnitude == 1) {
      out += mono;
    } else {
      out += magnitude.get_str() + "*" + mono;
    }
  }
  return out;
}

/// "z0^d0 * (z0^2 - u)^d1 * (z0^2 - 4*u)^d2 * ..." where u = z1^2 + z2*z3.
/// Absent factors and unit exponents are omitted; "1" for the empty product.
inline std::string to_text(const CanonicalCP& c) {
  std::string out;
  auto append = [&](const std::string& s) {
    if (!out.empty()) out += " * ";
    out += s;
  };
  auto power = [](Multiplicity e) { return e == 1 ? std::string() : "^" + std::to_string(e); };
  if (c.d0() > 0) append("z0" + power(c.d0()));
  for (const auto& [n, dn] : c.factors()) {
    const mpz_class n2 = mpz_class(n) * n;
    append("(z0^2 - " + (n == 1 ? std::string() : n2.get_str() + "*") + "u)" + power(dn));
  }
  return out.empty() ? "1" : out;
}

namespace detail {

class PolyParser {
 public:
  explicit PolyParser(std::string_view text) : s_(text) {}

  MultiPoly parse() {
    MultiPoly p = expr();
    skip_ws();
    if (pos_ != s_.size()) fail("unexpected '" + std::string(1, s_[pos_]) + "'");
    return p;
  }

 private:
  [[noreturn]] void fail(const std::string& why) const {
    throw Error(ErrorKind::BadInput,
                "polynomial parse error at offset " + std::to_string(pos_) + ": " + why);
  }

  void skip_ws() {
    while (pos_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[pos_]))) ++pos_;
  }

  bool accept(char ch) {
    skip_ws();
    if (pos_ < s_.size() && s_[pos_] == ch) {
      ++pos_;
      return true;
    }
    return false;
  }

  std::string digits() {
    skip_ws();
    const std::size_t start = pos_;
    while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) ++pos_;
    if (start == pos_) fail("expected an integer");
    return std::string(s_.substr(start, pos_ - start));
  }

  MultiPoly expr() {
    MultiPoly acc = term();
    for (;;) {
      if (accept('+')) {
        acc += term();
      } else if (accept('-')) {
        acc -= term();
      } else {
        return acc;
      }
    }
  }

  MultiPoly term() {
    MultiPoly acc = unary();
    while (accept('*')) acc *= unary();
    return acc;
  }

  MultiPoly unary() {
    if (accept('-')) return -unary();
    if (accept('+')) return unary();
    return power();
  }

  MultiPoly power() {
    MultiPoly base = atom();
    if (accept('^')) {
      const std::string e = digits();
      if (e.size() > 9) fail("exponent too large");
      base = pow(base, std::stoull(e));
    }
    return base;
  }

  MultiPoly atom() {
    skip_ws();
    if (pos_ >= s_.size()) fail("unexpected end of input");
    const char ch = s_[pos_];
    if (ch == '(') {
      ++pos_;
      MultiPoly inner = expr();
      if (!accept(')')) fail("expected ')'");
      return inner;
    }
    if (ch == 'z') {
      ++pos_;
      if (pos_ >= s_.size() || s_[pos_] < '0' || s_[pos_] > '3')
        fail("expected variable z0, z1, z2 or z3");
      return MultiPoly::variable(static_cast<std::size_t>(s_[pos_++] - '0'));
    }
    if (std::isdigit(static_cast<unsigned char>(ch)))
      return MultiPoly::constant(mpz_class(digits()));
    fail("unexpected '" + std::string(1, ch) + "'");
  }

  std::string_view s_;
  std::size_t pos_ = 0;
};

}  // namespace detail

/// Parses the text form. Throws BadInput on malformed input.
inline MultiPoly parse_polynomial(std::string_view text) {
  return detail::PolyParser(text).parse();
}

}  // namespace sl2cp

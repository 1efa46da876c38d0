#include "bicrys/expr.hpp"

#include <algorithm>
#include <cctype>
#include <vector>

#include "bicrys/error.hpp"

namespace bicrys {

namespace {

class Parser {
 public:
  Parser(std::string_view src, int m, int n) : src_(src), m_(m), n_(n) {}

  Polynomial parse() {
    Polynomial p = expression();
    skip();
    if (pos_ != src_.size()) fail("unexpected character");
    return p;
  }

 private:
  [[noreturn]] void fail(const std::string& what) const { throw ParseError(what, pos_); }

  void skip() {
    while (pos_ < src_.size() && std::isspace(static_cast<unsigned char>(src_[pos_]))) ++pos_;
  }

  bool accept(char ch) {
    skip();
    if (pos_ < src_.size() && src_[pos_] == ch) {
      ++pos_;
      return true;
    }
    return false;
  }

  void expect(char ch) {
    if (!accept(ch)) fail(std::string("expected '") + ch + "'");
  }

  bool peek_digit() {
    skip();
    return pos_ < src_.size() && std::isdigit(static_cast<unsigned char>(src_[pos_]));
  }

  mpz_class integer() {
    skip();
    const std::size_t start = pos_;
    while (pos_ < src_.size() && std::isdigit(static_cast<unsigned char>(src_[pos_]))) ++pos_;
    if (start == pos_) fail("expected integer");
    return mpz_class(std::string(src_.substr(start, pos_ - start)));
  }

  int small_integer() {
    const std::size_t at = pos_;
    mpz_class v = integer();
    if (!v.fits_sint_p() || v > 1000000) throw ParseError("integer too large", at);
    return static_cast<int>(v.get_si());
  }

  Polynomial expression() {
    Polynomial acc(m_, n_);
    bool negate = false;
    if (accept('-'))
      negate = true;
    else
      accept('+');
    Polynomial t = term();
    acc += negate ? -t : t;
    while (true) {
      if (accept('+')) {
        acc += term();
      } else if (accept('-')) {
        acc -= term();
      } else {
        break;
      }
    }
    return acc;
  }

  Polynomial term() {
    Polynomial acc = factor();
    while (accept('*')) acc = acc * factor();
    return acc;
  }

  Polynomial factor() {
    Polynomial base = primary();
    if (accept('^')) {
      const int k = small_integer();
      if (k < 1) fail("exponent must be positive");
      base = base.pow(static_cast<unsigned>(k));
    }
    return base;
  }

  Polynomial primary() {
    skip();
    if (accept('(')) {
      Polynomial inner = expression();
      expect(')');
      return inner;
    }
    if (pos_ < src_.size() && src_[pos_] == 'z') {
      const std::size_t at = pos_;
      ++pos_;
      expect('[');
      const int i = small_integer();
      expect(',');
      const int j = small_integer();
      expect(']');
      if (i < 1 || i > m_ || j < 1 || j > n_)
        throw ParseError("variable index out of range", at);
      return Polynomial::variable(m_, n_, i - 1, j - 1);
    }
    if (peek_digit()) {
      mpz_class num = integer();
      mpz_class den = 1;
      if (accept('/')) {
        den = integer();
        if (den == 0) fail("division by zero");
      }
      Rational c(num, den);
      c.canonicalize();
      return Polynomial::constant(m_, n_, c);
    }
    fail(pos_ < src_.size() ? "unexpected character" : "unexpected end of input");
  }

  std::string_view src_;
  int m_;
  int n_;
  std::size_t pos_ = 0;
};

}  // namespace

Polynomial parse_polynomial(std::string_view src, int m, int n) {
  return Parser(src, m, n).parse();
}

std::string format_polynomial(const Polynomial& f, const TermOrder& ord) {
  if (f.is_zero()) return "0";
  std::vector<std::pair<ExponentMatrix, Rational>> terms(f.terms().begin(), f.terms().end());
  std::sort(terms.begin(), terms.end(),
            [&](const auto& a, const auto& b) { return ord.less(b.first, a.first); });
  std::string out;
  bool first = true;
  for (const auto& [M, c] : terms) {
    const bool negative = sgn(c) < 0;
    const Rational mag = abs(c);
    if (first) {
      if (negative) out += '-';
    } else {
      out += negative ? " - " : " + ";
    }
    first = false;
    if (M.is_zero()) {
      out += mag.get_str();
    } else if (mag == 1) {
      out += monomial_string(M);
    } else {
      out += mag.get_str() + "*" + monomial_string(M);
    }
  }
  return out;
}

std::string format_polynomial(const Polynomial& f) {
  return format_polynomial(f, TermOrder::antidiag(f.rows(), f.cols()));
}

}  // namespace bicrys

#pragma once

#include <gmpxx.h>

#include <map>

#include "bicrys/exponent.hpp"

namespace bicrys {

using Rational = mpq_class;

// Element of Q[z_{ij}] over a fixed m x n ring. Terms are kept in the
// structural order of ExponentMatrix; no stored coefficient is zero.
class Polynomial {
 public:
  using TermMap = std::map<ExponentMatrix, Rational>;

  Polynomial() = default;
  Polynomial(int rows, int cols);

  static Polynomial constant(int rows, int cols, const Rational& c);
  // z_{r+1,c+1} with 0-based r, c.
  static Polynomial variable(int rows, int cols, int r, int c);
  static Polynomial monomial(const ExponentMatrix& M, const Rational& c = 1);

  int rows() const noexcept { return rows_; }
  int cols() const noexcept { return cols_; }
  bool is_zero() const noexcept { return terms_.empty(); }
  std::size_t term_count() const noexcept { return terms_.size(); }
  const TermMap& terms() const noexcept { return terms_; }
  Rational coefficient(const ExponentMatrix& M) const;
  long total_degree() const;
  bool is_constant() const;

  void add_term(const ExponentMatrix& M, const Rational& c);

  Polynomial& operator+=(const Polynomial& other);
  Polynomial& operator-=(const Polynomial& other);
  Polynomial& operator*=(const Rational& c);
  friend Polynomial operator+(Polynomial a, const Polynomial& b) { return a += b; }
  friend Polynomial operator-(Polynomial a, const Polynomial& b) { return a -= b; }
  friend Polynomial operator*(Polynomial a, const Rational& c) { return a *= c; }
  friend Polynomial operator*(const Rational& c, Polynomial a) { return a *= c; }
  friend Polynomial operator*(const Polynomial& a, const Polynomial& b);
  Polynomial operator-() const;
  Polynomial pow(unsigned k) const;
  // Multiply by the monomial z^M.
  Polynomial shifted(const ExponentMatrix& M) const;

  friend bool operator==(const Polynomial& a, const Polynomial& b) {
    return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.terms_ == b.terms_;
  }
  // Structural order, used only for canonical sorting and deduplication.
  friend bool operator<(const Polynomial& a, const Polynomial& b);

 private:
  void require_same_ring(const Polynomial& other) const;

  int rows_ = 0;
  int cols_ = 0;
  TermMap terms_;
};

}  // namespace bicrys

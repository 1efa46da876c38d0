#include "bicrys/polynomial.hpp"

#include <algorithm>

#include "bicrys/error.hpp"

namespace bicrys {

Polynomial::Polynomial(int rows, int cols) : rows_(rows), cols_(cols) {
  if (rows < 0 || cols < 0) throw DomainError("negative ring dimension");
}

Polynomial Polynomial::constant(int rows, int cols, const Rational& c) {
  Polynomial p(rows, cols);
  p.add_term(ExponentMatrix(rows, cols), c);
  return p;
}

Polynomial Polynomial::variable(int rows, int cols, int r, int c) {
  if (r < 0 || r >= rows || c < 0 || c >= cols) throw DomainError("variable index out of range");
  return monomial(ExponentMatrix::unit(rows, cols, r, c));
}

Polynomial Polynomial::monomial(const ExponentMatrix& M, const Rational& c) {
  Polynomial p(M.rows(), M.cols());
  p.add_term(M, c);
  return p;
}

Rational Polynomial::coefficient(const ExponentMatrix& M) const {
  auto it = terms_.find(M);
  return it == terms_.end() ? Rational(0) : it->second;
}

long Polynomial::total_degree() const {
  long d = -1;
  for (const auto& [M, c] : terms_) d = std::max(d, M.degree());
  return d;
}

bool Polynomial::is_constant() const {
  return terms_.empty() || (terms_.size() == 1 && terms_.begin()->first.is_zero());
}

void Polynomial::add_term(const ExponentMatrix& M, const Rational& c) {
  if (M.rows() != rows_ || M.cols() != cols_) throw DomainError("term outside the ring");
  if (c == 0) return;
  auto [it, inserted] = terms_.try_emplace(M, c);
  if (inserted) {
    // Callers may hand in an uncanonical quotient such as 2/2.
    it->second.canonicalize();
  } else {
    it->second += c;
    if (it->second == 0) terms_.erase(it);
  }
}

void Polynomial::require_same_ring(const Polynomial& other) const {
  if (rows_ != other.rows_ || cols_ != other.cols_)
    throw DomainError("polynomials live in different rings");
}

Polynomial& Polynomial::operator+=(const Polynomial& other) {
  require_same_ring(other);
  for (const auto& [M, c] : other.terms_) add_term(M, c);
  return *this;
}

Polynomial& Polynomial::operator-=(const Polynomial& other) {
  require_same_ring(other);
  for (const auto& [M, c] : other.terms_) add_term(M, -c);
  return *this;
}

Polynomial& Polynomial::operator*=(const Rational& c) {
  if (c == 0) {
    terms_.clear();
    return *this;
  }
  for (auto& [M, coef] : terms_) coef *= c;
  return *this;
}

Polynomial operator*(const Polynomial& a, const Polynomial& b) {
  a.require_same_ring(b);
  Polynomial out(a.rows_, a.cols_);
  for (const auto& [Ma, ca] : a.terms_)
    for (const auto& [Mb, cb] : b.terms_) out.add_term(Ma + Mb, ca * cb);
  return out;
}

Polynomial Polynomial::operator-() const {
  Polynomial out = *this;
  for (auto& [M, c] : out.terms_) c = -c;
  return out;
}

Polynomial Polynomial::pow(unsigned k) const {
  Polynomial result = constant(rows_, cols_, 1);
  Polynomial base = *this;
  while (k) {
    if (k & 1u) result = result * base;
    k >>= 1u;
    if (k) base = base * base;
  }
  return result;
}

Polynomial Polynomial::shifted(const ExponentMatrix& M) const {
  Polynomial out(rows_, cols_);
  for (const auto& [N, c] : terms_) out.terms_.emplace_hint(out.terms_.end(), N + M, c);
  return out;
}

bool operator<(const Polynomial& a, const Polynomial& b) {
  if (a.rows_ != b.rows_) return a.rows_ < b.rows_;
  if (a.cols_ != b.cols_) return a.cols_ < b.cols_;
  return std::lexicographical_compare(
      a.terms_.begin(), a.terms_.end(), b.terms_.begin(), b.terms_.end(),
      [](const auto& x, const auto& y) {
        if (x.first != y.first) return x.first < y.first;
        return cmp(x.second, y.second) < 0;
      });
}

}  // namespace bicrys

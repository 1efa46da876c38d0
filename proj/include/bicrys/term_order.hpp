#pragma once

#include <compare>
#include <cstdint>
#include <string>
#include <vector>

#include "bicrys/exponent.hpp"

namespace bicrys {

// A monomial order on m x n exponent matrices. Every kind reduces to:
// compare an optional weight, then pure lex along a chain of variables
// (flat 0-based cell indices, most significant first).
class TermOrder {
 public:
  enum class Kind { AntidiagLex, DiagLex, CustomLex, Weighted };

  // z_{1n} > z_{1,n-1} > ... > z_{11} > z_{2n} > ... > z_{m1}
  static TermOrder antidiag(int m, int n);
  // z_{11} > z_{12} > ... > z_{1n} > z_{21} > ... > z_{mn}
  static TermOrder diag(int m, int n);
  static TermOrder lex(int m, int n, std::vector<int> chain);
  // Nonnegative weights in row-major order; ties broken by the antidiagonal chain.
  static TermOrder weighted(int m, int n, std::vector<std::int64_t> weights);

  // "antidiag" | "diag" | "lex:<p1,p2,...>" | "weight:<w1,w2,...>".
  // Lex permutations list 1-based variable numbers (i-1)*n+j, most significant first.
  static TermOrder parse(const std::string& name, int m, int n);
  std::string name() const;

  Kind kind() const noexcept { return kind_; }
  int rows() const noexcept { return m_; }
  int cols() const noexcept { return n_; }
  const std::vector<int>& chain() const noexcept { return chain_; }
  const std::vector<std::int64_t>& weights() const noexcept { return weights_; }
  bool has_weights() const noexcept { return !weights_.empty(); }

  std::int64_t weight_of(const ExponentMatrix& M) const;
  std::strong_ordering compare(const ExponentMatrix& a, const ExponentMatrix& b) const;
  bool less(const ExponentMatrix& a, const ExponentMatrix& b) const {
    return compare(a, b) == std::strong_ordering::less;
  }

  friend bool operator==(const TermOrder&, const TermOrder&) = default;

 private:
  TermOrder(Kind kind, int m, int n, std::vector<int> chain, std::vector<std::int64_t> weights);

  Kind kind_ = Kind::AntidiagLex;
  int m_ = 0;
  int n_ = 0;
  std::vector<int> chain_;
  std::vector<std::int64_t> weights_;
};

}  // namespace bicrys

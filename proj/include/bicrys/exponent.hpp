#pragma once

#include <compare>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <initializer_list>
#include <span>
#include <string>
#include <vector>

namespace bicrys {

// Exponent matrix of a monomial in the m*n variables z_{ij}.
// Cells are addressed 0-based; text I/O is 1-based.
class ExponentMatrix {
 public:
  using value_type = std::int32_t;

  ExponentMatrix() = default;
  ExponentMatrix(int rows, int cols);
  ExponentMatrix(int rows, int cols, std::vector<value_type> entries);

  static ExponentMatrix from_rows(const std::vector<std::vector<int>>& rows);
  static ExponentMatrix from_rows(std::initializer_list<std::initializer_list<int>> rows);
  // Single variable z_{r+1,c+1}.
  static ExponentMatrix unit(int rows, int cols, int r, int c);

  int rows() const noexcept { return rows_; }
  int cols() const noexcept { return cols_; }
  std::size_t size() const noexcept { return entries_.size(); }

  value_type operator()(int r, int c) const { return entries_[index(r, c)]; }
  value_type& operator()(int r, int c) { return entries_[index(r, c)]; }
  value_type flat(std::size_t k) const { return entries_[k]; }
  value_type& flat(std::size_t k) { return entries_[k]; }
  std::span<const value_type> entries() const noexcept { return entries_; }

  long degree() const noexcept;
  bool is_zero() const noexcept;
  std::vector<long> row_sums() const;
  std::vector<long> col_sums() const;
  ExponentMatrix transposed() const;

  // Entrywise comparison: z^this divides z^other.
  bool divides(const ExponentMatrix& other) const;
  bool coprime(const ExponentMatrix& other) const;

  ExponentMatrix& operator+=(const ExponentMatrix& other);
  // Requires divisibility.
  ExponentMatrix& operator-=(const ExponentMatrix& other);
  friend ExponentMatrix operator+(ExponentMatrix a, const ExponentMatrix& b) { return a += b; }
  friend ExponentMatrix operator-(ExponentMatrix a, const ExponentMatrix& b) { return a -= b; }
  static ExponentMatrix lcm(const ExponentMatrix& a, const ExponentMatrix& b);

  // Structural order (dims, then entries); not a term order.
  friend auto operator<=>(const ExponentMatrix&, const ExponentMatrix&) = default;
  friend bool operator==(const ExponentMatrix&, const ExponentMatrix&) = default;

  std::size_t hash() const noexcept;

 private:
  std::size_t index(int r, int c) const noexcept {
    return static_cast<std::size_t>(r) * static_cast<std::size_t>(cols_) +
           static_cast<std::size_t>(c);
  }
  void require_same_shape(const ExponentMatrix& other) const;

  int rows_ = 0;
  int cols_ = 0;
  std::vector<value_type> entries_;
};

// "[[a,b],[c,d]]"
std::string to_string(const ExponentMatrix& M);
// "a,b;c,d" with rows split on ';'. Row lengths must agree.
ExponentMatrix parse_matrix_literal(const std::string& text);

// Monomial text such as "z[1,3]*z[2,1]^2"; "1" for the zero matrix.
std::string monomial_string(const ExponentMatrix& M);

// Visits every m x n exponent matrix of total degree exactly d, in a fixed order.
void for_each_of_degree(int m, int n, int d, const std::function<void(const ExponentMatrix&)>& visit);
// All matrices of total degree <= d, degree ascending.
void for_each_up_to_degree(int m, int n, int d,
                           const std::function<void(const ExponentMatrix&)>& visit);

}  // namespace bicrys

template <>
struct std::hash<bicrys::ExponentMatrix> {
  std::size_t operator()(const bicrys::ExponentMatrix& M) const noexcept { return M.hash(); }
};

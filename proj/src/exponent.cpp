#include "bicrys/exponent.hpp"

#include <algorithm>
#include <limits>
#include <sstream>

#include "bicrys/error.hpp"

namespace bicrys {

ExponentMatrix::ExponentMatrix(int rows, int cols) : rows_(rows), cols_(cols) {
  if (rows < 0 || cols < 0) throw DomainError("negative matrix dimension");
  entries_.assign(static_cast<std::size_t>(rows) * static_cast<std::size_t>(cols), 0);
}

ExponentMatrix::ExponentMatrix(int rows, int cols, std::vector<value_type> entries)
    : rows_(rows), cols_(cols), entries_(std::move(entries)) {
  if (rows < 0 || cols < 0) throw DomainError("negative matrix dimension");
  if (entries_.size() != static_cast<std::size_t>(rows) * static_cast<std::size_t>(cols))
    throw DomainError("entry count does not match dimensions");
  for (auto e : entries_)
    if (e < 0) throw DomainError("negative exponent");
}

ExponentMatrix ExponentMatrix::from_rows(const std::vector<std::vector<int>>& rows) {
  const int m = static_cast<int>(rows.size());
  const int n = m == 0 ? 0 : static_cast<int>(rows.front().size());
  std::vector<value_type> flat;
  flat.reserve(static_cast<std::size_t>(m) * static_cast<std::size_t>(n));
  for (const auto& row : rows) {
    if (static_cast<int>(row.size()) != n) throw DomainError("ragged exponent matrix");
    flat.insert(flat.end(), row.begin(), row.end());
  }
  return ExponentMatrix(m, n, std::move(flat));
}

ExponentMatrix ExponentMatrix::from_rows(std::initializer_list<std::initializer_list<int>> rows) {
  std::vector<std::vector<int>> v;
  for (const auto& r : rows) v.emplace_back(r);
  return from_rows(v);
}

ExponentMatrix ExponentMatrix::unit(int rows, int cols, int r, int c) {
  ExponentMatrix M(rows, cols);
  M(r, c) = 1;
  return M;
}

long ExponentMatrix::degree() const noexcept {
  long d = 0;
  for (auto e : entries_) d += e;
  return d;
}

bool ExponentMatrix::is_zero() const noexcept {
  return std::all_of(entries_.begin(), entries_.end(), [](value_type e) { return e == 0; });
}

std::vector<long> ExponentMatrix::row_sums() const {
  std::vector<long> s(static_cast<std::size_t>(rows_), 0);
  for (int r = 0; r < rows_; ++r)
    for (int c = 0; c < cols_; ++c) s[static_cast<std::size_t>(r)] += (*this)(r, c);
  return s;
}

std::vector<long> ExponentMatrix::col_sums() const {
  std::vector<long> s(static_cast<std::size_t>(cols_), 0);
  for (int r = 0; r < rows_; ++r)
    for (int c = 0; c < cols_; ++c) s[static_cast<std::size_t>(c)] += (*this)(r, c);
  return s;
}

ExponentMatrix ExponentMatrix::transposed() const {
  ExponentMatrix T(cols_, rows_);
  for (int r = 0; r < rows_; ++r)
    for (int c = 0; c < cols_; ++c) T(c, r) = (*this)(r, c);
  return T;
}

void ExponentMatrix::require_same_shape(const ExponentMatrix& other) const {
  if (rows_ != other.rows_ || cols_ != other.cols_)
    throw DomainError("exponent matrix dimension mismatch");
}

bool ExponentMatrix::divides(const ExponentMatrix& other) const {
  require_same_shape(other);
  for (std::size_t k = 0; k < entries_.size(); ++k)
    if (entries_[k] > other.entries_[k]) return false;
  return true;
}

bool ExponentMatrix::coprime(const ExponentMatrix& other) const {
  require_same_shape(other);
  for (std::size_t k = 0; k < entries_.size(); ++k)
    if (entries_[k] != 0 && other.entries_[k] != 0) return false;
  return true;
}

ExponentMatrix& ExponentMatrix::operator+=(const ExponentMatrix& other) {
  require_same_shape(other);
  for (std::size_t k = 0; k < entries_.size(); ++k) {
    value_type sum;
    if (__builtin_add_overflow(entries_[k], other.entries_[k], &sum))
      throw DomainError("exponent overflow");
    entries_[k] = sum;
  }
  return *this;
}

ExponentMatrix& ExponentMatrix::operator-=(const ExponentMatrix& other) {
  require_same_shape(other);
  for (std::size_t k = 0; k < entries_.size(); ++k) {
    if (other.entries_[k] > entries_[k]) throw DomainError("exponent subtraction below zero");
    entries_[k] -= other.entries_[k];
  }
  return *this;
}

ExponentMatrix ExponentMatrix::lcm(const ExponentMatrix& a, const ExponentMatrix& b) {
  a.require_same_shape(b);
  ExponentMatrix L = a;
  for (std::size_t k = 0; k < L.entries_.size(); ++k)
    L.entries_[k] = std::max(a.entries_[k], b.entries_[k]);
  return L;
}

std::size_t ExponentMatrix::hash() const noexcept {
  std::size_t h = static_cast<std::size_t>(rows_) * 1000003u + static_cast<std::size_t>(cols_);
  for (auto e : entries_) h = h * 1099511628211ull ^ static_cast<std::size_t>(e);
  return h;
}

std::string to_string(const ExponentMatrix& M) {
  std::ostringstream os;
  os << '[';
  for (int r = 0; r < M.rows(); ++r) {
    if (r) os << ',';
    os << '[';
    for (int c = 0; c < M.cols(); ++c) {
      if (c) os << ',';
      os << M(r, c);
    }
    os << ']';
  }
  os << ']';
  return os.str();
}

ExponentMatrix parse_matrix_literal(const std::string& text) {
  std::vector<std::vector<int>> rows;
  std::vector<int> current;
  std::string token;
  auto flush_token = [&](std::size_t pos) {
    std::string t;
    for (char ch : token)
      if (ch != ' ' && ch != '\t') t += ch;
    if (t.empty()) throw ParseError("empty matrix entry", pos);
    std::size_t used = 0;
    long v = 0;
    try {
      v = std::stol(t, &used);
    } catch (const std::exception&) {
      throw ParseError("matrix entry is not an integer", pos);
    }
    if (used != t.size()) throw ParseError("matrix entry is not an integer", pos);
    if (v < 0) throw ParseError("negative matrix entry", pos);
    if (v > std::numeric_limits<ExponentMatrix::value_type>::max())
      throw ParseError("matrix entry too large", pos);
    current.push_back(static_cast<int>(v));
    token.clear();
  };
  for (std::size_t i = 0; i <= text.size(); ++i) {
    const char ch = i < text.size() ? text[i] : ';';
    if (ch == ',') {
      flush_token(i);
    } else if (ch == ';') {
      flush_token(i);
      rows.push_back(std::move(current));
      current.clear();
    } else {
      token += ch;
    }
  }
  for (const auto& r : rows)
    if (r.size() != rows.front().size()) throw ParseError("ragged matrix literal");
  return ExponentMatrix::from_rows(rows);
}

std::string monomial_string(const ExponentMatrix& M) {
  std::string out;
  for (int r = 0; r < M.rows(); ++r)
    for (int c = 0; c < M.cols(); ++c) {
      const auto e = M(r, c);
      if (e == 0) continue;
      if (!out.empty()) out += '*';
      out += "z[" + std::to_string(r + 1) + "," + std::to_string(c + 1) + "]";
      if (e > 1) out += "^" + std::to_string(e);
    }
  return out.empty() ? "1" : out;
}

namespace {

void fill(ExponentMatrix& M, std::size_t k, int remaining,
          const std::function<void(const ExponentMatrix&)>& visit) {
  if (k + 1 == M.size()) {
    M.flat(k) = remaining;
    visit(M);
    M.flat(k) = 0;
    return;
  }
  for (int e = remaining; e >= 0; --e) {
    M.flat(k) = e;
    fill(M, k + 1, remaining - e, visit);
  }
  M.flat(k) = 0;
}

}  // namespace

void for_each_of_degree(int m, int n, int d,
                        const std::function<void(const ExponentMatrix&)>& visit) {
  if (d < 0) return;
  ExponentMatrix M(m, n);
  if (M.size() == 0) {
    if (d == 0) visit(M);
    return;
  }
  fill(M, 0, d, visit);
}

void for_each_up_to_degree(int m, int n, int d,
                           const std::function<void(const ExponentMatrix&)>& visit) {
  for (int e = 0; e <= d; ++e) for_each_of_degree(m, n, e, visit);
}

}  // namespace bicrys

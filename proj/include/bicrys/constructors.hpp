#pragma once

#include <compare>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "bicrys/levi.hpp"
#include "bicrys/polynomial.hpp"
#include "bicrys/strip.hpp"
#include "bicrys/tableau.hpp"

namespace bicrys {

// One-line notation, values 1..n.
class Permutation {
 public:
  explicit Permutation(std::vector<int> one_line);
  static Permutation identity(int n);
  // "31542" (single digits) or "3,1,5,4,2".
  static Permutation parse(const std::string& text);

  int size() const noexcept { return static_cast<int>(one_line_.size()); }
  const std::vector<int>& one_line() const noexcept { return one_line_; }
  int operator()(int i) const { return one_line_[static_cast<std::size_t>(i - 1)]; }
  int inverse(int j) const;

  friend auto operator<=>(const Permutation&, const Permutation&) = default;
  friend bool operator==(const Permutation&, const Permutation&) = default;

 private:
  std::vector<int> one_line_;
};

std::string to_string(const Permutation& w);
// Lexicographic order.
std::vector<Permutation> all_permutations(int n);

enum class Cell { Variable, Zero, One };

class SpecializedMatrix {
 public:
  SpecializedMatrix(int size, std::vector<Cell> cells);

  int size() const noexcept { return size_; }
  // 1-based.
  Cell at(int i, int j) const { return cells_[static_cast<std::size_t>((i - 1) * size_ + (j - 1))]; }

  friend bool operator==(const SpecializedMatrix&, const SpecializedMatrix&) = default;

 private:
  int size_;
  std::vector<Cell> cells_;
};

// Rows of "z", "0", "1" separated by spaces, one row per line.
std::string to_string(const SpecializedMatrix& Z);

// Index lists are 1-based and strictly increasing. Generic minors live in the m x n ring.
Polynomial minor(const std::vector<int>& rows, const std::vector<int>& cols, int m, int n);
// Minor of a specialized matrix, in the size x size ring.
Polynomial minor(const std::vector<int>& rows, const std::vector<int>& cols, const SpecializedMatrix& Z);

// All k-subsets of {lo..hi}, lexicographic.
std::vector<std::vector<int>> index_subsets(int lo, int hi, int k);

void validate_strips(const ContiguousSpec& strips, int m, int n);
// Union over strips of the rank x rank minors, duplicates removed, first occurrence order.
std::vector<Polynomial> contiguous_determinantal(const ContiguousSpec& strips, int m, int n);
// All k x k minors of the generic m x n matrix.
std::vector<Polynomial> determinantal(int k, int m, int n);
std::vector<Polynomial> irrelevant_power(int d, int m, int n);

// Strip kinds accepted by knutson_determinantal.
bool is_northwest(const Strip& s);
bool is_southeast(const Strip& s, int m, int n);
bool is_column_strip(const Strip& s, int m);
bool is_row_strip(const Strip& s, int n);
std::vector<Polynomial> knutson_determinantal(const ContiguousSpec& strips, int m, int n);

// Cuts a-1, a' on rows and b-1, b' on columns for every strip.
LeviDatum induced_datum(const ContiguousSpec& strips, int m, int n);

using IntTable = std::vector<std::vector<int>>;

// r_w(i,j): ones of the permutation matrix weakly northwest of (i,j). Row i-1 holds row i.
IntTable rank_function(const Permutation& w);
std::vector<Polynomial> schubert_determinantal(const Permutation& w);
// Fulton's essential set as northwest strips [1,i] x [1,j] of rank r_w(i,j)+1.
ContiguousSpec essential_strips(const Permutation& w);

SpecializedMatrix kl_specialize(const Permutation& v);
// i + j - (r_v(i,j) + 1)
IntTable drift_table(const Permutation& v);
// Variable cells of Z_v with drift k, row-major, 1-based.
std::vector<std::pair<int, int>> drifted_antidiagonal(const Permutation& v, int k);
// Determinant of the northwest k x k block of Z_v.
Polynomial basic_minor(const Permutation& v, int k);

struct BasicLeadRow {
  int k;
  ExponentMatrix expected;               // product over the drifted antidiagonal
  std::optional<ExponentMatrix> actual;  // nullopt when the basic minor vanishes
  bool matches() const { return !actual || *actual == expected; }
};

struct BasicLeadReport {
  Permutation v;
  std::vector<BasicLeadRow> rows;
  bool ok() const;
};

// Compares every nonzero basic minor's antidiagonal-lex lead with its drift product.
BasicLeadReport verify_basic_lead_terms(const Permutation& v);

// Rows of a filling whose columns strictly increase; rows are left-justified and weakly shrink.
using Filling = std::vector<std::vector<int>>;

// Product of the minors indexed by corresponding columns of P (rows) and Q (columns).
Polynomial bitableau(const Filling& P, const Filling& Q, int m, int n);
// Every bitableau of shape lambda, duplicates removed.
std::vector<Polynomial> shape_ideal_generators(const Partition& lambda, int m, int n);
// Shapes whose bitableaux generate the ordinary or symbolic r-th power of the k x k minors.
std::vector<Partition> power_shapes(int k, int r, bool symbolic, int m, int n);
std::vector<Polynomial> power_generators(int k, int r, bool symbolic, int m, int n);

}  // namespace bicrys

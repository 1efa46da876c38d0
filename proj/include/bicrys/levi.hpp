#pragma once

#include <span>
#include <utility>
#include <vector>

#include "bicrys/polynomial.hpp"

namespace bicrys {

// Cut points 0 = i_0 < i_1 < ... < i_r = m for rows, likewise for columns.
// Block t covers the 1-based indices i_{t-1}+1 .. i_t.
class LeviDatum {
 public:
  LeviDatum(std::vector<int> row_cuts, std::vector<int> col_cuts);

  static LeviDatum torus(int m, int n);
  static LeviDatum full(int m, int n);

  int rows() const noexcept { return row_cuts_.back(); }
  int cols() const noexcept { return col_cuts_.back(); }
  const std::vector<int>& row_cuts() const noexcept { return row_cuts_; }
  const std::vector<int>& col_cuts() const noexcept { return col_cuts_; }
  std::size_t row_block_count() const noexcept { return row_cuts_.size() - 1; }
  std::size_t col_block_count() const noexcept { return col_cuts_.size() - 1; }
  // 1-based closed intervals [a, b].
  std::vector<std::pair<int, int>> row_blocks() const;
  std::vector<std::pair<int, int>> col_blocks() const;
  std::vector<int> row_block_sizes() const;
  std::vector<int> col_block_sizes() const;

  // Index i (1-based) with i and i+1 in the same block.
  bool row_index_admissible(int i) const;
  bool col_index_admissible(int j) const;

  friend bool operator==(const LeviDatum&, const LeviDatum&) = default;

 private:
  std::vector<int> row_cuts_;
  std::vector<int> col_cuts_;
};

enum class Side { Row, Col };

// Row sums followed by column sums.
using Multidegree = std::vector<long>;

Multidegree multidegree(const ExponentMatrix& M);
bool is_multihomogeneous(const Polynomial& f);

// Row side: z_{i,b} -> z_{i,b} + z_{j,b}. Column side: z_{a,i} -> z_{a,i} + z_{a,j}.
// Indices are 1-based.
Polynomial elementary_substitution(const Polynomial& f, Side side, int i, int j);

// Stability of the ideal generated by `gens` under L_I x L_J.
bool is_levi_stable(std::span<const Polynomial> gens, const LeviDatum& datum);

}  // namespace bicrys

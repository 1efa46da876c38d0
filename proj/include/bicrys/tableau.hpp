#pragma once

#include <compare>
#include <functional>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "bicrys/bicrystal.hpp"
#include "bicrys/exponent.hpp"

namespace bicrys {

class Partition {
 public:
  Partition() = default;
  // Trailing zeros are dropped; the rest must be weakly decreasing and positive.
  explicit Partition(std::vector<int> parts);

  const std::vector<int>& parts() const noexcept { return parts_; }
  int length() const noexcept { return static_cast<int>(parts_.size()); }
  int size() const noexcept;
  bool empty() const noexcept { return parts_.empty(); }
  int operator[](int k) const { return k < length() ? parts_[static_cast<std::size_t>(k)] : 0; }
  Partition conjugate() const;

  friend auto operator<=>(const Partition&, const Partition&) = default;
  friend bool operator==(const Partition&, const Partition&) = default;

 private:
  std::vector<int> parts_;
};

using PartitionTuple = std::vector<Partition>;

// "(2,1)", "()"
std::string to_string(const Partition& p);
// "(1);(2,1);()"
std::string to_string(const PartitionTuple& t);
Partition parse_partition(const std::string& text);
PartitionTuple parse_partition_tuple(const std::string& text);

// All partitions of n with at most `max_length` parts, in decreasing lex order.
std::vector<Partition> partitions_of(int n, int max_length);

// Rows of positive entries; rows weakly increase, columns strictly increase.
class Tableau {
 public:
  Tableau() = default;
  explicit Tableau(std::vector<std::vector<int>> rows);

  const std::vector<std::vector<int>>& rows() const noexcept { return rows_; }
  Partition shape() const;
  int box_count() const noexcept;
  bool empty() const noexcept { return rows_.empty(); }
  int max_entry() const noexcept;

  // Skips validation; the caller guarantees a semistandard filling.
  static Tableau unchecked(std::vector<std::vector<int>> rows);

  friend auto operator<=>(const Tableau&, const Tableau&) = default;
  friend bool operator==(const Tableau&, const Tableau&) = default;

 private:
  std::vector<std::vector<int>> rows_;
};

std::string to_string(const Tableau& T);
// Rows separated by ';', entries by ','.
Tableau parse_tableau(const std::string& text);
bool is_semistandard(const std::vector<std::vector<int>>& rows);

struct TableauPair {
  Tableau P;
  Tableau Q;
  friend auto operator<=>(const TableauPair&, const TableauPair&) = default;
  friend bool operator==(const TableauPair&, const TableauPair&) = default;
};

Tableau row_insert(const Tableau& T, int x);
Tableau insertion_tableau(const Word& w);

// (tab(row word), tab(column word))
TableauPair rsk(const ExponentMatrix& M);
// Reverse bumping; P entries index rows, Q entries index columns.
ExponentMatrix rsk_inverse(const TableauPair& pair, int m, int n);

// Columns bottom to top, left to right.
Word reading_word(const Tableau& T);
Word reverse_reading_word(const Tableau& T);

// Elementary Knuth relation on positions pos..pos+2 (0-based).
// rule 1: prq <-> rpq when p <= q < r; rule 2: qpr <-> qrp when p < q <= r.
std::optional<Word> knuth_move(const Word& w, std::size_t pos, int rule);

std::optional<Tableau> crystal_op_tab(const Tableau& T, BicrystalOp::Kind kind, int i);

bool is_ballot(const Word& w, int a, int b);
// K is a cut set 0 = k_0 < ... < k_t; entries above k_t are ignored.
bool is_K_LR(const Tableau& T, const std::vector<int>& cuts);
std::vector<int> content(const Tableau& T, int a, int b);
Tableau supersemistandard(const Partition& lambda, int a, int a2);

int width(const Word& w, int a, int b);
int width(const Tableau& T, int a, int b);

// Column-major backtracking; deterministic order. `content` fixes the count of
// each value 1..maxentry when given.
void enumerate_ssyt(const Partition& shape, int maxentry, const std::optional<std::vector<int>>& content,
                    const std::function<void(const Tableau&)>& visit);
std::vector<Tableau> all_ssyt(const Partition& shape, int maxentry,
                              const std::optional<std::vector<int>>& content = std::nullopt);

}  // namespace bicrys

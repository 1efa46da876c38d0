#pragma once

#include <optional>
#include <string>
#include <vector>

#include "bicrys/groebner.hpp"
#include "bicrys/levi.hpp"

namespace bicrys {

using Word = std::vector<int>;

struct BicrystalOp {
  enum class Kind { Raise, Lower };
  Kind kind = Kind::Lower;
  Side axis = Side::Row;
  int index = 1;  // 1-based; acts on letters index and index+1

  static BicrystalOp f_row(int i) { return {Kind::Lower, Side::Row, i}; }
  static BicrystalOp e_row(int i) { return {Kind::Raise, Side::Row, i}; }
  static BicrystalOp f_col(int j) { return {Kind::Lower, Side::Col, j}; }
  static BicrystalOp e_col(int j) { return {Kind::Raise, Side::Col, j}; }

  // "f_1^row", "e_2^col"
  std::string name() const;
  // Accepts the output of name() and the compact "f1row" form.
  static BicrystalOp parse(const std::string& text);

  friend bool operator==(const BicrystalOp&, const BicrystalOp&) = default;
};

// Columns left to right, rows top to bottom, M_rc copies of r (1-based).
Word row_word(const ExponentMatrix& M);
Word col_word(const ExponentMatrix& M);

// Bracket rule on a word: letter i is ')', letter i+1 is '('.
// Returns the position whose letter changes, if any.
std::optional<std::size_t> bracket_position(const Word& w, int i, BicrystalOp::Kind kind);
std::optional<Word> apply_word_op(const Word& w, int i, BicrystalOp::Kind kind);

std::optional<ExponentMatrix> apply_op(const ExponentMatrix& M, const BicrystalOp& op);

// For each index not a cut point: f and e, rows first.
std::vector<BicrystalOp> admissible_ops(const LeviDatum& datum);
bool is_highest_weight(const ExponentMatrix& M, const LeviDatum& datum);

struct TestSet {
  BicrystalOp op;
  TermOrder order;
  std::vector<ExponentMatrix> members;  // increasing in `order`
};

TestSet test_set(const GroebnerBasis& gb, const BicrystalOp& op);
TestSet minimal_test_set(const TestSet& ts, const GroebnerBasis& gb);

struct Witness {
  BicrystalOp op;
  ExponentMatrix source;  // in the initial ideal
  ExponentMatrix image;   // standard
};

struct Verdict {
  bool bicrystalline = true;
  std::optional<Witness> witness;
};

// The witness comes from the first admissible operator (in admissible_ops order)
// that fails, and is the smallest failing test-set member under the basis order.
Verdict is_bicrystalline(const GroebnerBasis& gb, const LeviDatum& datum);
// Closure check of the initial-ideal exponents over every matrix of degree <= d.
Verdict brute_force_bicrystalline(const GroebnerBasis& gb, const LeviDatum& datum, int d);

}  // namespace bicrys

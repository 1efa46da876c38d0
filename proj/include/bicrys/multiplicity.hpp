#pragma once

#include <compare>
#include <functional>
#include <map>
#include <optional>
#include <vector>

#include "bicrys/groebner.hpp"
#include "bicrys/levi.hpp"
#include "bicrys/strip.hpp"
#include "bicrys/tableau.hpp"

namespace bicrys {

enum class Module { Quotient, Ideal };

struct CharacterKey {
  PartitionTuple lambda;  // one partition per row block
  PartitionTuple mu;      // one partition per column block

  int degree() const;
  friend auto operator<=>(const CharacterKey&, const CharacterKey&) = default;
  friend bool operator==(const CharacterKey&, const CharacterKey&) = default;
};

struct MultiplicityTable {
  LeviDatum datum;
  int max_degree = 0;
  std::map<CharacterKey, long> entries;  // positive values only

  long at(const CharacterKey& key) const;
  friend bool operator==(const MultiplicityTable&, const MultiplicityTable&) = default;
};

// Per-block contents (as partitions, trailing zeros dropped) of the RSK pair.
CharacterKey weight_key(const TableauPair& pair, const LeviDatum& datum);

void for_each_lr_pair(const LeviDatum& datum, const PartitionTuple& lambda, const PartitionTuple& mu,
                      const std::function<void(const TableauPair&)>& visit);
std::vector<TableauPair> lr_pairs(const LeviDatum& datum, const PartitionTuple& lambda,
                                  const PartitionTuple& mu);

// Matrices RSK^{-1}(P,Q) over LR pairs, kept when standard (quotient) or not (ideal).
std::vector<ExponentMatrix> counted_matrices(const GroebnerBasis& gb, const LeviDatum& datum,
                                             const PartitionTuple& lambda, const PartitionTuple& mu,
                                             Module side);
long multiplicity(const GroebnerBasis& gb, const LeviDatum& datum, const PartitionTuple& lambda,
                  const PartitionTuple& mu, Module side);

MultiplicityTable character_table(const GroebnerBasis& gb, const LeviDatum& datum, int d, Module side);

// Peels irreducible characters off the weight multiset of the (non)standard
// monomials, largest weight first. Throws OracleError on a negative remainder.
MultiplicityTable character_oracle(const GroebnerBasis& gb, const LeviDatum& datum, int d, Module side);

// Product over blocks of the number of SSYT with entries bounded by the block size.
long dim_irrep(const PartitionTuple& lambda, const std::vector<int>& block_sizes);

// Width rule for full-width strips. With column strips [1,m] x [b,b'], counts Q in
// LR(J, block_side) of shape full_side meeting every width bound (quotient) or
// failing one (ideal); row strips likewise with P and I.
long width_multiplicity(const ContiguousSpec& strips, int m, int n, const std::vector<int>& block_cuts,
                        const PartitionTuple& block_side, const Partition& full_side, Module side);

}  // namespace bicrys

#pragma once

// Slow, independent reimplementations used to cross-check the library.

#include <map>
#include <optional>
#include <random>
#include <string>
#include <vector>

#include "bicrys/bicrystal.hpp"
#include "bicrys/exponent.hpp"
#include "bicrys/polynomial.hpp"
#include "bicrys/tableau.hpp"

namespace oracle {

using bicrys::ExponentMatrix;
using bicrys::Polynomial;
using Rows = std::vector<std::vector<int>>;

// Leibniz expansion over all permutations of the column list.
Polynomial leibniz_minor(const std::vector<int>& rows, const std::vector<int>& cols, int m, int n);

// Bracket rule by repeated cancellation of adjacent "()" pairs in a string.
std::optional<bicrys::Word> word_op(const bicrys::Word& w, int i, bool lower);

// RSK through the lexicographically sorted two-line array, with explicit bumping.
std::pair<Rows, Rows> rsk(const ExponentMatrix& M);

// Number of SSYT of the given shape with entries <= N, by the hook-content formula.
long ssyt_count(const std::vector<int>& shape, int N);

// Longest strictly decreasing subsequence of the letters in [a, b], by DP.
int decreasing_run(const bicrys::Word& w, int a, int b);

// Dimension of the quotient in each multidegree of total degree d, computed as
// (#monomials) - rank(span of monomial multiples of the generators).
// Generators must be multihomogeneous.
std::map<std::vector<long>, long> hilbert_by_multidegree(const std::vector<Polynomial>& gens, int m, int n,
                                                        int d);

// Rank over Q of a set of polynomials, by Gaussian elimination on their coefficient vectors.
long rank(const std::vector<Polynomial>& polys);

ExponentMatrix random_matrix(std::mt19937_64& rng, int m, int n, int max_entry);

}  // namespace oracle

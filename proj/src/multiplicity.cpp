#include "bicrys/multiplicity.hpp"

#include <algorithm>

#include "bicrys/error.hpp"

namespace bicrys {

int CharacterKey::degree() const {
  int d = 0;
  for (const auto& p : lambda) d += p.size();
  return d;
}

long MultiplicityTable::at(const CharacterKey& key) const {
  auto it = entries.find(key);
  return it == entries.end() ? 0 : it->second;
}

namespace {

PartitionTuple block_contents(const Tableau& T, const std::vector<std::pair<int, int>>& blocks) {
  PartitionTuple out;
  for (auto [a, b] : blocks) {
    auto c = content(T, a, b);
    if (!std::is_sorted(c.begin(), c.end(), std::greater<>()))
      throw DomainError("block content of " + to_string(T) + " is not a partition");
    out.emplace_back(std::move(c));
  }
  return out;
}

// Concatenated per-block contents, or nullopt when a partition is too long for its block.
std::optional<std::vector<int>> padded_content(const PartitionTuple& parts,
                                               const std::vector<std::pair<int, int>>& blocks) {
  if (parts.size() != blocks.size())
    throw DomainError("partition tuple has " + std::to_string(parts.size()) + " entries but the datum has " +
                      std::to_string(blocks.size()) + " blocks");
  std::vector<int> out;
  for (std::size_t k = 0; k < blocks.size(); ++k) {
    const int size = blocks[k].second - blocks[k].first + 1;
    if (parts[k].length() > size) return std::nullopt;
    for (int r = 0; r < size; ++r) out.push_back(parts[k][r]);
  }
  return out;
}

int total_size(const PartitionTuple& t) {
  int s = 0;
  for (const auto& p : t) s += p.size();
  return s;
}

std::vector<Tableau> lr_tableaux(const Partition& shape, int maxentry, const std::vector<int>& content,
                                 const std::vector<int>& cuts) {
  std::vector<Tableau> out;
  enumerate_ssyt(shape, maxentry, content, [&](const Tableau& T) {
    if (is_K_LR(T, cuts)) out.push_back(T);
  });
  return out;
}

}  // namespace

CharacterKey weight_key(const TableauPair& pair, const LeviDatum& datum) {
  return {block_contents(pair.P, datum.row_blocks()), block_contents(pair.Q, datum.col_blocks())};
}

void for_each_lr_pair(const LeviDatum& datum, const PartitionTuple& lambda, const PartitionTuple& mu,
                      const std::function<void(const TableauPair&)>& visit) {
  const int m = datum.rows();
  const int n = datum.cols();
  const auto row_content = padded_content(lambda, datum.row_blocks());
  const auto col_content = padded_content(mu, datum.col_blocks());
  const int N = total_size(lambda);
  if (N != total_size(mu)) throw DomainError("row and column partition tuples have different sizes");
  if (!row_content || !col_content) return;
  for (const auto& nu : partitions_of(N, std::min(m, n))) {
    const auto Ps = lr_tableaux(nu, m, *row_content, datum.row_cuts());
    if (Ps.empty()) continue;
    const auto Qs = lr_tableaux(nu, n, *col_content, datum.col_cuts());
    for (const auto& P : Ps)
      for (const auto& Q : Qs) visit(TableauPair{P, Q});
  }
}

std::vector<TableauPair> lr_pairs(const LeviDatum& datum, const PartitionTuple& lambda,
                                  const PartitionTuple& mu) {
  std::vector<TableauPair> out;
  for_each_lr_pair(datum, lambda, mu, [&](const TableauPair& p) { out.push_back(p); });
  return out;
}

std::vector<ExponentMatrix> counted_matrices(const GroebnerBasis& gb, const LeviDatum& datum,
                                             const PartitionTuple& lambda, const PartitionTuple& mu,
                                             Module side) {
  if (gb.rows() != datum.rows() || gb.cols() != datum.cols())
    throw DomainError("basis ring does not match the datum");
  const auto leads = gb.lead_exponents();
  std::vector<ExponentMatrix> out;
  for_each_lr_pair(datum, lambda, mu, [&](const TableauPair& pair) {
    ExponentMatrix M = rsk_inverse(pair, datum.rows(), datum.cols());
    if (in_initial_ideal(M, leads) == (side == Module::Ideal)) out.push_back(std::move(M));
  });
  return out;
}

long multiplicity(const GroebnerBasis& gb, const LeviDatum& datum, const PartitionTuple& lambda,
                  const PartitionTuple& mu, Module side) {
  return static_cast<long>(counted_matrices(gb, datum, lambda, mu, side).size());
}

MultiplicityTable character_table(const GroebnerBasis& gb, const LeviDatum& datum, int d, Module side) {
  if (gb.rows() != datum.rows() || gb.cols() != datum.cols())
    throw DomainError("basis ring does not match the datum");
  MultiplicityTable table{datum, d, {}};
  const auto leads = gb.lead_exponents();
  for_each_up_to_degree(datum.rows(), datum.cols(), d, [&](const ExponentMatrix& M) {
    if (in_initial_ideal(M, leads) != (side == Module::Ideal)) return;
    if (!is_highest_weight(M, datum)) return;
    ++table.entries[weight_key(rsk(M), datum)];
  });
  return table;
}

namespace {

using Weight = std::vector<long>;
using WeightMultiset = std::map<Weight, long>;

WeightMultiset block_weights(const Partition& lambda, int size) {
  WeightMultiset out;
  enumerate_ssyt(lambda, size, std::nullopt, [&](const Tableau& T) {
    auto c = content(T, 1, size);
    ++out[Weight(c.begin(), c.end())];
  });
  return out;
}

WeightMultiset product(const WeightMultiset& a, const WeightMultiset& b) {
  WeightMultiset out;
  for (const auto& [wa, ca] : a)
    for (const auto& [wb, cb] : b) {
      Weight w = wa;
      w.insert(w.end(), wb.begin(), wb.end());
      out[w] += ca * cb;
    }
  return out;
}

WeightMultiset irreducible_weights(const PartitionTuple& lambda, const std::vector<int>& sizes) {
  WeightMultiset acc{{Weight{}, 1}};
  for (std::size_t k = 0; k < sizes.size(); ++k) acc = product(acc, block_weights(lambda[k], sizes[k]));
  return acc;
}

PartitionTuple dominant_split(const Weight& w, std::size_t offset, const std::vector<int>& sizes) {
  PartitionTuple out;
  std::size_t pos = offset;
  for (int s : sizes) {
    std::vector<int> seg;
    for (int k = 0; k < s; ++k) seg.push_back(static_cast<int>(w[pos++]));
    if (!std::is_sorted(seg.begin(), seg.end(), std::greater<>()))
      throw OracleError("largest surviving weight is not dominant");
    out.emplace_back(std::move(seg));
  }
  return out;
}

}  // namespace

MultiplicityTable character_oracle(const GroebnerBasis& gb, const LeviDatum& datum, int d, Module side) {
  if (gb.rows() != datum.rows() || gb.cols() != datum.cols())
    throw DomainError("basis ring does not match the datum");
  const int m = datum.rows();
  const auto leads = gb.lead_exponents();
  WeightMultiset remaining;
  for_each_up_to_degree(m, datum.cols(), d, [&](const ExponentMatrix& M) {
    if (in_initial_ideal(M, leads) != (side == Module::Ideal)) return;
    Weight w = M.row_sums();
    const auto c = M.col_sums();
    w.insert(w.end(), c.begin(), c.end());
    ++remaining[w];
  });

  const auto row_sizes = datum.row_block_sizes();
  const auto col_sizes = datum.col_block_sizes();
  MultiplicityTable table{datum, d, {}};
  while (!remaining.empty()) {
    const auto top = std::prev(remaining.end());
    const Weight highest = top->first;
    const long count = top->second;
    CharacterKey key{dominant_split(highest, 0, row_sizes),
                     dominant_split(highest, static_cast<std::size_t>(m), col_sizes)};
    const auto rw = irreducible_weights(key.lambda, row_sizes);
    const auto cw = irreducible_weights(key.mu, col_sizes);
    for (const auto& [wr, cr] : rw)
      for (const auto& [wc, cc] : cw) {
        Weight w = wr;
        w.insert(w.end(), wc.begin(), wc.end());
        auto it = remaining.find(w);
        const long have = it == remaining.end() ? 0 : it->second;
        const long left = have - count * cr * cc;
        if (left < 0) throw OracleError("character peeling produced a negative weight multiplicity");
        if (left == 0)
          remaining.erase(it);
        else
          it->second = left;
      }
    table.entries[key] += count;
  }
  return table;
}

long dim_irrep(const PartitionTuple& lambda, const std::vector<int>& block_sizes) {
  if (lambda.size() != block_sizes.size()) throw DomainError("partition tuple does not match the blocks");
  mpz_class total = 1;
  for (std::size_t k = 0; k < lambda.size(); ++k) {
    const Partition& p = lambda[k];
    const int s = block_sizes[k];
    if (p.length() > s) throw DomainError("partition " + to_string(p) + " longer than its block");
    const Partition conj = p.conjugate();
    mpz_class num = 1;
    mpz_class den = 1;
    for (int r = 0; r < p.length(); ++r)
      for (int c = 0; c < p[r]; ++c) {
        num *= s + c - r;
        den *= (p[r] - c - 1) + (conj[c] - r - 1) + 1;
      }
    total *= num / den;
  }
  return total.get_si();
}

long width_multiplicity(const ContiguousSpec& strips, int m, int n, const std::vector<int>& block_cuts,
                        const PartitionTuple& block_side, const Partition& full_side, Module side) {
  bool all_col = true;
  bool all_row = true;
  for (const auto& s : strips) {
    if (s.row_lo < 1 || s.row_hi > m || s.col_lo < 1 || s.col_hi > n || s.row_lo > s.row_hi ||
        s.col_lo > s.col_hi || s.rank < 1)
      throw DomainError("strip out of range");
    all_col = all_col && s.row_lo == 1 && s.row_hi == m;
    all_row = all_row && s.col_lo == 1 && s.col_hi == n;
  }
  if (!all_col && !all_row) throw DomainError("strips must all span full rows or all span full columns");
  const bool col_mode = all_col;
  const int maxentry = col_mode ? n : m;
  if (block_cuts.empty() || block_cuts.back() != maxentry)
    throw DomainError("block cuts do not match the strip side");
  const LeviDatum check = col_mode ? LeviDatum({0, m}, block_cuts) : LeviDatum(block_cuts, {0, n});
  const auto blocks = col_mode ? check.col_blocks() : check.row_blocks();
  const auto c = padded_content(block_side, blocks);
  if (total_size(block_side) != full_side.size()) throw DomainError("sizes of the two sides differ");
  if (!c || full_side.length() > std::min(m, n)) return 0;
  long quotient = 0;
  long ideal = 0;
  for (const auto& T : lr_tableaux(full_side, maxentry, *c, block_cuts)) {
    bool ok = true;
    for (const auto& s : strips) {
      const int lo = col_mode ? s.col_lo : s.row_lo;
      const int hi = col_mode ? s.col_hi : s.row_hi;
      if (width(T, lo, hi) >= s.rank) ok = false;
    }
    ++(ok ? quotient : ideal);
  }
  return side == Module::Quotient ? quotient : ideal;
}

}  // namespace bicrys

#include "bicrys/levi.hpp"

#include "bicrys/error.hpp"
#include "bicrys/groebner.hpp"

namespace bicrys {

namespace {

void check_cuts(const std::vector<int>& cuts, const char* what) {
  if (cuts.size() < 2 || cuts.front() != 0)
    throw DomainError(std::string(what) + " cut points must start at 0 and end at the size");
  for (std::size_t k = 1; k < cuts.size(); ++k)
    if (cuts[k] <= cuts[k - 1])
      throw DomainError(std::string(what) + " cut points must be strictly increasing");
}

std::vector<std::pair<int, int>> blocks_of(const std::vector<int>& cuts) {
  std::vector<std::pair<int, int>> out;
  for (std::size_t k = 1; k < cuts.size(); ++k) out.emplace_back(cuts[k - 1] + 1, cuts[k]);
  return out;
}

bool interior(const std::vector<int>& cuts, int i) {
  if (i < 1 || i >= cuts.back()) return false;
  for (int c : cuts)
    if (c == i) return false;
  return true;
}

mpz_class binomial(unsigned n, unsigned k) {
  mpz_class b;
  mpz_bin_uiui(b.get_mpz_t(), n, k);
  return b;
}

}  // namespace

LeviDatum::LeviDatum(std::vector<int> row_cuts, std::vector<int> col_cuts)
    : row_cuts_(std::move(row_cuts)), col_cuts_(std::move(col_cuts)) {
  check_cuts(row_cuts_, "row");
  check_cuts(col_cuts_, "column");
}

LeviDatum LeviDatum::torus(int m, int n) {
  std::vector<int> r;
  std::vector<int> c;
  for (int i = 0; i <= m; ++i) r.push_back(i);
  for (int j = 0; j <= n; ++j) c.push_back(j);
  return LeviDatum(std::move(r), std::move(c));
}

LeviDatum LeviDatum::full(int m, int n) { return LeviDatum({0, m}, {0, n}); }

std::vector<std::pair<int, int>> LeviDatum::row_blocks() const { return blocks_of(row_cuts_); }
std::vector<std::pair<int, int>> LeviDatum::col_blocks() const { return blocks_of(col_cuts_); }

std::vector<int> LeviDatum::row_block_sizes() const {
  std::vector<int> s;
  for (auto [a, b] : row_blocks()) s.push_back(b - a + 1);
  return s;
}

std::vector<int> LeviDatum::col_block_sizes() const {
  std::vector<int> s;
  for (auto [a, b] : col_blocks()) s.push_back(b - a + 1);
  return s;
}

bool LeviDatum::row_index_admissible(int i) const { return interior(row_cuts_, i); }
bool LeviDatum::col_index_admissible(int j) const { return interior(col_cuts_, j); }

Multidegree multidegree(const ExponentMatrix& M) {
  Multidegree d = M.row_sums();
  const auto c = M.col_sums();
  d.insert(d.end(), c.begin(), c.end());
  return d;
}

bool is_multihomogeneous(const Polynomial& f) {
  if (f.is_zero()) return true;
  const Multidegree first = multidegree(f.terms().begin()->first);
  for (const auto& [M, c] : f.terms())
    if (multidegree(M) != first) return false;
  return true;
}

Polynomial elementary_substitution(const Polynomial& f, Side side, int i, int j) {
  const int limit = side == Side::Row ? f.rows() : f.cols();
  if (i == j) throw DomainError("elementary substitution needs distinct indices");
  if (i < 1 || j < 1 || i > limit || j > limit)
    throw DomainError("elementary substitution index out of range");
  const int len = side == Side::Row ? f.cols() : f.rows();
  auto cell = [&](int idx, int b) -> std::pair<int, int> {
    return side == Side::Row ? std::pair{idx - 1, b} : std::pair{b, idx - 1};
  };

  Polynomial out(f.rows(), f.cols());
  for (const auto& [M, coef] : f.terms()) {
    // Expand prod_b (z_src,b + z_dst,b)^{e_b}: move k_b of e_b units to the target.
    auto recurse = [&](auto&& self, int b, ExponentMatrix& cur, mpz_class weight) -> void {
      if (b == len) {
        out.add_term(cur, coef * Rational(weight));
        return;
      }
      auto [sr, sc] = cell(i, b);
      auto [tr, tc] = cell(j, b);
      const int e = M(sr, sc);
      for (int k = 0; k <= e; ++k) {
        cur(sr, sc) = M(sr, sc) - k;
        cur(tr, tc) = M(tr, tc) + k;
        self(self, b + 1, cur, weight * binomial(static_cast<unsigned>(e), static_cast<unsigned>(k)));
      }
      cur(sr, sc) = M(sr, sc);
      cur(tr, tc) = M(tr, tc);
    };
    ExponentMatrix cur = M;
    recurse(recurse, 0, cur, mpz_class(1));
  }
  return out;
}

bool is_levi_stable(std::span<const Polynomial> gens, const LeviDatum& datum) {
  const int m = datum.rows();
  const int n = datum.cols();
  for (const auto& g : gens)
    if (g.rows() != m || g.cols() != n) throw DomainError("generator outside the datum's ring");
  const GroebnerBasis gb = buchberger(gens, TermOrder::antidiag(m, n));
  for (const auto& g : gb.generators)
    if (!is_multihomogeneous(g)) return false;
  for (const auto& g : gens) {
    if (g.is_zero()) continue;
    for (auto [a, b] : datum.row_blocks())
      for (int i = a; i <= b; ++i)
        for (int j = a; j <= b; ++j)
          if (i != j && !normal_form(elementary_substitution(g, Side::Row, i, j), gb).is_zero())
            return false;
    for (auto [a, b] : datum.col_blocks())
      for (int i = a; i <= b; ++i)
        for (int j = a; j <= b; ++j)
          if (i != j && !normal_form(elementary_substitution(g, Side::Col, i, j), gb).is_zero())
            return false;
  }
  return true;
}

}  // namespace bicrys

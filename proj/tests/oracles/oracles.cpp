#include "oracles.hpp"

#include <algorithm>
#include <numeric>
#include <string>
#include <tuple>

#include "bicrys/levi.hpp"

namespace oracle {

Polynomial leibniz_minor(const std::vector<int>& rows, const std::vector<int>& cols, int m, int n) {
  Polynomial det(m, n);
  std::vector<int> perm(cols.size());
  std::iota(perm.begin(), perm.end(), 0);
  do {
    int inversions = 0;
    for (std::size_t a = 0; a < perm.size(); ++a)
      for (std::size_t b = a + 1; b < perm.size(); ++b)
        if (perm[a] > perm[b]) ++inversions;
    ExponentMatrix M(m, n);
    for (std::size_t k = 0; k < rows.size(); ++k)
      M(rows[k] - 1, cols[static_cast<std::size_t>(perm[k])] - 1) += 1;
    det.add_term(M, inversions % 2 == 0 ? 1 : -1);
  } while (std::next_permutation(perm.begin(), perm.end()));
  return det;
}

std::optional<bicrys::Word> word_op(const bicrys::Word& w, int i, bool lower) {
  // Track (symbol, position) for the letters i and i+1 only.
  std::vector<std::pair<char, std::size_t>> symbols;
  for (std::size_t p = 0; p < w.size(); ++p) {
    if (w[p] == i) symbols.emplace_back(')', p);
    if (w[p] == i + 1) symbols.emplace_back('(', p);
  }
  bool changed = true;
  while (changed) {
    changed = false;
    for (std::size_t k = 0; k + 1 < symbols.size(); ++k) {
      if (symbols[k].first == '(' && symbols[k + 1].first == ')') {
        symbols.erase(symbols.begin() + static_cast<long>(k), symbols.begin() + static_cast<long>(k) + 2);
        changed = true;
        break;
      }
    }
  }
  // What remains reads ")))(((".
  bicrys::Word out = w;
  if (lower) {
    std::optional<std::size_t> last;
    for (auto [c, p] : symbols)
      if (c == ')') last = p;
    if (!last) return std::nullopt;
    out[*last] = i + 1;
  } else {
    auto it = std::find_if(symbols.begin(), symbols.end(), [](const auto& s) { return s.first == '('; });
    if (it == symbols.end()) return std::nullopt;
    out[it->second] = i;
  }
  return out;
}

std::pair<Rows, Rows> rsk(const ExponentMatrix& M) {
  std::vector<std::pair<int, int>> array;  // (column, row), 1-based
  for (int c = 0; c < M.cols(); ++c)
    for (int r = 0; r < M.rows(); ++r)
      for (int k = 0; k < M(r, c); ++k) array.emplace_back(c + 1, r + 1);
  std::sort(array.begin(), array.end());
  Rows P, Q;
  for (auto [top, bottom] : array) {
    int x = bottom;
    std::size_t row = 0;
    while (true) {
      if (row == P.size()) {
        P.push_back({x});
        Q.push_back({top});
        break;
      }
      auto& R = P[row];
      auto it = std::upper_bound(R.begin(), R.end(), x);
      if (it == R.end()) {
        R.push_back(x);
        Q[row].push_back(top);
        break;
      }
      std::swap(x, *it);
      ++row;
    }
  }
  return {P, Q};
}

long ssyt_count(const std::vector<int>& shape, int N) {
  // Product of (N + c) / h over boxes, evaluated with exact rationals.
  bicrys::Rational value = 1;
  std::vector<int> conj;
  for (std::size_t r = 0; r < shape.size(); ++r)
    for (int c = 0; c < shape[r]; ++c) {
      if (static_cast<std::size_t>(c) >= conj.size()) conj.push_back(0);
      ++conj[static_cast<std::size_t>(c)];
    }
  for (std::size_t r = 0; r < shape.size(); ++r)
    for (int c = 0; c < shape[r]; ++c) {
      long arm = shape[r] - c - 1;
      long leg = conj[static_cast<std::size_t>(c)] - static_cast<long>(r) - 1;
      bicrys::Rational factor(N + c - static_cast<long>(r), arm + leg + 1);
      factor.canonicalize();
      value *= factor;
    }
  return value.get_num().get_si();
}

int decreasing_run(const bicrys::Word& w, int a, int b) {
  std::vector<int> letters;
  for (int x : w)
    if (x >= a && x <= b) letters.push_back(x);
  std::vector<int> best(letters.size(), 1);
  int answer = 0;
  for (std::size_t k = 0; k < letters.size(); ++k) {
    for (std::size_t j = 0; j < k; ++j)
      if (letters[j] > letters[k]) best[k] = std::max(best[k], best[j] + 1);
    answer = std::max(answer, best[k]);
  }
  return answer;
}

long rank(const std::vector<Polynomial>& polys) {
  std::map<ExponentMatrix, std::size_t> column;
  for (const auto& f : polys)
    for (const auto& [M, c] : f.terms()) column.emplace(M, column.size());
  std::vector<std::vector<bicrys::Rational>> rows;
  for (const auto& f : polys) {
    std::vector<bicrys::Rational> v(column.size());
    for (const auto& [M, c] : f.terms()) v[column[M]] = c;
    rows.push_back(std::move(v));
  }
  long r = 0;
  for (std::size_t col = 0; col < column.size() && r < static_cast<long>(rows.size()); ++col) {
    auto pivot = std::find_if(rows.begin() + r, rows.end(), [&](const auto& v) { return v[col] != 0; });
    if (pivot == rows.end()) continue;
    std::iter_swap(rows.begin() + r, pivot);
    auto& p = rows[static_cast<std::size_t>(r)];
    for (std::size_t k = static_cast<std::size_t>(r) + 1; k < rows.size(); ++k) {
      if (rows[k][col] == 0) continue;
      bicrys::Rational factor = rows[k][col] / p[col];
      for (std::size_t c = col; c < column.size(); ++c) rows[k][c] -= factor * p[c];
    }
    ++r;
  }
  return r;
}

std::map<std::vector<long>, long> hilbert_by_multidegree(const std::vector<Polynomial>& gens, int m, int n,
                                                        int d) {
  std::map<std::vector<long>, long> monomials;
  bicrys::for_each_of_degree(m, n, d, [&](const ExponentMatrix& M) { ++monomials[bicrys::multidegree(M)]; });
  std::map<std::vector<long>, std::vector<Polynomial>> multiples;
  for (const auto& g : gens) {
    if (g.is_zero()) continue;
    long e = g.total_degree();
    if (e > d) continue;
    bicrys::for_each_of_degree(m, n, static_cast<int>(d - e), [&](const ExponentMatrix& N) {
      Polynomial h = g.shifted(N);
      multiples[bicrys::multidegree(h.terms().begin()->first)].push_back(std::move(h));
    });
  }
  std::map<std::vector<long>, long> out;
  for (const auto& [deg, count] : monomials) {
    auto it = multiples.find(deg);
    long dim = count - (it == multiples.end() ? 0 : rank(it->second));
    if (dim > 0) out[deg] = dim;
  }
  return out;
}

ExponentMatrix random_matrix(std::mt19937_64& rng, int m, int n, int max_entry) {
  std::uniform_int_distribution<int> entry(0, max_entry);
  ExponentMatrix M(m, n);
  for (std::size_t k = 0; k < M.size(); ++k) M.flat(k) = entry(rng);
  return M;
}

}  // namespace oracle

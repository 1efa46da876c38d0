#include "bicrys/constructors.hpp"

#include <algorithm>
#include <bit>
#include <cctype>
#include <functional>
#include <numeric>
#include <set>
#include <sstream>
#include <unordered_map>

#include "bicrys/error.hpp"
#include "bicrys/groebner.hpp"
#include "bicrys/term_order.hpp"

namespace bicrys {

Permutation::Permutation(std::vector<int> one_line) : one_line_(std::move(one_line)) {
  std::vector<bool> seen(one_line_.size() + 1, false);
  for (int x : one_line_) {
    if (x < 1 || x > size() || seen[static_cast<std::size_t>(x)])
      throw DomainError("not a permutation in one-line notation");
    seen[static_cast<std::size_t>(x)] = true;
  }
}

Permutation Permutation::identity(int n) {
  std::vector<int> v(static_cast<std::size_t>(n));
  std::iota(v.begin(), v.end(), 1);
  return Permutation(std::move(v));
}

Permutation Permutation::parse(const std::string& text) {
  std::vector<int> v;
  if (text.find(',') == std::string::npos) {
    for (std::size_t k = 0; k < text.size(); ++k) {
      const char ch = text[k];
      if (std::isspace(static_cast<unsigned char>(ch))) continue;
      if (!std::isdigit(static_cast<unsigned char>(ch))) throw ParseError("bad permutation character", k);
      v.push_back(ch - '0');
    }
  } else {
    std::stringstream in(text);
    std::string item;
    while (std::getline(in, item, ',')) {
      try {
        std::size_t used = 0;
        v.push_back(std::stoi(item, &used));
        if (item.find_first_not_of(" \t", used) != std::string::npos) throw ParseError("bad entry");
      } catch (const std::logic_error&) {
        throw ParseError("bad permutation entry '" + item + "'");
      }
    }
  }
  if (v.empty()) throw ParseError("empty permutation");
  try {
    return Permutation(std::move(v));
  } catch (const DomainError& e) {
    throw ParseError(e.what());
  }
}

int Permutation::inverse(int j) const {
  auto it = std::find(one_line_.begin(), one_line_.end(), j);
  if (it == one_line_.end()) throw DomainError("value out of range");
  return static_cast<int>(it - one_line_.begin()) + 1;
}

std::string to_string(const Permutation& w) {
  std::string out;
  const bool compact = w.size() < 10;
  for (int i = 1; i <= w.size(); ++i) {
    if (!compact && i > 1) out += ',';
    out += std::to_string(w(i));
  }
  return out;
}

std::vector<Permutation> all_permutations(int n) {
  std::vector<int> v(static_cast<std::size_t>(n));
  std::iota(v.begin(), v.end(), 1);
  std::vector<Permutation> out;
  do {
    out.emplace_back(v);
  } while (std::next_permutation(v.begin(), v.end()));
  return out;
}

SpecializedMatrix::SpecializedMatrix(int size, std::vector<Cell> cells) : size_(size), cells_(std::move(cells)) {
  if (size < 0 || cells_.size() != static_cast<std::size_t>(size) * static_cast<std::size_t>(size))
    throw DomainError("specialized matrix has the wrong number of cells");
}

std::string to_string(const SpecializedMatrix& Z) {
  std::string out;
  for (int i = 1; i <= Z.size(); ++i) {
    for (int j = 1; j <= Z.size(); ++j) {
      if (j > 1) out += ' ';
      switch (Z.at(i, j)) {
        case Cell::Variable: out += 'z'; break;
        case Cell::Zero: out += '0'; break;
        case Cell::One: out += '1'; break;
      }
    }
    out += '\n';
  }
  return out;
}

namespace {

void check_indices(const std::vector<int>& idx, int bound, const char* what) {
  for (std::size_t k = 0; k < idx.size(); ++k) {
    if (idx[k] < 1 || idx[k] > bound) throw DomainError(std::string(what) + " index out of range");
    if (k > 0 && idx[k] <= idx[k - 1]) throw DomainError(std::string(what) + " indices must strictly increase");
  }
}

// Laplace expansion along successive rows, memoized on the set of used columns.
Polynomial determinant(const std::vector<int>& rows, const std::vector<int>& cols, int m, int n,
                       const std::function<Cell(int, int)>& cell) {
  if (rows.size() != cols.size()) throw DomainError("minor needs as many rows as columns");
  const std::size_t k = rows.size();
  if (k > 30) throw DomainError("minor too large");
  std::unordered_map<unsigned, Polynomial> memo;
  std::function<Polynomial(unsigned)> rec = [&](unsigned used) -> Polynomial {
    const auto p = static_cast<std::size_t>(std::popcount(used));
    if (p == k) return Polynomial::constant(m, n, 1);
    if (auto it = memo.find(used); it != memo.end()) return it->second;
    Polynomial acc(m, n);
    int sign = 1;
    for (std::size_t c = 0; c < k; ++c) {
      if (used & (1u << c)) continue;
      const Cell e = cell(rows[p], cols[c]);
      if (e != Cell::Zero) {
        Polynomial sub = rec(used | (1u << c));
        if (!sub.is_zero()) {
          if (e == Cell::Variable) sub = sub * Polynomial::variable(m, n, rows[p] - 1, cols[c] - 1);
          if (sign > 0)
            acc += sub;
          else
            acc -= sub;
        }
      }
      sign = -sign;
    }
    memo.emplace(used, acc);
    return acc;
  };
  return rec(0);
}

void append_unique(std::vector<Polynomial>& out, std::set<Polynomial>& seen, Polynomial f) {
  if (f.is_zero()) return;
  if (seen.insert(f).second) out.push_back(std::move(f));
}

}  // namespace

Polynomial minor(const std::vector<int>& rows, const std::vector<int>& cols, int m, int n) {
  check_indices(rows, m, "row");
  check_indices(cols, n, "column");
  return determinant(rows, cols, m, n, [](int, int) { return Cell::Variable; });
}

Polynomial minor(const std::vector<int>& rows, const std::vector<int>& cols, const SpecializedMatrix& Z) {
  check_indices(rows, Z.size(), "row");
  check_indices(cols, Z.size(), "column");
  return determinant(rows, cols, Z.size(), Z.size(), [&](int i, int j) { return Z.at(i, j); });
}

std::vector<std::vector<int>> index_subsets(int lo, int hi, int k) {
  std::vector<std::vector<int>> out;
  if (k < 0 || k > hi - lo + 1) return out;
  std::vector<int> cur;
  std::function<void(int)> rec = [&](int next) {
    if (static_cast<int>(cur.size()) == k) {
      out.push_back(cur);
      return;
    }
    for (int x = next; x <= hi - (k - static_cast<int>(cur.size())) + 1; ++x) {
      cur.push_back(x);
      rec(x + 1);
      cur.pop_back();
    }
  };
  rec(lo);
  return out;
}

void validate_strips(const ContiguousSpec& strips, int m, int n) {
  if (m < 1 || n < 1) throw DomainError("ring dimensions must be positive");
  for (const auto& s : strips)
    if (s.row_lo < 1 || s.row_lo > s.row_hi || s.row_hi > m || s.col_lo < 1 || s.col_lo > s.col_hi ||
        s.col_hi > n || s.rank < 1 ||
        s.rank > std::min(s.row_hi - s.row_lo + 1, s.col_hi - s.col_lo + 1))
      throw DomainError("strip [" + std::to_string(s.row_lo) + "," + std::to_string(s.row_hi) + "]x[" +
                        std::to_string(s.col_lo) + "," + std::to_string(s.col_hi) + "] rank " +
                        std::to_string(s.rank) + " is out of range");
}

std::vector<Polynomial> contiguous_determinantal(const ContiguousSpec& strips, int m, int n) {
  validate_strips(strips, m, n);
  std::vector<Polynomial> out;
  std::set<Polynomial> seen;
  for (const auto& s : strips)
    for (const auto& R : index_subsets(s.row_lo, s.row_hi, s.rank))
      for (const auto& C : index_subsets(s.col_lo, s.col_hi, s.rank)) append_unique(out, seen, minor(R, C, m, n));
  return out;
}

std::vector<Polynomial> determinantal(int k, int m, int n) {
  return contiguous_determinantal({Strip{1, m, 1, n, k}}, m, n);
}

std::vector<Polynomial> irrelevant_power(int d, int m, int n) {
  if (d < 0) throw DomainError("degree must be nonnegative");
  std::vector<Polynomial> out;
  for_each_of_degree(m, n, d, [&](const ExponentMatrix& M) { out.push_back(Polynomial::monomial(M)); });
  return out;
}

bool is_northwest(const Strip& s) { return s.row_lo == 1 && s.col_lo == 1; }
bool is_southeast(const Strip& s, int m, int n) { return s.row_hi == m && s.col_hi == n; }
bool is_column_strip(const Strip& s, int m) { return s.row_lo == 1 && s.row_hi == m; }
bool is_row_strip(const Strip& s, int n) { return s.col_lo == 1 && s.col_hi == n; }

std::vector<Polynomial> knutson_determinantal(const ContiguousSpec& strips, int m, int n) {
  validate_strips(strips, m, n);
  for (const auto& s : strips)
    if (!is_northwest(s) && !is_southeast(s, m, n) && !is_column_strip(s, m) && !is_row_strip(s, n))
      throw DomainError("strip is not northwest, southeast, full-column or full-row");
  return contiguous_determinantal(strips, m, n);
}

LeviDatum induced_datum(const ContiguousSpec& strips, int m, int n) {
  validate_strips(strips, m, n);
  std::set<int> rows{0, m};
  std::set<int> cols{0, n};
  for (const auto& s : strips) {
    rows.insert({s.row_lo - 1, s.row_hi});
    cols.insert({s.col_lo - 1, s.col_hi});
  }
  return LeviDatum({rows.begin(), rows.end()}, {cols.begin(), cols.end()});
}

IntTable rank_function(const Permutation& w) {
  const int n = w.size();
  IntTable r(static_cast<std::size_t>(n), std::vector<int>(static_cast<std::size_t>(n), 0));
  for (int i = 1; i <= n; ++i)
    for (int j = 1; j <= n; ++j) {
      int count = (w(i) <= j) ? 1 : 0;
      if (i > 1) count += r[static_cast<std::size_t>(i - 2)][static_cast<std::size_t>(j - 1)];
      r[static_cast<std::size_t>(i - 1)][static_cast<std::size_t>(j - 1)] = count;
    }
  return r;
}

std::vector<Polynomial> schubert_determinantal(const Permutation& w) {
  const int n = w.size();
  const auto r = rank_function(w);
  std::vector<Polynomial> out;
  std::set<Polynomial> seen;
  for (int i = 1; i <= n; ++i)
    for (int j = 1; j <= n; ++j) {
      const int k = r[static_cast<std::size_t>(i - 1)][static_cast<std::size_t>(j - 1)] + 1;
      if (k > std::min(i, j)) continue;
      for (const auto& R : index_subsets(1, i, k))
        for (const auto& C : index_subsets(1, j, k)) append_unique(out, seen, minor(R, C, n, n));
    }
  return out;
}

ContiguousSpec essential_strips(const Permutation& w) {
  const int n = w.size();
  const auto r = rank_function(w);
  ContiguousSpec out;
  for (int i = 1; i < n; ++i)
    for (int j = 1; j < n; ++j)
      if (w(i) > j && w.inverse(j) > i && w(i + 1) <= j && w.inverse(j + 1) <= i)
        out.push_back({1, i, 1, j, r[static_cast<std::size_t>(i - 1)][static_cast<std::size_t>(j - 1)] + 1});
  return out;
}

SpecializedMatrix kl_specialize(const Permutation& v) {
  const int n = v.size();
  std::vector<Cell> cells;
  cells.reserve(static_cast<std::size_t>(n * n));
  for (int i = 1; i <= n; ++i)
    for (int j = 1; j <= n; ++j) {
      if (j == v(i))
        cells.push_back(Cell::One);
      else if (j > v(i) || i > v.inverse(j))
        cells.push_back(Cell::Zero);
      else
        cells.push_back(Cell::Variable);
    }
  return SpecializedMatrix(n, std::move(cells));
}

IntTable drift_table(const Permutation& v) {
  auto t = rank_function(v);
  for (std::size_t i = 0; i < t.size(); ++i)
    for (std::size_t j = 0; j < t.size(); ++j) t[i][j] = static_cast<int>(i + j + 2) - (t[i][j] + 1);
  return t;
}

std::vector<std::pair<int, int>> drifted_antidiagonal(const Permutation& v, int k) {
  const auto Z = kl_specialize(v);
  const auto drift = drift_table(v);
  std::vector<std::pair<int, int>> out;
  for (int i = 1; i <= v.size(); ++i)
    for (int j = 1; j <= v.size(); ++j)
      if (Z.at(i, j) == Cell::Variable && drift[static_cast<std::size_t>(i - 1)][static_cast<std::size_t>(j - 1)] == k)
        out.emplace_back(i, j);
  return out;
}

Polynomial basic_minor(const Permutation& v, int k) {
  if (k < 1 || k > v.size()) throw DomainError("basic minor index out of range");
  std::vector<int> idx(static_cast<std::size_t>(k));
  std::iota(idx.begin(), idx.end(), 1);
  return minor(idx, idx, kl_specialize(v));
}

bool BasicLeadReport::ok() const {
  return std::all_of(rows.begin(), rows.end(), [](const BasicLeadRow& r) { return r.matches(); });
}

BasicLeadReport verify_basic_lead_terms(const Permutation& v) {
  const int n = v.size();
  const TermOrder ord = TermOrder::antidiag(n, n);
  BasicLeadReport report{v, {}};
  for (int k = 1; k <= n; ++k) {
    ExponentMatrix expected(n, n);
    for (auto [i, j] : drifted_antidiagonal(v, k)) expected(i - 1, j - 1) += 1;
    const Polynomial delta = basic_minor(v, k);
    std::optional<ExponentMatrix> actual;
    if (!delta.is_zero()) actual = leading_exponent(delta, ord);
    report.rows.push_back({k, std::move(expected), std::move(actual)});
  }
  return report;
}

namespace {

std::vector<std::vector<int>> filling_columns(const Filling& F, int bound, const char* what) {
  std::vector<std::vector<int>> cols;
  for (std::size_t r = 0; r < F.size(); ++r) {
    if (F[r].empty() || (r > 0 && F[r].size() > F[r - 1].size()))
      throw DomainError(std::string(what) + " rows must be nonempty and weakly shrink");
    for (std::size_t c = 0; c < F[r].size(); ++c) {
      if (c >= cols.size()) cols.emplace_back();
      cols[c].push_back(F[r][c]);
    }
  }
  for (const auto& col : cols) check_indices(col, bound, what);
  return cols;
}

}  // namespace

Polynomial bitableau(const Filling& P, const Filling& Q, int m, int n) {
  const auto pc = filling_columns(P, m, "row filling");
  const auto qc = filling_columns(Q, n, "column filling");
  if (pc.size() != qc.size()) throw DomainError("bitableau fillings have different shapes");
  Polynomial out = Polynomial::constant(m, n, 1);
  for (std::size_t k = 0; k < pc.size(); ++k) {
    if (pc[k].size() != qc[k].size()) throw DomainError("bitableau fillings have different shapes");
    out = out * minor(pc[k], qc[k], m, n);
  }
  return out;
}

std::vector<Polynomial> shape_ideal_generators(const Partition& lambda, int m, int n) {
  if (lambda.length() > std::min(m, n)) throw DomainError("shape " + to_string(lambda) + " too long for the ring");
  const auto lengths = lambda.conjugate().parts();
  std::map<int, std::vector<Polynomial>> minors_by_size;
  for (int c : lengths)
    if (!minors_by_size.count(c)) {
      auto& list = minors_by_size[c];
      for (const auto& R : index_subsets(1, m, c))
        for (const auto& C : index_subsets(1, n, c)) list.push_back(minor(R, C, m, n));
    }
  std::vector<Polynomial> out;
  std::set<Polynomial> seen;
  // Equal-length columns commute, so their minor choices are taken as multisets.
  std::vector<std::size_t> choice(lengths.size(), 0);
  std::function<void(std::size_t, const Polynomial&)> rec = [&](std::size_t col, const Polynomial& acc) {
    if (col == lengths.size()) {
      append_unique(out, seen, acc);
      return;
    }
    const auto& list = minors_by_size[lengths[col]];
    const std::size_t start = (col > 0 && lengths[col] == lengths[col - 1]) ? choice[col - 1] : 0;
    for (std::size_t t = start; t < list.size(); ++t) {
      choice[col] = t;
      rec(col + 1, acc * list[t]);
    }
  };
  rec(0, Polynomial::constant(m, n, 1));
  return out;
}

std::vector<Partition> power_shapes(int k, int r, bool symbolic, int m, int n) {
  if (k < 1 || r < 1) throw DomainError("power parameters must be positive");
  const int max_len = std::min(m, n);
  std::vector<Partition> out;
  if (symbolic) {
    // Columns of length >= k whose excess over k-1 sums to r.
    for (const auto& excess : partitions_of(r, r)) {
      std::vector<int> cols;
      for (int p : excess.parts()) cols.push_back(p + k - 1);
      if (cols.front() > max_len) continue;
      out.push_back(Partition(cols).conjugate());
    }
  } else {
    // k*r boxes in at most r columns.
    for (const auto& cols : partitions_of(k * r, r)) {
      if (cols[0] > max_len) continue;
      out.push_back(cols.conjugate());
    }
  }
  std::sort(out.begin(), out.end(), std::greater<>());
  return out;
}

std::vector<Polynomial> power_generators(int k, int r, bool symbolic, int m, int n) {
  std::vector<Polynomial> out;
  std::set<Polynomial> seen;
  for (const auto& shape : power_shapes(k, r, symbolic, m, n))
    for (auto& f : shape_ideal_generators(shape, m, n)) append_unique(out, seen, std::move(f));
  return out;
}

}  // namespace bicrys

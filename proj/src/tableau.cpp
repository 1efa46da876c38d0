#include "bicrys/tableau.hpp"

#include <algorithm>
#include <sstream>

#include "bicrys/error.hpp"

namespace bicrys {

// ---------------------------------------------------------------- partitions

Partition::Partition(std::vector<int> parts) : parts_(std::move(parts)) {
  while (!parts_.empty() && parts_.back() == 0) parts_.pop_back();
  for (std::size_t k = 0; k < parts_.size(); ++k) {
    if (parts_[k] <= 0) throw DomainError("partition parts must be positive");
    if (k && parts_[k] > parts_[k - 1]) throw DomainError("partition parts must weakly decrease");
  }
}

int Partition::size() const noexcept {
  int s = 0;
  for (int p : parts_) s += p;
  return s;
}

Partition Partition::conjugate() const {
  std::vector<int> c;
  for (int j = 0; j < (*this)[0]; ++j) {
    int len = 0;
    while (len < length() && parts_[static_cast<std::size_t>(len)] > j) ++len;
    c.push_back(len);
  }
  return Partition(std::move(c));
}

std::string to_string(const Partition& p) {
  std::string s = "(";
  for (std::size_t k = 0; k < p.parts().size(); ++k) {
    if (k) s += ',';
    s += std::to_string(p.parts()[k]);
  }
  return s + ")";
}

std::string to_string(const PartitionTuple& t) {
  std::string s;
  for (std::size_t k = 0; k < t.size(); ++k) {
    if (k) s += ';';
    s += to_string(t[k]);
  }
  return s;
}

Partition parse_partition(const std::string& text) {
  std::string body;
  for (char ch : text)
    if (ch != ' ' && ch != '\t') body += ch;
  if (body.size() >= 2 && body.front() == '(' && body.back() == ')')
    body = body.substr(1, body.size() - 2);
  std::vector<int> parts;
  if (!body.empty()) {
    std::stringstream ss(body);
    std::string item;
    while (std::getline(ss, item, ',')) {
      if (item.empty() || !std::all_of(item.begin(), item.end(), [](char ch) { return ch >= '0' && ch <= '9'; }))
        throw ParseError("bad partition '" + text + "'");
      if (item.size() > 6) throw ParseError("partition part too large in '" + text + "'");
      parts.push_back(std::stoi(item));
    }
  }
  try {
    return Partition(std::move(parts));
  } catch (const DomainError& e) {
    throw ParseError(std::string(e.what()) + " in '" + text + "'");
  }
}

PartitionTuple parse_partition_tuple(const std::string& text) {
  PartitionTuple out;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ';')) out.push_back(parse_partition(item));
  if (!text.empty() && text.back() == ';') out.emplace_back();
  return out;
}

namespace {

void partitions_rec(int remaining, int max_part, int max_length, std::vector<int>& cur,
                    std::vector<Partition>& out) {
  if (remaining == 0) {
    out.emplace_back(cur);
    return;
  }
  if (static_cast<int>(cur.size()) == max_length) return;
  for (int p = std::min(remaining, max_part); p >= 1; --p) {
    cur.push_back(p);
    partitions_rec(remaining - p, p, max_length, cur, out);
    cur.pop_back();
  }
}

}  // namespace

std::vector<Partition> partitions_of(int n, int max_length) {
  std::vector<Partition> out;
  if (n < 0 || max_length < 0) return out;
  std::vector<int> cur;
  partitions_rec(n, n, max_length, cur, out);
  return out;
}

// ---------------------------------------------------------------- tableaux

bool is_semistandard(const std::vector<std::vector<int>>& rows) {
  for (std::size_t r = 0; r < rows.size(); ++r) {
    if (rows[r].empty()) return false;
    if (r && rows[r].size() > rows[r - 1].size()) return false;
    for (std::size_t c = 0; c < rows[r].size(); ++c) {
      if (rows[r][c] < 1) return false;
      if (c && rows[r][c] < rows[r][c - 1]) return false;
      if (r && rows[r][c] <= rows[r - 1][c]) return false;
    }
  }
  return true;
}

Tableau::Tableau(std::vector<std::vector<int>> rows) : rows_(std::move(rows)) {
  if (!is_semistandard(rows_)) throw DomainError("not a semistandard tableau");
}

Tableau Tableau::unchecked(std::vector<std::vector<int>> rows) {
  Tableau T;
  T.rows_ = std::move(rows);
  return T;
}

Partition Tableau::shape() const {
  std::vector<int> parts;
  for (const auto& r : rows_) parts.push_back(static_cast<int>(r.size()));
  return Partition(std::move(parts));
}

int Tableau::box_count() const noexcept {
  int n = 0;
  for (const auto& r : rows_) n += static_cast<int>(r.size());
  return n;
}

int Tableau::max_entry() const noexcept {
  int mx = 0;
  for (const auto& r : rows_)
    for (int v : r) mx = std::max(mx, v);
  return mx;
}

std::string to_string(const Tableau& T) {
  std::string s = "[";
  for (std::size_t r = 0; r < T.rows().size(); ++r) {
    if (r) s += ',';
    s += '[';
    for (std::size_t c = 0; c < T.rows()[r].size(); ++c) {
      if (c) s += ',';
      s += std::to_string(T.rows()[r][c]);
    }
    s += ']';
  }
  return s + "]";
}

Tableau parse_tableau(const std::string& text) {
  std::vector<std::vector<int>> rows;
  std::string body;
  for (char ch : text)
    if (ch != ' ' && ch != '\t') body += ch;
  if (body.empty()) return Tableau();
  std::stringstream ss(body);
  std::string row;
  while (std::getline(ss, row, ';')) {
    std::vector<int> entries;
    std::stringstream rs(row);
    std::string item;
    while (std::getline(rs, item, ',')) {
      if (item.empty() || item.size() > 6 ||
          !std::all_of(item.begin(), item.end(), [](char ch) { return ch >= '0' && ch <= '9'; }))
        throw ParseError("bad tableau entry in '" + text + "'");
      entries.push_back(std::stoi(item));
    }
    rows.push_back(std::move(entries));
  }
  if (!is_semistandard(rows)) throw ParseError("not a semistandard tableau: '" + text + "'");
  return Tableau(std::move(rows));
}

Tableau row_insert(const Tableau& T, int x) {
  if (x < 1) throw DomainError("tableau entries must be positive");
  auto rows = T.rows();
  for (auto& row : rows) {
    auto it = std::upper_bound(row.begin(), row.end(), x);
    if (it == row.end()) {
      row.push_back(x);
      return Tableau::unchecked(std::move(rows));
    }
    std::swap(*it, x);
  }
  rows.push_back({x});
  return Tableau::unchecked(std::move(rows));
}

Tableau insertion_tableau(const Word& w) {
  Tableau T;
  for (int x : w) T = row_insert(T, x);
  return T;
}

TableauPair rsk(const ExponentMatrix& M) {
  return {insertion_tableau(row_word(M)), insertion_tableau(col_word(M))};
}

ExponentMatrix rsk_inverse(const TableauPair& pair, int m, int n) {
  if (pair.P.shape() != pair.Q.shape()) throw DomainError("RSK pair shapes differ");
  if (pair.P.max_entry() > m) throw DomainError("P entry exceeds the row count");
  if (pair.Q.max_entry() > n) throw DomainError("Q entry exceeds the column count");
  auto P = pair.P.rows();
  auto Q = pair.Q.rows();
  ExponentMatrix M(m, n);
  while (!Q.empty()) {
    // Largest entry of Q, rightmost among equals: the last box recorded.
    std::size_t best_r = 0;
    for (std::size_t r = 0; r < Q.size(); ++r) {
      const int v = Q[r].back();
      const int bv = Q[best_r].back();
      if (v > bv || (v == bv && Q[r].size() > Q[best_r].size())) best_r = r;
    }
    const int col = Q[best_r].back();
    Q[best_r].pop_back();
    int y = P[best_r].back();
    P[best_r].pop_back();
    if (Q[best_r].empty()) {
      Q.erase(Q.begin() + static_cast<std::ptrdiff_t>(best_r));
      P.erase(P.begin() + static_cast<std::ptrdiff_t>(best_r));
    }
    for (std::size_t r = best_r; r-- > 0;) {
      auto& row = P[r];
      auto it = std::lower_bound(row.begin(), row.end(), y);
      --it;  // rightmost entry strictly below y
      std::swap(*it, y);
    }
    M(y - 1, col - 1) += 1;
  }
  return M;
}

Word reading_word(const Tableau& T) {
  Word w;
  const auto& rows = T.rows();
  const std::size_t width = rows.empty() ? 0 : rows.front().size();
  for (std::size_t c = 0; c < width; ++c)
    for (std::size_t r = rows.size(); r-- > 0;)
      if (c < rows[r].size()) w.push_back(rows[r][c]);
  return w;
}

Word reverse_reading_word(const Tableau& T) {
  Word w = reading_word(T);
  std::reverse(w.begin(), w.end());
  return w;
}

std::optional<Word> knuth_move(const Word& w, std::size_t pos, int rule) {
  if (w.size() < 3 || pos + 2 >= w.size()) return std::nullopt;
  const int x = w[pos];
  const int y = w[pos + 1];
  const int z = w[pos + 2];
  Word out = w;
  if (rule == 1) {
    // p r q <-> r p q with p <= q < r: swap the first two letters.
    if ((x <= z && z < y) || (y <= z && z < x)) {
      std::swap(out[pos], out[pos + 1]);
      return out;
    }
    return std::nullopt;
  }
  if (rule == 2) {
    // q p r <-> q r p with p < q <= r: swap the last two letters.
    if ((y < x && x <= z) || (z < x && x <= y)) {
      std::swap(out[pos + 1], out[pos + 2]);
      return out;
    }
    return std::nullopt;
  }
  throw DomainError("Knuth rule must be 1 or 2");
}

std::optional<Tableau> crystal_op_tab(const Tableau& T, BicrystalOp::Kind kind, int i) {
  if (i < 1) throw DomainError("operator index out of range");
  std::vector<std::pair<std::size_t, std::size_t>> cells;
  Word w;
  const auto& rows = T.rows();
  const std::size_t width = rows.empty() ? 0 : rows.front().size();
  for (std::size_t c = 0; c < width; ++c)
    for (std::size_t r = rows.size(); r-- > 0;)
      if (c < rows[r].size()) {
        w.push_back(rows[r][c]);
        cells.emplace_back(r, c);
      }
  const auto p = bracket_position(w, i, kind);
  if (!p) return std::nullopt;
  auto out = rows;
  auto [r, c] = cells[*p];
  out[r][c] += kind == BicrystalOp::Kind::Lower ? 1 : -1;
  return Tableau::unchecked(std::move(out));
}

bool is_ballot(const Word& w, int a, int b) {
  if (a > b) throw DomainError("empty interval");
  for (int i = a; i < b; ++i) {
    long balance = 0;
    for (int x : w) {
      if (x == i) ++balance;
      if (x == i + 1 && --balance < 0) return false;
    }
  }
  return true;
}

bool is_K_LR(const Tableau& T, const std::vector<int>& cuts) {
  const Word rev = reverse_reading_word(T);
  for (std::size_t k = 1; k < cuts.size(); ++k)
    if (!is_ballot(rev, cuts[k - 1] + 1, cuts[k])) return false;
  return true;
}

std::vector<int> content(const Tableau& T, int a, int b) {
  if (a > b) throw DomainError("empty interval");
  std::vector<int> mu(static_cast<std::size_t>(b - a + 1), 0);
  for (const auto& row : T.rows())
    for (int v : row)
      if (v >= a && v <= b) ++mu[static_cast<std::size_t>(v - a)];
  return mu;
}

Tableau supersemistandard(const Partition& lambda, int a, int a2) {
  if (lambda.length() > a2 - a + 1) throw DomainError("partition longer than the interval");
  std::vector<std::vector<int>> rows;
  for (int r = 0; r < lambda.length(); ++r)
    rows.emplace_back(static_cast<std::size_t>(lambda[r]), a + r);
  return Tableau(std::move(rows));
}

int width(const Word& w, int a, int b) {
  std::vector<int> tails;  // strictly increasing in the negated letters
  for (int x : w) {
    if (x < a || x > b) continue;
    const int v = -x;
    auto it = std::lower_bound(tails.begin(), tails.end(), v);
    if (it == tails.end())
      tails.push_back(v);
    else
      *it = v;
  }
  return static_cast<int>(tails.size());
}

int width(const Tableau& T, int a, int b) { return width(reading_word(T), a, b); }

namespace {

struct SsytSearch {
  std::vector<int> col_len;
  int maxentry;
  bool use_content;
  std::vector<int> remaining;
  std::vector<std::vector<int>> rows;
  const std::function<void(const Tableau&)>* visit;

  void fill(std::size_t c, int r) {
    if (c == col_len.size()) {
      (*visit)(Tableau::unchecked(rows));
      return;
    }
    if (r == col_len[c]) {
      fill(c + 1, 0);
      return;
    }
    const auto rr = static_cast<std::size_t>(r);
    int lo = 1;
    if (c > 0) lo = std::max(lo, rows[rr][c - 1]);
    if (r > 0) lo = std::max(lo, rows[rr - 1][c] + 1);
    const int hi = maxentry - (col_len[c] - 1 - r);
    for (int v = lo; v <= hi; ++v) {
      if (use_content && remaining[static_cast<std::size_t>(v - 1)] == 0) continue;
      if (use_content) --remaining[static_cast<std::size_t>(v - 1)];
      rows[rr][c] = v;
      fill(c, r + 1);
      if (use_content) ++remaining[static_cast<std::size_t>(v - 1)];
    }
  }
};

}  // namespace

void enumerate_ssyt(const Partition& shape, int maxentry, const std::optional<std::vector<int>>& content,
                    const std::function<void(const Tableau&)>& visit) {
  if (maxentry < 1) {
    if (shape.empty()) visit(Tableau());
    return;
  }
  if (shape.length() > maxentry) return;
  SsytSearch s;
  s.col_len = shape.conjugate().parts();
  s.maxentry = maxentry;
  s.use_content = content.has_value();
  if (s.use_content) {
    s.remaining.assign(static_cast<std::size_t>(maxentry), 0);
    int total = 0;
    for (std::size_t k = 0; k < content->size(); ++k) {
      const int v = (*content)[k];
      if (v < 0) return;
      if (v > 0 && static_cast<int>(k) >= maxentry) return;
      if (static_cast<int>(k) < maxentry) s.remaining[k] = v;
      total += v;
    }
    if (total != shape.size()) return;
  }
  for (int r = 0; r < shape.length(); ++r) s.rows.emplace_back(static_cast<std::size_t>(shape[r]), 0);
  s.visit = &visit;
  s.fill(0, 0);
}

std::vector<Tableau> all_ssyt(const Partition& shape, int maxentry,
                              const std::optional<std::vector<int>>& content) {
  std::vector<Tableau> out;
  enumerate_ssyt(shape, maxentry, content, [&](const Tableau& T) { out.push_back(T); });
  return out;
}

}  // namespace bicrys

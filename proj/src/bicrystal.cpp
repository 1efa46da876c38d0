#include "bicrys/bicrystal.hpp"

#include <algorithm>
#include <cctype>
#include <set>

#include "bicrys/error.hpp"

namespace bicrys {

namespace {

// A maximal block of equal brackets; `tag` identifies its origin.
struct Run {
  bool close;  // ')' = letter i
  long count;
  std::size_t tag;
};

std::optional<std::size_t> select_run(const std::vector<Run>& runs, BicrystalOp::Kind kind) {
  struct Open {
    std::size_t run;
    long remaining;
  };
  std::vector<Open> stack;
  std::optional<std::size_t> last_unpaired_close;
  for (std::size_t r = 0; r < runs.size(); ++r) {
    const Run& run = runs[r];
    if (run.count == 0) continue;
    if (!run.close) {
      stack.push_back({r, run.count});
      continue;
    }
    long need = run.count;
    while (need > 0 && !stack.empty()) {
      const long take = std::min(need, stack.back().remaining);
      need -= take;
      stack.back().remaining -= take;
      if (stack.back().remaining == 0) stack.pop_back();
    }
    if (need > 0) last_unpaired_close = r;
  }
  if (kind == BicrystalOp::Kind::Lower) {
    if (!last_unpaired_close) return std::nullopt;
    return runs[*last_unpaired_close].tag;
  }
  if (stack.empty()) return std::nullopt;
  return runs[stack.front().run].tag;
}

std::optional<ExponentMatrix> apply_row_op(const ExponentMatrix& M, int i, BicrystalOp::Kind kind) {
  if (i < 1 || i >= M.rows()) throw DomainError("operator index out of range");
  const int top = i - 1;
  const int bottom = i;
  std::vector<Run> runs;
  for (int c = 0; c < M.cols(); ++c) {
    runs.push_back({true, M(top, c), static_cast<std::size_t>(c)});
    runs.push_back({false, M(bottom, c), static_cast<std::size_t>(c)});
  }
  const auto col = select_run(runs, kind);
  if (!col) return std::nullopt;
  ExponentMatrix out = M;
  const int c = static_cast<int>(*col);
  if (kind == BicrystalOp::Kind::Lower) {
    out(top, c) -= 1;
    out(bottom, c) += 1;
  } else {
    out(bottom, c) -= 1;
    out(top, c) += 1;
  }
  return out;
}

}  // namespace

std::string BicrystalOp::name() const {
  return std::string(kind == Kind::Lower ? "f_" : "e_") + std::to_string(index) +
         (axis == Side::Row ? "^row" : "^col");
}

BicrystalOp BicrystalOp::parse(const std::string& text) {
  std::string s;
  for (char ch : text)
    if (ch != '_' && ch != '^' && ch != ' ') s += ch;
  if (s.size() < 5) throw ParseError("bad operator '" + text + "'");
  BicrystalOp op;
  if (s[0] == 'f')
    op.kind = Kind::Lower;
  else if (s[0] == 'e')
    op.kind = Kind::Raise;
  else
    throw ParseError("operator must start with e or f: '" + text + "'");
  const std::string tail = s.substr(s.size() - 3);
  if (tail == "row")
    op.axis = Side::Row;
  else if (tail == "col")
    op.axis = Side::Col;
  else
    throw ParseError("operator must end with row or col: '" + text + "'");
  const std::string digits = s.substr(1, s.size() - 4);
  if (digits.empty() || !std::all_of(digits.begin(), digits.end(),
                                     [](char ch) { return std::isdigit(static_cast<unsigned char>(ch)); }))
    throw ParseError("bad operator index in '" + text + "'");
  op.index = std::stoi(digits);
  return op;
}

Word row_word(const ExponentMatrix& M) {
  Word w;
  for (int c = 0; c < M.cols(); ++c)
    for (int r = 0; r < M.rows(); ++r)
      for (int k = 0; k < M(r, c); ++k) w.push_back(r + 1);
  return w;
}

Word col_word(const ExponentMatrix& M) { return row_word(M.transposed()); }

std::optional<std::size_t> bracket_position(const Word& w, int i, BicrystalOp::Kind kind) {
  std::vector<Run> runs;
  for (std::size_t p = 0; p < w.size(); ++p) {
    if (w[p] == i) runs.push_back({true, 1, p});
    if (w[p] == i + 1) runs.push_back({false, 1, p});
  }
  return select_run(runs, kind);
}

std::optional<Word> apply_word_op(const Word& w, int i, BicrystalOp::Kind kind) {
  const auto p = bracket_position(w, i, kind);
  if (!p) return std::nullopt;
  Word out = w;
  out[*p] += kind == BicrystalOp::Kind::Lower ? 1 : -1;
  return out;
}

std::optional<ExponentMatrix> apply_op(const ExponentMatrix& M, const BicrystalOp& op) {
  if (op.axis == Side::Row) return apply_row_op(M, op.index, op.kind);
  auto t = apply_row_op(M.transposed(), op.index, op.kind);
  if (!t) return std::nullopt;
  return t->transposed();
}

std::vector<BicrystalOp> admissible_ops(const LeviDatum& datum) {
  std::vector<BicrystalOp> ops;
  for (int i = 1; i < datum.rows(); ++i)
    if (datum.row_index_admissible(i)) {
      ops.push_back(BicrystalOp::f_row(i));
      ops.push_back(BicrystalOp::e_row(i));
    }
  for (int j = 1; j < datum.cols(); ++j)
    if (datum.col_index_admissible(j)) {
      ops.push_back(BicrystalOp::f_col(j));
      ops.push_back(BicrystalOp::e_col(j));
    }
  return ops;
}

bool is_highest_weight(const ExponentMatrix& M, const LeviDatum& datum) {
  if (M.rows() != datum.rows() || M.cols() != datum.cols())
    throw DomainError("matrix does not match the datum");
  for (const auto& op : admissible_ops(datum))
    if (op.kind == BicrystalOp::Kind::Raise && apply_op(M, op)) return false;
  return true;
}

TestSet test_set(const GroebnerBasis& gb, const BicrystalOp& op) {
  const int m = gb.rows();
  const int n = gb.cols();
  const int limit = op.axis == Side::Row ? m : n;
  if (op.index < 1 || op.index >= limit) throw DomainError("operator index out of range");
  std::set<ExponentMatrix> members;
  for (const auto& lead : gb.lead_exponents()) {
    long sigma = 0;
    for (int k = 0; k < (op.axis == Side::Row ? n : m); ++k)
      for (int s = 0; s < 2; ++s)
        sigma += op.axis == Side::Row ? lead(op.index - 1 + s, k) : lead(k, op.index - 1 + s);
    const int pr = op.axis == Side::Row ? 2 : m;
    const int pc = op.axis == Side::Row ? n : 2;
    for_each_up_to_degree(pr, pc, static_cast<int>(sigma + 1), [&](const ExponentMatrix& A) {
      ExponentMatrix N = lead;
      for (int r = 0; r < pr; ++r)
        for (int c = 0; c < pc; ++c) {
          if (op.axis == Side::Row)
            N(op.index - 1 + r, c) += A(r, c);
          else
            N(r, op.index - 1 + c) += A(r, c);
        }
      members.insert(std::move(N));
    });
  }
  TestSet ts{op, gb.order, {members.begin(), members.end()}};
  std::sort(ts.members.begin(), ts.members.end(),
            [&](const ExponentMatrix& a, const ExponentMatrix& b) { return gb.order.less(a, b); });
  return ts;
}

TestSet minimal_test_set(const TestSet& ts, const GroebnerBasis& /*gb*/) {
  std::vector<std::pair<ExponentMatrix, ExponentMatrix>> live;
  for (const auto& N : ts.members)
    if (auto img = apply_op(N, ts.op)) live.emplace_back(N, *img);
  TestSet out{ts.op, ts.order, {}};
  for (std::size_t a = 0; a < live.size(); ++a) {
    bool dominated = false;
    for (std::size_t b = 0; b < live.size() && !dominated; ++b) {
      if (a == b) continue;
      dominated = live[b].first.divides(live[a].first) && live[b].second.divides(live[a].second);
    }
    if (!dominated) out.members.push_back(live[a].first);
  }
  return out;
}

Verdict is_bicrystalline(const GroebnerBasis& gb, const LeviDatum& datum) {
  if (gb.rows() != datum.rows() || gb.cols() != datum.cols())
    throw DomainError("basis ring does not match the datum");
  if (gb.is_unit()) return {};
  const auto leads = gb.lead_exponents();
  for (const auto& op : admissible_ops(datum))
    for (const auto& N : test_set(gb, op).members) {
      auto img = apply_op(N, op);
      if (img && !in_initial_ideal(*img, leads)) return {false, Witness{op, N, *img}};
    }
  return {};
}

Verdict brute_force_bicrystalline(const GroebnerBasis& gb, const LeviDatum& datum, int d) {
  if (gb.rows() != datum.rows() || gb.cols() != datum.cols())
    throw DomainError("basis ring does not match the datum");
  const auto leads = gb.lead_exponents();
  for (const auto& op : admissible_ops(datum)) {
    std::optional<Witness> best;
    for_each_up_to_degree(gb.rows(), gb.cols(), d, [&](const ExponentMatrix& M) {
      if (!in_initial_ideal(M, leads)) return;
      if (best && !gb.order.less(M, best->source)) return;
      auto img = apply_op(M, op);
      if (img && !in_initial_ideal(*img, leads)) best = Witness{op, M, *img};
    });
    if (best) return {false, best};
  }
  return {};
}

}  // namespace bicrys

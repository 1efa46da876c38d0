#include "bicrys/format.hpp"

#include <algorithm>
#include <deque>
#include <map>
#include <set>

#include "bicrys/bicrystal.hpp"
#include "bicrys/error.hpp"

namespace bicrys {

namespace {

void append_factors(std::vector<std::string>& out, const PartitionTuple& parts,
                    const std::vector<std::pair<int, int>>& blocks, char var) {
  for (std::size_t k = 0; k < parts.size(); ++k) {
    const Partition& p = parts[k];
    if (p.empty()) continue;
    const auto [a, b] = blocks[k];
    if (a == b) {
      std::string f = var + std::to_string(a);
      if (p[0] > 1) f += "^" + std::to_string(p[0]);
      out.push_back(std::move(f));
    } else {
      out.push_back("s_{" + to_string(p) + "}(" + var + std::to_string(a) + ".." + var + std::to_string(b) + ")");
    }
  }
}

// Degree ascending, then keys descending.
std::vector<std::pair<CharacterKey, long>> ordered_entries(const MultiplicityTable& table) {
  std::vector<std::pair<CharacterKey, long>> v(table.entries.begin(), table.entries.end());
  std::stable_sort(v.begin(), v.end(), [](const auto& x, const auto& y) {
    const int dx = x.first.degree();
    const int dy = y.first.degree();
    if (dx != dy) return dx < dy;
    return y.first < x.first;
  });
  return v;
}

}  // namespace

std::string format_character_term(const CharacterKey& key, const LeviDatum& datum) {
  std::vector<std::string> factors;
  append_factors(factors, key.lambda, datum.row_blocks(), 'x');
  append_factors(factors, key.mu, datum.col_blocks(), 'y');
  if (factors.empty()) return "1";
  std::string out;
  for (std::size_t k = 0; k < factors.size(); ++k) {
    if (k) out += '*';
    out += factors[k];
  }
  return out;
}

std::string format_character(const MultiplicityTable& table) {
  std::string out;
  for (const auto& [key, count] : ordered_entries(table)) {
    if (count == 0) continue;
    if (!out.empty()) out += " + ";
    const std::string term = format_character_term(key, table.datum);
    if (count == 1)
      out += term;
    else
      out += std::to_string(count) + "*" + term;
  }
  return out.empty() ? "0" : out;
}

std::string format_table(const MultiplicityTable& table) {
  std::string out;
  for (const auto& [key, count] : ordered_entries(table))
    out += to_string(key.lambda) + "|" + to_string(key.mu) + " " + std::to_string(count) + "\n";
  return out;
}

namespace {

std::string trim(const std::string& s) {
  const auto a = s.find_first_not_of(" \t\n");
  if (a == std::string::npos) return "";
  const auto b = s.find_last_not_of(" \t\n");
  return s.substr(a, b - a + 1);
}

std::vector<std::string> split(const std::string& s, const std::string& sep) {
  std::vector<std::string> out;
  std::size_t start = 0;
  while (true) {
    const auto at = s.find(sep, start);
    out.push_back(s.substr(start, at == std::string::npos ? std::string::npos : at - start));
    if (at == std::string::npos) break;
    start = at + sep.size();
  }
  return out;
}

int parse_index(const std::string& s) {
  if (s.empty() || !std::all_of(s.begin(), s.end(), [](char c) { return c >= '0' && c <= '9'; }))
    throw ParseError("bad index '" + s + "' in character");
  return std::stoi(s);
}

std::size_t block_of(const std::vector<std::pair<int, int>>& blocks, int a, int b) {
  for (std::size_t k = 0; k < blocks.size(); ++k)
    if (blocks[k].first == a && blocks[k].second == b) return k;
  throw ParseError("variables " + std::to_string(a) + ".." + std::to_string(b) + " are not a block");
}

}  // namespace

MultiplicityTable parse_character(const std::string& text, const LeviDatum& datum) {
  MultiplicityTable table{datum, 0, {}};
  const std::string body = trim(text);
  if (body == "0") return table;
  const auto rows = datum.row_blocks();
  const auto cols = datum.col_blocks();
  for (const auto& raw : split(body, " + ")) {
    std::string term = trim(raw);
    long count = 1;
    auto factors = split(term, "*");
    if (!factors.empty() && !factors[0].empty() &&
        std::all_of(factors[0].begin(), factors[0].end(), [](char c) { return c >= '0' && c <= '9'; })) {
      count = std::stol(factors[0]);
      factors.erase(factors.begin());
      if (count <= 0) throw ParseError("nonpositive coefficient in character");
    }
    CharacterKey key{PartitionTuple(rows.size()), PartitionTuple(cols.size())};
    if (!(factors.size() == 1 && factors[0] == "1")) {
      for (const auto& f : factors) {
        if (f.rfind("s_{", 0) == 0) {
          const auto close = f.find("}(");
          if (close == std::string::npos || f.back() != ')') throw ParseError("bad factor '" + f + "'");
          const Partition p = parse_partition(f.substr(3, close - 3));
          const std::string range = f.substr(close + 2, f.size() - close - 3);
          const auto dots = range.find("..");
          if (dots == std::string::npos || range.size() < 2) throw ParseError("bad range '" + range + "'");
          const char var = range[0];
          const int a = parse_index(range.substr(1, dots - 1));
          if (range[dots + 2] != var) throw ParseError("bad range '" + range + "'");
          const int b = parse_index(range.substr(dots + 3));
          if (var == 'x')
            key.lambda[block_of(rows, a, b)] = p;
          else if (var == 'y')
            key.mu[block_of(cols, a, b)] = p;
          else
            throw ParseError("bad variable in '" + f + "'");
        } else if (!f.empty() && (f[0] == 'x' || f[0] == 'y')) {
          const auto caret = f.find('^');
          const int a = parse_index(f.substr(1, caret == std::string::npos ? std::string::npos : caret - 1));
          const int e = caret == std::string::npos ? 1 : parse_index(f.substr(caret + 1));
          if (f[0] == 'x')
            key.lambda[block_of(rows, a, a)] = Partition({e});
          else
            key.mu[block_of(cols, a, a)] = Partition({e});
        } else {
          throw ParseError("bad factor '" + f + "'");
        }
      }
    }
    table.max_degree = std::max(table.max_degree, key.degree());
    table.entries[key] += count;
  }
  return table;
}

std::string export_crystal_graph(const std::vector<ExponentMatrix>& vertices, const LeviDatum& datum, int degree) {
  std::set<ExponentMatrix> verts;
  for (const auto& M : vertices) {
    if (M.rows() != datum.rows() || M.cols() != datum.cols()) throw DomainError("vertex does not match the datum");
    if (M.degree() == degree) verts.insert(M);
  }
  std::map<ExponentMatrix, std::size_t> id;
  for (const auto& M : verts) id.emplace(M, id.size());
  std::string out = "digraph crystal {\n";
  for (const auto& [M, k] : id) out += "  v" + std::to_string(k) + " [label=\"" + to_string(M) + "\"];\n";
  const auto ops = admissible_ops(datum);
  for (const auto& [M, k] : id)
    for (const auto& op : ops) {
      if (op.kind != BicrystalOp::Kind::Lower) continue;
      auto img = apply_op(M, op);
      if (!img) continue;
      auto it = id.find(*img);
      if (it == id.end()) continue;
      out += "  v" + std::to_string(k) + " -> v" + std::to_string(it->second) + " [label=\"" + op.name() + "\"];\n";
    }
  out += "}\n";
  return out;
}

std::vector<ExponentMatrix> crystal_component(const ExponentMatrix& seed, const LeviDatum& datum) {
  const auto ops = admissible_ops(datum);
  std::set<ExponentMatrix> seen{seed};
  std::deque<ExponentMatrix> queue{seed};
  while (!queue.empty()) {
    const ExponentMatrix M = queue.front();
    queue.pop_front();
    for (const auto& op : ops)
      if (auto img = apply_op(M, op); img && seen.insert(*img).second) queue.push_back(*img);
  }
  return {seen.begin(), seen.end()};
}

}  // namespace bicrys

#include "bicrys/term_order.hpp"

#include <algorithm>
#include <sstream>

#include "bicrys/error.hpp"

namespace bicrys {

namespace {

std::vector<long long> parse_int_list(const std::string& text) {
  std::vector<long long> out;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) {
    std::size_t used = 0;
    long long v = 0;
    try {
      v = std::stoll(item, &used);
    } catch (const std::exception&) {
      throw ParseError("bad integer '" + item + "' in order specification");
    }
    while (used < item.size() && item[used] == ' ') ++used;
    if (used != item.size()) throw ParseError("bad integer '" + item + "' in order specification");
    out.push_back(v);
  }
  return out;
}

std::vector<int> antidiag_chain(int m, int n) {
  std::vector<int> chain;
  for (int r = 0; r < m; ++r)
    for (int c = n - 1; c >= 0; --c) chain.push_back(r * n + c);
  return chain;
}

}  // namespace

TermOrder::TermOrder(Kind kind, int m, int n, std::vector<int> chain,
                     std::vector<std::int64_t> weights)
    : kind_(kind), m_(m), n_(n), chain_(std::move(chain)), weights_(std::move(weights)) {
  const auto nv = static_cast<std::size_t>(m) * static_cast<std::size_t>(n);
  if (m < 0 || n < 0) throw DomainError("negative ring dimension");
  if (chain_.size() != nv) throw DomainError("variable chain has wrong length");
  std::vector<int> sorted = chain_;
  std::sort(sorted.begin(), sorted.end());
  for (std::size_t k = 0; k < nv; ++k)
    if (sorted[k] != static_cast<int>(k)) throw DomainError("variable chain is not a permutation");
  if (!weights_.empty()) {
    if (weights_.size() != nv) throw DomainError("weight vector has wrong length");
    for (auto w : weights_)
      if (w < 0) throw DomainError("weights must be nonnegative");
  }
}

TermOrder TermOrder::antidiag(int m, int n) {
  return TermOrder(Kind::AntidiagLex, m, n, antidiag_chain(m, n), {});
}

TermOrder TermOrder::diag(int m, int n) {
  std::vector<int> chain;
  for (int k = 0; k < m * n; ++k) chain.push_back(k);
  return TermOrder(Kind::DiagLex, m, n, std::move(chain), {});
}

TermOrder TermOrder::lex(int m, int n, std::vector<int> chain) {
  return TermOrder(Kind::CustomLex, m, n, std::move(chain), {});
}

TermOrder TermOrder::weighted(int m, int n, std::vector<std::int64_t> weights) {
  return TermOrder(Kind::Weighted, m, n, antidiag_chain(m, n), std::move(weights));
}

TermOrder TermOrder::parse(const std::string& name, int m, int n) {
  if (name == "antidiag") return antidiag(m, n);
  if (name == "diag") return diag(m, n);
  if (name.rfind("lex:", 0) == 0) {
    std::vector<int> chain;
    for (auto v : parse_int_list(name.substr(4))) {
      if (v < 1 || v > static_cast<long long>(m) * n)
        throw ParseError("lex variable number out of range");
      chain.push_back(static_cast<int>(v - 1));
    }
    try {
      return lex(m, n, std::move(chain));
    } catch (const DomainError& e) {
      throw ParseError(e.what());
    }
  }
  if (name.rfind("weight:", 0) == 0) {
    std::vector<std::int64_t> w;
    for (auto v : parse_int_list(name.substr(7))) w.push_back(v);
    try {
      return weighted(m, n, std::move(w));
    } catch (const DomainError& e) {
      throw ParseError(e.what());
    }
  }
  throw ParseError("unknown term order '" + name + "'");
}

std::string TermOrder::name() const {
  switch (kind_) {
    case Kind::AntidiagLex:
      return "antidiag";
    case Kind::DiagLex:
      return "diag";
    case Kind::CustomLex: {
      std::string s = "lex:";
      for (std::size_t k = 0; k < chain_.size(); ++k) {
        if (k) s += ',';
        s += std::to_string(chain_[k] + 1);
      }
      return s;
    }
    case Kind::Weighted: {
      std::string s = "weight:";
      for (std::size_t k = 0; k < weights_.size(); ++k) {
        if (k) s += ',';
        s += std::to_string(weights_[k]);
      }
      return s;
    }
  }
  return {};
}

std::int64_t TermOrder::weight_of(const ExponentMatrix& M) const {
  std::int64_t w = 0;
  for (std::size_t k = 0; k < weights_.size(); ++k) w += weights_[k] * M.flat(k);
  return w;
}

std::strong_ordering TermOrder::compare(const ExponentMatrix& a, const ExponentMatrix& b) const {
  if (a.rows() != m_ || a.cols() != n_ || b.rows() != m_ || b.cols() != n_)
    throw DomainError("monomial dimensions do not match the term order");
  if (has_weights()) {
    const auto wa = weight_of(a);
    const auto wb = weight_of(b);
    if (wa != wb) return wa <=> wb;
  }
  for (int v : chain_) {
    const auto ea = a.flat(static_cast<std::size_t>(v));
    const auto eb = b.flat(static_cast<std::size_t>(v));
    if (ea != eb) return ea <=> eb;
  }
  return std::strong_ordering::equal;
}

}  // namespace bicrys

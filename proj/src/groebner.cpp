#include "bicrys/groebner.hpp"

#include <algorithm>
#include <set>
#include <tuple>

#include "bicrys/error.hpp"

namespace bicrys {

namespace {

// Monomials inside the engine are keys [weight, exponents in chain order], so
// that the term order becomes plain lexicographic comparison of keys.
using Key = std::vector<std::int64_t>;

class KeyRing {
 public:
  explicit KeyRing(const TermOrder& ord) : ord_(ord) {
    for (int v : ord.chain())
      chain_weights_.push_back(ord.has_weights() ? ord.weights()[static_cast<std::size_t>(v)] : 0);
  }

  Key key(const ExponentMatrix& M) const {
    Key k(1 + ord_.chain().size());
    k[0] = ord_.has_weights() ? ord_.weight_of(M) : 0;
    for (std::size_t p = 0; p < ord_.chain().size(); ++p)
      k[p + 1] = M.flat(static_cast<std::size_t>(ord_.chain()[p]));
    return k;
  }

  ExponentMatrix matrix(const Key& k) const {
    ExponentMatrix M(ord_.rows(), ord_.cols());
    for (std::size_t p = 0; p < ord_.chain().size(); ++p)
      M.flat(static_cast<std::size_t>(ord_.chain()[p])) =
          static_cast<ExponentMatrix::value_type>(k[p + 1]);
    return M;
  }

  static bool divides(const Key& a, const Key& b) {
    for (std::size_t p = 1; p < a.size(); ++p)
      if (a[p] > b[p]) return false;
    return true;
  }

  static bool coprime(const Key& a, const Key& b) {
    for (std::size_t p = 1; p < a.size(); ++p)
      if (a[p] != 0 && b[p] != 0) return false;
    return true;
  }

  Key lcm(const Key& a, const Key& b) const {
    Key l(a.size());
    std::int64_t w = 0;
    for (std::size_t p = 1; p < a.size(); ++p) {
      l[p] = std::max(a[p], b[p]);
      w += chain_weights_[p - 1] * l[p];
    }
    l[0] = w;
    return l;
  }

  static Key quotient(const Key& b, const Key& a) {
    Key q(b.size());
    for (std::size_t p = 0; p < b.size(); ++p) q[p] = b[p] - a[p];
    return q;
  }

  static Key product(const Key& a, const Key& b) {
    Key q(a.size());
    for (std::size_t p = 0; p < a.size(); ++p) q[p] = a[p] + b[p];
    return q;
  }

  static std::int64_t degree(const Key& k) {
    std::int64_t d = 0;
    for (std::size_t p = 1; p < k.size(); ++p) d += k[p];
    return d;
  }

  const TermOrder& order() const { return ord_; }

 private:
  const TermOrder& ord_;
  std::vector<std::int64_t> chain_weights_;
};

// Terms sorted ascending; the lead term is at the back.
struct Poly {
  std::vector<Key> mons;
  std::vector<Rational> coefs;

  bool empty() const { return mons.empty(); }
  const Key& lead() const { return mons.back(); }
  const Rational& lead_coef() const { return coefs.back(); }
};

Poly to_poly(const Polynomial& f, const KeyRing& ring) {
  std::vector<std::pair<Key, Rational>> terms;
  terms.reserve(f.term_count());
  for (const auto& [M, c] : f.terms()) terms.emplace_back(ring.key(M), c);
  std::sort(terms.begin(), terms.end(),
            [](const auto& a, const auto& b) { return a.first < b.first; });
  Poly p;
  for (auto& [k, c] : terms) {
    p.mons.push_back(std::move(k));
    p.coefs.push_back(std::move(c));
  }
  return p;
}

Polynomial to_polynomial(const Poly& p, const KeyRing& ring) {
  Polynomial f(ring.order().rows(), ring.order().cols());
  for (std::size_t t = 0; t < p.mons.size(); ++t) f.add_term(ring.matrix(p.mons[t]), p.coefs[t]);
  return f;
}

// p - c * x^s * g, all sequences ascending.
Poly axpy(const Poly& p, const Rational& c, const Key& s, const Poly& g) {
  Poly out;
  out.mons.reserve(p.mons.size() + g.mons.size());
  out.coefs.reserve(p.mons.size() + g.mons.size());
  std::size_t i = 0;
  std::size_t j = 0;
  Key shifted;
  bool have_shifted = false;
  while (i < p.mons.size() || j < g.mons.size()) {
    if (j < g.mons.size() && !have_shifted) {
      shifted = KeyRing::product(g.mons[j], s);
      have_shifted = true;
    }
    if (j >= g.mons.size() || (i < p.mons.size() && p.mons[i] < shifted)) {
      out.mons.push_back(p.mons[i]);
      out.coefs.push_back(p.coefs[i]);
      ++i;
    } else if (i >= p.mons.size() || shifted < p.mons[i]) {
      out.mons.push_back(shifted);
      out.coefs.push_back(-c * g.coefs[j]);
      ++j;
      have_shifted = false;
    } else {
      Rational v = p.coefs[i] - c * g.coefs[j];
      if (v != 0) {
        out.mons.push_back(p.mons[i]);
        out.coefs.push_back(std::move(v));
      }
      ++i;
      ++j;
      have_shifted = false;
    }
  }
  return out;
}

void make_monic(Poly& p) {
  if (p.empty()) return;
  const Rational inv = 1 / p.lead_coef();
  for (auto& c : p.coefs) c *= inv;
}

const Poly* find_divisor(const Key& m, const std::vector<const Poly*>& basis) {
  for (const Poly* g : basis)
    if (KeyRing::divides(g->lead(), m)) return g;
  return nullptr;
}

Poly reduce(Poly p, const std::vector<const Poly*>& basis) {
  Poly rem;
  while (!p.empty()) {
    const Poly* g = find_divisor(p.lead(), basis);
    if (g) {
      const Rational c = p.lead_coef() / g->lead_coef();
      const Key s = KeyRing::quotient(p.lead(), g->lead());
      p = axpy(p, c, s, *g);
    } else {
      rem.mons.push_back(std::move(p.mons.back()));
      rem.coefs.push_back(std::move(p.coefs.back()));
      p.mons.pop_back();
      p.coefs.pop_back();
    }
  }
  std::reverse(rem.mons.begin(), rem.mons.end());
  std::reverse(rem.coefs.begin(), rem.coefs.end());
  return rem;
}

Poly spoly(const Poly& f, const Poly& g, const KeyRing& ring) {
  const Key l = ring.lcm(f.lead(), g.lead());
  const Key sf = KeyRing::quotient(l, f.lead());
  const Key sg = KeyRing::quotient(l, g.lead());
  Poly scaled;
  const Rational inv = 1 / f.lead_coef();
  for (std::size_t t = 0; t < f.mons.size(); ++t) {
    scaled.mons.push_back(KeyRing::product(f.mons[t], sf));
    scaled.coefs.push_back(f.coefs[t] * inv);
  }
  return axpy(scaled, 1 / g.lead_coef(), sg, g);
}

std::vector<const Poly*> pointers(const std::vector<Poly>& v) {
  std::vector<const Poly*> out;
  for (const auto& p : v) out.push_back(&p);
  return out;
}

// Reduced basis from an arbitrary Groebner basis held as Polys.
std::vector<Poly> interreduce(std::vector<Poly> G) {
  G.erase(std::remove_if(G.begin(), G.end(), [](const Poly& p) { return p.empty(); }), G.end());
  for (const auto& g : G)
    if (KeyRing::degree(g.lead()) == 0) {
      Poly one;
      one.mons.push_back(g.lead());
      one.coefs.emplace_back(1);
      return {one};
    }
  std::vector<bool> keep(G.size(), true);
  for (std::size_t a = 0; a < G.size(); ++a) {
    for (std::size_t b = 0; b < G.size() && keep[a]; ++b) {
      if (a == b || !keep[b]) continue;
      if (KeyRing::divides(G[b].lead(), G[a].lead())) keep[a] = false;
    }
  }
  std::vector<Poly> minimal;
  for (std::size_t a = 0; a < G.size(); ++a)
    if (keep[a]) minimal.push_back(std::move(G[a]));
  std::vector<Poly> out;
  for (std::size_t a = 0; a < minimal.size(); ++a) {
    std::vector<const Poly*> others;
    for (std::size_t b = 0; b < minimal.size(); ++b)
      if (b != a) others.push_back(&minimal[b]);
    Poly r = reduce(minimal[a], others);
    make_monic(r);
    out.push_back(std::move(r));
  }
  std::sort(out.begin(), out.end(), [](const Poly& x, const Poly& y) { return y.lead() < x.lead(); });
  return out;
}

struct PairEntry {
  std::int64_t degree;
  Key lcm;
  std::size_t i;
  std::size_t j;

  friend bool operator<(const PairEntry& a, const PairEntry& b) {
    return std::tie(a.degree, a.lcm, a.i, a.j) < std::tie(b.degree, b.lcm, b.i, b.j);
  }
};

std::vector<Poly> run_buchberger(std::vector<Poly> input, const KeyRing& ring) {
  std::vector<Poly> G;
  std::set<PairEntry> queue;
  std::set<std::pair<std::size_t, std::size_t>> pending;

  auto add = [&](Poly p) {
    make_monic(p);
    const std::size_t t = G.size();
    G.push_back(std::move(p));
    for (std::size_t i = 0; i < t; ++i) {
      Key l = ring.lcm(G[i].lead(), G[t].lead());
      const auto d = KeyRing::degree(l);
      queue.insert(PairEntry{d, std::move(l), i, t});
      pending.emplace(i, t);
    }
  };

  for (auto& p : input) {
    if (p.empty()) continue;
    if (KeyRing::degree(p.lead()) == 0) return {std::move(p)};
    add(std::move(p));
  }

  while (!queue.empty()) {
    const PairEntry pe = *queue.begin();
    queue.erase(queue.begin());
    pending.erase({pe.i, pe.j});
    const Poly& gi = G[pe.i];
    const Poly& gj = G[pe.j];
    if (KeyRing::coprime(gi.lead(), gj.lead())) continue;
    bool chain = false;
    for (std::size_t k = 0; k < G.size() && !chain; ++k) {
      if (k == pe.i || k == pe.j) continue;
      if (!KeyRing::divides(G[k].lead(), pe.lcm)) continue;
      auto key_ik = std::minmax(pe.i, k);
      auto key_jk = std::minmax(pe.j, k);
      if (pending.count({key_ik.first, key_ik.second}) == 0 &&
          pending.count({key_jk.first, key_jk.second}) == 0)
        chain = true;
    }
    if (chain) continue;
    Poly h = reduce(spoly(gi, gj, ring), pointers(G));
    if (h.empty()) continue;
    if (KeyRing::degree(h.lead()) == 0) return {std::move(h)};
    add(std::move(h));
  }
  return G;
}

}  // namespace

std::vector<ExponentMatrix> GroebnerBasis::lead_exponents() const {
  std::vector<ExponentMatrix> leads;
  for (const auto& g : generators) leads.push_back(leading_exponent(g, order));
  return leads;
}

bool GroebnerBasis::is_unit() const {
  for (const auto& g : generators)
    if (!g.is_zero() && g.is_constant()) return true;
  return false;
}

std::pair<Rational, ExponentMatrix> leading_term(const Polynomial& f, const TermOrder& ord) {
  if (f.is_zero()) throw DomainError("leading term of the zero polynomial");
  auto best = f.terms().begin();
  for (auto it = std::next(best); it != f.terms().end(); ++it)
    if (ord.less(best->first, it->first)) best = it;
  return {best->second, best->first};
}

ExponentMatrix leading_exponent(const Polynomial& f, const TermOrder& ord) {
  return leading_term(f, ord).second;
}

Polynomial make_monic(const Polynomial& f, const TermOrder& ord) {
  if (f.is_zero()) return f;
  return f * (1 / leading_term(f, ord).first);
}

Polynomial normal_form(const Polynomial& f, std::span<const Polynomial> basis,
                       const TermOrder& ord) {
  const KeyRing ring(ord);
  std::vector<Poly> B;
  for (const auto& g : basis) {
    if (g.rows() != ord.rows() || g.cols() != ord.cols())
      throw DomainError("basis element outside the ring");
    if (!g.is_zero()) B.push_back(to_poly(g, ring));
  }
  if (f.rows() != ord.rows() || f.cols() != ord.cols())
    throw DomainError("polynomial outside the ring");
  return to_polynomial(reduce(to_poly(f, ring), pointers(B)), ring);
}

Polynomial normal_form(const Polynomial& f, const GroebnerBasis& gb) {
  return normal_form(f, gb.generators, gb.order);
}

Polynomial s_polynomial(const Polynomial& f, const Polynomial& g, const TermOrder& ord) {
  if (f.is_zero() || g.is_zero()) throw DomainError("S-polynomial of zero");
  const KeyRing ring(ord);
  return to_polynomial(spoly(to_poly(f, ring), to_poly(g, ring), ring), ring);
}

GroebnerBasis buchberger(std::span<const Polynomial> gens, const TermOrder& ord) {
  const KeyRing ring(ord);
  std::vector<Poly> input;
  for (const auto& g : gens) {
    if (g.rows() != ord.rows() || g.cols() != ord.cols())
      throw DomainError("generator outside the ring");
    input.push_back(to_poly(g, ring));
  }
  GroebnerBasis gb{ord, {}, true};
  for (const auto& p : interreduce(run_buchberger(std::move(input), ring)))
    gb.generators.push_back(to_polynomial(p, ring));
  return gb;
}

GroebnerBasis reduce_basis(const GroebnerBasis& gb) {
  const KeyRing ring(gb.order);
  std::vector<Poly> G;
  for (const auto& g : gb.generators) G.push_back(to_poly(g, ring));
  GroebnerBasis out{gb.order, {}, true};
  for (const auto& p : interreduce(std::move(G))) out.generators.push_back(to_polynomial(p, ring));
  return out;
}

bool is_groebner_basis(std::span<const Polynomial> gens, const TermOrder& ord) {
  const KeyRing ring(ord);
  std::vector<Poly> G;
  for (const auto& g : gens)
    if (!g.is_zero()) G.push_back(to_poly(g, ring));
  const auto ptrs = pointers(G);
  for (std::size_t i = 0; i < G.size(); ++i)
    for (std::size_t j = i + 1; j < G.size(); ++j) {
      if (KeyRing::coprime(G[i].lead(), G[j].lead())) continue;
      if (!reduce(spoly(G[i], G[j], ring), ptrs).empty()) return false;
    }
  return true;
}

bool in_initial_ideal(const ExponentMatrix& M, std::span<const ExponentMatrix> leads) {
  for (const auto& L : leads)
    if (L.divides(M)) return true;
  return false;
}

bool in_initial_ideal(const ExponentMatrix& M, const GroebnerBasis& gb) {
  if (M.rows() != gb.rows() || M.cols() != gb.cols())
    throw DomainError("exponent matrix outside the ring");
  const auto leads = gb.lead_exponents();
  return in_initial_ideal(M, leads);
}

void for_each_standard_monomial(const GroebnerBasis& gb, int d,
                                const std::function<void(const ExponentMatrix&)>& visit) {
  const auto leads = gb.lead_exponents();
  for_each_up_to_degree(gb.rows(), gb.cols(), d, [&](const ExponentMatrix& M) {
    if (!in_initial_ideal(M, leads)) visit(M);
  });
}

std::vector<ExponentMatrix> standard_monomials_up_to(const GroebnerBasis& gb, int d) {
  std::vector<ExponentMatrix> out;
  for_each_standard_monomial(gb, d, [&](const ExponentMatrix& M) { out.push_back(M); });
  return out;
}

}  // namespace bicrys

#pragma once

#include <functional>
#include <span>
#include <utility>
#include <vector>

#include "bicrys/polynomial.hpp"
#include "bicrys/term_order.hpp"

namespace bicrys {

struct GroebnerBasis {
  TermOrder order;
  std::vector<Polynomial> generators;
  bool reduced = false;

  int rows() const noexcept { return order.rows(); }
  int cols() const noexcept { return order.cols(); }
  std::vector<ExponentMatrix> lead_exponents() const;
  bool is_unit() const;
};

std::pair<Rational, ExponentMatrix> leading_term(const Polynomial& f, const TermOrder& ord);
ExponentMatrix leading_exponent(const Polynomial& f, const TermOrder& ord);
Polynomial make_monic(const Polynomial& f, const TermOrder& ord);

// Full division remainder: no term of the result is divisible by a lead of `basis`.
Polynomial normal_form(const Polynomial& f, std::span<const Polynomial> basis,
                       const TermOrder& ord);
Polynomial normal_form(const Polynomial& f, const GroebnerBasis& gb);

Polynomial s_polynomial(const Polynomial& f, const Polynomial& g, const TermOrder& ord);

// Buchberger with the coprime-lead and chain criteria under the normal selection
// strategy. The result is already reduced.
GroebnerBasis buchberger(std::span<const Polynomial> gens, const TermOrder& ord);
GroebnerBasis reduce_basis(const GroebnerBasis& gb);

// Every S-polynomial of `gens` reduces to zero against `gens`.
bool is_groebner_basis(std::span<const Polynomial> gens, const TermOrder& ord);

bool in_initial_ideal(const ExponentMatrix& M, const GroebnerBasis& gb);
bool in_initial_ideal(const ExponentMatrix& M, std::span<const ExponentMatrix> leads);

void for_each_standard_monomial(const GroebnerBasis& gb, int d,
                                const std::function<void(const ExponentMatrix&)>& visit);
std::vector<ExponentMatrix> standard_monomials_up_to(const GroebnerBasis& gb, int d);

}  // namespace bicrys

#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <optional>
#include <string>
#include <vector>

#include "bicrys/bicrystal.hpp"
#include "bicrys/constructors.hpp"
#include "bicrys/error.hpp"
#include "bicrys/expr.hpp"
#include "bicrys/format.hpp"
#include "bicrys/multiplicity.hpp"
#include "bicrys/spec.hpp"
#include "bicrys/tableau.hpp"

namespace py = pybind11;
using namespace bicrys;

namespace {

using Rows = std::vector<std::vector<int>>;

Rows to_rows(const ExponentMatrix& M) {
  Rows out(static_cast<std::size_t>(M.rows()));
  for (int r = 0; r < M.rows(); ++r)
    for (int c = 0; c < M.cols(); ++c) out[static_cast<std::size_t>(r)].push_back(static_cast<int>(M(r, c)));
  return out;
}

std::vector<Rows> to_rows(const std::vector<ExponentMatrix>& v) {
  std::vector<Rows> out;
  for (const auto& M : v) out.push_back(to_rows(M));
  return out;
}

Module parse_side(const std::string& side) {
  if (side == "quotient") return Module::Quotient;
  if (side == "ideal") return Module::Ideal;
  throw DomainError("side must be 'quotient' or 'ideal'");
}

// An ideal together with its ring, Levi datum and term order; the basis is computed once.
class Ideal {
 public:
  explicit Ideal(IdealSpec spec) : spec_(std::move(spec)), gb_(buchberger(spec_.generators, spec_.order)) {}

  static Ideal from_json(const std::string& document) { return Ideal(parse_ideal_spec(document)); }

  static Ideal from_generators(int m, int n, const std::vector<std::string>& generators,
                               std::optional<std::vector<int>> levi_rows, std::optional<std::vector<int>> levi_cols,
                               const std::string& order) {
    IdealSpec s;
    s.m = m;
    s.n = n;
    for (const auto& g : generators) s.generators.push_back(parse_polynomial(g, m, n));
    s.datum = LeviDatum(levi_rows.value_or(std::vector<int>{0, m}), levi_cols.value_or(std::vector<int>{0, n}));
    s.order = TermOrder::parse(order, m, n);
    return Ideal(std::move(s));
  }

  std::string to_json() const { return dump_ideal_spec(spec_); }

  std::vector<std::string> groebner_basis() const {
    std::vector<std::string> out;
    for (const auto& g : gb_.generators) out.push_back(format_polynomial(g, gb_.order));
    return out;
  }

  std::vector<Rows> initial_ideal() const { return to_rows(gb_.lead_exponents()); }

  bool is_standard(const Rows& M) const { return !in_initial_ideal(ExponentMatrix::from_rows(M), gb_); }

  bool is_levi_stable() const { return bicrys::is_levi_stable(spec_.generators, spec_.datum); }

  py::object is_bicrystalline() const {
    auto v = bicrys::is_bicrystalline(gb_, spec_.datum);
    if (v.bicrystalline) return py::make_tuple(true, py::none());
    py::dict witness;
    witness["op"] = v.witness->op.name();
    witness["source"] = to_rows(v.witness->source);
    witness["image"] = to_rows(v.witness->image);
    return py::make_tuple(false, witness);
  }

  long multiplicity(const std::string& lambda, const std::string& mu, const std::string& side) const {
    return bicrys::multiplicity(gb_, spec_.datum, parse_partition_tuple(lambda), parse_partition_tuple(mu),
                                parse_side(side));
  }

  std::vector<Rows> counted_matrices(const std::string& lambda, const std::string& mu, const std::string& side) const {
    return to_rows(bicrys::counted_matrices(gb_, spec_.datum, parse_partition_tuple(lambda),
                                            parse_partition_tuple(mu), parse_side(side)));
  }

  std::string character(int d, const std::string& side) const {
    return format_character(bicrys::character_table(gb_, spec_.datum, d, parse_side(side)));
  }

  py::dict character_table(int d, const std::string& side) const {
    py::dict out;
    for (const auto& [key, count] : bicrys::character_table(gb_, spec_.datum, d, parse_side(side)).entries)
      out[py::make_tuple(to_string(key.lambda), to_string(key.mu))] = count;
    return out;
  }

  int rows() const { return spec_.m; }
  int cols() const { return spec_.n; }
  std::vector<int> levi_rows() const { return spec_.datum.row_cuts(); }
  std::vector<int> levi_cols() const { return spec_.datum.col_cuts(); }
  std::string order() const { return spec_.order.name(); }

 private:
  IdealSpec spec_;
  GroebnerBasis gb_;
};

std::vector<std::string> formatted(const std::vector<Polynomial>& polys) {
  std::vector<std::string> out;
  for (const auto& f : polys) out.push_back(format_polynomial(f));
  return out;
}

}  // namespace

PYBIND11_MODULE(_core, m) {
  m.doc() = "Bicrystal structure of determinantal-type ideals";

  py::register_exception<ParseError>(m, "ParseError", PyExc_ValueError);
  py::register_exception<DomainError>(m, "DomainError", PyExc_ValueError);

  py::class_<Ideal>(m, "Ideal")
      .def_static("from_json", &Ideal::from_json, py::arg("document"))
      .def_static("from_generators", &Ideal::from_generators, py::arg("m"), py::arg("n"), py::arg("generators"),
                  py::arg("levi_rows") = py::none(), py::arg("levi_cols") = py::none(),
                  py::arg("order") = "antidiag")
      .def("to_json", &Ideal::to_json)
      .def("groebner_basis", &Ideal::groebner_basis)
      .def("initial_ideal", &Ideal::initial_ideal, "Lead exponents of the reduced basis.")
      .def("is_standard", &Ideal::is_standard, py::arg("matrix"))
      .def("is_levi_stable", &Ideal::is_levi_stable)
      .def("is_bicrystalline", &Ideal::is_bicrystalline, "Returns (verdict, witness or None).")
      .def("multiplicity", &Ideal::multiplicity, py::arg("lam"), py::arg("mu"), py::arg("side") = "quotient")
      .def("counted_matrices", &Ideal::counted_matrices, py::arg("lam"), py::arg("mu"),
           py::arg("side") = "quotient")
      .def("character", &Ideal::character, py::arg("max_degree"), py::arg("side") = "quotient")
      .def("character_table", &Ideal::character_table, py::arg("max_degree"), py::arg("side") = "quotient")
      .def_property_readonly("m", &Ideal::rows)
      .def_property_readonly("n", &Ideal::cols)
      .def_property_readonly("levi_rows", &Ideal::levi_rows)
      .def_property_readonly("levi_cols", &Ideal::levi_cols)
      .def_property_readonly("order", &Ideal::order);

  m.def(
      "apply_op",
      [](const Rows& M, const std::string& op) -> std::optional<Rows> {
        auto out = bicrys::apply_op(ExponentMatrix::from_rows(M), BicrystalOp::parse(op));
        if (!out) return std::nullopt;
        return to_rows(*out);
      },
      py::arg("matrix"), py::arg("op"), "Apply e_i/f_i on rows or columns, e.g. 'f_1^row'. None when undefined.");

  m.def(
      "rsk",
      [](const Rows& M) {
        auto pair = bicrys::rsk(ExponentMatrix::from_rows(M));
        return py::make_tuple(pair.P.rows(), pair.Q.rows());
      },
      py::arg("matrix"));
  m.def(
      "rsk_inverse",
      [](const Rows& P, const Rows& Q, int rows, int cols) {
        return to_rows(bicrys::rsk_inverse({Tableau(P), Tableau(Q)}, rows, cols));
      },
      py::arg("P"), py::arg("Q"), py::arg("m"), py::arg("n"));
  m.def(
      "insertion_tableau", [](const Word& w) { return bicrys::insertion_tableau(w).rows(); }, py::arg("word"));
  m.def(
      "width", [](const Word& w, int a, int b) { return bicrys::width(w, a, b); }, py::arg("word"), py::arg("a"),
      py::arg("b"), "Longest strictly decreasing run among letters a..b.");

  m.def(
      "determinantal", [](int k, int rows, int cols) { return formatted(bicrys::determinantal(k, rows, cols)); },
      py::arg("k"), py::arg("m"), py::arg("n"), "All k x k minors.");
  m.def(
      "schubert_determinantal",
      [](const std::string& w) { return formatted(bicrys::schubert_determinantal(Permutation::parse(w))); },
      py::arg("w"));
  m.def(
      "drift_table", [](const std::string& v) { return bicrys::drift_table(Permutation::parse(v)); },
      py::arg("v"));
  m.def(
      "verify_basic_lead_terms",
      [](const std::string& v) { return bicrys::verify_basic_lead_terms(Permutation::parse(v)).ok(); },
      py::arg("v"));
}

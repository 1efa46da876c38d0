#pragma once

#include <string>
#include <vector>

#include "bicrys/levi.hpp"
#include "bicrys/polynomial.hpp"
#include "bicrys/term_order.hpp"

namespace bicrys {

// JSON document:
//   {"m": 2, "n": 3, "generators": ["z[1,1]*z[2,3] - z[1,3]*z[2,1]"],
//    "levi_rows": [0,2], "levi_cols": [0,1,2,3], "order": "antidiag"}
// levi_rows / levi_cols default to the full group, order to "antidiag".
struct IdealSpec {
  int m = 0;
  int n = 0;
  std::vector<Polynomial> generators;
  LeviDatum datum = LeviDatum::full(1, 1);
  TermOrder order = TermOrder::antidiag(1, 1);
};

// Throws ParseError on malformed documents, bad cuts, unknown orders or bad generators.
IdealSpec parse_ideal_spec(const std::string& document);
IdealSpec load_ideal_spec(const std::string& path);
// Pretty-printed JSON with generators in canonical text.
std::string dump_ideal_spec(const IdealSpec& spec);

}  // namespace bicrys

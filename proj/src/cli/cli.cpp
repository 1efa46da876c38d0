#include "bicrys/cli.hpp"

#include <optional>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "bicrys/bicrystal.hpp"
#include "bicrys/constructors.hpp"
#include "bicrys/error.hpp"
#include "bicrys/expr.hpp"
#include "bicrys/format.hpp"
#include "bicrys/groebner.hpp"
#include "bicrys/multiplicity.hpp"
#include "bicrys/spec.hpp"
#include "bicrys/tableau.hpp"

namespace bicrys::cli {

namespace {

struct Options {
  std::string input;
  std::string order;
  // testset
  std::string op;
  bool minimal = false;
  // multiplicity / character
  std::string lambda;
  std::string mu;
  std::string side = "quotient";
  bool force = false;
  bool list = false;
  int max_degree = 2;
  bool oracle = false;
  bool table = false;
  // rsk / unrsk / crystal
  std::string matrix;
  std::string p;
  std::string q;
  int m = 0;
  int n = 0;
  int degree = 1;
  std::string set = "standard";
  // construct
  int k = 0;
  int r = 0;
  int d = 0;
  bool symbolic = false;
  std::string w;
  std::vector<std::string> strips;
  std::string shape;
  // drift
  std::string v;
  bool verify = false;
};

IdealSpec load(const Options& o) {
  IdealSpec spec = load_ideal_spec(o.input);
  if (!o.order.empty()) spec.order = TermOrder::parse(o.order, spec.m, spec.n);
  return spec;
}

Module parse_side(const std::string& s) {
  if (s == "quotient") return Module::Quotient;
  if (s == "ideal") return Module::Ideal;
  throw ParseError("side must be quotient or ideal, got '" + s + "'");
}

PartitionTuple parse_tuple_for(const std::string& text, std::size_t blocks, const char* what) {
  PartitionTuple t = parse_partition_tuple(text);
  if (t.size() != blocks)
    throw ParseError(std::string(what) + " has " + std::to_string(t.size()) + " partitions but the datum has " +
                     std::to_string(blocks) + " blocks");
  return t;
}

Strip parse_strip(const std::string& text) {
  std::vector<int> v;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) {
    try {
      std::size_t used = 0;
      v.push_back(std::stoi(item, &used));
      if (used != item.size()) throw ParseError("");
    } catch (const std::logic_error&) {
      throw ParseError("bad strip '" + text + "'");
    } catch (const ParseError&) {
      throw ParseError("bad strip '" + text + "'");
    }
  }
  if (v.size() != 5) throw ParseError("strip needs five numbers row_lo,row_hi,col_lo,col_hi,rank: '" + text + "'");
  return {v[0], v[1], v[2], v[3], v[4]};
}

void require_stable(const IdealSpec& spec) {
  if (!is_levi_stable(spec.generators, spec.datum)) throw DomainError("ideal is not stable under the Levi datum");
}

std::string witness_text(const Witness& w) {
  return w.op.name() + " maps " + to_string(w.source) + " (" + monomial_string(w.source) + ") to " +
         to_string(w.image) + " (" + monomial_string(w.image) + ")";
}

int cmd_gb(const Options& o, std::ostream& out) {
  const IdealSpec spec = load(o);
  const GroebnerBasis gb = buchberger(spec.generators, spec.order);
  out << "order: " << spec.order.name() << "\n";
  out << "reduced groebner basis (" << gb.generators.size() << "):\n";
  for (const auto& g : gb.generators) out << "  " << format_polynomial(g, spec.order) << "\n";
  out << "initial ideal:\n";
  for (const auto& M : gb.lead_exponents()) out << "  " << monomial_string(M) << "\n";
  return Success;
}

int cmd_stable(const Options& o, std::ostream& out) {
  const IdealSpec spec = load(o);
  const bool ok = is_levi_stable(spec.generators, spec.datum);
  out << (ok ? "stable" : "not stable") << "\n";
  return ok ? Success : Negative;
}

int cmd_bicrystalline(const Options& o, std::ostream& out) {
  const IdealSpec spec = load(o);
  require_stable(spec);
  const GroebnerBasis gb = buchberger(spec.generators, spec.order);
  const Verdict v = is_bicrystalline(gb, spec.datum);
  out << "order: " << spec.order.name() << "\n";
  if (v.bicrystalline) {
    out << "bicrystalline: yes\n";
    return Success;
  }
  out << "bicrystalline: no\n";
  out << "witness: " << witness_text(*v.witness) << "\n";
  return Negative;
}

int cmd_testset(const Options& o, std::ostream& out) {
  const IdealSpec spec = load(o);
  const BicrystalOp op = BicrystalOp::parse(o.op);
  const GroebnerBasis gb = buchberger(spec.generators, spec.order);
  TestSet ts = test_set(gb, op);
  if (o.minimal) ts = minimal_test_set(ts, gb);
  out << "operator: " << op.name() << "\n";
  out << "size: " << ts.members.size() << "\n";
  const auto leads = gb.lead_exponents();
  bool closed = true;
  for (const auto& N : ts.members) {
    const auto img = apply_op(N, op);
    out << "  " << to_string(N) << " -> ";
    if (!img) {
      out << "none\n";
      continue;
    }
    const bool inside = in_initial_ideal(*img, leads);
    closed = closed && inside;
    out << to_string(*img) << (inside ? "" : " (standard)") << "\n";
  }
  return closed ? Success : Negative;
}

int cmd_multiplicity(const Options& o, std::ostream& out, std::ostream& err) {
  const IdealSpec spec = load(o);
  const PartitionTuple lambda = parse_tuple_for(o.lambda, spec.datum.row_block_count(), "--lambda");
  const PartitionTuple mu = parse_tuple_for(o.mu, spec.datum.col_block_count(), "--mu");
  const Module side = parse_side(o.side);
  require_stable(spec);
  const GroebnerBasis gb = buchberger(spec.generators, spec.order);
  const Verdict v = is_bicrystalline(gb, spec.datum);
  if (!v.bicrystalline && !o.force) {
    err << "error: ideal is not bicrystalline under " << spec.order.name() << "; " << witness_text(*v.witness)
        << "\n";
    err << "use --force to count anyway\n";
    return Precondition;
  }
  const auto mats = counted_matrices(gb, spec.datum, lambda, mu, side);
  out << mats.size();
  if (!v.bicrystalline) out << " (forced: not bicrystalline)";
  out << "\n";
  if (o.list)
    for (const auto& M : mats) out << "  " << to_string(M) << "\n";
  return Success;
}

int cmd_character(const Options& o, std::ostream& out, std::ostream& err) {
  const IdealSpec spec = load(o);
  const Module side = parse_side(o.side);
  if (o.max_degree < 0) throw ParseError("--max-degree must be nonnegative");
  require_stable(spec);
  const GroebnerBasis gb = buchberger(spec.generators, spec.order);
  const Verdict v = is_bicrystalline(gb, spec.datum);
  if (!v.bicrystalline && !o.force) {
    err << "error: ideal is not bicrystalline under " << spec.order.name() << "; " << witness_text(*v.witness)
        << "\n";
    return Precondition;
  }
  const MultiplicityTable table = character_table(gb, spec.datum, o.max_degree, side);
  out << (o.table ? format_table(table) : format_character(table) + "\n");
  if (o.oracle) {
    const MultiplicityTable check = character_oracle(gb, spec.datum, o.max_degree, side);
    if (!(check == table)) {
      err << "oracle disagrees:\n" << format_table(check);
      return Negative;
    }
    err << "oracle agrees\n";
  }
  return Success;
}

int cmd_rsk(const Options& o, std::ostream& out) {
  const TableauPair pr = rsk(parse_matrix_literal(o.matrix));
  out << "P = " << to_string(pr.P) << "\n";
  out << "Q = " << to_string(pr.Q) << "\n";
  return Success;
}

int cmd_unrsk(const Options& o, std::ostream& out) {
  const TableauPair pr{parse_tableau(o.p), parse_tableau(o.q)};
  if (o.m < 1 || o.n < 1) throw ParseError("--m and --n must be positive");
  out << to_string(rsk_inverse(pr, o.m, o.n)) << "\n";
  return Success;
}

int cmd_crystal(const Options& o, std::ostream& out) {
  const IdealSpec spec = load(o);
  std::vector<ExponentMatrix> vertices;
  if (!o.matrix.empty()) {
    const ExponentMatrix seed = parse_matrix_literal(o.matrix);
    if (seed.rows() != spec.m || seed.cols() != spec.n) throw DomainError("seed matrix does not match the ring");
    vertices = crystal_component(seed, spec.datum);
    out << export_crystal_graph(vertices, spec.datum, static_cast<int>(seed.degree()));
    return Success;
  }
  if (o.degree < 0) throw ParseError("--degree must be nonnegative");
  if (o.set != "standard" && o.set != "ideal" && o.set != "all") throw ParseError("--set must be standard, ideal or all");
  const GroebnerBasis gb = buchberger(spec.generators, spec.order);
  const auto leads = gb.lead_exponents();
  for_each_of_degree(spec.m, spec.n, o.degree, [&](const ExponentMatrix& M) {
    const bool inside = in_initial_ideal(M, leads);
    if (o.set == "all" || (o.set == "ideal") == inside) vertices.push_back(M);
  });
  out << export_crystal_graph(vertices, spec.datum, o.degree);
  return Success;
}

int emit_spec(const Options& o, int m, int n, std::vector<Polynomial> gens, const LeviDatum& datum,
              std::ostream& out) {
  IdealSpec spec;
  spec.m = m;
  spec.n = n;
  spec.generators = std::move(gens);
  spec.datum = datum;
  spec.order = TermOrder::parse(o.order.empty() ? "antidiag" : o.order, m, n);
  out << dump_ideal_spec(spec);
  return Success;
}

int cmd_construct(const std::string& family, const Options& o, std::ostream& out) {
  auto dims = [&] {
    if (o.m < 1 || o.n < 1) throw ParseError("--m and --n must be positive");
  };
  if (family == "det") {
    dims();
    return emit_spec(o, o.m, o.n, determinantal(o.k, o.m, o.n), LeviDatum::full(o.m, o.n), out);
  }
  if (family == "contiguous" || family == "knutson") {
    dims();
    ContiguousSpec strips;
    for (const auto& s : o.strips) strips.push_back(parse_strip(s));
    auto gens = family == "knutson" ? knutson_determinantal(strips, o.m, o.n)
                                    : contiguous_determinantal(strips, o.m, o.n);
    return emit_spec(o, o.m, o.n, std::move(gens), induced_datum(strips, o.m, o.n), out);
  }
  if (family == "schubert") {
    const Permutation w = Permutation::parse(o.w);
    const int n = w.size();
    return emit_spec(o, n, n, schubert_determinantal(w), induced_datum(essential_strips(w), n, n), out);
  }
  if (family == "power") {
    dims();
    return emit_spec(o, o.m, o.n, power_generators(o.k, o.r, o.symbolic, o.m, o.n), LeviDatum::full(o.m, o.n),
                     out);
  }
  if (family == "shape") {
    dims();
    return emit_spec(o, o.m, o.n, shape_ideal_generators(parse_partition(o.shape), o.m, o.n),
                     LeviDatum::full(o.m, o.n), out);
  }
  if (family == "irrelevant") {
    dims();
    return emit_spec(o, o.m, o.n, irrelevant_power(o.d, o.m, o.n), LeviDatum::full(o.m, o.n), out);
  }
  throw ParseError("unknown family '" + family + "'");
}

void print_table(std::ostream& out, const IntTable& t) {
  for (const auto& row : t) {
    for (std::size_t j = 0; j < row.size(); ++j) out << (j ? " " : "  ") << row[j];
    out << "\n";
  }
}

int cmd_drift(const Options& o, std::ostream& out) {
  const Permutation v = Permutation::parse(o.v);
  out << "rank:\n";
  print_table(out, rank_function(v));
  out << "specialized:\n";
  std::istringstream z(to_string(kl_specialize(v)));
  for (std::string line; std::getline(z, line);) out << "  " << line << "\n";
  out << "drift:\n";
  print_table(out, drift_table(v));
  if (!o.verify) return Success;
  const BasicLeadReport report = verify_basic_lead_terms(v);
  out << "basic minor leads:\n";
  for (const auto& row : report.rows) {
    out << "  k=" << row.k << ": ";
    if (!row.actual) {
      out << "minor vanishes\n";
      continue;
    }
    out << monomial_string(*row.actual);
    if (!row.matches()) out << " (expected " << monomial_string(row.expected) << ")";
    out << "\n";
  }
  out << (report.ok() ? "verified" : "mismatch") << "\n";
  return report.ok() ? Success : Negative;
}

}  // namespace

int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  Options o;
  CLI::App app{"Bicrystalline ideals: Groebner bases, test sets and Levi multiplicities", "bicrys"};
  app.require_subcommand(1);
  app.fallthrough(false);

  auto add_common = [&](CLI::App* sub, bool needs_input) {
    auto* in = sub->add_option("--input,-i", o.input, "ideal spec file (JSON)");
    if (needs_input) in->required();
    sub->add_option("--order", o.order, "antidiag | diag | lex:<perm> | weight:<vec>");
  };

  auto* gb = app.add_subcommand("gb", "reduced Groebner basis and initial ideal");
  add_common(gb, true);
  auto* stable = app.add_subcommand("stable", "Levi-stability of the ideal");
  add_common(stable, true);
  auto* bic = app.add_subcommand("bicrystalline", "bicrystalline verdict with witness");
  add_common(bic, true);
  auto* ts = app.add_subcommand("testset", "test set for one operator");
  add_common(ts, true);
  ts->add_option("--op", o.op, "operator, e.g. f_1^row")->required();
  ts->add_flag("--minimal", o.minimal, "prune to a minimal test set");

  auto* mult = app.add_subcommand("multiplicity", "Levi multiplicity of one irreducible");
  add_common(mult, true);
  mult->add_option("--lambda", o.lambda, "row partitions, e.g. \"(1);(2,1)\"")->required();
  mult->add_option("--mu", o.mu, "column partitions")->required();
  mult->add_option("--side", o.side, "quotient | ideal");
  mult->add_flag("--force", o.force, "count even when the ideal is not bicrystalline");
  mult->add_flag("--list", o.list, "print the counted matrices");

  auto* chr = app.add_subcommand("character", "Levi character up to a degree");
  add_common(chr, true);
  chr->add_option("--max-degree,-d", o.max_degree, "degree bound");
  chr->add_option("--side", o.side, "quotient | ideal");
  chr->add_flag("--oracle", o.oracle, "cross-check with the weight-peeling oracle");
  chr->add_flag("--table", o.table, "one line per entry instead of a sum");
  chr->add_flag("--force", o.force, "tabulate even when the ideal is not bicrystalline");

  auto* rs = app.add_subcommand("rsk", "RSK of an exponent matrix");
  add_common(rs, false);
  rs->add_option("--matrix", o.matrix, "rows separated by ';', entries by ','")->required();
  auto* unrs = app.add_subcommand("unrsk", "inverse RSK of a tableau pair");
  add_common(unrs, false);
  unrs->add_option("--p", o.p, "tableau rows separated by ';'")->required();
  unrs->add_option("--q", o.q, "tableau rows separated by ';'")->required();
  unrs->add_option("--m", o.m, "rows")->required();
  unrs->add_option("--n", o.n, "columns")->required();

  auto* cry = app.add_subcommand("crystal", "crystal graph in DOT");
  add_common(cry, true);
  cry->add_option("--degree", o.degree, "degree slice");
  cry->add_option("--set", o.set, "standard | ideal | all");
  cry->add_option("--matrix", o.matrix, "export the connected component of this matrix instead");

  auto* con = app.add_subcommand("construct", "emit an ideal spec for a family");
  con->require_subcommand(1);
  std::string family;
  auto add_family = [&](const char* name, const char* help) {
    auto* f = con->add_subcommand(name, help);
    f->add_option("--order", o.order, "term order recorded in the spec");
    f->callback([&family, name] { family = name; });
    return f;
  };
  auto* fdet = add_family("det", "k x k minors");
  fdet->add_option("--m", o.m)->required();
  fdet->add_option("--n", o.n)->required();
  fdet->add_option("--k", o.k)->required();
  for (const char* name : {"contiguous", "knutson"}) {
    auto* f = add_family(name, "minors of strips");
    f->add_option("--m", o.m)->required();
    f->add_option("--n", o.n)->required();
    f->add_option("--strip", o.strips, "row_lo,row_hi,col_lo,col_hi,rank")->required();
  }
  auto* fsch = add_family("schubert", "Schubert determinantal ideal");
  fsch->add_option("--w", o.w, "permutation in one-line notation")->required();
  auto* fpow = add_family("power", "ordinary or symbolic power of the k x k minors");
  fpow->add_option("--m", o.m)->required();
  fpow->add_option("--n", o.n)->required();
  fpow->add_option("--k", o.k)->required();
  fpow->add_option("--r", o.r)->required();
  fpow->add_flag("--symbolic", o.symbolic);
  auto* fsh = add_family("shape", "bitableaux of one shape");
  fsh->add_option("--m", o.m)->required();
  fsh->add_option("--n", o.n)->required();
  fsh->add_option("--lambda", o.shape)->required();
  auto* firr = add_family("irrelevant", "all monomials of degree d");
  firr->add_option("--m", o.m)->required();
  firr->add_option("--n", o.n)->required();
  firr->add_option("--d", o.d)->required();

  auto* dr = app.add_subcommand("drift", "rank, specialization and drift tables");
  dr->add_option("--v", o.v, "permutation in one-line notation")->required();
  dr->add_flag("--verify", o.verify, "check basic minor lead terms");

  try {
    app.parse(argc, argv);
  } catch (const CLI::Error& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? Success : Usage;
  }

  try {
    if (gb->parsed()) return cmd_gb(o, out);
    if (stable->parsed()) return cmd_stable(o, out);
    if (bic->parsed()) return cmd_bicrystalline(o, out);
    if (ts->parsed()) return cmd_testset(o, out);
    if (mult->parsed()) return cmd_multiplicity(o, out, err);
    if (chr->parsed()) return cmd_character(o, out, err);
    if (rs->parsed()) return cmd_rsk(o, out);
    if (unrs->parsed()) return cmd_unrsk(o, out);
    if (cry->parsed()) return cmd_crystal(o, out);
    if (con->parsed()) return cmd_construct(family, o, out);
    if (dr->parsed()) return cmd_drift(o, out);
  } catch (const ParseError& e) {
    err << "error: " << e.what() << "\n";
    return Usage;
  } catch (const DomainError& e) {
    err << "error: " << e.what() << "\n";
    return Precondition;
  } catch (const OracleError& e) {
    err << "verification failed: " << e.what() << "\n";
    return Negative;
  }
  err << "error: no subcommand\n";
  return Usage;
}

}  // namespace bicrys::cli

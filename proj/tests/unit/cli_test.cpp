#include <doctest.h>

#include <sstream>
#include <string>
#include <vector>

#include "bicrys/cli.hpp"
#include "bicrys/spec.hpp"

namespace {

struct Outcome {
  int code;
  std::string out;
  std::string err;
};

Outcome run(std::vector<std::string> args) {
  args.insert(args.begin(), "bicrys");
  std::vector<const char*> argv;
  for (const auto& a : args) argv.push_back(a.c_str());
  std::ostringstream out, err;
  int code = bicrys::cli::run(static_cast<int>(argv.size()), argv.data(), out, err);
  return {code, out.str(), err.str()};
}

std::string spec(const char* name) { return std::string(BICRYS_SPEC_DIR) + "/" + name + ".json"; }

bool contains(const std::string& text, const std::string& needle) { return text.find(needle) != std::string::npos; }

}  // namespace

TEST_CASE("cli: bicrystalline verdicts") {
  auto no = run({"bicrystalline", "--input", spec("corner_minor_2x3")});
  CHECK(no.code == 1);
  CHECK(contains(no.out, "bicrystalline: no"));
  CHECK(contains(no.out, "witness: f_1^row maps [[0,1,1],[1,0,0]]"));
  auto diag = run({"bicrystalline", "--input", spec("corner_minor_2x3"), "--order", "diag"});
  CHECK(diag.code == 1);
  CHECK(contains(diag.out, "witness: f_1^row maps [[1,0,0],[0,0,1]]"));
  auto yes = run({"bicrystalline", "--input", spec("fatpoint"), "--order", "diag"});
  CHECK(yes.code == 0);
  CHECK(contains(yes.out, "bicrystalline: yes"));
  auto unstable = run({"bicrystalline", "--input", spec("z11_nw_minor_4x4")});
  CHECK(unstable.code == 3);
}

TEST_CASE("cli: drift verification") {
  auto r = run({"drift", "--v", "31542", "--verify"});
  CHECK(r.code == 0);
  for (const char* lead : {"z[1,1]", "z[1,2]", "z[3,2]", "z[3,4]*z[4,2]"}) CHECK(contains(r.out, lead));
  CHECK(contains(r.out, "verified"));
  CHECK(run({"drift", "--v", "3152"}).code == 2);
}

TEST_CASE("cli: multiplicity") {
  auto r = run({"multiplicity", "--input", spec("hess"), "--lambda", "(1);(2,1);(2)", "--mu", "(2);(4)"});
  CHECK(r.code == 0);
  CHECK(r.out == "2\n");
  auto refused =
      run({"multiplicity", "--input", spec("hess"), "--order", "diag", "--lambda", "(1);(2,1);(2)", "--mu", "(2);(4)"});
  CHECK(refused.code == 3);
  CHECK(contains(refused.err, "not bicrystalline"));
  auto forced = run({"multiplicity", "--input", spec("hess"), "--order", "diag", "--force", "--lambda",
                     "(1);(2,1);(2)", "--mu", "(2);(4)"});
  CHECK(forced.code == 0);
  CHECK(contains(forced.out, "3 (forced: not bicrystalline)"));
  auto mismatch = run({"multiplicity", "--input", spec("hess"), "--lambda", "(1)", "--mu", "(2);(4)"});
  CHECK(mismatch.code == 2);
  auto ideal = run({"multiplicity", "--input", spec("graphical_matroid"), "--lambda", "(2,2,2)", "--mu",
                    "(2);(1);(1);(1);(1)", "--side", "ideal", "--list"});
  CHECK(ideal.code == 0);
  CHECK(contains(ideal.out, "[[0,0,1,0,1],[0,1,0,1,0],[2,0,0,0,0],[0,0,0,0,0]]"));
}

TEST_CASE("cli: groebner basis, stability and test sets") {
  auto gb = run({"gb", "--input", spec("hess")});
  CHECK(gb.code == 0);
  CHECK(contains(gb.out, "reduced groebner basis (3):"));
  CHECK(contains(gb.out, "initial ideal:"));
  CHECK(run({"stable", "--input", spec("hess")}).code == 0);
  CHECK(run({"stable", "--input", spec("z11_nw_minor_4x4")}).code == 1);
  auto ts = run({"testset", "--input", spec("last_column_squares"), "--op", "e_1^row"});
  CHECK(ts.code == 0);
  CHECK(contains(ts.out, "size: 196"));
  auto minimal = run({"testset", "--input", spec("last_column_squares"), "--op", "e_1^row", "--minimal"});
  CHECK(contains(minimal.out, "size: 11"));
  CHECK(run({"testset", "--input", spec("last_column_squares"), "--op", "q_1^row"}).code == 2);
}

TEST_CASE("cli: rsk round trip") {
  auto r = run({"rsk", "--matrix", "0,1,1;1,0,0;1,0,0"});
  CHECK(r.code == 0);
  CHECK(contains(r.out, "P = [[1,1],[2,3]]"));
  CHECK(contains(r.out, "Q = [[1,1],[2,3]]"));
  auto u = run({"unrsk", "--p", "1,1;2,3", "--q", "1,1;2,3", "--m", "3", "--n", "3"});
  CHECK(u.code == 0);
  CHECK(u.out == "[[0,1,1],[1,0,0],[1,0,0]]\n");
  CHECK(run({"unrsk", "--p", "1,1;2", "--q", "1,1;2,3", "--m", "3", "--n", "3"}).code == 3);
}

TEST_CASE("cli: character") {
  auto r = run({"character", "--input", spec("minors2_3x3"), "--max-degree", "1", "--oracle"});
  CHECK(r.code == 0);
  CHECK(r.out == "1 + s_{(1)}(x1..x3)*s_{(1)}(y1..y3)\n");
  CHECK(contains(r.err, "oracle agrees"));
}

TEST_CASE("cli: crystal export") {
  auto r = run({"crystal", "--input", spec("corner_minor_2x3"), "--degree", "2", "--set", "standard"});
  CHECK(r.code == 0);
  CHECK(contains(r.out, "digraph crystal {"));
  CHECK(run({"crystal", "--input", spec("corner_minor_2x3"), "--degree", "2", "--set", "bogus"}).code == 2);
}

TEST_CASE("cli: construct emits loadable specs") {
  auto r = run({"construct", "knutson", "--m", "4", "--n", "4", "--strip", "1,1,1,1,1", "--strip", "1,3,1,3,3",
                "--strip", "2,4,2,4,3", "--strip", "4,4,4,4,1"});
  REQUIRE(r.code == 0);
  auto s = bicrys::parse_ideal_spec(r.out);
  CHECK(s.generators.size() == 4);
  CHECK(s.datum == bicrys::LeviDatum({0, 1, 3, 4}, {0, 1, 3, 4}));
  auto w = run({"construct", "schubert", "--w", "2143"});
  REQUIRE(w.code == 0);
  CHECK(bicrys::parse_ideal_spec(w.out).datum == bicrys::LeviDatum({0, 1, 3, 4}, {0, 1, 3, 4}));
  CHECK(run({"construct", "knutson", "--m", "4", "--n", "4", "--strip", "2,3,2,3,1"}).code == 3);
  CHECK(run({"construct", "nosuch"}).code == 2);
}

TEST_CASE("cli: usage errors") {
  CHECK(run({}).code == 2);
  CHECK(run({"gb"}).code == 2);
  CHECK(run({"gb", "--input", "/nonexistent.json"}).code == 2);
  CHECK(run({"--help"}).code == 0);
}

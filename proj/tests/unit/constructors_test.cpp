#include <doctest.h>

#include <set>

#include "bicrys/bicrystal.hpp"
#include "bicrys/constructors.hpp"
#include "bicrys/error.hpp"
#include "bicrys/expr.hpp"
#include "oracles.hpp"
#include "support.hpp"

using namespace bicrys;

namespace {

std::set<Polynomial> as_set(const std::vector<Polynomial>& v) { return {v.begin(), v.end()}; }

std::set<Polynomial> reduced(const std::vector<Polynomial>& gens, int m, int n) {
  auto gb = buchberger(gens, TermOrder::antidiag(m, n));
  return as_set(gb.generators);
}

IntTable table_of(std::initializer_list<std::initializer_list<int>> rows) {
  IntTable t;
  for (const auto& r : rows) t.emplace_back(r);
  return t;
}

}  // namespace

TEST_CASE("permutations") {
  auto v = Permutation::parse("31542");
  CHECK(v.size() == 5);
  CHECK(v(1) == 3);
  CHECK(v.inverse(3) == 1);
  CHECK(Permutation::parse("3,1,5,4,2") == v);
  CHECK(to_string(v) == "31542");
  CHECK_THROWS_AS(Permutation::parse("3152"), ParseError);
  CHECK_THROWS_AS(Permutation({1, 1}), DomainError);
  CHECK(all_permutations(4).size() == 24);
  CHECK(all_permutations(3).front() == Permutation::identity(3));
}

TEST_CASE("minors") {
  CHECK(minor({1, 2}, {1, 2}, 2, 2) == parse_polynomial("z[1,1]*z[2,2] - z[1,2]*z[2,1]", 2, 2));
  for (const auto& rows : index_subsets(1, 4, 3))
    for (const auto& cols : index_subsets(1, 4, 3)) CHECK(minor(rows, cols, 4, 4) == oracle::leibniz_minor(rows, cols, 4, 4));
  CHECK(minor({1, 2, 3, 4}, {1, 2, 3, 4}, 4, 4) == oracle::leibniz_minor({1, 2, 3, 4}, {1, 2, 3, 4}, 4, 4));
  CHECK_THROWS_AS(minor({2, 1}, {1, 2}, 2, 2), DomainError);
  CHECK_THROWS_AS(minor({1, 3}, {1, 2}, 2, 2), DomainError);

  auto Z = kl_specialize(Permutation::parse("31542"));
  CHECK(minor({2, 3}, {3, 4}, Z).is_zero());
  auto basic = basic_minor(Permutation::parse("31542"), 4);
  CHECK(leading_exponent(basic, TermOrder::antidiag(5, 5)) ==
        parse_polynomial("z[3,4]*z[4,2]", 5, 5).terms().begin()->first);
}

TEST_CASE("contiguous and determinantal families") {
  CHECK(as_set(contiguous_determinantal({{1, 3, 1, 3, 2}}, 3, 3)) == as_set(determinantal(2, 3, 3)));
  CHECK(determinantal(2, 3, 3).size() == 9);
  CHECK(as_set(contiguous_determinantal({{1, 2, 2, 3, 1}}, 2, 3)) ==
        std::set<Polynomial>{parse_polynomial("z[1,2]", 2, 3), parse_polynomial("z[1,3]", 2, 3),
                             parse_polynomial("z[2,2]", 2, 3), parse_polynomial("z[2,3]", 2, 3)});
  // Matrix Richardson ideal: generators form an antidiagonal Groebner basis.
  ContiguousSpec mri{{1, 1, 1, 1, 1}, {1, 3, 1, 3, 3}, {2, 5, 1, 4, 4}};
  auto gens = contiguous_determinantal(mri, 5, 5);
  CHECK(gens.size() == 3);
  CHECK(is_groebner_basis(gens, TermOrder::antidiag(5, 5)));
  auto datum = induced_datum(mri, 5, 5);
  CHECK(datum == LeviDatum({0, 1, 3, 5}, {0, 1, 3, 4, 5}));
  CHECK(is_levi_stable(gens, datum));
  CHECK_THROWS_AS(validate_strips({{2, 1, 1, 1, 1}}, 3, 3), DomainError);
  CHECK_THROWS_AS(validate_strips({{1, 2, 1, 2, 3}}, 3, 3), DomainError);
}

TEST_CASE("powers of the irrelevant ideal") {
  auto one = irrelevant_power(0, 2, 2);
  REQUIRE(one.size() == 1);
  CHECK(one[0] == Polynomial::constant(2, 2, 1));
  CHECK(irrelevant_power(1, 2, 2).size() == 4);
  CHECK(irrelevant_power(2, 2, 2).size() == 10);
}

TEST_CASE("Knutson strips") {
  ContiguousSpec strips{{1, 1, 1, 1, 1}, {1, 3, 1, 3, 3}, {2, 4, 2, 4, 3}, {4, 4, 4, 4, 1}};
  auto gens = knutson_determinantal(strips, 4, 4);
  CHECK(as_set(gens) == std::set<Polynomial>{parse_polynomial("z[1,1]", 4, 4), minor({1, 2, 3}, {1, 2, 3}, 4, 4),
                                             minor({2, 3, 4}, {2, 3, 4}, 4, 4), parse_polynomial("z[4,4]", 4, 4)});
  auto spec = load_spec("double_bruhat");
  CHECK(as_set(spec.generators) == as_set(gens));
  CHECK(as_set(knutson_determinantal({{1, 6, 1, 6, 2}}, 6, 6)) == as_set(determinantal(2, 6, 6)));
  CHECK(as_set(knutson_determinantal({{1, 2, 1, 2, 2}, {1, 4, 1, 4, 4}}, 6, 6)) ==
        std::set<Polynomial>{minor({1, 2}, {1, 2}, 6, 6), minor({1, 2, 3, 4}, {1, 2, 3, 4}, 6, 6)});
  CHECK_THROWS_AS(knutson_determinantal({{2, 3, 2, 3, 1}}, 4, 4), DomainError);
  CHECK(is_column_strip({1, 4, 2, 3, 1}, 4));
  CHECK(is_row_strip({2, 3, 1, 4, 1}, 4));
  CHECK(is_southeast({2, 4, 2, 4, 3}, 4, 4));
  CHECK(is_northwest({1, 3, 1, 2, 1}));
}

TEST_CASE("rank functions") {
  CHECK(rank_function(Permutation::parse("31542")) == table_of({{0, 0, 1, 1, 1},
                                                                {1, 1, 2, 2, 2},
                                                                {1, 1, 2, 2, 3},
                                                                {1, 1, 2, 3, 4},
                                                                {1, 2, 3, 4, 5}}));
  for (int n = 1; n <= 5; ++n) {
    auto r = rank_function(Permutation::identity(n));
    for (int i = 1; i <= n; ++i)
      for (int j = 1; j <= n; ++j) CHECK(r[i - 1][j - 1] == std::min(i, j));
    for (const auto& w : all_permutations(n)) CHECK(rank_function(w)[n - 1][n - 1] == n);
  }
}

TEST_CASE("Schubert determinantal ideals") {
  auto w = Permutation::parse("2143");
  CHECK(reduced(schubert_determinantal(w), 4, 4) ==
        reduced({parse_polynomial("z[1,1]", 4, 4), minor({1, 2, 3}, {1, 2, 3}, 4, 4)}, 4, 4));
  CHECK(essential_strips(w) == ContiguousSpec{{1, 1, 1, 1, 1}, {1, 3, 1, 3, 3}});
  CHECK(reduced(schubert_determinantal(Permutation::identity(4)), 4, 4).empty());
  // Longest element: every variable strictly above the antidiagonal vanishes.
  std::set<Polynomial> expected;
  for (int i = 1; i <= 4; ++i)
    for (int j = 1; i + j <= 4; ++j) expected.insert(Polynomial::variable(4, 4, i - 1, j - 1));
  CHECK(reduced(schubert_determinantal(Permutation::parse("4321")), 4, 4) == expected);
  for (const auto& v : all_permutations(4))
    CHECK(reduced(schubert_determinantal(v), 4, 4) == reduced(knutson_determinantal(essential_strips(v), 4, 4), 4, 4));
}

TEST_CASE("Kazhdan-Lusztig specialization") {
  auto Z = kl_specialize(Permutation::parse("31542"));
  std::set<std::pair<int, int>> vars;
  for (int i = 1; i <= 5; ++i)
    for (int j = 1; j <= 5; ++j)
      if (Z.at(i, j) == Cell::Variable) vars.emplace(i, j);
  CHECK(vars == std::set<std::pair<int, int>>{{1, 1}, {1, 2}, {3, 2}, {3, 4}, {4, 2}});
  CHECK(Z.at(1, 3) == Cell::One);
  CHECK(Z.at(2, 1) == Cell::One);
  CHECK(Z.at(2, 2) == Cell::Zero);

  // 5671234: generic NW 3x4 block beside an identity.
  auto W = kl_specialize(Permutation::parse("5671234"));
  for (int i = 1; i <= 3; ++i) {
    for (int j = 1; j <= 4; ++j) CHECK(W.at(i, j) == Cell::Variable);
    for (int j = 5; j <= 7; ++j) CHECK(W.at(i, j) == (j == i + 4 ? Cell::One : Cell::Zero));
  }
  for (int i = 4; i <= 7; ++i)
    for (int j = 1; j <= 7; ++j) CHECK(W.at(i, j) == (j == i - 3 ? Cell::One : Cell::Zero));

  auto I = kl_specialize(Permutation::identity(3));
  for (int i = 1; i <= 3; ++i)
    for (int j = 1; j <= 3; ++j) CHECK(I.at(i, j) == (i == j ? Cell::One : Cell::Zero));
}

TEST_CASE("drift") {
  auto v = Permutation::parse("31542");
  CHECK(drift_table(v) == table_of({{1, 2, 2, 3, 4}, {1, 2, 2, 3, 4}, {2, 3, 3, 4, 4}, {3, 4, 4, 4, 4}, {4, 4, 4, 4, 4}}));
  CHECK(drifted_antidiagonal(v, 1) == std::vector<std::pair<int, int>>{{1, 1}});
  CHECK(drifted_antidiagonal(v, 2) == std::vector<std::pair<int, int>>{{1, 2}});
  CHECK(drifted_antidiagonal(v, 3) == std::vector<std::pair<int, int>>{{3, 2}});
  CHECK(drifted_antidiagonal(v, 4) == std::vector<std::pair<int, int>>{{3, 4}, {4, 2}});
  for (int n = 1; n <= 6; ++n)
    for (const auto& w : all_permutations(n)) {
      auto d = drift_table(w);
      for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) {
          if (i + 1 < n) CHECK(d[i][j] <= d[i + 1][j]);
          if (j + 1 < n) CHECK(d[i][j] <= d[i][j + 1]);
        }
    }
}

TEST_CASE("basic minor lead terms") {
  auto report = verify_basic_lead_terms(Permutation::parse("31542"));
  CHECK(report.ok());
  std::vector<std::string> leads;
  for (const auto& row : report.rows)
    if (row.actual) leads.push_back(monomial_string(*row.actual));
  CHECK(leads == std::vector<std::string>{"z[1,1]", "z[1,2]", "z[3,2]", "z[3,4]*z[4,2]", "1"});
  CHECK(verify_basic_lead_terms(Permutation::identity(4)).ok());
  for (int n = 1; n <= 4; ++n)
    for (const auto& w : all_permutations(n)) CHECK(verify_basic_lead_terms(w).ok());
}

TEST_CASE("bitableaux") {
  CHECK(bitableau({{1, 2}, {4, 3}}, {{1, 3}, {2, 4}}, 4, 4) ==
        minor({1, 4}, {1, 2}, 4, 4) * minor({2, 3}, {3, 4}, 4, 4));
  CHECK(bitableau({{1, 1}, {3}}, {{1, 3}, {2}}, 4, 4) == minor({1, 3}, {1, 2}, 4, 4) * minor({1}, {3}, 4, 4));
  CHECK(bitableau({{2}, {3}}, {{1}, {4}}, 4, 4) == minor({2, 3}, {1, 4}, 4, 4));
  CHECK_THROWS_AS(bitableau({{1}, {3}}, {{1, 2}}, 4, 4), DomainError);
}

TEST_CASE("shape ideals") {
  CHECK(reduced(shape_ideal_generators(Partition({1, 1}), 3, 3), 3, 3) == reduced(determinantal(2, 3, 3), 3, 3));
  CHECK(as_set(shape_ideal_generators(Partition({1}), 2, 3)) == as_set(irrelevant_power(1, 2, 3)));
  // (2) gives the square of the maximal ideal; the fat point sits inside it with codimension one.
  auto square = buchberger(shape_ideal_generators(Partition({2}), 2, 2), TermOrder::diag(2, 2));
  CHECK(reduced(shape_ideal_generators(Partition({2}), 2, 2), 2, 2) == reduced(irrelevant_power(2, 2, 2), 2, 2));
  auto fat = load_spec("fatpoint");
  for (const auto& g : fat.generators) CHECK(normal_form(g, square).is_zero());
  auto fat_gb = buchberger(fat.generators, TermOrder::diag(2, 2));
  long fat_std = 0, square_std = 0;
  for_each_of_degree(2, 2, 2, [&](const ExponentMatrix& M) {
    fat_std += in_initial_ideal(M, fat_gb) ? 0 : 1;
    square_std += in_initial_ideal(M, square) ? 0 : 1;
  });
  CHECK(fat_std == 1);
  CHECK(square_std == 0);
}

TEST_CASE("powers of determinantal ideals") {
  CHECK(power_shapes(2, 2, false, 3, 3) == std::vector<Partition>{Partition({2, 2}), Partition({2, 1, 1})});
  CHECK(power_shapes(2, 2, true, 3, 3) == std::vector<Partition>{Partition({2, 2}), Partition({1, 1, 1})});
  auto gb = buchberger(power_generators(2, 2, false, 2, 3), TermOrder::antidiag(2, 3));
  std::set<ExponentMatrix> leads;
  for (const auto& L : gb.lead_exponents()) leads.insert(L);
  std::set<ExponentMatrix> expected;
  for (const char* mono : {"z[2,2]^2*z[1,3]^2", "z[2,1]*z[2,2]*z[1,2]*z[1,3]", "z[2,1]^2*z[1,2]*z[1,3]",
                           "z[2,1]*z[2,2]*z[1,3]^2", "z[2,1]^2*z[1,3]^2", "z[2,1]^2*z[1,2]^2"})
    expected.insert(parse_polynomial(mono, 2, 3).terms().begin()->first);
  CHECK(leads == expected);

  // Ordinary power against the literal product of the generators.
  auto I = determinantal(2, 3, 3);
  std::vector<Polynomial> products;
  for (std::size_t a = 0; a < I.size(); ++a)
    for (std::size_t b = a; b < I.size(); ++b) products.push_back(I[a] * I[b]);
  CHECK(reduced(power_generators(2, 2, false, 3, 3), 3, 3) == reduced(products, 3, 3));
  // Symbolic square adds the 3x3 determinant.
  products.push_back(minor({1, 2, 3}, {1, 2, 3}, 3, 3));
  CHECK(reduced(power_generators(2, 2, true, 3, 3), 3, 3) == reduced(products, 3, 3));
}

#include <doctest.h>

#include <set>

#include "bicrys/constructors.hpp"
#include "bicrys/error.hpp"
#include "bicrys/multiplicity.hpp"
#include "oracles.hpp"
#include "support.hpp"

using namespace bicrys;

namespace {

PartitionTuple tuple(const char* text) { return parse_partition_tuple(text); }

std::set<ExponentMatrix> as_set(const std::vector<ExponentMatrix>& v) { return {v.begin(), v.end()}; }

GroebnerBasis basis(const IdealSpec& spec) { return buchberger(spec.generators, spec.order); }

}  // namespace

TEST_CASE("LR pairs") {
  auto pairs = lr_pairs(LeviDatum({0, 2, 3}, {0, 2, 3}), tuple("(2,1);(1)"), tuple("(2,1);(1)"));
  TableauPair golden{Tableau({{1, 1}, {2, 3}}), Tableau({{1, 1}, {2, 3}})};
  CHECK(std::find(pairs.begin(), pairs.end(), golden) != pairs.end());

  // s_(1) s_(2,1) = s_(3,1) + s_(2,2) + s_(2,1,1), so each side has three LR tableaux and
  // the pairs are the diagonal ones.
  auto three = lr_pairs(LeviDatum({0, 1, 4}, {0, 1, 4}), tuple("(1);(2,1)"), tuple("(1);(2,1)"));
  std::set<TableauPair> expected{{Tableau({{1, 2}, {2}, {3}}), Tableau({{1, 2}, {2}, {3}})},
                                 {Tableau({{1, 2}, {2, 3}}), Tableau({{1, 2}, {2, 3}})},
                                 {Tableau({{1, 2, 2}, {3}}), Tableau({{1, 2, 2}, {3}})}};
  CHECK(std::set<TableauPair>(three.begin(), three.end()) == expected);

  auto empty = lr_pairs(LeviDatum({0, 2}, {0, 2}), tuple("()"), tuple("()"));
  REQUIRE(empty.size() == 1);
  CHECK(empty[0] == TableauPair{});

  CHECK_THROWS_AS(lr_pairs(LeviDatum({0, 2}, {0, 2}), tuple("(1)"), tuple("(2)")), DomainError);
  CHECK_THROWS_AS(lr_pairs(LeviDatum({0, 2}, {0, 2}), tuple("(1);(1)"), tuple("(2)")), DomainError);
}

TEST_CASE("every LR pair gives a highest-weight matrix with the right key") {
  LeviDatum datum({0, 1, 3}, {0, 2, 3});
  for (const char* lam : {"(1);(1,1)", "(2);(2,1)", "(1);(2)"})
    for (const char* mu : {"(2);(1)", "(2,1);(1)", "(1,1);(1)", "(3);()"}) {
      auto l = tuple(lam);
      auto m = tuple(mu);
      int sl = 0, sm = 0;
      for (const auto& p : l) sl += p.size();
      for (const auto& p : m) sm += p.size();
      if (sl != sm) continue;
      for (const auto& pair : lr_pairs(datum, l, m)) {
        auto M = rsk_inverse(pair, 3, 3);
        CHECK(is_highest_weight(M, datum));
        CHECK(weight_key(rsk(M), datum) == CharacterKey{l, m});
      }
    }
}

TEST_CASE("multiplicity goldens") {
  auto hess = load_spec("hess");
  auto gb = basis(hess);
  auto lam = tuple("(1);(2,1);(2)");
  auto mu = tuple("(2);(4)");
  CHECK(multiplicity(gb, hess.datum, lam, mu, Module::Quotient) == 2);
  CHECK(as_set(counted_matrices(gb, hess.datum, lam, mu, Module::Quotient)) ==
        std::set<ExponentMatrix>{ExponentMatrix::from_rows({{0, 1}, {1, 1}, {1, 0}, {0, 2}}),
                                 ExponentMatrix::from_rows({{0, 1}, {0, 2}, {1, 0}, {1, 1}})});
  auto diag = buchberger(hess.generators, TermOrder::diag(4, 2));
  auto forced = counted_matrices(diag, hess.datum, lam, mu, Module::Quotient);
  CHECK(forced.size() == 3);
  CHECK(as_set(forced).count(ExponentMatrix::from_rows({{1, 0}, {0, 2}, {1, 0}, {0, 2}})) == 1);

  auto matroid = load_spec("graphical_matroid");
  auto mgb = basis(matroid);
  auto mlam = tuple("(2,2,2)");
  auto mmu = tuple("(2);(1);(1);(1);(1)");
  CHECK(counted_matrices(mgb, matroid.datum, mlam, mmu, Module::Quotient) ==
        std::vector{ExponentMatrix::from_rows({{0, 0, 0, 1, 1}, {0, 1, 1, 0, 0}, {2, 0, 0, 0, 0}, {0, 0, 0, 0, 0}})});
  CHECK(counted_matrices(mgb, matroid.datum, mlam, mmu, Module::Ideal) ==
        std::vector{ExponentMatrix::from_rows({{0, 0, 1, 0, 1}, {0, 1, 0, 1, 0}, {2, 0, 0, 0, 0}, {0, 0, 0, 0, 0}})});
}

TEST_CASE("quotient and ideal counts partition the LR pairs") {
  auto hess = load_spec("hess");
  auto gb = basis(hess);
  for (const char* lam : {"(1);(2,1);(2)", "(1);(1,1);(1)", "(1);(2);()"})
    for (const char* mu : {"(2);(4)", "(1);(2)", "(2);(1)", "(1);(3)"}) {
      auto l = tuple(lam);
      auto m = tuple(mu);
      try {
        auto total = static_cast<long>(lr_pairs(hess.datum, l, m).size());
        CHECK(multiplicity(gb, hess.datum, l, m, Module::Quotient) +
                  multiplicity(gb, hess.datum, l, m, Module::Ideal) ==
              total);
      } catch (const DomainError&) {
        // Box counts differ.
      }
    }
}

TEST_CASE("classical determinantal character") {
  auto gb = buchberger(determinantal(3, 3, 3), TermOrder::antidiag(3, 3));
  auto datum = LeviDatum::full(3, 3);
  auto table = character_table(gb, datum, 4, Module::Quotient);
  MultiplicityTable expected{datum, 4, {}};
  for (int size = 0; size <= 4; ++size)
    for (const auto& lam : partitions_of(size, 2)) expected.entries[{{lam}, {lam}}] = 1;
  CHECK(table == expected);
  CHECK(character_oracle(gb, datum, 4, Module::Quotient) == table);
}

TEST_CASE("Cauchy expansion of the zero ideal") {
  auto gb = buchberger(std::vector<Polynomial>{}, TermOrder::antidiag(2, 2));
  auto datum = LeviDatum::full(2, 2);
  auto table = character_table(gb, datum, 2, Module::Quotient);
  std::map<CharacterKey, long> expected{{{{Partition()}, {Partition()}}, 1},
                                        {{{Partition({1})}, {Partition({1})}}, 1},
                                        {{{Partition({2})}, {Partition({2})}}, 1},
                                        {{{Partition({1, 1})}, {Partition({1, 1})}}, 1}};
  CHECK(table.entries == expected);
  CHECK(character_oracle(gb, datum, 2, Module::Quotient) == table);
  CHECK(character_table(gb, datum, 2, Module::Ideal).entries.empty());
}

TEST_CASE("oracle agreement and dimension audit") {
  auto gb = buchberger(determinantal(2, 2, 2), TermOrder::antidiag(2, 2));
  for (const auto& datum : {LeviDatum::full(2, 2), LeviDatum::torus(2, 2), LeviDatum({0, 2}, {0, 1, 2})})
    for (auto side : {Module::Quotient, Module::Ideal}) {
      auto table = character_table(gb, datum, 4, side);
      CHECK(character_oracle(gb, datum, 4, side) == table);
      for (int e = 0; e <= 4; ++e) {
        long dim = 0;
        for (const auto& [key, c] : table.entries)
          if (key.degree() == e)
            dim += c * dim_irrep(key.lambda, datum.row_block_sizes()) * dim_irrep(key.mu, datum.col_block_sizes());
        long monomials = 0;
        for_each_of_degree(2, 2, e, [&](const ExponentMatrix& M) {
          if (in_initial_ideal(M, gb) == (side == Module::Ideal)) ++monomials;
        });
        CHECK(dim == monomials);
      }
    }
}

TEST_CASE("irreducible dimensions") {
  CHECK(dim_irrep({Partition({1})}, {3}) == 3);
  CHECK(dim_irrep({Partition({1, 1})}, {2}) == 1);
  CHECK(dim_irrep({Partition({2})}, {2}) == 3);
  CHECK(dim_irrep({Partition({2, 1}), Partition({2})}, {3, 2}) == 8 * 3);
  for (int N = 1; N <= 5; ++N)
    for (const auto& shape : partitions_of(4, N)) CHECK(dim_irrep({shape}, {N}) == oracle::ssyt_count(shape.parts(), N));
  CHECK_THROWS_AS(dim_irrep({Partition({1, 1, 1})}, {2}), DomainError);
}

TEST_CASE("width rule") {
  // Classical I_d: one strip covering the matrix.
  for (int d = 1; d <= 3; ++d) {
    ContiguousSpec strips{{1, 3, 1, 3, d}};
    for (int size = 0; size <= 4; ++size)
      for (const auto& lam : partitions_of(size, 3))
        for (const auto& mu : partitions_of(size, 3)) {
          long expected = (lam == mu && lam.length() < d) ? 1 : 0;
          CHECK(width_multiplicity(strips, 3, 3, {0, 3}, {mu}, lam, Module::Quotient) == expected);
        }
  }
  CHECK(width_multiplicity({{1, 2, 1, 2, 1}}, 2, 2, {0, 2}, {Partition()}, Partition(), Module::Quotient) == 1);
  CHECK_THROWS_AS(width_multiplicity({{1, 1, 1, 1, 1}}, 2, 2, {0, 2}, {Partition()}, Partition(), Module::Quotient),
                  DomainError);
}

TEST_CASE("width rule matches the LR count on the 2x6 strips") {
  auto spec = load_spec("strips_2x6");
  auto gb = basis(spec);
  ContiguousSpec strips{{1, 2, 1, 3, 2}, {1, 2, 4, 5, 2}, {1, 2, 6, 6, 1}};
  const auto& cuts = spec.datum.col_cuts();
  for (int size = 0; size <= 4; ++size)
    for (const auto& lam : partitions_of(size, 2))
      for (int a = 0; a <= size; ++a)
        for (int b = 0; a + b <= size; ++b)
          for (const auto& p1 : partitions_of(a, 3))
            for (const auto& p2 : partitions_of(b, 2))
              for (const auto& p3 : partitions_of(size - a - b, 1)) {
                PartitionTuple mu{p1, p2, p3};
                for (auto side : {Module::Quotient, Module::Ideal})
                  CHECK(width_multiplicity(strips, 2, 6, cuts, mu, lam, side) ==
                        multiplicity(gb, spec.datum, {lam}, mu, side));
              }
}

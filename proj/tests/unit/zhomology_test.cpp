#include <doctest.h>

#include <random>

#include "oracles.hpp"
#include "stonework/error.hpp"
#include "stonework/interval.hpp"
#include "stonework/zhomology.hpp"

using namespace stonework::zhomology;
namespace sw = stonework;
using sw::Int;

namespace {

IntMatrix dense(std::vector<std::vector<Int>> rows, std::size_t cols = 0) { return IntMatrix::from_dense(rows, cols); }

void check_smith(const IntMatrix& m) {
  auto s = snf(m);
  CHECK(s.u * m * s.v == s.d);
  CHECK(s.v * s.v_inv == IntMatrix::identity(m.cols()));
  CHECK(abs(determinant(s.u)) == 1);
  CHECK(abs(determinant(s.v)) == 1);
  for (std::size_t r = 0; r < s.d.rows(); ++r)
    for (const auto& [c, v] : s.d.row(r)) CHECK(r == c);
  for (std::size_t i = 0; i < s.diagonal.size(); ++i) {
    CHECK(s.diagonal[i] > 0);
    CHECK(s.d.get(i, i) == s.diagonal[i]);
    if (i + 1 < s.diagonal.size()) CHECK(s.diagonal[i + 1] % s.diagonal[i] == 0);
  }
  CHECK(s.rank == oracle::rational_rank(m.to_dense()));
  CHECK(invariant_factors(m) == s.diagonal);
}

}  // namespace

TEST_CASE("matrix basics") {
  auto m = dense({{1, 0, 2}, {0, 0, 3}});
  CHECK(m.nnz() == 3);
  CHECK(m.transpose().get(2, 1) == 3);
  CHECK(m.dump() == "2 3\n1 0 2\n0 0 3\n");
  CHECK(IntMatrix::hstack(m, m).cols() == 6);
  CHECK_THROWS_AS(m * m, sw::DimensionMismatch);
  CHECK(determinant(dense({{2, 1}, {7, 4}})) == 1);
  CHECK(determinant(dense({{0, 1}, {1, 0}})) == -1);
}

TEST_CASE("smith normal form examples") {
  auto id = IntMatrix::identity(3);
  auto s = snf(id);
  CHECK(s.u == id);
  CHECK(s.d == id);
  CHECK(s.v == id);

  auto z = snf(IntMatrix(2, 3));
  CHECK(z.u == IntMatrix::identity(2));
  CHECK(z.d == IntMatrix(2, 3));
  CHECK(z.v == IntMatrix::identity(3));

  auto m = dense({{2, 4}, {6, 8}});
  CHECK(snf(m).diagonal == std::vector<Int>{2, 4});
  check_smith(m);

  CHECK(invariant_factors(dense({{2, 0}, {0, 3}})) == std::vector<Int>{1, 6});
  check_smith(dense({{2, 0}, {0, 3}}));
}

TEST_CASE("smith normal form on random matrices") {
  std::mt19937_64 rng(61);
  for (int trial = 0; trial < 300; ++trial) {
    std::size_t r = 1 + rng() % 8, c = 1 + rng() % 8;
    double density = trial % 3 == 0 ? 0.3 : 1.0;
    check_smith(oracle::random_matrix(rng, r, c, -20, 20, density));
  }
}

TEST_CASE("determinant matches the rational oracle") {
  std::mt19937_64 rng(62);
  for (int trial = 0; trial < 100; ++trial) {
    std::size_t n = 1 + rng() % 6;
    auto m = oracle::random_matrix(rng, n, n, -9, 9);
    CHECK(determinant(m) == oracle::rational_det(m.to_dense()));
  }
}

TEST_CASE("complex construction checks the invariant") {
  auto d0 = dense({{1}}, 1);
  auto d1 = dense({{1}}, 1);
  CHECK_THROWS_AS(ChainComplexZ(std::nullopt, d0, d1), sw::InvariantViolated);
  CHECK_THROWS_AS(ChainComplexZ(std::nullopt, d0, IntMatrix(1, 2)), sw::DimensionMismatch);
}

TEST_CASE("homology of zero maps") {
  ChainComplexZ c(std::nullopt, IntMatrix(2, 2), IntMatrix(0, 2));
  auto h = homology(c);
  CHECK(h.h0 == AbInvariants{2, {}});
  CHECK(h.h1 == AbInvariants{2, {}});
  CHECK(h.exact == std::vector<bool>{false, false});
}

TEST_CASE("homology detects torsion") {
  ChainComplexZ c(std::nullopt, dense({{2}}), IntMatrix(0, 1));
  auto h = homology(c);
  CHECK(h.h1 == AbInvariants{0, {2}});
  CHECK(h.h1.to_string() == "Z/2");
  CHECK_FALSE(h.warnings.empty());
}

TEST_CASE("graph cech complexes") {
  auto four_cycle = graph_cech_complex(sw::interval::circle_graph(2));
  CHECK(homology(four_cycle.complex).h1 == AbInvariants{1, {}});

  auto path = graph_cech_complex(sw::interval::interval_graph(3));
  CHECK(homology(path.complex).h1.trivial());

  CHECK(graph_cech_complex(sw::interval::interval_graph(2)).dims() == std::array<std::size_t, 4>{1, 4, 10, 22});

  auto complete = homology(graph_cech_complex(sw::interval::interval_graph(1)).complex);
  CHECK(complete.all_exact());

  ChainComplexZ eq = graph_cech_complex(sw::profinite::RelGraph(5)).complex;
  ChainComplexZ plain(std::nullopt, eq.d0(), eq.d1());
  CHECK(homology(plain).h0 == AbInvariants{5, {}});
}

TEST_CASE("cech complexes of finite covers") {
  FiniteCover one{{2}, Coefficients::TrivialZ};
  auto c = cech_complex(one);
  CHECK(c.dims() == std::array<std::size_t, 3>{2, 4, 8});
  CHECK(homology(c).h1.trivial());
  CHECK(homology(cech_complex(FiniteCover{{2}, Coefficients::FiberPowers})).h1.trivial());
  CHECK(c.labels()[1][1] == "x0:(0,1)");
}

TEST_CASE("cech complexes of random covers are exact in degree one") {
  std::mt19937_64 rng(63);
  for (int trial = 0; trial < 60; ++trial) {
    FiniteCover cov;
    std::size_t base = 1 + rng() % 4;
    for (std::size_t x = 0; x < base; ++x) cov.fibers.push_back(1 + rng() % 4);
    for (auto coeff : {Coefficients::TrivialZ, Coefficients::FiberPowers}) {
      cov.coefficients = coeff;
      auto h = homology(cech_complex(cov));
      CHECK(h.h1.trivial());
      // H0 is one copy of the coefficients per base point.
      std::size_t expected = 0;
      for (auto t : cov.fibers) expected += coeff == Coefficients::TrivialZ ? 1 : t;
      CHECK(h.h0.rank == expected);
    }
  }
}

TEST_CASE("interval cohomology") {
  for (std::size_t n : {0, 1, 3, 6}) {
    auto r = interval_cohomology(n);
    CHECK(r.homology.h0 == AbInvariants{1, {}});
    CHECK(r.homology.h1.trivial());
    CHECK(r.homology.exact == std::vector<bool>{true, true, true});
  }
  CHECK_THROWS_AS(interval_cohomology(5, 4), sw::CapExceeded);
}

TEST_CASE("circle cohomology") {
  CHECK(circle_cohomology(1).homology.h1.trivial());
  CHECK(circle_cohomology(2).homology.h1 == AbInvariants{1, {}});
  auto r = circle_cohomology(3);
  CHECK(r.homology.h0 == AbInvariants{1, {}});
  CHECK(r.homology.h1 == AbInvariants{1, {}});
  CHECK(r.homology.exact == std::vector<bool>{true, true, false});
}

TEST_CASE("induced cochain maps") {
  auto g = sw::interval::interval_graph(2);
  auto c = graph_cech_complex(g);
  std::vector<std::size_t> id{0, 1, 2, 3};
  auto f = induced_cochain_map(c, c, id);
  CHECK(f.f0 == IntMatrix::identity(4));
  CHECK(f.f1 == IntMatrix::identity(10));
  CHECK(f.f2 == IntMatrix::identity(22));

  auto up = graph_cech_complex(sw::interval::interval_graph(3));
  auto phi = sw::interval::restrict_graph_map(2);
  auto r = induced_cochain_map(up, c, phi);
  CHECK(commutes(r, up, c));
  CHECK(r.f0 * *c.complex.aug() == *up.complex.aug());

  std::vector<std::size_t> jump{0, 0, 3, 3, 0, 0, 3, 3};
  CHECK_THROWS_AS(induced_cochain_map(up, c, jump), sw::RelationNotPreserved);
}

TEST_CASE("induced cochain maps compose") {
  auto t = sw::interval::circle_tower(4);
  std::vector<GraphCech> cs;
  for (const auto& level : t.levels) cs.push_back(graph_cech_complex(level));
  for (std::size_t n = 0; n + 2 < cs.size(); ++n) {
    auto lower = induced_cochain_map(cs[n + 1], cs[n], t.transitions[n]);
    auto upper = induced_cochain_map(cs[n + 2], cs[n + 1], t.transitions[n + 1]);
    std::vector<std::size_t> both(t.transitions[n + 1].size());
    for (std::size_t x = 0; x < both.size(); ++x) both[x] = t.transitions[n][t.transitions[n + 1][x]];
    auto direct = induced_cochain_map(cs[n + 2], cs[n], both);
    auto composed = compose(lower, upper);
    CHECK(composed.f0 == direct.f0);
    CHECK(composed.f1 == direct.f1);
    CHECK(composed.f2 == direct.f2);
  }
}

TEST_CASE("stabilization") {
  auto interval = stabilization_report(sw::interval::interval_tower(6), 6);
  for (const auto& l : interval.levels) {
    CHECK(l.homology.h0 == AbInvariants{1, {}});
    CHECK(l.homology.h1.trivial());
  }
  for (const auto& t : interval.transitions) {
    CHECK(t.h0);
    CHECK(t.h1);
  }

  auto circle = stabilization_report(sw::interval::circle_tower(6), 6);
  for (std::size_t n = 2; n <= 6; ++n) CHECK(circle.levels[n].homology.h1 == AbInvariants{1, {}});
  CHECK_FALSE(circle.transitions[1].h1);
  for (std::size_t n = 2; n < 6; ++n) CHECK(circle.transitions[n].h1);

  sw::profinite::RelGraphTower point{{sw::profinite::RelGraph(1), sw::profinite::RelGraph(1)}, {{0}}};
  auto p = stabilization_report(point, 1);
  CHECK(p.transitions[0].h0);
  CHECK(p.transitions[0].h1);
}

TEST_CASE("the iso check sees a degree-two cover of the circle") {
  // Level-3 circle mapped onto level-2 by k -> k mod 4 wraps twice, so H1
  // pulls back by multiplication by 2: injective but not onto.
  auto c2 = graph_cech_complex(sw::interval::circle_graph(2));
  auto c3 = graph_cech_complex(sw::interval::circle_graph(3));
  std::vector<std::size_t> wrap{0, 1, 2, 3, 0, 1, 2, 3};
  auto f = induced_cochain_map(c3, c2, wrap);
  CHECK(commutes(f, c3, c2));
  auto iso = induced_isomorphisms(c2.complex, c3.complex, f);
  CHECK(iso.h0);
  CHECK_FALSE(iso.h1);
}

#include <doctest.h>

#include "oddsym/homology.hpp"
#include "test_util.hpp"

using namespace oddsym;

namespace {

FiniteComplex build(Family f, std::size_t n, int box) {
  ComplexSpec spec;
  spec.family = f;
  spec.n = n;
  spec.box = box;
  return build_complex(spec);
}

std::size_t reduced_betti(const HomologyReport& r, std::size_t d) {
  return r.degrees.at(d).betti_q;
}

}  // namespace

TEST_CASE("boundary of the tetrahedron is a 2-sphere") {
  auto cc = chain_complex(boundary_of_simplex(3));
  CHECK(cc.cells == std::vector<std::size_t>{4, 6, 4});
  auto report = homology(cc, Coefficients::Z);
  CHECK(reduced_betti(report, 0) == 0);
  CHECK(reduced_betti(report, 1) == 0);
  CHECK(reduced_betti(report, 2) == 1);
  for (const auto& d : report.degrees) CHECK(d.torsion.empty());
  CHECK(report.connectivity == 1);
  CHECK(report.euler_from_cells == report.euler_from_betti);

  auto unreduced = homology(cc, Coefficients::Q, false);
  CHECK(unreduced.degrees[0].betti_q == 1);
  CHECK(unreduced.degrees[1].betti_q == 0);
  CHECK(unreduced.degrees[2].betti_q == 1);
}

TEST_CASE("spheres in all dimensions up to 5") {
  for (std::size_t k = 2; k <= 6; ++k) {
    auto report = homology(chain_complex(boundary_of_simplex(k)), Coefficients::Q);
    for (std::size_t d = 0; d + 2 <= k; ++d) CHECK(reduced_betti(report, d) == 0);
    CHECK(reduced_betti(report, k - 1) == 1);
    CHECK(report.connectivity == static_cast<long>(k) - 2);
  }
}

TEST_CASE("two points") {
  FiniteComplex fc;
  fc.family = "fixture";
  fc.n = 1;
  fc.vertices = {int_vec({1}), int_vec({2})};
  fc.simplices = {{0}, {1}};
  auto report = homology(chain_complex(fc), Coefficients::Q);
  CHECK(reduced_betti(report, 0) == 1);
  CHECK(report.connectivity == -1);
}

TEST_CASE("single vertex has no homology") {
  FiniteComplex fc;
  fc.family = "fixture";
  fc.n = 1;
  fc.vertices = {int_vec({1})};
  fc.simplices = {{0}};
  auto cc = chain_complex(fc);
  CHECK(cc.cells == std::vector<std::size_t>{1});
  auto report = homology(cc, Coefficients::Z);
  CHECK(reduced_betti(report, 0) == 0);
  CHECK(report.connectivity == 0);
}

TEST_CASE("projective plane torsion") {
  FiniteComplex rp2 = projective_plane();
  auto cc = chain_complex(rp2);
  CHECK(cc.cells == std::vector<std::size_t>{6, 15, 10});

  auto z = homology(cc, Coefficients::Z);
  CHECK(reduced_betti(z, 0) == 0);
  CHECK(reduced_betti(z, 1) == 0);
  CHECK(reduced_betti(z, 2) == 0);
  REQUIRE(z.degrees[1].torsion.size() == 1);
  CHECK(z.degrees[1].torsion[0] == 2);
  CHECK(z.connectivity == 0);  // H_1 has torsion, so reduced H_1 != 0

  auto f2 = homology(cc, Coefficients::F2);
  REQUIRE(f2.degrees[1].betti_f2.has_value());
  CHECK(*f2.degrees[1].betti_f2 == 1);
  REQUIRE(f2.degrees[2].betti_f2.has_value());
  CHECK(*f2.degrees[2].betti_f2 == 1);
  CHECK(f2.euler_from_cells == 1);
  CHECK(f2.euler_from_betti == 1);

  // Universal coefficients: F2 betti dominates Q betti degreewise.
  auto q = homology(cc, Coefficients::Q, false);
  auto f2u = homology(cc, Coefficients::F2, false);
  for (std::size_t d = 0; d < q.degrees.size(); ++d)
    CHECK(*f2u.degrees[d].betti_f2 >= q.degrees[d].betti_q);
}

TEST_CASE("WQ complex at n=2 is contractible") {
  auto report = homology(chain_complex(build(Family::WQ, 2, 1)), Coefficients::Q);
  CHECK(reduced_betti(report, 0) == 0);
  CHECK(reduced_betti(report, 1) == 0);
  CHECK(report.connectivity == 1);
}

TEST_CASE("X_3 at box 1 is a circle and X_4 at box 1 is a sphere") {
  auto x3 = homology(chain_complex(build(Family::X, 3, 1)), Coefficients::Z);
  CHECK(reduced_betti(x3, 0) == 0);
  CHECK(reduced_betti(x3, 1) == 1);
  CHECK(x3.degrees[0].torsion.empty());

  auto x4 = homology(chain_complex(build(Family::X, 4, 1)), Coefficients::Z);
  CHECK(reduced_betti(x4, 0) == 0);
  CHECK(reduced_betti(x4, 1) == 0);
  CHECK(reduced_betti(x4, 2) == 1);
}

TEST_CASE("euler characteristic identity and universal coefficients on every run") {
  for (auto fc : {build(Family::X, 4, 1), build(Family::X, 4, 2), build(Family::IX, 5, 1),
                  build(Family::WQ, 3, 1), projective_plane(), boundary_of_simplex(4)}) {
    auto cc = chain_complex(fc);
    for (auto coeffs : {Coefficients::Q, Coefficients::F2}) {
      auto report = homology(cc, coeffs);
      CHECK(report.euler_from_cells == report.euler_from_betti);
    }
    auto f2 = homology(cc, Coefficients::F2, false);
    auto q = homology(cc, Coefficients::Q, false);
    for (std::size_t d = 0; d < q.degrees.size(); ++d)
      CHECK(*f2.degrees[d].betti_f2 >= q.degrees[d].betti_q);
  }
}

TEST_CASE("cones are acyclic") {
  for (auto fc : {build(Family::X, 3, 1), build(Family::X, 4, 1), projective_plane()}) {
    auto report = homology(chain_complex(cone(fc)), Coefficients::Z);
    for (const auto& d : report.degrees) {
      CHECK(d.betti_q == 0);
      CHECK(d.torsion.empty());
    }
    CHECK(report.connectivity == static_cast<long>(report.degrees.size()) - 1);
  }
}

TEST_CASE("chain complex rejects non-closed input") {
  FiniteComplex broken;
  broken.family = "fixture";
  broken.n = 2;
  broken.vertices = {int_vec({1, 0}), int_vec({0, 1})};
  broken.simplices = {{0}, {0, 1}};  // the vertex {1} is missing
  CHECK_THROWS_AS(chain_complex(broken), std::invalid_argument);
}

TEST_CASE("empty complex report") {
  FiniteComplex fc;
  fc.family = "fixture";
  fc.n = 3;
  auto report = homology(chain_complex(fc), Coefficients::Q);
  CHECK(report.degrees.empty());
  CHECK(report.connectivity == -2);
}

TEST_CASE("sparse ranks agree with dense Smith rank") {
  SplitMix64 rng(99);
  for (int t = 0; t < 20; ++t) {
    std::size_t rows = 1 + rng.below(6), cols = 1 + rng.below(6);
    SparseMat s(rows, cols);
    for (std::size_t j = 0; j < cols; ++j)
      for (std::size_t i = 0; i < rows; ++i)
        if (rng.below(3) == 0)
          s.columns[j].emplace_back(i, Int(static_cast<long long>(rng.below(9)) - 4));
    for (auto& col : s.columns) {
      std::erase_if(col, [](const auto& e) { return e.second == 0; });
    }
    auto snf = smith_normal_form(s.dense());
    CHECK(rank_over_q(s) == snf.rank);

    // F2 rank equals the number of odd elementary divisors.
    std::size_t odd = 0;
    for (const Int& d : snf.divisors)
      if (d != 0 && !is_even(d)) ++odd;
    CHECK(rank_over_f2(s) == odd);
  }
}

#include <sstream>

#include "doctest.h"
#include "terracini/latticegeom.hpp"

using namespace terracini;

namespace {
LatticePolytope square() { return make_polytope({{0, 0}, {1, 0}, {0, 1}, {1, 1}}); }
}  // namespace

TEST_CASE("simplex points count C(n+d, n)") {
  CHECK(simplex_points(2, 2).size() == 6);
  CHECK(simplex_points(2, 6).size() == 28);
  CHECK(simplex_points(3, 3).size() == 20);
  CHECK(simplex_points(1, 5).size() == 6);
  CHECK(simplex_points(2, 3).rank == 2);
}

TEST_CASE("polytope parsing") {
  std::istringstream in("# square\n0 0\n1 0  # comment\n\n0 1\n1 1\n");
  auto p = parse_polytope(in);
  CHECK(p.size() == 4);
  CHECK(p.dim == 2);
  CHECK(p.rank == 2);
  std::istringstream bad("0 0\n1\n");
  CHECK_THROWS_AS(parse_polytope(bad), std::invalid_argument);
  std::istringstream junk("0 x\n");
  CHECK_THROWS_AS(parse_polytope(junk), std::invalid_argument);
  std::istringstream dup("0 0\n0 0\n");
  CHECK_THROWS_AS(parse_polytope(dup), std::invalid_argument);
  CHECK_THROWS(read_polytope_file("/nonexistent/polytope.txt"));
}

TEST_CASE("product of point sets") {
  auto p = product(simplex_points(1, 1), simplex_points(1, 1));
  CHECK(p.size() == 4);
  CHECK(p.dim == 2);
  CHECK(p.rank == 2);
}

// Oracle values from an independent sympy enumeration.
TEST_CASE("B set and quotient rank oracle") {
  struct Case {
    LatticePolytope p;
    std::size_t b;
    int rho;
    int m;
    std::int64_t toric;
  };
  std::vector<Case> cases = {
      {simplex_points(1, 1), 1, 0, 1, 0},  {simplex_points(1, 2), 3, 1, 1, 1}, {simplex_points(2, 2), 10, 2, 3, 1},
      {square(), 4, 2, 2, 0},              {simplex_points(2, 6), 136, 2, 7, 7}, {simplex_points(2, 3), 28, 2, 4, 2},
  };
  for (const auto& c : cases) {
    auto m = mprime_rank(c.p);
    CHECK(m.b_size == c.b);
    CHECK(bset(c.p).size() == c.b);
    CHECK(m.rho == c.rho);
    CHECK(m.quotient_rank == c.p.rank - c.rho);
    CHECK(max_hyperplane_points(c.p) == c.m);
    CHECK(toric_bound(c.p).bound == c.toric);
  }
}

TEST_CASE("B set of the unit segment") {
  auto b = bset(simplex_points(1, 1));
  REQUIRE(b.size() == 1);
  CHECK(b[0] == LatticePoint{1});
  auto sq = bset(square());
  CHECK(sq == std::vector<LatticePoint>{{1, 1}, {1, 2}, {2, 1}, {2, 2}});
}

TEST_CASE("lattice invariants are translation invariant") {
  auto p = simplex_points(2, 3);
  std::vector<LatticePoint> shifted;
  for (auto q : p.points) shifted.push_back({q[0] + 5, q[1] - 2});
  auto s = make_polytope(shifted);
  CHECK(mprime_rank(s).rho == mprime_rank(p).rho);
  CHECK(max_hyperplane_points(s) == max_hyperplane_points(p));
  CHECK(toric_bound(s).bound == toric_bound(p).bound);
}

TEST_CASE("degenerate inputs") {
  CHECK_THROWS_AS(make_polytope({}), std::invalid_argument);
  CHECK_THROWS_AS(make_polytope({{0, 0}, {1}}), std::invalid_argument);
  auto line = make_polytope({{0, 0}, {1, 1}, {2, 2}});
  CHECK(line.rank == 1);
  CHECK_THROWS_AS(max_hyperplane_points(line), std::invalid_argument);
}

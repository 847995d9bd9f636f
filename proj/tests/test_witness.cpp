#include <algorithm>
#include <random>

#include "doctest.h"
#include "terracini/witness.hpp"

using namespace terracini;

namespace {

RatMatrix random_plane(std::mt19937_64& rng, std::size_t rows, std::size_t cols) {
  RatMatrix m(rows, cols, Rational(0));
  for (std::size_t i = 0; i < rows; ++i)
    for (std::size_t j = 0; j < cols; ++j) m(i, j) = Rational(static_cast<long>(rng() % 21) - 10);
  return m;
}

// h random (r-1)-planes spanning P^{hr-1} and a point in their span.
std::pair<std::vector<RatMatrix>, RatVector> random_configuration(std::uint64_t seed, int h, int r) {
  std::mt19937_64 rng(seed);
  const auto cols = static_cast<std::size_t>(h * r);
  for (;;) {
    std::vector<RatMatrix> planes;
    RatMatrix all;
    for (int i = 0; i < h; ++i) {
      planes.push_back(random_plane(rng, static_cast<std::size_t>(r), cols));
      all.append_rows(planes.back());
    }
    if (rank(all) != cols) continue;
    RatVector p(cols, Rational(0));
    for (std::size_t j = 0; j < cols; ++j) p[j] = Rational(static_cast<long>(rng() % 21) - 10);
    return {planes, p};
  }
}

void check_incidence(const PlaneWitness& w, std::size_t h) {
  CHECK(w.verified());
  CHECK(w.plane.rows() == h);
  CHECK(in_row_space(w.plane, std::span<const Rational>(w.p)));
  REQUIRE(w.intersections.size() == w.inputs.size());
  for (std::size_t i = 0; i < w.inputs.size(); ++i) {
    CHECK(intersect_dim(w.plane, w.inputs[i]) == 0);
    CHECK(in_row_space(w.inputs[i], std::span<const Rational>(w.intersections[i])));
    CHECK(in_row_space(w.plane, std::span<const Rational>(w.intersections[i])));
  }
}

}  // namespace

TEST_CASE("transversal line to two skew lines in P^3") {
  auto l1 = RatMatrix::from_rows({{1, 0, 0, 0}, {0, 1, 0, 0}});
  auto l2 = RatMatrix::from_rows({{0, 0, 1, 0}, {0, 0, 0, 1}});
  RatVector p{1, 2, 3, 4};
  auto w = lspg_plane({l1, l2}, p);
  check_incidence(w, 2);
  // the line through p meeting both is spanned by (1,2,0,0) and (0,0,3,4)
  CHECK(same_row_space(w.plane, RatMatrix::from_rows({{1, 2, 0, 0}, {0, 0, 3, 4}})));
}

TEST_CASE("lspg examples") {
  for (auto [h, r] : std::vector<std::pair<int, int>>{{3, 2}, {2, 3}, {4, 2}, {3, 3}}) {
    CAPTURE(h);
    CAPTURE(r);
    auto [planes, p] = random_configuration(static_cast<std::uint64_t>(10 * h + r), h, r);
    check_incidence(lspg_plane(planes, p), static_cast<std::size_t>(h));
  }
}

TEST_CASE("lspg does not depend on the order of the planes") {
  for (std::uint64_t seed = 1; seed <= 4; ++seed) {
    auto [planes, p] = random_configuration(seed, 3, 2);
    auto base = lspg_plane(planes, p).plane;
    std::vector<int> idx{0, 1, 2};
    while (std::next_permutation(idx.begin(), idx.end())) {
      std::vector<RatMatrix> perm;
      for (int i : idx) perm.push_back(planes[static_cast<std::size_t>(i)]);
      CHECK(same_row_space(lspg_plane(perm, p).plane, base));
    }
  }
}

TEST_CASE("lspg input validation") {
  auto l1 = RatMatrix::from_rows({{1, 0, 0, 0}, {0, 1, 0, 0}});
  auto l2 = RatMatrix::from_rows({{0, 1, 0, 0}, {0, 0, 1, 0}});
  CHECK_THROWS_AS(lspg_plane({l1, l2}, RatVector{1, 1, 1, 1}), std::invalid_argument);
  auto l3 = RatMatrix::from_rows({{0, 0, 1, 0}, {0, 0, 0, 1}});
  CHECK_THROWS_AS(lspg_plane({l1, l3}, RatVector{1, 1, 1}), std::invalid_argument);
  // p on l1 itself: the recursion meets a degenerate intersection
  CHECK_THROWS(lspg_plane({l1, l3}, RatVector{1, 0, 0, 0}));
}

TEST_CASE("equal partitions count (hr)! / ((r!)^h h!)") {
  CHECK(equal_partitions(4, 2).size() == 3);
  CHECK(equal_partitions(6, 2).size() == 15);
  CHECK(equal_partitions(6, 3).size() == 10);
  CHECK(equal_partitions(8, 2).size() == 105);
  CHECK(equal_partitions(5, 1).size() == 1);
  CHECK_THROWS(equal_partitions(5, 2));
  for (const auto& part : equal_partitions(6, 2)) {
    std::vector<int> all;
    for (const auto& b : part) all.insert(all.end(), b.begin(), b.end());
    std::sort(all.begin(), all.end());
    CHECK(all == std::vector<int>{0, 1, 2, 3, 4, 5});
  }
}

TEST_CASE("secant witnesses on rational normal curves") {
  auto a = secnoid_witnesses(make_rnc(7), 2, 2);
  CHECK(a.witnesses.size() == 3);
  CHECK(a.expected_count == 3);
  CHECK(a.all_verified);
  CHECK(a.all_distinct);
  auto b = secnoid_witnesses(make_rnc(11), 2, 3);
  CHECK(b.witnesses.size() == 15);
  CHECK(b.all_verified);
  CHECK(b.all_distinct);
  for (const auto& w : b.witnesses) check_incidence(w, 3);
  auto c = secnoid_witnesses(make_rnc(7), 1, 4);
  CHECK(c.witnesses.size() == 1);
}

TEST_CASE("secant witnesses on other bases") {
  auto w = secnoid_witnesses(make_veronese(2, 3), 2, 2);
  CHECK(w.witnesses.size() == 3);
  CHECK(w.all_verified);
  CHECK(w.all_distinct);
}

TEST_CASE("tangential projection of rational normal curves") {
  auto a = rnc_tangential_projection(7, 2);
  CHECK(a.span_dim == 3);
  CHECK(a.image_degree == 3);
  CHECK(a.birational);
  CHECK(a.rational_normal);
  auto b = rnc_tangential_projection(11, 4);
  CHECK(b.span_dim == 3);
  CHECK(b.image_degree == 3);
  CHECK(b.birational);
  auto c = rnc_tangential_projection(7, 3);
  CHECK(c.span_dim == 1);
  CHECK(c.image_degree == 1);
  CHECK_THROWS_AS(rnc_tangential_projection(7, 4), std::invalid_argument);
  for (int N = 3; N <= 13; ++N)
    for (int t = 1; 2 * t <= N - 1; ++t) {
      auto p = rnc_tangential_projection(N, t);
      CHECK(p.span_dim + 2 * t == N);
      CHECK(p.centre_rank == 2 * t);
      CHECK(p.birational);
      CHECK(p.rational_normal);
    }
}

TEST_CASE("counterexample dossiers") {
  auto a = verify_mainA(7, 2);
  CHECK(a.verified);
  CHECK(a.h == 2);
  CHECK(a.decompositions.witnesses.size() == 3);
  CHECK(a.dimension_identity);
  auto b = verify_mainA(11, 2);
  CHECK(b.verified);
  CHECK(b.decompositions.witnesses.size() == 15);
  auto c = verify_mainA(11, 3);
  CHECK(c.verified);
  CHECK(c.decompositions.witnesses.size() == 10);
  CHECK_THROWS_AS(verify_mainA(8, 2), std::invalid_argument);
  CHECK_THROWS_AS(verify_mainA(5, 1), std::invalid_argument);
  CHECK_THROWS_AS(verify_mainA(7, 4), std::invalid_argument);
  auto d = verify_mainA(7, 1);
  CHECK_FALSE(d.verified);
  CHECK_FALSE(d.failures.empty());
}

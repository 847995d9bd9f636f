#pragma once

// Lattice-point combinatorics of toric embeddings: the set of
// (n+1)-fold sums of affinely spanning subsets, the rank of its difference
// lattice, the maximal hyperplane section count and the toric
// non-defectiveness range.

#include <cstdint>
#include <iosfwd>
#include <string>
#include <vector>

#include "terracini/exactnum.hpp"

namespace terracini {

using LatticePoint = std::vector<std::int64_t>;

/// Explicit list of lattice points P ∩ M. `rank` is the dimension of their
/// affine span; `dim` is the number of coordinates.
struct LatticePolytope {
  std::vector<LatticePoint> points;
  int dim = 0;
  int rank = 0;

  std::size_t size() const { return points.size(); }
};

/// Validates (distinct points, equal lengths) and records the affine rank.
LatticePolytope make_polytope(std::vector<LatticePoint> points);

/// Plain text: one point per line, integers separated by whitespace, `#`
/// starts a comment. The dimension is the column count.
LatticePolytope parse_polytope(std::istream& in);
LatticePolytope read_polytope_file(const std::string& path);

/// Lattice points of d·Δ_n (exponent vectors of degree <= d in n variables).
LatticePolytope simplex_points(int n, int d);

/// Cartesian product of lattice point sets.
LatticePolytope product(const LatticePolytope& a, const LatticePolytope& b);

/// Rank of the affine span of a set of points.
int affine_rank(const std::vector<LatticePoint>& points);

/// Sums over (rank+1)-subsets whose affine span is full, without repeats,
/// sorted lexicographically. Empty when no subset spans.
std::vector<LatticePoint> bset(const LatticePolytope& p);

struct MPrimeRank {
  int rho = 0;             // rank of <B - B>
  int quotient_rank = 0;   // rank - rho
  std::size_t b_size = 0;
};

MPrimeRank mprime_rank(const LatticePolytope& p);

/// Largest number of points of P on a hyperplane spanned by points of P.
int max_hyperplane_points(const LatticePolytope& p);

struct ToricBound {
  std::size_t lattice_points = 0;
  int max_hyperplane = 0;
  int rank = 0;
  std::int64_t bound = 0;  // h < bound
};

ToricBound toric_bound(const LatticePolytope& p);

}  // namespace terracini

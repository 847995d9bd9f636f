#pragma once

// Exact (rational) witnesses of non-identifiability for secant varieties of
// secant varieties, and the rational-normal-curve counterexample pipeline.

#include <cstdint>
#include <string>
#include <vector>

#include "terracini/exactnum.hpp"
#include "terracini/terracini.hpp"
#include "terracini/varieties.hpp"

namespace terracini {

using RatVector = std::vector<Rational>;

struct PlaneWitness {
  int ambient = 0;                     // projective dimension
  RatVector p;
  std::vector<RatMatrix> inputs;       // bases of the input planes
  RatMatrix plane;                     // basis of the output (h-1)-plane
  std::vector<RatVector> intersections;  // plane ∩ input_i, one point each
  bool p_in_plane = false;
  bool meets_each_once = false;
  bool verified() const { return p_in_plane && meets_each_once; }
};

/// The unique (h-1)-plane through p meeting each of h jointly independent
/// planes, built by recursion on h. Throws std::invalid_argument when the
/// planes are dependent or p is outside their span, and std::runtime_error
/// naming the step when an intersection is not a single point.
PlaneWitness lspg_plane(const std::vector<RatMatrix>& planes, const RatVector& p);

struct SecnoidReport {
  std::string base;
  int r = 0;
  int h = 0;
  std::vector<std::vector<std::int64_t>> parameters;  // small-integer parameter points on Y
  RatVector p;
  std::vector<std::vector<std::vector<int>>> partitions;
  std::vector<PlaneWitness> witnesses;
  std::size_t expected_count = 0;     // (hr)! / ((r!)^h h!)
  bool all_verified = false;
  bool all_distinct = false;
};

/// One witness plane per partition of hr general points of Y into h blocks
/// of r. The count is a lower bound on the number of decompositions.
SecnoidReport secnoid_witnesses(const ParamVariety& y, int r, int h, std::uint64_t seed = kDefaultSeed);

struct ProjectionReport {
  int N = 0;
  int t = 0;
  std::vector<Rational> centre_params;  // parameter values of the tangent lines
  int centre_rank = 0;                  // 2t when the tangent lines are independent
  int span_dim = 0;                     // projective span of the image curve
  int base_degree = 0;                  // degree of the common factor of the coordinates
  int map_degree = 0;                   // N - base_degree
  int fiber_size = 0;                   // points over a general image point
  bool birational = false;
  int image_degree = 0;                 // map_degree / fiber_size
  bool rational_normal = false;         // image_degree == span_dim
};

ProjectionReport rnc_tangential_projection(int N, int t, std::uint64_t seed = kDefaultSeed);

struct CounterexampleDossier {
  int N = 0;
  int r = 0;
  int h = 0;
  RankReport nondefective;   // sec_{hr}(RNC_N)
  ProjectionReport projection;
  RankReport projected_fills;  // sec_r of the projected curve
  int sec_r_dim = 0;
  bool dimension_identity = false;  // h·dim sec_r + h - 1 = N
  SecnoidReport decompositions;
  std::vector<std::string> failures;
  bool verified = false;
};

CounterexampleDossier verify_mainA(int N, int r, const SampleOptions& opt = {});

/// Set partitions of {0..n-1} into blocks of size r (n divisible by r).
std::vector<std::vector<std::vector<int>>> equal_partitions(int n, int r);

}  // namespace terracini

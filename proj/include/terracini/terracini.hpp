#pragma once

// Randomized-exact Terracini computations. Ranks are taken at integer points
// reduced modulo large primes; a rank found this way is a lower bound for
// the generic rank over Q, so non-defectiveness is certified while
// defectiveness is only probable.

#include <cstdint>
#include <string>
#include <vector>

#include "terracini/exactnum.hpp"
#include "terracini/varieties.hpp"

namespace terracini {

struct SampleOptions {
  std::uint64_t seed = kDefaultSeed;
  int trials = 3;
  std::vector<std::uint64_t> primes = default_primes();
};

/// Raised when a computation's hypotheses are detected to fail.
class Refused : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

enum class Verdict { nondefective_certified, defective_probable, fills_ambient };

std::string to_string(Verdict v);

/// min(nh + h - 1, N)
int expected_secant_dim(int n, int h, int N);

using IntPoint = std::vector<std::uint64_t>;

struct PrimeRanks {
  std::uint64_t prime = 0;
  std::vector<std::size_t> trial_ranks;  // 0 marks a trial whose evaluation failed
  std::size_t best = 0;
};

struct RankReport {
  std::string variety;
  int n = 0;
  int N = 0;
  int h = 0;
  std::uint64_t seed = 0;
  int trials = 0;
  std::vector<PrimeRanks> per_prime;
  bool primes_agree = true;
  std::vector<IntPoint> points;  // the h parameter points of the best trial
  std::size_t cone_rank = 0;
  int secant_dim = -1;
  int expected_dim = 0;
  Verdict verdict = Verdict::defective_probable;
};

/// The h sampled parameter points of a trial; shared by every prime.
std::vector<IntPoint> sample_points(const ParamVariety& x, int h, std::uint64_t seed, int trial);

/// Rank of the stacked cone tangents [φ(u_i); ∂φ(u_i)] over F_p.
std::size_t terracini_rank(const ParamVariety& x, const std::vector<IntPoint>& points, std::uint64_t p);

RankReport secant_dim(const ParamVariety& x, int h, const SampleOptions& opt = {});

Verdict is_defective(const ParamVariety& x, int h, const SampleOptions& opt = {});

struct FiberReport {
  std::string variety;
  int h = 0;
  int delta = 0;       // projective dim of <T_1..T_h> ∩ T_{h+1}
  int fiber_dim = 0;   // delta + 1
  int image_dim = 0;   // n - delta - 1
  int span_rank = 0;   // cone rank of <T_1..T_h>
  int dim_sec_next = 0;
  int fiber_from_count = 0;  // (h+1)n + h - dim sec_{h+1}
  bool consistent = false;
  bool primes_agree = true;
};

FiberReport tangential_fiber_dim(const ParamVariety& x, int h, const SampleOptions& opt = {});

struct LdiffReport {
  std::string variety;
  int h = 0;
  int n = 0;
  int rows = 0;             // (h+1)n + h
  int cols = 0;             // N
  int rank = 0;             // on D_h (λ_1 = 0)
  int kernel_dim = 0;       // rows - rank
  int generic_rank = 0;     // at a general point (λ_1 ≠ 0)
  int generic_kernel_dim = 0;
  bool matches_statement = false;  // kernel_dim == n
  bool residual_part_assumed_empty = true;
  bool primes_agree = true;
  RankReport precondition;  // sec_{h+1} check
};

/// Builds the Jacobian matrix of the (h+1)-secant map in the chart with the
/// last coordinate and λ_{h+1} equal to 1, at a point with λ_1 = 0, and
/// returns its kernel dimension. Refuses when X is found (h+1)-defective.
LdiffReport ldiff_kernel_check(const ParamVariety& x, int h, const SampleOptions& opt = {});

struct ConeReport {
  std::string variety;
  bool is_cone = false;       // probable when true, certified when false
  int vertex_dim = -1;        // projective dim of the common part of sampled tangent spaces
  int trials = 0;
  int trials_satisfied = 0;   // trials where φ lies in the span of ∂φ
  std::string chart;
};

/// Cone test in the affine chart centred at a candidate vertex: the vertex is
/// taken from the intersection of the tangent spaces at sampled points; with
/// none found the chart is the one where the last coordinate is 1.
ConeReport cone_test(const ParamVariety& x, const SampleOptions& opt = {});

}  // namespace terracini

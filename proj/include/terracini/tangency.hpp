#pragma once

// Gauss-map rank and the local dimension of tangential contact loci, from
// second-order jets of the parametrization.

#include <string>
#include <vector>

#include "terracini/terracini.hpp"

namespace terracini {

struct GaussReport {
  std::string variety;
  int n = 0;
  int gauss_rank = 0;
  int kernel_dim = 0;  // n - gauss_rank
  bool degenerate = false;
  std::vector<int> per_prime;
  bool primes_agree = true;
};

GaussReport gauss_rank(const ParamVariety& x, const SampleOptions& opt = {});

enum class TwdVerdict { not_h_twd_probable, h_twd_probable };

std::string to_string(TwdVerdict v);

struct ContactReport {
  std::string variety;
  int h = 0;
  int n = 0;
  int span_rank = 0;          // cone rank of <T_{x_1}..T_{x_h}>
  int gamma_hat = 0;          // local contact-locus dimension at x_1
  int gamma_hat_alt = 0;      // same, with a second complement of the span
  bool projector_independent = true;
  bool constraint_vanishes = true;  // g(x_1) = 0
  std::vector<int> per_prime;
  bool primes_agree = true;
  std::vector<IntPoint> base_points;
  TwdVerdict verdict = TwdVerdict::not_h_twd_probable;
};

/// Requires h(n+1) <= N+1. Throws Refused when the sampled tangent spaces
/// never span the expected dimension (X is then h-defective).
ContactReport contact_locus_dim(const ParamVariety& x, int h, const SampleOptions& opt = {});

struct IdentifiabilityHint {
  std::string verdict;  // "identifiable-probable" or "no-conclusion"
  ContactReport contact;
};

IdentifiabilityHint twd_identifiability_hint(const ParamVariety& x, int h, const SampleOptions& opt = {});

}  // namespace terracini

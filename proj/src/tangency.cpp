#include "terracini/tangency.hpp"

#include <algorithm>
#include <numeric>

namespace terracini {

namespace {

// Rank of the Jacobian at x_1 of u ↦ (∂_i φ(u) mod Λ)_i. Row k holds, for
// every i, the normal form of ∂_i∂_k φ(x_1) modulo Λ.
std::size_t second_order_rank(const std::vector<FpJet>& jets, const Echelon<Fp>& lambda) {
  const std::size_t m = jets[0].vars();
  const std::size_t c = jets.size();
  ModMatrix jac;
  std::vector<Fp> col(c), row;
  row.reserve(m * c);
  for (std::size_t k = 0; k < m; ++k) {
    row.clear();
    for (std::size_t i = 0; i < m; ++i) {
      for (std::size_t q = 0; q < c; ++q) col[q] = jets[q].hess(i, k);
      auto nf = reduce_mod(lambda, std::span<const Fp>(col));
      row.insert(row.end(), nf.begin(), nf.end());
    }
    jac.append_row(row);
  }
  return rank(jac);
}

bool vanishes_mod(const Echelon<Fp>& lambda, const ModMatrix& rows) {
  for (std::size_t r = 0; r < rows.rows(); ++r) {
    auto nf = reduce_mod(lambda, rows.row(r));
    for (const auto& v : nf)
      if (!v.is_zero()) return false;
  }
  return true;
}

std::vector<std::size_t> reversed_columns(std::size_t n) {
  std::vector<std::size_t> order(n);
  std::iota(order.rbegin(), order.rend(), 0);
  return order;
}

}  // namespace

std::string to_string(TwdVerdict v) {
  return v == TwdVerdict::h_twd_probable ? "h-twd-probable" : "not-h-twd-probable";
}

GaussReport gauss_rank(const ParamVariety& x, const SampleOptions& opt) {
  GaussReport rep;
  rep.variety = x.id;
  rep.n = x.n;
  for (auto p : opt.primes) {
    int best = -1;
    for (int t = 0; t < opt.trials; ++t) {
      auto u = to_field(sample_points(x, 1, derive_seed(opt.seed, 0x6a55), t)[0], p);
      try {
        auto jets = jet_eval(x, u);
        auto tangent = row_echelon(cone_tangent(jets));
        best = std::max(best, static_cast<int>(second_order_rank(jets, tangent)));
      } catch (const EvaluationError&) {
      }
    }
    if (best < 0) throw EvaluationError(x.id + ": evaluation failed at every sampled point");
    rep.per_prime.push_back(best);
  }
  rep.primes_agree = std::adjacent_find(rep.per_prime.begin(), rep.per_prime.end(), std::not_equal_to<>()) ==
                     rep.per_prime.end();
  rep.gauss_rank = *std::max_element(rep.per_prime.begin(), rep.per_prime.end());
  rep.kernel_dim = x.n - rep.gauss_rank;
  rep.degenerate = rep.gauss_rank < x.n;
  return rep;
}

ContactReport contact_locus_dim(const ParamVariety& x, int h, const SampleOptions& opt) {
  if (h < 1) throw std::invalid_argument("h must be >= 1");
  if (h * (x.n + 1) > x.N + 1)
    throw std::invalid_argument(x.id + ": h(n+1) = " + std::to_string(h * (x.n + 1)) + " exceeds N+1 = " +
                                std::to_string(x.N + 1) + "; the span of the tangent spaces is not proper");
  ContactReport rep;
  rep.variety = x.id;
  rep.h = h;
  rep.n = x.n;
  const auto want = static_cast<std::size_t>(h * (x.n + 1));
  const int attempts = opt.trials + 3;
  for (std::size_t pi = 0; pi < opt.primes.size(); ++pi) {
    const auto p = opt.primes[pi];
    int best = -1, best_alt = -1;
    int good = 0;
    for (int t = 0; t < attempts && good < opt.trials; ++t) {
      auto pts = sample_points(x, h, derive_seed(opt.seed, 0xc047), t);
      try {
        std::vector<FpJet> jets1;
        ModMatrix span;
        for (int i = 0; i < h; ++i) {
          auto jets = jet_eval(x, to_field(pts[static_cast<std::size_t>(i)], p));
          auto t_i = cone_tangent(jets);
          span.append_rows(t_i);
          if (i == 0) jets1 = std::move(jets);
        }
        auto lambda = row_echelon(span);
        rep.span_rank = std::max(rep.span_rank, static_cast<int>(lambda.rank()));
        if (lambda.rank() != want) continue;
        ++good;
        if (!vanishes_mod(lambda, cone_tangent(jets1))) rep.constraint_vanishes = false;
        const auto r = static_cast<int>(second_order_rank(jets1, lambda));
        const auto order = reversed_columns(span.cols());
        auto lambda_alt = row_echelon(span, order);
        const auto r_alt = static_cast<int>(second_order_rank(jets1, lambda_alt));
        if (r > best) {
          best = r;
          if (pi == 0) rep.base_points = pts;
        }
        best_alt = std::max(best_alt, r_alt);
      } catch (const EvaluationError&) {
      }
    }
    if (good == 0) {
      auto sec = secant_dim(x, h, opt);
      throw Refused(x.id + ": tangent spaces at " + std::to_string(h) + " sampled points span rank " +
                    std::to_string(rep.span_rank) + " < " + std::to_string(want) + " (secant verdict " +
                    to_string(sec.verdict) + ", dim " + std::to_string(sec.secant_dim) + ")");
    }
    rep.per_prime.push_back(x.n - best);
    if (pi == 0) {
      rep.gamma_hat = x.n - best;
      rep.gamma_hat_alt = x.n - best_alt;
    } else {
      rep.gamma_hat = std::min(rep.gamma_hat, x.n - best);
      rep.gamma_hat_alt = std::min(rep.gamma_hat_alt, x.n - best_alt);
    }
  }
  rep.primes_agree = std::adjacent_find(rep.per_prime.begin(), rep.per_prime.end(), std::not_equal_to<>()) ==
                     rep.per_prime.end();
  rep.projector_independent = rep.gamma_hat == rep.gamma_hat_alt;
  rep.verdict = rep.gamma_hat >= 1 ? TwdVerdict::h_twd_probable : TwdVerdict::not_h_twd_probable;
  return rep;
}

IdentifiabilityHint twd_identifiability_hint(const ParamVariety& x, int h, const SampleOptions& opt) {
  IdentifiabilityHint hint;
  hint.contact = contact_locus_dim(x, h, opt);
  hint.verdict = hint.contact.gamma_hat == 0 ? "identifiable-probable" : "no-conclusion";
  return hint;
}

}  // namespace terracini

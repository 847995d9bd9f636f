#include "terracini/terracini.hpp"

#include <algorithm>

namespace terracini {

namespace {

ModMatrix stacked_tangents(const ParamVariety& x, const std::vector<IntPoint>& points, std::size_t from,
                           std::size_t to, std::uint64_t p) {
  ModMatrix m;
  for (std::size_t i = from; i < to; ++i) {
    auto u = to_field(points[i], p);
    m.append_rows(cone_tangent(x, u));
  }
  return m;
}

// Coordinates y_k = f_k(φ) / φ_c as jets: f_k = e_k - (v_k / v_c) e_c for
// k ≠ c, which puts the point v at the origin of the chart. With v empty
// the chart is φ_k / φ_N.
std::vector<FpJet> affine_chart(const std::vector<FpJet>& phi, const std::vector<Fp>& v) {
  std::size_t c = phi.size() - 1;
  if (!v.empty()) {
    c = 0;
    while (c < v.size() && v[c].is_zero()) ++c;
    if (c == v.size()) throw std::invalid_argument("chart centre is the zero vector");
  }
  const FpJet inv = reciprocal(phi[c]);
  std::vector<FpJet> out;
  out.reserve(phi.size() - 1);
  for (std::size_t k = 0; k < phi.size(); ++k) {
    if (k == c) continue;
    FpJet f = phi[k];
    if (!v.empty() && !v[k].is_zero()) f = f - phi[c] * (v[k] / v[c]);
    out.push_back(f * inv);
  }
  return out;
}

bool all_equal(const std::vector<std::size_t>& v) {
  return std::adjacent_find(v.begin(), v.end(), std::not_equal_to<>()) == v.end();
}

}  // namespace

std::string to_string(Verdict v) {
  switch (v) {
    case Verdict::nondefective_certified: return "nondefective-certified";
    case Verdict::defective_probable: return "defective-probable";
    case Verdict::fills_ambient: return "fills-ambient";
  }
  return "unknown";
}

int expected_secant_dim(int n, int h, int N) { return std::min(n * h + h - 1, N); }

std::vector<IntPoint> sample_points(const ParamVariety& x, int h, std::uint64_t seed, int trial) {
  Sampler s(derive_seed(seed, static_cast<std::uint64_t>(trial)));
  std::vector<IntPoint> pts;
  for (int i = 0; i < h; ++i) pts.push_back(sample_integers(s, x.num_params));
  return pts;
}

std::size_t terracini_rank(const ParamVariety& x, const std::vector<IntPoint>& points, std::uint64_t p) {
  return rank(stacked_tangents(x, points, 0, points.size(), p));
}

RankReport secant_dim(const ParamVariety& x, int h, const SampleOptions& opt) {
  if (h < 1) throw std::invalid_argument("secant order h must be >= 1");
  if (opt.trials < 1) throw std::invalid_argument("trials must be >= 1");
  if (opt.primes.empty()) throw std::invalid_argument("at least one prime is required");
  RankReport rep;
  rep.variety = x.id;
  rep.n = x.n;
  rep.N = x.N;
  rep.h = h;
  rep.seed = opt.seed;
  rep.trials = opt.trials;
  for (auto p : opt.primes) rep.per_prime.push_back({p, {}, 0});

  bool any = false;
  for (int t = 0; t < opt.trials; ++t) {
    auto pts = sample_points(x, h, opt.seed, t);
    for (auto& pr : rep.per_prime) {
      std::size_t r = 0;
      try {
        r = terracini_rank(x, pts, pr.prime);
        any = true;
      } catch (const EvaluationError&) {
        r = 0;
      }
      pr.trial_ranks.push_back(r);
      if (r > pr.best) pr.best = r;
      if (r > rep.cone_rank) {
        rep.cone_rank = r;
        rep.points = pts;
      }
    }
  }
  if (!any) throw EvaluationError(x.id + ": evaluation failed at every sampled point");
  std::vector<std::size_t> bests;
  for (const auto& pr : rep.per_prime) bests.push_back(pr.best);
  rep.primes_agree = all_equal(bests);
  rep.secant_dim = static_cast<int>(rep.cone_rank) - 1;
  rep.expected_dim = expected_secant_dim(x.n, h, x.N);
  if (rep.secant_dim < rep.expected_dim)
    rep.verdict = Verdict::defective_probable;
  else
    rep.verdict = rep.expected_dim == x.N ? Verdict::fills_ambient : Verdict::nondefective_certified;
  return rep;
}

Verdict is_defective(const ParamVariety& x, int h, const SampleOptions& opt) { return secant_dim(x, h, opt).verdict; }

FiberReport tangential_fiber_dim(const ParamVariety& x, int h, const SampleOptions& opt) {
  if (h < 1) throw std::invalid_argument("h must be >= 1");
  FiberReport rep;
  rep.variety = x.id;
  rep.h = h;
  std::vector<std::size_t> per_prime_ab;
  std::size_t ra = 0, rb = 0, rab = 0;
  for (auto p : opt.primes) {
    std::size_t best_ab = 0;
    for (int t = 0; t < opt.trials; ++t) {
      auto pts = sample_points(x, h + 1, derive_seed(opt.seed, 0xf1be), t);
      try {
        auto a = stacked_tangents(x, pts, 0, static_cast<std::size_t>(h), p);
        auto b = stacked_tangents(x, pts, static_cast<std::size_t>(h), pts.size(), p);
        ModMatrix ab = a;
        ab.append_rows(b);
        ra = std::max(ra, rank(a));
        rb = std::max(rb, rank(b));
        const auto r = rank(ab);
        best_ab = std::max(best_ab, r);
        rab = std::max(rab, r);
      } catch (const EvaluationError&) {
      }
    }
    per_prime_ab.push_back(best_ab);
  }
  if (rab == 0) throw EvaluationError(x.id + ": evaluation failed at every sampled point");
  rep.primes_agree = all_equal(per_prime_ab);
  rep.span_rank = static_cast<int>(ra);
  rep.delta = static_cast<int>(ra + rb) - static_cast<int>(rab) - 1;
  rep.fiber_dim = rep.delta + 1;
  rep.image_dim = x.n - rep.delta - 1;
  auto next = secant_dim(x, h + 1, opt);
  rep.dim_sec_next = next.secant_dim;
  rep.primes_agree = rep.primes_agree && next.primes_agree;
  rep.fiber_from_count = (h + 1) * x.n + h - next.secant_dim;
  rep.consistent = rep.fiber_from_count == rep.fiber_dim;
  return rep;
}

LdiffReport ldiff_kernel_check(const ParamVariety& x, int h, const SampleOptions& opt) {
  if (h < 1) throw std::invalid_argument("h must be >= 1");
  if (x.num_params != static_cast<std::size_t>(x.n))
    throw std::invalid_argument(x.id + ": the secant-map Jacobian needs a parametrization with exactly n = " +
                                std::to_string(x.n) + " parameters (got " + std::to_string(x.num_params) + ")");
  LdiffReport rep;
  rep.variety = x.id;
  rep.h = h;
  rep.n = x.n;
  rep.precondition = secant_dim(x, h + 1, opt);
  if (rep.precondition.verdict == Verdict::defective_probable)
    throw Refused(x.id + " is (h+1)-defective (dim sec_" + std::to_string(h + 1) + " = " +
                  std::to_string(rep.precondition.secant_dim) + " < " + std::to_string(rep.precondition.expected_dim) +
                  "); the kernel statement does not apply");

  const auto n = static_cast<std::size_t>(x.n);
  const auto hh = static_cast<std::size_t>(h);
  rep.rows = static_cast<int>((hh + 1) * n + hh);
  rep.cols = x.N;

  std::vector<int> ranks_d, ranks_g;
  for (auto p : opt.primes) {
    int best_d = -1, best_g = -1;
    for (int t = 0; t < opt.trials; ++t) {
      Sampler s(derive_seed(derive_seed(opt.seed, 0x1d1ff), static_cast<std::uint64_t>(t)));
      std::vector<IntPoint> pts;
      for (std::size_t i = 0; i <= hh; ++i) pts.push_back(sample_integers(s, n));
      auto lambda_ints = sample_integers(s, hh);
      try {
        std::vector<std::vector<FpJet>> aff;
        for (const auto& pt : pts) {
          auto u = to_field(pt, p);
          aff.push_back(affine_chart(jet_eval(x, u), {}));
        }
        const std::size_t cols = aff[0].size();
        auto build = [&](bool on_dh) {
          std::vector<Fp> lambda = to_field(lambda_ints, p);
          if (on_dh) lambda[0] = Fp(0, p);
          ModMatrix m;
          std::vector<Fp> row(cols);
          for (std::size_t i = 0; i < hh; ++i)
            for (std::size_t k = 0; k < n; ++k) {
              for (std::size_t c = 0; c < cols; ++c) row[c] = lambda[i] * aff[i][c].grad(k);
              m.append_row(row);
            }
          for (std::size_t k = 0; k < n; ++k) {
            for (std::size_t c = 0; c < cols; ++c) row[c] = aff[hh][c].grad(k);
            m.append_row(row);
          }
          Fp denom(1, p);
          for (const auto& l : lambda) denom += l;
          const Fp inv = reciprocal(denom);
          std::vector<Fp> pi(cols);
          for (std::size_t c = 0; c < cols; ++c) {
            Fp acc = aff[hh][c].value();
            for (std::size_t i = 0; i < hh; ++i) acc += lambda[i] * aff[i][c].value();
            pi[c] = acc * inv;
          }
          for (std::size_t i = 0; i < hh; ++i) {
            for (std::size_t c = 0; c < cols; ++c) row[c] = aff[i][c].value() - pi[c];
            m.append_row(row);
          }
          return static_cast<int>(rank(m));
        };
        best_d = std::max(best_d, build(true));
        best_g = std::max(best_g, build(false));
      } catch (const EvaluationError&) {
      }
    }
    if (best_d < 0) throw EvaluationError(x.id + ": evaluation failed at every sampled point");
    ranks_d.push_back(best_d);
    ranks_g.push_back(best_g);
  }
  rep.rank = *std::max_element(ranks_d.begin(), ranks_d.end());
  rep.generic_rank = *std::max_element(ranks_g.begin(), ranks_g.end());
  rep.primes_agree = std::adjacent_find(ranks_d.begin(), ranks_d.end(), std::not_equal_to<>()) == ranks_d.end() &&
                     std::adjacent_find(ranks_g.begin(), ranks_g.end(), std::not_equal_to<>()) == ranks_g.end();
  rep.kernel_dim = rep.rows - rep.rank;
  rep.generic_kernel_dim = rep.rows - rep.generic_rank;
  rep.matches_statement = rep.kernel_dim == x.n;
  return rep;
}

ConeReport cone_test(const ParamVariety& x, const SampleOptions& opt) {
  ConeReport rep;
  rep.variety = x.id;
  rep.trials = opt.trials;
  bool all_primes = true;
  for (std::size_t pi = 0; pi < opt.primes.size(); ++pi) {
    const auto p = opt.primes[pi];
    // vertex candidates: common part of the cone tangent spaces at n+2 points
    auto pts = sample_points(x, std::max(2, x.n + 2), derive_seed(opt.seed, 0xc02e), 0);
    ModMatrix common = cone_tangent(x, to_field(pts[0], p));
    for (std::size_t i = 1; i < pts.size() && common.rows() > 0; ++i)
      common = intersect_rows(common, cone_tangent(x, to_field(pts[i], p)));
    std::vector<Fp> centre;
    if (common.rows() > 0) centre.assign(common.row(0).begin(), common.row(0).end());
    if (pi == 0) {
      rep.vertex_dim = static_cast<int>(common.rows()) - 1;
      rep.chart = centre.empty() ? "last coordinate = 1" : "centred at a common point of the tangent spaces";
    }
    int satisfied = 0;
    for (int t = 0; t < opt.trials; ++t) {
      auto u = to_field(sample_points(x, 1, derive_seed(opt.seed, 0xc0e5), t)[0], p);
      try {
        auto y = affine_chart(jet_eval(x, u), centre);
        ModMatrix grads;
        std::vector<Fp> value(y.size()), row(y.size());
        for (std::size_t k = 0; k < y.size(); ++k) value[k] = y[k].value();
        for (std::size_t i = 0; i < x.num_params; ++i) {
          for (std::size_t k = 0; k < y.size(); ++k) row[k] = y[k].grad(i);
          grads.append_row(row);
        }
        if (in_row_space(grads, std::span<const Fp>(value))) ++satisfied;
      } catch (const EvaluationError&) {
      }
    }
    if (pi == 0) rep.trials_satisfied = satisfied;
    if (satisfied != opt.trials) all_primes = false;
  }
  rep.is_cone = all_primes;
  return rep;
}

}  // namespace terracini

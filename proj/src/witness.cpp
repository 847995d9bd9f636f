#include "terracini/witness.hpp"

#include <algorithm>
#include <numeric>

#include "terracini/polynomial.hpp"

namespace terracini {

namespace {

RatMatrix stack(const std::vector<RatMatrix>& parts) {
  RatMatrix m;
  for (const auto& p : parts) m.append_rows(p);
  return m;
}

RatMatrix single_row(const RatVector& v) {
  RatMatrix m;
  m.append_row(v);
  return m;
}

// The unique point of rowspace(a) ∩ rowspace(b); `step` names the caller's
// stage in the error message.
RatVector meet_in_point(const RatMatrix& a, const RatMatrix& b, const std::string& step) {
  auto i = intersect_rows(a, b);
  if (i.rows() != 1)
    throw std::runtime_error(step + ": intersection has projective dimension " + std::to_string(int(i.rows()) - 1) +
                             ", expected a single point");
  return {i.row(0).begin(), i.row(0).end()};
}

RatMatrix lspg_rec(const std::vector<RatMatrix>& planes, const RatVector& p) {
  const std::size_t h = planes.size();
  if (h == 1) {
    if (!in_row_space(planes[0], std::span<const Rational>(p)))
      throw std::runtime_error("h = 1: the point is not on the remaining plane");
    return single_row(p);
  }
  std::vector<RatMatrix> first(planes.begin(), planes.end() - 1);
  const RatMatrix s = stack(first);
  RatMatrix lambda = s;
  lambda.append_row(p);
  const std::string tag = "h = " + std::to_string(h);
  RatVector q = meet_in_point(lambda, planes.back(), tag + ": <p, L_1..L_{h-1}> meets L_h");
  RatMatrix line = single_row(p);
  line.append_row(q);
  RatVector p2 = meet_in_point(line, s, tag + ": <p, q> meets <L_1..L_{h-1}>");
  RatMatrix sub = lspg_rec(first, p2);
  RatMatrix out = single_row(q);
  out.append_rows(sub);
  return row_echelon(out).basis;
}

std::vector<std::vector<Rational>> rnc_centre(int N, const std::vector<Rational>& params) {
  std::vector<std::vector<Rational>> rows;
  for (const auto& s : params) {
    std::vector<Rational> pt(static_cast<std::size_t>(N) + 1), tan(static_cast<std::size_t>(N) + 1, Rational(0));
    Rational pw = 1;
    for (int i = 0; i <= N; ++i) {
      pt[static_cast<std::size_t>(i)] = pw;
      if (i + 1 <= N) tan[static_cast<std::size_t>(i) + 1] = Rational(i + 1) * pw;
      pw *= s;
    }
    rows.push_back(std::move(pt));
    rows.push_back(std::move(tan));
  }
  return rows;
}

BigInt factorial(int n) {
  BigInt f = 1;
  for (int i = 2; i <= n; ++i) f *= i;
  return f;
}

}  // namespace

PlaneWitness lspg_plane(const std::vector<RatMatrix>& planes, const RatVector& p) {
  if (planes.empty()) throw std::invalid_argument("lspg needs at least one plane");
  const std::size_t cols = p.size();
  std::size_t total = 0;
  for (const auto& pl : planes) {
    if (pl.cols() != cols || pl.rows() == 0) throw std::invalid_argument("planes and point live in different spaces");
    total += rank(pl);
  }
  const RatMatrix all = stack(planes);
  if (rank(all) != total) throw std::invalid_argument("input planes are not jointly independent");
  if (!in_row_space(all, std::span<const Rational>(p)))
    throw std::invalid_argument("the point is not in the span of the input planes");

  PlaneWitness w;
  w.ambient = static_cast<int>(cols) - 1;
  w.p = p;
  w.inputs = planes;
  w.plane = lspg_rec(planes, p);
  w.p_in_plane = in_row_space(w.plane, std::span<const Rational>(p)) && w.plane.rows() == planes.size();
  w.meets_each_once = true;
  for (const auto& pl : planes) {
    auto i = intersect_rows(w.plane, pl);
    if (i.rows() != 1) {
      w.meets_each_once = false;
      w.intersections.emplace_back();
    } else {
      w.intersections.emplace_back(i.row(0).begin(), i.row(0).end());
    }
  }
  return w;
}

std::vector<std::vector<std::vector<int>>> equal_partitions(int n, int r) {
  if (r < 1 || n % r != 0) throw std::invalid_argument("block size must divide the number of points");
  std::vector<std::vector<std::vector<int>>> out;
  std::vector<bool> used(static_cast<std::size_t>(n), false);
  std::vector<std::vector<int>> blocks;
  auto rec = [&](auto&& self) -> void {
    int first = 0;
    while (first < n && used[static_cast<std::size_t>(first)]) ++first;
    if (first == n) {
      out.push_back(blocks);
      return;
    }
    std::vector<int> rest;
    for (int i = first + 1; i < n; ++i)
      if (!used[static_cast<std::size_t>(i)]) rest.push_back(i);
    // choose r-1 companions for `first` among `rest`
    std::vector<int> pick(static_cast<std::size_t>(r - 1));
    auto choose = [&](auto&& ch, std::size_t pos, std::size_t start) -> void {
      if (pos == pick.size()) {
        std::vector<int> block{first};
        block.insert(block.end(), pick.begin(), pick.end());
        for (int b : block) used[static_cast<std::size_t>(b)] = true;
        blocks.push_back(block);
        self(self);
        blocks.pop_back();
        for (int b : block) used[static_cast<std::size_t>(b)] = false;
        return;
      }
      for (std::size_t i = start; i < rest.size(); ++i) {
        pick[pos] = rest[i];
        ch(ch, pos + 1, i + 1);
      }
    };
    choose(choose, 0, 0);
  };
  rec(rec);
  return out;
}

SecnoidReport secnoid_witnesses(const ParamVariety& y, int r, int h, std::uint64_t seed) {
  if (r < 1 || h < 1) throw std::invalid_argument("r and h must be >= 1");
  SecnoidReport rep;
  rep.base = y.id;
  rep.r = r;
  rep.h = h;
  const int count = h * r;
  Sampler s(derive_seed(seed, 0x5ec0));
  std::vector<RatVector> pts;
  bool spanned = false;
  for (int attempt = 0; attempt < 32 && !spanned; ++attempt) {
    pts.clear();
    rep.parameters.clear();
    try {
      for (int k = 0; k < count; ++k) {
        std::vector<std::int64_t> ints;
        std::vector<Rational> u;
        for (std::size_t j = 0; j < y.num_params; ++j) {
          ints.push_back(s.small_nonzero(-24, 24));
          u.emplace_back(ints.back());
        }
        pts.push_back(y.eval(std::span<const Rational>(u)));
        rep.parameters.push_back(std::move(ints));
      }
    } catch (const EvaluationError&) {
      continue;
    }
    spanned = rank(RatMatrix::from_rows(pts)) == static_cast<std::size_t>(count);
  }
  if (!spanned) throw std::runtime_error(y.id + ": " + std::to_string(count) + " sampled points never spanned a " +
                                         std::to_string(count - 1) + "-plane");

  rep.p.assign(pts[0].size(), Rational(0));
  for (const auto& pt : pts) {
    const Rational a(s.small_nonzero(-9, 9));
    for (std::size_t c = 0; c < pt.size(); ++c) rep.p[c] += a * pt[c];
  }

  rep.partitions = equal_partitions(count, r);
  rep.expected_count = (factorial(count) / (pow(factorial(r), static_cast<unsigned>(h)) * factorial(h)))
                           .convert_to<std::size_t>();
  rep.all_verified = true;
  for (const auto& part : rep.partitions) {
    std::vector<RatMatrix> planes;
    for (const auto& block : part) {
      RatMatrix m;
      for (int k : block) m.append_row(pts[static_cast<std::size_t>(k)]);
      planes.push_back(std::move(m));
    }
    rep.witnesses.push_back(lspg_plane(planes, rep.p));
    if (!rep.witnesses.back().verified()) rep.all_verified = false;
  }
  rep.all_distinct = true;
  for (std::size_t i = 0; i < rep.witnesses.size() && rep.all_distinct; ++i)
    for (std::size_t j = i + 1; j < rep.witnesses.size(); ++j)
      if (same_row_space(rep.witnesses[i].plane, rep.witnesses[j].plane)) {
        rep.all_distinct = false;
        break;
      }
  return rep;
}

ProjectionReport rnc_tangential_projection(int N, int t, std::uint64_t seed) {
  if (t < 1 || 2 * t > N - 1)
    throw std::invalid_argument("tangential projection needs 1 <= t and 2t <= N - 1 (N = " + std::to_string(N) +
                                ", t = " + std::to_string(t) + ")");
  ProjectionReport rep;
  rep.N = N;
  rep.t = t;
  Sampler s(derive_seed(seed, 0x7a9));
  while (rep.centre_params.size() < static_cast<std::size_t>(t)) {
    Rational c(s.small_nonzero(-40, 40));
    if (std::find(rep.centre_params.begin(), rep.centre_params.end(), c) == rep.centre_params.end())
      rep.centre_params.push_back(c);
  }
  const RatMatrix centre = RatMatrix::from_rows(rnc_centre(N, rep.centre_params));
  rep.centre_rank = static_cast<int>(rank(centre));
  if (rep.centre_rank != 2 * t) throw std::runtime_error("tangent lines at the chosen points are dependent");

  // Linear projection: normal form modulo the centre, read on the free columns.
  const auto e = row_echelon(centre);
  std::vector<std::size_t> free_cols;
  for (std::size_t c = 0; c < centre.cols(); ++c)
    if (std::find(e.pivots.begin(), e.pivots.end(), c) == e.pivots.end()) free_cols.push_back(c);
  std::vector<std::vector<Rational>> coeff(free_cols.size(), std::vector<Rational>(centre.cols(), Rational(0)));
  for (std::size_t i = 0; i < centre.cols(); ++i) {
    std::vector<Rational> unit(centre.cols(), Rational(0));
    unit[i] = 1;
    auto nf = reduce_mod(e, std::span<const Rational>(unit));
    for (std::size_t j = 0; j < free_cols.size(); ++j) coeff[j][i] = nf[free_cols[j]];
  }
  std::vector<Poly> psi;
  int max_deg = -1;
  for (const auto& c : coeff) {
    psi.emplace_back(c);
    max_deg = std::max(max_deg, psi.back().degree());
  }
  rep.span_dim = static_cast<int>(rank(RatMatrix::from_rows(coeff))) - 1;

  const Poly g = gcd(psi);
  // a drop of the top degree is a base point at s = ∞
  rep.base_degree = g.degree() + (N - max_deg);
  rep.map_degree = N - rep.base_degree;

  // Fiber through a general image point: common roots of generic hyperplane
  // pullbacks through ψ(s0), after removing the base locus.
  Rational s0;
  do {
    s0 = Rational(s.small_nonzero(-97, 97));
  } while (std::find(rep.centre_params.begin(), rep.centre_params.end(), s0) != rep.centre_params.end());
  std::vector<Rational> y0;
  for (const auto& p : psi) y0.push_back(p(s0));
  std::vector<Rational> v(y0.size());
  Rational vy = 0;
  while (vy == 0) {
    vy = 0;
    for (std::size_t c = 0; c < v.size(); ++c) {
      v[c] = Rational(s.small_nonzero(-9, 9));
      vy += v[c] * y0[c];
    }
  }
  const int cuts = std::min(2, rep.span_dim);
  std::vector<Poly> pullbacks;
  for (int k = 0; k < cuts; ++k) {
    std::vector<Rational> w(y0.size());
    Rational wy = 0;
    for (std::size_t c = 0; c < w.size(); ++c) {
      w[c] = Rational(s.small_nonzero(-9, 9));
      wy += w[c] * y0[c];
    }
    Poly f;
    for (std::size_t c = 0; c < w.size(); ++c) f = f + psi[c] * (w[c] - wy / vy * v[c]);
    auto [quot, rem] = divmod(f, g);
    if (!rem.is_zero()) throw std::logic_error("hyperplane pullback not divisible by the base locus");
    pullbacks.push_back(quot);
  }
  rep.fiber_size = cuts > 0 ? gcd(pullbacks).degree() : 0;
  rep.birational = rep.fiber_size == 1;
  rep.image_degree = rep.fiber_size > 0 ? rep.map_degree / rep.fiber_size : 0;
  rep.rational_normal = rep.image_degree == rep.span_dim;
  return rep;
}

CounterexampleDossier verify_mainA(int N, int r, const SampleOptions& opt) {
  if (N < 7) throw std::invalid_argument("the counterexample needs N >= 7");
  if (r < 1 || (N + 1) % (2 * r) != 0)
    throw std::invalid_argument("h = (N+1)/(2r) must be an integer (N = " + std::to_string(N) + ", r = " +
                                std::to_string(r) + ")");
  CounterexampleDossier d;
  d.N = N;
  d.r = r;
  d.h = (N + 1) / (2 * r);
  if (d.h < 2) throw std::invalid_argument("h = (N+1)/(2r) must be at least 2");

  const auto gamma = make_rnc(N);
  d.nondefective = secant_dim(gamma, d.h * r, opt);
  if (d.nondefective.verdict == Verdict::defective_probable)
    d.failures.push_back("sec_" + std::to_string(d.h * r) + " of the curve is defective");

  d.projection = rnc_tangential_projection(N, r * (d.h - 1), opt.seed);
  const int target = N - 2 * r * (d.h - 1);
  if (!d.projection.birational) d.failures.push_back("tangential projection is not birational");
  if (d.projection.span_dim != target)
    d.failures.push_back("projected curve spans P^" + std::to_string(d.projection.span_dim) + ", expected P^" +
                         std::to_string(target));
  if (!d.projection.rational_normal) d.failures.push_back("projected curve is not of minimal degree");

  d.projected_fills = secant_dim(make_rnc(target), r, opt);
  if (d.projected_fills.verdict != Verdict::fills_ambient)
    d.failures.push_back("sec_r of the projected curve does not fill its span");

  d.sec_r_dim = secant_dim(gamma, r, opt).secant_dim;
  d.dimension_identity = d.h * d.sec_r_dim + d.h - 1 == N;
  if (!d.dimension_identity) d.failures.push_back("h dim sec_r + h - 1 != N");

  d.decompositions = secnoid_witnesses(gamma, r, d.h, opt.seed);
  if (d.decompositions.witnesses.size() < 2) d.failures.push_back("fewer than two decompositions");
  if (!d.decompositions.all_verified) d.failures.push_back("a witness failed its incidence check");
  if (!d.decompositions.all_distinct) d.failures.push_back("witness planes are not pairwise distinct");

  d.verified = d.failures.empty();
  return d;
}

}  // namespace terracini

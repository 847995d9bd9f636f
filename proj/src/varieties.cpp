#include "terracini/varieties.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>

namespace terracini {

namespace {

template <class Span>
using scalar_of = std::remove_cv_t<typename Span::element_type>;

// Determinant of the square submatrix on `cols` (rows 0..cols.size()-1) by
// Laplace expansion along the first row. Sizes here stay below 6.
template <class T>
T minor_det(const std::vector<std::vector<T>>& a, std::size_t row, const std::vector<std::size_t>& cols) {
  if (cols.size() == 1) return a[row][cols[0]];
  T acc = constant_like(a[row][cols[0]], 0);
  std::vector<std::size_t> rest(cols.size() - 1);
  for (std::size_t k = 0; k < cols.size(); ++k) {
    for (std::size_t j = 0, t = 0; j < cols.size(); ++j)
      if (j != k) rest[t++] = cols[j];
    T term = a[row][cols[k]] * minor_det(a, row + 1, rest);
    acc = (k % 2 == 0) ? acc + term : acc - term;
  }
  return acc;
}

std::vector<std::vector<std::size_t>> subsets(std::size_t n, std::size_t k) {
  std::vector<std::vector<std::size_t>> out;
  std::vector<std::size_t> idx(k);
  std::iota(idx.begin(), idx.end(), 0);
  if (k > n) return out;
  for (;;) {
    out.push_back(idx);
    std::size_t i = k;
    while (i > 0 && idx[i - 1] == n - k + i - 1) --i;
    if (i == 0) return out;
    ++idx[i - 1];
    for (std::size_t j = i; j < k; ++j) idx[j] = idx[j - 1] + 1;
  }
}

std::string join_ints(const std::vector<int>& v) {
  std::string s;
  for (std::size_t i = 0; i < v.size(); ++i) s += (i ? "," : "") + std::to_string(v[i]);
  return s;
}

// Rank of [φ | ∂φ] at a few random points; the maximum is the generic value.
std::size_t probe_cone_rank(const ParamVariety& x, std::uint64_t seed, int trials = 2) {
  Sampler s(seed);
  std::size_t best = 0;
  for (int t = 0; t < trials; ++t) {
    auto ints = sample_integers(s, x.num_params);
    auto u = to_field(ints, kPrimeA);
    try {
      best = std::max(best, rank(cone_tangent(x, u)));
    } catch (const EvaluationError&) {
    }
  }
  return best;
}

void check_nondegenerate(const ParamVariety& x) {
  const auto r = probe_cone_rank(x, derive_seed(kDefaultSeed, 0xc0de));
  if (r != static_cast<std::size_t>(x.n) + 1)
    throw std::logic_error(x.id + ": cone tangent rank " + std::to_string(r) + " at a random point, expected " +
                           std::to_string(x.n + 1));
}

}  // namespace

std::string to_string(VarietyKind k) {
  switch (k) {
    case VarietyKind::toric: return "toric";
    case VarietyKind::minor_based: return "minor-based";
    case VarietyKind::moment: return "moment";
    case VarietyKind::power: return "power";
    case VarietyKind::secant_of: return "secant-of";
  }
  return "unknown";
}

BigInt binomial(std::int64_t n, std::int64_t k) {
  if (k < 0 || n < 0 || k > n) return 0;
  BigInt r = 1;
  for (std::int64_t i = 1; i <= k; ++i) r = r * (n - k + i) / i;
  return r;
}

std::vector<FpJet> jet_eval(const ParamVariety& x, std::span<const Fp> u) {
  std::vector<FpJet> vars;
  vars.reserve(u.size());
  for (std::size_t i = 0; i < u.size(); ++i) vars.push_back(FpJet::variable(u[i], i, u.size()));
  return x.eval(std::span<const FpJet>(vars));
}

std::vector<FpJet> jet_eval(const ParamVariety& x, std::span<const Fp> u,
                            const std::vector<std::vector<Fp>>& directions) {
  std::vector<FpJet> vars;
  vars.reserve(u.size());
  for (std::size_t i = 0; i < u.size(); ++i) {
    std::vector<Fp> comp;
    comp.reserve(directions.size());
    for (const auto& d : directions) {
      if (d.size() != u.size()) throw std::invalid_argument("direction length differs from parameter count");
      comp.push_back(d[i]);
    }
    vars.push_back(FpJet::seeded(u[i], comp));
  }
  return x.eval(std::span<const FpJet>(vars));
}

ModMatrix cone_tangent(std::span<const FpJet> jets) {
  ModMatrix m;
  if (jets.empty()) return m;
  std::vector<Fp> row(jets.size());
  for (std::size_t k = 0; k < jets.size(); ++k) row[k] = jets[k].value();
  m.append_row(row);
  for (std::size_t i = 0; i < jets[0].vars(); ++i) {
    for (std::size_t k = 0; k < jets.size(); ++k) row[k] = jets[k].grad(i);
    m.append_row(row);
  }
  return m;
}

ModMatrix cone_tangent(const ParamVariety& x, std::span<const Fp> u) {
  auto jets = jet_eval(x, u);
  return cone_tangent(jets);
}

std::vector<std::uint64_t> sample_integers(Sampler& s, std::size_t count) {
  std::vector<std::uint64_t> out(count);
  for (auto& v : out) v = s.nonzero_below(std::uint64_t{1} << 60);
  return out;
}

std::vector<Fp> to_field(std::span<const std::uint64_t> ints, std::uint64_t p) {
  std::vector<Fp> out;
  out.reserve(ints.size());
  for (auto v : ints) out.push_back(Fp::from_residue(v, p));
  return out;
}

std::vector<std::vector<int>> homogeneous_monomials(int vars, int k) {
  std::vector<std::vector<int>> out;
  std::vector<int> cur(static_cast<std::size_t>(vars), 0);
  auto rec = [&](auto&& self, int pos, int left) -> void {
    if (pos == vars - 1) {
      cur[static_cast<std::size_t>(pos)] = left;
      out.push_back(cur);
      return;
    }
    for (int e = left; e >= 0; --e) {
      cur[static_cast<std::size_t>(pos)] = e;
      self(self, pos + 1, left - e);
    }
  };
  rec(rec, 0, k);
  return out;
}

BigInt flag_span_size(const std::vector<int>& ks, int n) {
  // partition λ_j = #{i : k_i + 1 >= j}, j = 1..n+1; Weyl dimension formula
  std::vector<std::int64_t> lambda(static_cast<std::size_t>(n) + 1, 0);
  for (std::size_t j = 0; j < lambda.size(); ++j)
    for (int k : ks)
      if (k + 1 >= static_cast<int>(j) + 1) ++lambda[j];
  Rational dim = 1;
  for (std::size_t i = 0; i < lambda.size(); ++i)
    for (std::size_t j = i + 1; j < lambda.size(); ++j)
      dim *= Rational(lambda[i] - lambda[j] + static_cast<std::int64_t>(j - i), static_cast<std::int64_t>(j - i));
  return numerator(dim);
}

// ---------------------------------------------------------------------------

ParamVariety make_toric(const LatticePolytope& p, std::string id) {
  if (p.rank != p.dim)
    throw std::invalid_argument("lattice points span rank " + std::to_string(p.rank) + " inside Z^" +
                                std::to_string(p.dim) + ": the toric map would be degenerate");
  if (p.rank < 1) throw std::invalid_argument("toric variety needs at least two lattice points");
  if (id.empty()) {
    std::ostringstream os;
    os << "toric:";
    for (std::size_t i = 0; i < p.points.size(); ++i) {
      if (i) os << ';';
      for (std::size_t k = 0; k < p.points[i].size(); ++k) os << (k ? "," : "") << p.points[i][k];
    }
    id = os.str();
  }
  auto exps = p.points;
  ParamVariety x;
  x.id = std::move(id);
  x.kind = VarietyKind::toric;
  x.n = p.rank;
  x.N = static_cast<int>(p.size()) - 1;
  x.num_params = static_cast<std::size_t>(p.dim);
  x.num_coords = p.size();
  x.chart = "torus; homogeneous coordinates are the monomials";
  x.polytope = p;
  x.model = make_model([exps](auto u) {
    using T = scalar_of<decltype(u)>;
    std::vector<T> out;
    out.reserve(exps.size());
    for (const auto& e : exps) {
      T v = constant_like(u[0], 1);
      for (std::size_t j = 0; j < e.size(); ++j)
        if (e[j] != 0) v = v * ipow(u[j], e[j]);
      out.push_back(std::move(v));
    }
    return out;
  });
  check_nondegenerate(x);
  return x;
}

ParamVariety make_segre_veronese(const std::vector<int>& ns, const std::vector<int>& ds) {
  if (ns.empty() || ns.size() != ds.size())
    throw std::invalid_argument("Segre-Veronese needs matching non-empty dimension and degree lists");
  for (std::size_t i = 0; i < ns.size(); ++i)
    if (ns[i] < 1 || ds[i] < 1) throw std::invalid_argument("Segre-Veronese needs all n_i, d_i >= 1");
  LatticePolytope p = simplex_points(ns[0], ds[0]);
  for (std::size_t i = 1; i < ns.size(); ++i) p = product(p, simplex_points(ns[i], ds[i]));
  return make_toric(p, "sv:" + join_ints(ns) + ":" + join_ints(ds));
}

ParamVariety make_veronese(int n, int d) {
  auto x = make_segre_veronese({n}, {d});
  x.id = "veronese:" + std::to_string(n) + ":" + std::to_string(d);
  return x;
}

ParamVariety make_rnc(int degree) {
  if (degree < 1) throw std::invalid_argument("rational normal curve needs degree >= 1");
  auto x = make_toric(simplex_points(1, degree), "rnc:" + std::to_string(degree));
  return x;
}

ParamVariety make_grassmannian(int r, int n) {
  if (r <= 0 || r >= n) throw std::invalid_argument("Grassmannian G(r,n) needs 0 < r < n");
  auto x = make_flag({r}, n);
  x.id = "grass:" + std::to_string(r) + ":" + std::to_string(n);
  return x;
}

ParamVariety make_flag(const std::vector<int>& ks, int n) {
  if (ks.empty()) throw std::invalid_argument("flag needs at least one subspace dimension");
  for (std::size_t i = 0; i < ks.size(); ++i) {
    if (ks[i] < 0 || ks[i] >= n) throw std::invalid_argument("flag dimensions must satisfy 0 <= k_i < n");
    if (i > 0 && ks[i] < ks[i - 1]) throw std::invalid_argument("flag dimensions must be non-decreasing");
  }
  const auto rows = static_cast<std::size_t>(ks.back()) + 1;
  const auto cols = static_cast<std::size_t>(n) + 1;
  // entry (i, c): -2 → constant 1, -1 → constant 0, otherwise parameter index
  std::vector<std::vector<long>> layout(rows, std::vector<long>(cols, -1));
  long next = 0;
  for (std::size_t i = 0; i < rows; ++i) {
    std::size_t block_end = 0;  // k of the block that row i belongs to
    for (int k : ks)
      if (i <= static_cast<std::size_t>(k)) {
        block_end = static_cast<std::size_t>(k);
        break;
      }
    for (std::size_t c = 0; c < cols; ++c) {
      if (c == i) layout[i][c] = -2;
      else if (c > block_end) layout[i][c] = next++;
    }
  }
  std::vector<std::vector<std::vector<std::size_t>>> minors;
  for (int k : ks) minors.push_back(subsets(cols, static_cast<std::size_t>(k) + 1));

  ParamVariety x;
  x.id = "flag:" + join_ints(ks) + ":" + std::to_string(n);
  x.kind = VarietyKind::minor_based;
  x.num_params = static_cast<std::size_t>(next);
  x.n = static_cast<int>(next);
  std::size_t coords = 1;
  for (const auto& m : minors) coords *= m.size();
  x.num_coords = coords;
  x.N = static_cast<int>(flag_span_size(ks, n)) - 1;
  x.chart = "chart matrix with identity pivots; Plücker minors of its leading row blocks, Segre product";
  x.model = make_model([layout, minors, rows, cols](auto u) {
    using T = scalar_of<decltype(u)>;
    const T zero = constant_like(u[0], 0), one = constant_like(u[0], 1);
    std::vector<std::vector<T>> a(rows, std::vector<T>(cols, zero));
    for (std::size_t i = 0; i < rows; ++i)
      for (std::size_t c = 0; c < cols; ++c) {
        const long l = layout[i][c];
        if (l == -2) a[i][c] = one;
        else if (l >= 0) a[i][c] = u[static_cast<std::size_t>(l)];
      }
    std::vector<T> out{one};
    for (std::size_t b = 0; b < minors.size(); ++b) {
      std::vector<T> pl;
      pl.reserve(minors[b].size());
      for (const auto& colset : minors[b]) pl.push_back(minor_det(a, 0, colset));
      std::vector<T> next_out;
      next_out.reserve(out.size() * pl.size());
      for (const auto& o : out)
        for (const auto& q : pl) next_out.push_back(o * q);
      out = std::move(next_out);
    }
    return out;
  });
  check_nondegenerate(x);
  return x;
}

ParamVariety make_lagrangian(int n) {
  if (n < 1) throw std::invalid_argument("Lagrangian Grassmannian needs n >= 1");
  const auto sn = static_cast<std::size_t>(n);
  std::vector<std::vector<std::size_t>> sym(sn, std::vector<std::size_t>(sn));
  std::size_t next = 0;
  for (std::size_t i = 0; i < sn; ++i)
    for (std::size_t j = i; j < sn; ++j) sym[i][j] = sym[j][i] = next++;
  auto colsets = subsets(2 * sn, sn);

  ParamVariety x;
  x.id = "lg:" + std::to_string(n);
  x.kind = VarietyKind::minor_based;
  x.num_params = next;
  x.n = static_cast<int>(next);
  x.num_coords = colsets.size();
  x.N = static_cast<int>(binomial(2 * n, n) - binomial(2 * n, n - 2)) - 1;
  x.chart = "chart [I | S] with S symmetric";
  x.model = make_model([sym, colsets, sn](auto u) {
    using T = scalar_of<decltype(u)>;
    const T zero = constant_like(u[0], 0), one = constant_like(u[0], 1);
    std::vector<std::vector<T>> a(sn, std::vector<T>(2 * sn, zero));
    for (std::size_t i = 0; i < sn; ++i) {
      a[i][i] = one;
      for (std::size_t j = 0; j < sn; ++j) a[i][sn + j] = u[sym[i][j]];
    }
    std::vector<T> out;
    out.reserve(colsets.size());
    for (const auto& cs : colsets) out.push_back(minor_det(a, 0, cs));
    return out;
  });
  check_nondegenerate(x);
  return x;
}

ParamVariety make_moment_surface(int d) {
  if (d < 3) throw std::invalid_argument("moment surface needs d >= 3");
  ParamVariety x;
  x.id = "moments:" + std::to_string(d);
  x.kind = VarietyKind::moment;
  x.n = 2;
  x.N = d;
  x.num_params = 2;
  x.num_coords = static_cast<std::size_t>(d) + 1;
  x.chart = "parameters (mu, sigma^2); m_0 = 1";
  x.model = make_model([d](auto u) {
    using T = scalar_of<decltype(u)>;
    const T& mu = u[0];
    const T& s = u[1];
    std::vector<T> m;
    m.reserve(static_cast<std::size_t>(d) + 1);
    m.push_back(constant_like(mu, 1));
    m.push_back(mu);
    for (int k = 2; k <= d; ++k)
      m.push_back(mu * m[static_cast<std::size_t>(k - 1)] +
                  constant_like(mu, k - 1) * s * m[static_cast<std::size_t>(k - 2)]);
    return m;
  });
  check_nondegenerate(x);
  return x;
}

ParamVariety make_powers(int a, int d, int n) {
  if (a < 1 || d < 1 || n < 1) throw std::invalid_argument("powers of forms need a, d, n >= 1");
  const int vars = n + 1;
  auto base = homogeneous_monomials(vars, a);
  // mult[s][i][j]: index in degree (s+2)a of monomial i (degree (s+1)a) times base monomial j
  std::vector<std::vector<std::vector<std::size_t>>> mult;
  for (int s = 1; s < d; ++s) {
    auto from = homogeneous_monomials(vars, s * a);
    auto to = homogeneous_monomials(vars, (s + 1) * a);
    std::vector<std::vector<std::size_t>> table(from.size(), std::vector<std::size_t>(base.size()));
    for (std::size_t i = 0; i < from.size(); ++i)
      for (std::size_t j = 0; j < base.size(); ++j) {
        std::vector<int> e(from[i]);
        for (std::size_t k = 0; k < e.size(); ++k) e[k] += base[j][k];
        // descending lexicographic order
        auto it = std::lower_bound(to.begin(), to.end(), e, std::greater<>());
        table[i][j] = static_cast<std::size_t>(it - to.begin());
      }
    mult.push_back(std::move(table));
  }
  const auto out_size = homogeneous_monomials(vars, a * d).size();

  ParamVariety x;
  x.id = "powers:" + std::to_string(a) + ":" + std::to_string(d) + ":" + std::to_string(n);
  x.kind = VarietyKind::power;
  x.num_params = base.size();
  x.n = static_cast<int>(base.size()) - 1;
  x.num_coords = out_size;
  x.N = static_cast<int>(out_size) - 1;
  x.chart = "homogeneous coefficients of g";
  x.model = make_model([mult, out_size](auto u) {
    using T = scalar_of<decltype(u)>;
    std::vector<T> cur(u.begin(), u.end());
    for (const auto& table : mult) {
      std::size_t next_size = 0;
      for (const auto& row : table)
        for (auto t : row) next_size = std::max(next_size, t + 1);
      std::vector<T> next(next_size, constant_like(u[0], 0));
      for (std::size_t i = 0; i < table.size(); ++i)
        for (std::size_t j = 0; j < u.size(); ++j) next[table[i][j]] = next[table[i][j]] + cur[i] * u[j];
      cur = std::move(next);
    }
    if (cur.size() != out_size) throw std::logic_error("power expansion size mismatch");
    return cur;
  });
  check_nondegenerate(x);
  return x;
}

ParamVariety make_secant_power(const ParamVariety& y, int r, std::uint64_t seed) {
  if (r < 1) throw std::invalid_argument("secant order must be >= 1");
  const std::string id = "secant:" + y.id + ":" + std::to_string(r);
  if (r == 1) {
    ParamVariety x = y;
    x.id = id;
    return x;
  }
  const auto my = y.num_params;
  const auto rr = static_cast<std::size_t>(r);
  auto base = y.model;
  ParamVariety x;
  x.id = id;
  x.kind = VarietyKind::secant_of;
  x.N = y.N;
  x.num_params = rr * my + rr - 1;
  x.num_coords = y.num_coords;
  x.chart = "sum of lambda_i phi(u^i) with lambda_r = 1";
  x.model = make_model([base, my, rr](auto u) {
    using T = scalar_of<decltype(u)>;
    std::vector<T> acc = base->eval(u.subspan((rr - 1) * my, my));
    for (std::size_t i = 0; i + 1 < rr; ++i) {
      auto phi = base->eval(u.subspan(i * my, my));
      const T& lambda = u[rr * my + i];
      for (std::size_t k = 0; k < acc.size(); ++k) acc[k] = acc[k] + lambda * phi[k];
    }
    return acc;
  });
  SecantInfo info;
  info.base_id = y.id;
  info.base = std::make_shared<const ParamVariety>(y);
  info.base_n = y.n;
  info.base_params = my;
  info.r = r;
  info.fills = r * y.n + r - 1 > y.N;
  x.secant = info;
  x.n = static_cast<int>(probe_cone_rank(x, derive_seed(seed, 0x5ec), 3)) - 1;
  return x;
}

}  // namespace terracini

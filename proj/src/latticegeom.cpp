#include "terracini/latticegeom.hpp"

#include <algorithm>
#include <fstream>
#include <set>
#include <sstream>

namespace terracini {

namespace {

std::vector<std::vector<std::int64_t>> differences(const std::vector<LatticePoint>& pts) {
  std::vector<std::vector<std::int64_t>> rows;
  for (std::size_t i = 1; i < pts.size(); ++i) {
    std::vector<std::int64_t> d(pts[i].size());
    for (std::size_t k = 0; k < d.size(); ++k) d[k] = pts[i][k] - pts[0][k];
    rows.push_back(std::move(d));
  }
  return rows;
}

// Visit all k-subsets of {0..n-1} in lexicographic order.
template <class F>
void for_each_subset(std::size_t n, std::size_t k, F&& f) {
  if (k > n) return;
  std::vector<std::size_t> idx(k);
  for (std::size_t i = 0; i < k; ++i) idx[i] = i;
  for (;;) {
    f(idx);
    std::size_t i = k;
    while (i > 0 && idx[i - 1] == n - k + i - 1) --i;
    if (i == 0) return;
    ++idx[i - 1];
    for (std::size_t j = i; j < k; ++j) idx[j] = idx[j - 1] + 1;
  }
}

// Integer normal of the hyperplane through `base` spanned by the rows of
// `dirs` ((n-1) x n, full rank): signed maximal minors.
std::vector<BigInt> hyperplane_normal(const std::vector<std::vector<std::int64_t>>& dirs, std::size_t n) {
  std::vector<BigInt> normal(n);
  for (std::size_t skip = 0; skip < n; ++skip) {
    // determinant of dirs with column `skip` removed, by Bareiss
    const std::size_t m = n - 1;
    std::vector<std::vector<BigInt>> a(m, std::vector<BigInt>(m));
    for (std::size_t r = 0; r < m; ++r)
      for (std::size_t c = 0, cc = 0; c < n; ++c)
        if (c != skip) a[r][cc++] = dirs[r][c];
    BigInt prev = 1;
    int sign = 1;
    BigInt det = 0;
    bool singular = false;
    for (std::size_t k = 0; k < m; ++k) {
      std::size_t piv = k;
      while (piv < m && a[piv][k] == 0) ++piv;
      if (piv == m) {
        singular = true;
        break;
      }
      if (piv != k) {
        std::swap(a[k], a[piv]);
        sign = -sign;
      }
      for (std::size_t i = k + 1; i < m; ++i) {
        for (std::size_t j = k + 1; j < m; ++j) a[i][j] = (a[k][k] * a[i][j] - a[i][k] * a[k][j]) / prev;
        a[i][k] = 0;
      }
      prev = a[k][k];
    }
    det = singular ? BigInt(0) : (m == 0 ? BigInt(1) : prev * sign);
    normal[skip] = (skip % 2 == 0) ? det : BigInt(-det);
  }
  return normal;
}

}  // namespace

int affine_rank(const std::vector<LatticePoint>& points) {
  if (points.size() < 2) return 0;
  auto rows = differences(points);
  return static_cast<int>(rank(to_int_matrix(rows, points[0].size())));
}

LatticePolytope make_polytope(std::vector<LatticePoint> points) {
  if (points.empty()) throw std::invalid_argument("polytope has no lattice points");
  const std::size_t dim = points[0].size();
  if (dim == 0) throw std::invalid_argument("lattice points need at least one coordinate");
  std::set<LatticePoint> seen;
  for (const auto& p : points) {
    if (p.size() != dim) throw std::invalid_argument("lattice points of different dimensions");
    if (!seen.insert(p).second) throw std::invalid_argument("repeated lattice point");
  }
  LatticePolytope out;
  out.dim = static_cast<int>(dim);
  out.rank = affine_rank(points);
  out.points = std::move(points);
  return out;
}

LatticePolytope parse_polytope(std::istream& in) {
  std::vector<LatticePoint> pts;
  std::string line;
  int lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    if (auto hash = line.find('#'); hash != std::string::npos) line.erase(hash);
    std::istringstream ls(line);
    LatticePoint p;
    std::string tok;
    while (ls >> tok) {
      std::size_t used = 0;
      long long v = 0;
      try {
        v = std::stoll(tok, &used);
      } catch (const std::exception&) {
        used = 0;
      }
      if (used != tok.size())
        throw std::invalid_argument("polytope file line " + std::to_string(lineno) + ": not an integer: " + tok);
      p.push_back(v);
    }
    if (!p.empty()) pts.push_back(std::move(p));
  }
  return make_polytope(std::move(pts));
}

LatticePolytope read_polytope_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::invalid_argument("cannot open polytope file: " + path);
  return parse_polytope(in);
}

LatticePolytope simplex_points(int n, int d) {
  if (n < 1 || d < 0) throw std::invalid_argument("simplex needs n >= 1, d >= 0");
  std::vector<LatticePoint> pts;
  LatticePoint cur(static_cast<std::size_t>(n), 0);
  // enumerate exponent vectors with sum <= d, graded lexicographic by recursion
  auto rec = [&](auto&& self, int pos, int left) -> void {
    if (pos == n) {
      pts.push_back(cur);
      return;
    }
    for (int e = 0; e <= left; ++e) {
      cur[static_cast<std::size_t>(pos)] = e;
      self(self, pos + 1, left - e);
    }
    cur[static_cast<std::size_t>(pos)] = 0;
  };
  rec(rec, 0, d);
  return make_polytope(std::move(pts));
}

LatticePolytope product(const LatticePolytope& a, const LatticePolytope& b) {
  std::vector<LatticePoint> pts;
  for (const auto& p : a.points)
    for (const auto& q : b.points) {
      LatticePoint r = p;
      r.insert(r.end(), q.begin(), q.end());
      pts.push_back(std::move(r));
    }
  return make_polytope(std::move(pts));
}

std::vector<LatticePoint> bset(const LatticePolytope& p) {
  const auto n = static_cast<std::size_t>(p.rank);
  std::set<LatticePoint> sums;
  for_each_subset(p.size(), n + 1, [&](const std::vector<std::size_t>& idx) {
    std::vector<LatticePoint> sub;
    for (auto i : idx) sub.push_back(p.points[i]);
    if (affine_rank(sub) != p.rank) return;
    LatticePoint s(static_cast<std::size_t>(p.dim), 0);
    for (const auto& q : sub)
      for (std::size_t k = 0; k < s.size(); ++k) s[k] += q[k];
    sums.insert(std::move(s));
  });
  return {sums.begin(), sums.end()};
}

MPrimeRank mprime_rank(const LatticePolytope& p) {
  auto b = bset(p);
  if (b.empty()) throw std::invalid_argument("no affinely spanning subset: B is empty");
  MPrimeRank out;
  out.b_size = b.size();
  // pairwise differences span the same lattice as differences to b[0]
  auto rows = differences(b);
  out.rho = rows.empty() ? 0 : static_cast<int>(smith_rank(to_int_matrix(rows, b[0].size())).rank);
  out.quotient_rank = p.rank - out.rho;
  return out;
}

int max_hyperplane_points(const LatticePolytope& p) {
  const auto n = static_cast<std::size_t>(p.rank);
  if (p.size() < n) throw std::invalid_argument("too few lattice points for a hyperplane");
  if (n == 0) return 0;
  if (p.rank != p.dim) throw std::invalid_argument("hyperplane sections need a full-dimensional point set");
  if (n == 1) return 1;
  int best = 0;
  for_each_subset(p.size(), n, [&](const std::vector<std::size_t>& idx) {
    std::vector<LatticePoint> sub;
    for (auto i : idx) sub.push_back(p.points[i]);
    if (affine_rank(sub) != p.rank - 1) return;
    auto normal = hyperplane_normal(differences(sub), n);
    int count = 0;
    for (const auto& q : p.points) {
      BigInt s = 0;
      for (std::size_t k = 0; k < n; ++k) s += normal[k] * (q[k] - sub[0][k]);
      if (s == 0) ++count;
    }
    best = std::max(best, count);
  });
  return best;
}

ToricBound toric_bound(const LatticePolytope& p) {
  ToricBound out;
  out.lattice_points = p.size();
  out.rank = p.rank;
  out.max_hyperplane = max_hyperplane_points(p);
  out.bound = (static_cast<std::int64_t>(p.size()) - out.max_hyperplane) / (p.rank + 1);
  return out;
}

}  // namespace terracini

#include <numeric>

#include "doctest.h"
#include "terracini/bounds.hpp"
#include "terracini/terracini.hpp"
#include "terracini/varieties.hpp"

using namespace terracini;

namespace {

// Independent oracle: fractions over 128-bit integers.
struct Frac {
  __int128 num = 0, den = 1;
  Frac(__int128 n = 0, __int128 d = 1) : num(n), den(d) { norm(); }
  void norm() {
    if (den < 0) num = -num, den = -den;
    __int128 a = num < 0 ? -num : num, b = den;
    while (b) {
      auto t = a % b;
      a = b;
      b = t;
    }
    if (a > 1) num /= a, den /= a;
  }
  friend Frac operator+(Frac a, Frac b) { return {a.num * b.den + b.num * a.den, a.den * b.den}; }
  friend Frac operator-(Frac a, Frac b) { return {a.num * b.den - b.num * a.den, a.den * b.den}; }
  friend Frac operator*(Frac a, Frac b) { return {a.num * b.num, a.den * b.den}; }
  friend Frac operator/(Frac a, Frac b) { return {a.num * b.den, a.den * b.num}; }
  std::int64_t floor() const {
    auto q = num / den;
    if (num % den != 0 && num < 0) --q;
    return static_cast<std::int64_t>(q);
  }
};

__int128 choose(int n, int k) {
  if (k < 0 || k > n) return 0;
  __int128 r = 1;
  for (int i = 1; i <= k; ++i) r = r * (n - k + i) / i;
  return r;
}

std::int64_t oracle_sv(const std::vector<int>& n, const std::vector<int>& d) {
  __int128 prod = 1;
  int sum = 0;
  for (std::size_t i = 0; i < n.size(); ++i) prod *= choose(n[i] + d[i], d[i]), sum += n[i];
  std::int64_t best = -1;
  // argmax of n_j / d_j, every maximizer
  Frac mx(n[0], d[0]);
  for (std::size_t j = 1; j < n.size(); ++j)
    if ((Frac(n[j], d[j]) - mx).num > 0) mx = Frac(n[j], d[j]);
  for (std::size_t j = 0; j < n.size(); ++j)
    if ((Frac(n[j], d[j]) - mx).num == 0)
      best = std::max(best, (Frac(d[j], n[j] + d[j]) * Frac(1, sum + 1) * Frac(prod)).floor());
  return best;
}

std::int64_t oracle_bsv(const std::vector<int>& d) {
  __int128 p = 1;
  for (int x : d) p *= x + 1;
  return Frac(p, static_cast<__int128>(d.size()) + 1).floor();
}

std::int64_t oracle_g2n(int n) {
  return (Frac(n * n, 18) - Frac(20 * n, 27) + Frac(287, 81)).floor() + Frac(6 * n - 13, 9).floor();
}

std::int64_t as_int(const BigInt& z) { return z.convert_to<std::int64_t>(); }

}  // namespace

TEST_CASE("Segre-Veronese bound") {
  CHECK(bound_segre_veronese({1, 1}, {2, 2}).floor_value == 2);
  CHECK(bound_segre_veronese({1, 1, 1}, {2, 2, 2}).floor_value == 4);
  CHECK(bound_segre_veronese({2}, {6}).floor_value == 7);
  CHECK(bound_segre_veronese({1, 1}, {2, 2}).max_h == 1);
  CHECK(bound_segre_veronese({1, 1, 1}, {2, 2, 2}).max_h == 3);
  CHECK(bound_segre_veronese({2}, {6}).max_h == 6);
}

TEST_CASE("Segre-Veronese bound against the oracle") {
  for (int a = 1; a <= 3; ++a)
    for (int b = 1; b <= 3; ++b)
      for (int da = 1; da <= 4; ++da)
        for (int db = 1; db <= 4; ++db) {
          std::vector<int> n{a, b}, d{da, db};
          CHECK(as_int(bound_segre_veronese(n, d).floor_value) == oracle_sv(n, d));
        }
  CHECK(as_int(bound_segre_veronese({1, 2, 1}, {3, 2, 5}).floor_value) == oracle_sv({1, 2, 1}, {3, 2, 5}));
}

TEST_CASE("binary Segre-Veronese bound and exceptions") {
  auto a = bound_binary_sv({2, 2, 2});
  CHECK(a.floor_value == 6);
  CHECK(a.max_h == 5);
  CHECK(std::find(a.excluded_h.begin(), a.excluded_h.end(), 7) != a.excluded_h.end());
  auto b = bound_binary_sv({3, 3, 3});
  CHECK(b.floor_value == 16);
  CHECK(b.value == 16);
  auto c = bound_binary_sv({1, 1, 1, 1});
  CHECK(c.floor_value == 3);
  CHECK(c.max_h == 2);
  CHECK(std::find(c.excluded_h.begin(), c.excluded_h.end(), 3) != c.excluded_h.end());
  for (auto d : std::vector<std::vector<int>>{{2, 2, 2}, {3, 3, 3}, {1, 1, 1, 1}, {2, 5}, {4, 4, 1}})
    CHECK(as_int(bound_binary_sv(d).floor_value) == oracle_bsv(d));
}

TEST_CASE("exception table never certified") {
  // (2, 2a; 2a+1) and (1, 1, 2a; 2a+1) for a = 1..5
  for (int a = 1; a <= 5; ++a) {
    for (auto d : std::vector<std::vector<int>>{{2, 2 * a}, {1, 1, 2 * a}}) {
      auto b = bound_binary_sv(d);
      CAPTURE(a);
      CHECK(b.max_h < 2 * a + 1);
      auto m = table_matches(sv_defective_table(), d);
      CHECK(std::find(m.begin(), m.end(), 2 * a + 1) != m.end());
    }
  }
  CHECK(table_matches(sv_defective_table(), {2, 3}).empty());
  CHECK(table_matches(sv_defective_table(), {2, 2, 2}) == std::vector<int>{7});
}

TEST_CASE("table parsing") {
  auto rows = parse_table("# c\n2 2a ; 2a+1\n3 a-1 ; 4\n");
  REQUIRE(rows.size() == 2);
  CHECK(rows[0].tuple[1].coef == 2);
  CHECK(rows[0].h.constant == 1);
  CHECK(rows[1].tuple[1].constant == -1);
  CHECK(table_matches(rows, {3, 4}) == std::vector<int>{4});
  CHECK_THROWS(parse_table("2 2 2\n"));
  CHECK_THROWS(parse_table("2 x ; 3\n"));
  CHECK(grassmannian_defective_table().size() == 4);
  CHECK(grassmannian_excluded_table().size() == 1);
}

TEST_CASE("Grassmannian bounds") {
  auto g37 = bound_grassmannian(3, 7);
  CHECK(g37.floor_value == 4);
  CHECK(g37.value == Rational(70, 17));
  CHECK(std::find(g37.excluded_h.begin(), g37.excluded_h.end(), 3) != g37.excluded_h.end());
  CHECK(g37.max_h == 2);
  auto g26 = bound_grassmannian(2, 6);
  CHECK(g26.floor_value == 2);
  auto g28 = bound_grassmannian(2, 8);
  bool saw_power = false;
  for (const auto& p : g28.parts)
    if (p.floor_value == 3) saw_power = true;
  CHECK(saw_power);
  CHECK_FALSE(bound_grassmannian(1, 5).applicable);
  CHECK(as_int(bound_grassmannian(2, 10).floor_value) >=
        Frac(static_cast<__int128>(choose(11, 3)), 8 * 3 + 1).floor());
}

TEST_CASE("G(2,n) bound") {
  CHECK(bound_g2n(9).floor_value == 5);
  CHECK(bound_g2n(12).floor_value == 8);
  CHECK_FALSE(bound_g2n(8).applicable);
  for (int n = 9; n <= 40; ++n) CHECK(as_int(bound_g2n(n).floor_value) == oracle_g2n(n));
}

TEST_CASE("Lagrangian and spinor bounds") {
  CHECK(bound_lagrangian_spinor(7, Embedding::lg_pluecker).floor_value == 4);
  CHECK(bound_lagrangian_spinor(7, Embedding::lg_pluecker).max_h == 3);
  CHECK(bound_lagrangian_spinor(10, Embedding::spinor_minimal).floor_value == 3);
  auto s7 = bound_lagrangian_spinor(7, Embedding::spinor_minimal);
  CHECK(s7.max_h == 1);
  CHECK_FALSE(s7.notes.empty());
  CHECK(parse_embedding("lg") == Embedding::lg_pluecker);
  CHECK_THROWS(parse_embedding("bogus"));
  for (int n = 2; n <= 20; ++n) {
    CHECK(as_int(bound_lagrangian_spinor(n, Embedding::spinor_pluecker).parts.at(0).floor_value) == n / 2);
    CHECK(as_int(bound_lagrangian_spinor(n, Embedding::lg_pluecker).parts.at(0).floor_value) == (n + 1) / 2);
    CHECK(as_int(bound_lagrangian_spinor(n, Embedding::spinor_minimal).parts.at(0).floor_value) == (n + 2) / 4);
  }
}

TEST_CASE("moments and powers") {
  CHECK(bound_moments(11).floor_value == 4);
  CHECK(bound_moments(11).max_h == 3);
  for (int d = 3; d <= 30; ++d) CHECK(as_int(bound_moments(d).floor_value) == (d + 1) / 3);
  CHECK_FALSE(bound_moments(2).applicable);
  auto p = bound_powers(1, 2, 1);
  CHECK(p.value == Rational(-3, 2));
  CHECK(p.empty);
  CHECK(bound_powers(2, 2, 2).empty);
  CHECK_FALSE(p.strict);
  // non-strict: h <= value
  auto q = bound_powers(1, 6, 2);  // 28/3 - 4 = 16/3
  CHECK(q.value == Rational(16, 3));
  CHECK(q.max_h == 5);
}

TEST_CASE("toric bound") {
  auto b = bound_toric(simplex_points(2, 6));
  CHECK(b.floor_value == 7);
  CHECK(bound_toric(make_polytope({{0, 0}, {1, 0}, {0, 1}, {1, 1}})).empty);
}

TEST_CASE("bounds are consistent with secant dimensions") {
  struct Case {
    ParamVariety x;
    BoundResult b;
  };
  std::vector<Case> cases = {
      {make_segre_veronese({1, 1}, {2, 2}), bound_segre_veronese({1, 1}, {2, 2})},
      {make_segre_veronese({1, 1, 1}, {2, 2, 2}), bound_segre_veronese({1, 1, 1}, {2, 2, 2})},
      {make_veronese(2, 6), bound_segre_veronese({2}, {6})},
      {make_moment_surface(11), bound_moments(11)},
  };
  for (const auto& c : cases) {
    CAPTURE(c.x.id);
    for (std::int64_t h = 1; h <= c.b.max_h; ++h)
      CHECK(is_defective(c.x, static_cast<int>(h) + 1) != Verdict::defective_probable);
  }
}

TEST_CASE("Veronese bound and toric bound are both valid ranges") {
  for (int d = 3; d <= 6; ++d) {
    auto sv = bound_segre_veronese({2}, {d});
    auto tb = bound_toric(simplex_points(2, d));
    auto x = make_veronese(2, d);
    for (std::int64_t h = 1; h <= std::max(sv.max_h, tb.max_h); ++h)
      CHECK(is_defective(x, static_cast<int>(h) + 1) != Verdict::defective_probable);
  }
}

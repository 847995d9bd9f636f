#include "terracini/exactnum.hpp"

#include <algorithm>

namespace terracini {

namespace {

using u128 = unsigned __int128;

std::uint64_t mulmod(std::uint64_t a, std::uint64_t b, std::uint64_t p) {
  return static_cast<std::uint64_t>(static_cast<u128>(a) * b % p);
}

// Fraction-free Gaussian elimination; works in place on a copy.
std::size_t bareiss_rank(std::vector<std::vector<BigInt>> a, std::size_t cols) {
  const std::size_t rows = a.size();
  BigInt prev = 1;
  std::size_t r = 0;
  for (std::size_t c = 0; c < cols && r < rows; ++c) {
    std::size_t piv = r;
    while (piv < rows && a[piv][c] == 0) ++piv;
    if (piv == rows) continue;
    std::swap(a[r], a[piv]);
    for (std::size_t i = r + 1; i < rows; ++i) {
      for (std::size_t k = c + 1; k < cols; ++k) {
        a[i][k] = (a[r][c] * a[i][k] - a[i][c] * a[r][k]) / prev;
      }
      a[i][c] = 0;
    }
    prev = a[r][c];
    ++r;
  }
  return r;
}

}  // namespace

Fp::Fp(std::int64_t value, std::uint64_t modulus) : p_(modulus) {
  if (modulus < 2) throw std::invalid_argument("modulus must be a prime >= 2");
  if (value >= 0) {
    v_ = static_cast<std::uint64_t>(value) % modulus;
  } else {
    // -(INT64_MIN) overflows, so negate in unsigned arithmetic
    std::uint64_t mag = static_cast<std::uint64_t>(-(value + 1)) + 1;
    mag %= modulus;
    v_ = mag == 0 ? 0 : modulus - mag;
  }
}

Fp& Fp::operator+=(const Fp& o) {
  check(o);
  v_ += o.v_;
  if (v_ >= p_) v_ -= p_;
  return *this;
}

Fp& Fp::operator-=(const Fp& o) {
  check(o);
  v_ = v_ >= o.v_ ? v_ - o.v_ : v_ + (p_ - o.v_);
  return *this;
}

Fp& Fp::operator*=(const Fp& o) {
  check(o);
  v_ = mulmod(v_, o.v_, p_);
  return *this;
}

Fp Fp::pow(std::uint64_t e) const {
  std::uint64_t result = 1 % p_;
  std::uint64_t base = v_;
  while (e > 0) {
    if (e & 1) result = mulmod(result, base, p_);
    base = mulmod(base, base, p_);
    e >>= 1;
  }
  return from_residue(result, p_);
}

Fp Fp::inverse() const {
  if (v_ == 0) throw EvaluationError("inverse of zero in F_p");
  return pow(p_ - 2);
}

std::uint64_t common_modulus(const ModMatrix& m) {
  std::uint64_t p = 0;
  for (std::size_t r = 0; r < m.rows(); ++r) {
    for (const auto& x : m.row(r)) {
      if (x.modulus() == 0) throw FieldMismatch("matrix entry without a field descriptor");
      if (p == 0) p = x.modulus();
      if (x.modulus() != p) throw FieldMismatch("matrix mixes F_p descriptors");
    }
  }
  return p;
}

std::size_t rank(const ModMatrix& m) {
  if (m.rows() == 0 || m.cols() == 0) return 0;
  const std::uint64_t p = common_modulus(m);
  // raw residues: avoids per-operation descriptor checks in the hot loop
  std::vector<std::uint64_t> a;
  a.reserve(m.rows() * m.cols());
  for (std::size_t r = 0; r < m.rows(); ++r)
    for (const auto& x : m.row(r)) a.push_back(x.value());
  const std::size_t rows = m.rows(), cols = m.cols();
  auto at = [&](std::size_t r, std::size_t c) -> std::uint64_t& { return a[r * cols + c]; };
  std::size_t rk = 0;
  for (std::size_t c = 0; c < cols && rk < rows; ++c) {
    std::size_t piv = rk;
    while (piv < rows && at(piv, c) == 0) ++piv;
    if (piv == rows) continue;
    if (piv != rk)
      for (std::size_t k = c; k < cols; ++k) std::swap(at(rk, k), at(piv, k));
    const std::uint64_t inv = Fp::from_residue(at(rk, c), p).inverse().value();
    for (std::size_t k = c; k < cols; ++k) at(rk, k) = mulmod(at(rk, k), inv, p);
    for (std::size_t r = rk + 1; r < rows; ++r) {
      const std::uint64_t f = at(r, c);
      if (f == 0) continue;
      for (std::size_t k = c; k < cols; ++k) {
        const std::uint64_t sub = mulmod(f, at(rk, k), p);
        std::uint64_t& x = at(r, k);
        x = x >= sub ? x - sub : x + (p - sub);
      }
    }
    ++rk;
  }
  return rk;
}

std::size_t rank(const IntMatrix& m) {
  std::vector<std::vector<BigInt>> rows;
  for (std::size_t r = 0; r < m.rows(); ++r) rows.emplace_back(m.row(r).begin(), m.row(r).end());
  return bareiss_rank(std::move(rows), m.cols());
}

std::size_t rank(const RatMatrix& m) {
  std::vector<std::vector<BigInt>> rows;
  for (std::size_t r = 0; r < m.rows(); ++r) {
    BigInt l = 1;
    for (const auto& x : m.row(r)) l = boost::multiprecision::lcm(l, denominator(x));
    std::vector<BigInt> row;
    row.reserve(m.cols());
    for (const auto& x : m.row(r)) row.push_back(numerator(x) * (l / denominator(x)));
    rows.push_back(std::move(row));
  }
  return bareiss_rank(std::move(rows), m.cols());
}

SmithResult smith_rank(const IntMatrix& m) {
  std::vector<std::vector<BigInt>> a;
  for (std::size_t r = 0; r < m.rows(); ++r) a.emplace_back(m.row(r).begin(), m.row(r).end());
  const std::size_t rows = a.size(), cols = m.cols();
  SmithResult out;
  std::size_t t = 0;
  while (t < rows && t < cols) {
    // smallest nonzero |entry| in the trailing block becomes the pivot
    std::size_t pr = rows, pc = cols;
    for (std::size_t i = t; i < rows; ++i)
      for (std::size_t j = t; j < cols; ++j)
        if (a[i][j] != 0 && (pr == rows || abs(a[i][j]) < abs(a[pr][pc]))) {
          pr = i;
          pc = j;
        }
    if (pr == rows) break;
    std::swap(a[t], a[pr]);
    for (auto& row : a) std::swap(row[t], row[pc]);

    bool clean = true;
    for (std::size_t i = t + 1; i < rows; ++i) {
      BigInt q = a[i][t] / a[t][t];
      if (q != 0)
        for (std::size_t j = t; j < cols; ++j) a[i][j] -= q * a[t][j];
      if (a[i][t] != 0) clean = false;
    }
    for (std::size_t j = t + 1; j < cols; ++j) {
      BigInt q = a[t][j] / a[t][t];
      if (q != 0)
        for (std::size_t i = t; i < rows; ++i) a[i][j] -= q * a[i][t];
      if (a[t][j] != 0) clean = false;
    }
    if (!clean) continue;  // remainders are smaller; pick a new pivot

    // divisibility: fold any trailing entry not divisible by the pivot into row t
    bool divides = true;
    for (std::size_t i = t + 1; i < rows && divides; ++i)
      for (std::size_t j = t + 1; j < cols; ++j)
        if (a[i][j] % a[t][t] != 0) {
          for (std::size_t k = t; k < cols; ++k) a[t][k] += a[i][k];
          divides = false;
          break;
        }
    if (!divides) continue;
    out.divisors.push_back(abs(a[t][t]));
    ++t;
  }
  out.rank = out.divisors.size();
  return out;
}

IntMatrix to_int_matrix(const std::vector<std::vector<std::int64_t>>& rows, std::size_t cols) {
  IntMatrix m;
  for (const auto& r : rows) {
    if (r.size() != cols) throw std::invalid_argument("ragged integer matrix");
    std::vector<BigInt> row(r.begin(), r.end());
    m.append_row(row);
  }
  return m;
}

RatMatrix to_rational(const IntMatrix& m) {
  RatMatrix out;
  for (std::size_t r = 0; r < m.rows(); ++r) {
    std::vector<Rational> row;
    for (const auto& x : m.row(r)) row.emplace_back(x);
    out.append_row(row);
  }
  return out;
}

ModMatrix reduce_mod_prime(const RatMatrix& m, std::uint64_t p) {
  ModMatrix out;
  const BigInt bp = p;
  for (std::size_t r = 0; r < m.rows(); ++r) {
    std::vector<Fp> row;
    for (const auto& x : m.row(r)) {
      BigInt num = numerator(x) % bp;
      if (num < 0) num += bp;
      BigInt den = denominator(x) % bp;
      if (den == 0) throw EvaluationError("prime divides a denominator");
      row.push_back(Fp::from_residue(num.convert_to<std::uint64_t>(), p) /
                    Fp::from_residue(den.convert_to<std::uint64_t>(), p));
    }
    out.append_row(row);
  }
  return out;
}

std::uint64_t derive_seed(std::uint64_t seed, std::uint64_t salt) {
  std::uint64_t z = seed + 0x9e3779b97f4a7c15ULL * (salt + 1);
  z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
  z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
  return z ^ (z >> 31);
}

}  // namespace terracini

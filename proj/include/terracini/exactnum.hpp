#pragma once

// Exact scalars, second-order jets, dense matrices and integer lattice
// algebra. Everything downstream (Terracini ranks, Gauss maps, witnesses)
// is built on the types in this header.

#include <cstddef>
#include <cstdint>
#include <random>
#include <span>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include <boost/multiprecision/gmp.hpp>

namespace terracini {

// Expression templates off: generic evaluators rely on `a + b` having type T.
using BigInt = boost::multiprecision::number<boost::multiprecision::gmp_int, boost::multiprecision::et_off>;
using Rational = boost::multiprecision::number<boost::multiprecision::gmp_rational, boost::multiprecision::et_off>;

/// Raised when scalars from different fields meet in one operation.
class FieldMismatch : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// Raised when a parametrization is evaluated outside its chart (a zero
/// denominator, a Laurent monomial at a zero coordinate, ...).
class EvaluationError : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

inline constexpr std::uint64_t kPrimeA = 2305843009213693951ULL;  // 2^61 - 1
inline constexpr std::uint64_t kPrimeB = 4611686018427387847ULL;  // 2^62 - 57
inline constexpr std::uint64_t kDefaultSeed = 0x7e77ac1c1ULL;

inline std::vector<std::uint64_t> default_primes() { return {kPrimeA, kPrimeB}; }

// ---------------------------------------------------------------------------
// Prime field element. The modulus travels with the value so that a matrix
// mixing two fields is detected instead of silently producing garbage.
// ---------------------------------------------------------------------------
class Fp {
 public:
  Fp() = default;
  Fp(std::int64_t value, std::uint64_t modulus);

  static Fp from_residue(std::uint64_t residue, std::uint64_t modulus) {
    Fp r;
    r.v_ = residue % modulus;
    r.p_ = modulus;
    return r;
  }

  std::uint64_t value() const { return v_; }
  std::uint64_t modulus() const { return p_; }
  bool is_zero() const { return v_ == 0; }

  Fp inverse() const;
  Fp pow(std::uint64_t e) const;

  Fp& operator+=(const Fp& o);
  Fp& operator-=(const Fp& o);
  Fp& operator*=(const Fp& o);
  Fp& operator/=(const Fp& o) { return *this *= o.inverse(); }

  friend Fp operator+(Fp a, const Fp& b) { return a += b; }
  friend Fp operator-(Fp a, const Fp& b) { return a -= b; }
  friend Fp operator*(Fp a, const Fp& b) { return a *= b; }
  friend Fp operator/(Fp a, const Fp& b) { return a /= b; }
  Fp operator-() const { return Fp::from_residue(v_ == 0 ? 0 : p_ - v_, p_); }

  friend bool operator==(const Fp& a, const Fp& b) { return a.v_ == b.v_ && a.p_ == b.p_; }

 private:
  void check(const Fp& o) const {
    if (p_ != o.p_ || p_ == 0)
      throw FieldMismatch("scalars from different fields: p=" + std::to_string(p_) +
                          " vs p=" + std::to_string(o.p_));
  }

  std::uint64_t v_ = 0;
  std::uint64_t p_ = 0;
};

// Scalar helpers shared by the generic evaluators. `like` supplies the field
// (or jet shape) a constant must live in.
inline bool is_zero(const Fp& x) { return x.is_zero(); }
inline bool is_zero(const Rational& x) { return x == 0; }
inline Fp constant_like(const Fp& like, std::int64_t c) { return Fp(c, like.modulus()); }
inline Rational constant_like(const Rational&, std::int64_t c) { return Rational(c); }

inline Fp reciprocal(const Fp& x) {
  if (x.is_zero()) throw EvaluationError("division by zero in F_p");
  return x.inverse();
}
inline Rational reciprocal(const Rational& x) {
  if (x == 0) throw EvaluationError("division by zero in Q");
  return Rational(1) / x;
}

/// Integer power; negative exponents go through `reciprocal`, so a Laurent
/// monomial at a zero base raises EvaluationError.
template <class T>
T ipow(const T& base, std::int64_t e) {
  if (e < 0) return ipow(reciprocal(base), -e);
  T result = constant_like(base, 1);
  T b = base;
  while (e > 0) {
    if (e & 1) result = result * b;
    e >>= 1;
    if (e > 0) b = b * b;
  }
  return result;
}

// ---------------------------------------------------------------------------
// Jet2: value, gradient and Hessian of a function of `vars` variables,
// truncated after second order. The Hessian is stored as a packed upper
// triangle, so symmetry holds by construction.
// ---------------------------------------------------------------------------
template <class S>
class Jet2 {
 public:
  Jet2() = default;
  Jet2(S value, std::size_t vars)
      : val_(value), grad_(vars, zero_of(value)), hess_(vars * (vars + 1) / 2, zero_of(value)), n_(vars) {}

  static Jet2 variable(S value, std::size_t index, std::size_t vars) {
    Jet2 j(value, vars);
    j.grad_.at(index) = constant_like(value, 1);
    return j;
  }

  /// u + sum_k direction_k t_k: first-order seed along arbitrary directions.
  static Jet2 seeded(S value, std::span<const S> direction_components) {
    Jet2 j(value, direction_components.size());
    for (std::size_t k = 0; k < direction_components.size(); ++k) j.grad_[k] = direction_components[k];
    return j;
  }

  std::size_t vars() const { return n_; }
  const S& value() const { return val_; }
  const S& grad(std::size_t i) const { return grad_[i]; }
  const S& hess(std::size_t i, std::size_t j) const { return hess_[index(i, j)]; }

  Jet2& operator+=(const Jet2& o) {
    same_shape(o);
    val_ = val_ + o.val_;
    for (std::size_t i = 0; i < grad_.size(); ++i) grad_[i] = grad_[i] + o.grad_[i];
    for (std::size_t i = 0; i < hess_.size(); ++i) hess_[i] = hess_[i] + o.hess_[i];
    return *this;
  }
  Jet2& operator-=(const Jet2& o) {
    same_shape(o);
    val_ = val_ - o.val_;
    for (std::size_t i = 0; i < grad_.size(); ++i) grad_[i] = grad_[i] - o.grad_[i];
    for (std::size_t i = 0; i < hess_.size(); ++i) hess_[i] = hess_[i] - o.hess_[i];
    return *this;
  }

  friend Jet2 operator+(Jet2 a, const Jet2& b) { return a += b; }
  friend Jet2 operator-(Jet2 a, const Jet2& b) { return a -= b; }
  Jet2 operator-() const {
    Jet2 r(*this);
    r.val_ = -r.val_;
    for (auto& g : r.grad_) g = -g;
    for (auto& h : r.hess_) h = -h;
    return r;
  }

  friend Jet2 operator*(const Jet2& a, const Jet2& b) {
    a.same_shape(b);
    Jet2 r(a.val_ * b.val_, a.n_);
    for (std::size_t i = 0; i < a.n_; ++i) r.grad_[i] = a.val_ * b.grad_[i] + b.val_ * a.grad_[i];
    for (std::size_t i = 0; i < a.n_; ++i) {
      for (std::size_t j = i; j < a.n_; ++j) {
        std::size_t k = index(i, j);
        r.hess_[k] = a.val_ * b.hess_[k] + b.val_ * a.hess_[k] + a.grad_[i] * b.grad_[j] +
                     a.grad_[j] * b.grad_[i];
      }
    }
    return r;
  }

  friend Jet2 operator*(const Jet2& a, const S& s) {
    Jet2 r(a);
    r.val_ = r.val_ * s;
    for (auto& g : r.grad_) g = g * s;
    for (auto& h : r.hess_) h = h * s;
    return r;
  }

  friend Jet2 reciprocal(const Jet2& a) {
    S v = reciprocal(a.val_);
    S v2 = v * v;
    S two_v3 = constant_like(v, 2) * v2 * v;
    Jet2 r(v, a.n_);
    for (std::size_t i = 0; i < a.n_; ++i) r.grad_[i] = -(a.grad_[i] * v2);
    for (std::size_t i = 0; i < a.n_; ++i)
      for (std::size_t j = i; j < a.n_; ++j) {
        std::size_t k = index(i, j);
        r.hess_[k] = two_v3 * a.grad_[i] * a.grad_[j] - a.hess_[k] * v2;
      }
    return r;
  }

  friend Jet2 operator/(const Jet2& a, const Jet2& b) { return a * reciprocal(b); }

  friend Jet2 constant_like(const Jet2& like, std::int64_t c) {
    return Jet2(constant_like(like.val_, c), like.n_);
  }
  friend bool is_zero(const Jet2& j) { return is_zero(j.val_); }

 private:
  static S zero_of(const S& like) { return constant_like(like, 0); }
  static std::size_t index(std::size_t i, std::size_t j) {
    if (i > j) std::swap(i, j);
    return j * (j + 1) / 2 + i;
  }
  void same_shape(const Jet2& o) const {
    if (n_ != o.n_) throw std::invalid_argument("jets over different variable counts");
  }

  S val_{};
  std::vector<S> grad_;
  std::vector<S> hess_;
  std::size_t n_ = 0;
};

// ---------------------------------------------------------------------------
// Dense row-major matrix.
// ---------------------------------------------------------------------------
template <class T>
class Matrix {
 public:
  Matrix() = default;
  Matrix(std::size_t rows, std::size_t cols, const T& fill) : rows_(rows), cols_(cols), data_(rows * cols, fill) {}

  static Matrix from_rows(const std::vector<std::vector<T>>& rows) {
    Matrix m;
    for (const auto& r : rows) m.append_row(r);
    return m;
  }

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  bool empty() const { return rows_ == 0; }

  T& operator()(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
  const T& operator()(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }

  std::span<T> row(std::size_t r) { return {data_.data() + r * cols_, cols_}; }
  std::span<const T> row(std::size_t r) const { return {data_.data() + r * cols_, cols_}; }

  void append_row(std::span<const T> values) {
    if (rows_ == 0 && data_.empty()) cols_ = values.size();
    if (values.size() != cols_) throw std::invalid_argument("row length mismatch");
    data_.insert(data_.end(), values.begin(), values.end());
    ++rows_;
  }
  void append_row(const std::vector<T>& values) { append_row(std::span<const T>(values)); }

  void append_rows(const Matrix& other) {
    for (std::size_t r = 0; r < other.rows(); ++r) append_row(other.row(r));
  }

  void swap_rows(std::size_t a, std::size_t b) {
    if (a == b) return;
    for (std::size_t c = 0; c < cols_; ++c) std::swap((*this)(a, c), (*this)(b, c));
  }

  Matrix transpose() const {
    if (rows_ == 0) return Matrix();
    Matrix t(cols_, rows_, data_.front());
    for (std::size_t r = 0; r < rows_; ++r)
      for (std::size_t c = 0; c < cols_; ++c) t(c, r) = (*this)(r, c);
    return t;
  }

  friend bool operator==(const Matrix& a, const Matrix& b) {
    return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.data_ == b.data_;
  }

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<T> data_;
};

using ModMatrix = Matrix<Fp>;
using RatMatrix = Matrix<Rational>;
using IntMatrix = Matrix<BigInt>;

/// Rank over F_p by Gaussian elimination. All entries must share a modulus.
std::size_t rank(const ModMatrix& m);

/// Rank over Q by fraction-free (Bareiss) elimination after clearing row
/// denominators.
std::size_t rank(const RatMatrix& m);

/// Rank over Q of an integer matrix (Bareiss).
std::size_t rank(const IntMatrix& m);

/// Modulus shared by every entry; throws FieldMismatch otherwise.
std::uint64_t common_modulus(const ModMatrix& m);

/// Reduced row echelon form. `column_order` fixes the order in which columns
/// are tried as pivots (identity when empty); different orders give different
/// complements of the row space.
template <class T>
struct Echelon {
  Matrix<T> basis;                 // reduced rows, one per pivot
  std::vector<std::size_t> pivots;  // pivot column of each basis row
  std::size_t cols = 0;
  std::size_t rank() const { return pivots.size(); }
};

template <class T>
Echelon<T> row_echelon(Matrix<T> m, std::span<const std::size_t> column_order = {}) {
  Echelon<T> out;
  out.cols = m.cols();
  std::vector<std::size_t> order(column_order.begin(), column_order.end());
  if (order.empty())
    for (std::size_t c = 0; c < m.cols(); ++c) order.push_back(c);
  std::size_t lead = 0;
  for (std::size_t c : order) {
    if (lead == m.rows()) break;
    std::size_t piv = lead;
    while (piv < m.rows() && is_zero(m(piv, c))) ++piv;
    if (piv == m.rows()) continue;
    m.swap_rows(lead, piv);
    T inv = reciprocal(m(lead, c));
    for (std::size_t k = 0; k < m.cols(); ++k) m(lead, k) = m(lead, k) * inv;
    for (std::size_t r = 0; r < m.rows(); ++r) {
      if (r == lead || is_zero(m(r, c))) continue;
      T f = m(r, c);
      for (std::size_t k = 0; k < m.cols(); ++k) m(r, k) = m(r, k) - f * m(lead, k);
    }
    out.pivots.push_back(c);
    ++lead;
  }
  for (std::size_t r = 0; r < lead; ++r) out.basis.append_row(m.row(r));
  return out;
}

/// Normal form of `v` modulo the row space of `e`: zero on every pivot column.
template <class T>
std::vector<T> reduce_mod(const Echelon<T>& e, std::span<const T> v) {
  std::vector<T> out(v.begin(), v.end());
  for (std::size_t i = 0; i < e.pivots.size(); ++i) {
    const T f = out[e.pivots[i]];
    if (is_zero(f)) continue;
    auto row = e.basis.row(i);
    for (std::size_t k = 0; k < out.size(); ++k) out[k] = out[k] - f * row[k];
  }
  return out;
}

/// Basis (as rows) of { x : x * m = 0 }.
template <class T>
Matrix<T> left_kernel(const Matrix<T>& m) {
  Matrix<T> result;
  if (m.rows() == 0) return result;
  auto e = row_echelon(m.transpose());
  std::vector<bool> is_pivot(m.rows(), false);
  for (auto p : e.pivots) is_pivot[p] = true;
  const T zero = constant_like(m(0, 0), 0);
  for (std::size_t free = 0; free < m.rows(); ++free) {
    if (is_pivot[free]) continue;
    std::vector<T> x(m.rows(), zero);
    x[free] = constant_like(zero, 1);
    for (std::size_t i = 0; i < e.pivots.size(); ++i) x[e.pivots[i]] = -e.basis(i, free);
    result.append_row(x);
  }
  return result;
}

/// Basis (as rows) of rowspace(a) ∩ rowspace(b).
template <class T>
Matrix<T> intersect_rows(const Matrix<T>& a, const Matrix<T>& b) {
  if (a.cols() != b.cols()) throw std::invalid_argument("subspaces live in different ambient spaces");
  if (a.rows() == 0 || b.rows() == 0) return Matrix<T>();
  Matrix<T> stacked = a;
  stacked.append_rows(b);
  Matrix<T> kernel = left_kernel(stacked);
  Matrix<T> out;
  const T zero = constant_like(a(0, 0), 0);
  for (std::size_t k = 0; k < kernel.rows(); ++k) {
    std::vector<T> v(a.cols(), zero);
    for (std::size_t i = 0; i < a.rows(); ++i) {
      const T& coef = kernel(k, i);
      if (is_zero(coef)) continue;
      for (std::size_t c = 0; c < a.cols(); ++c) v[c] = v[c] + coef * a(i, c);
    }
    out.append_row(v);
  }
  if (out.rows() == 0) return out;
  return row_echelon(out).basis;
}

template <class T>
std::size_t echelon_rank(const Matrix<T>& m) {
  return m.rows() == 0 ? 0 : row_echelon(m).rank();
}

/// Projective dimension of the intersection of two linear spaces spanned by
/// the rows of `a` and `b` (-1 when they are disjoint).
template <class T>
int intersect_dim(const Matrix<T>& a, const Matrix<T>& b) {
  if (a.cols() == 0 || b.cols() == 0 || a.rows() == 0 || b.rows() == 0)
    throw std::invalid_argument("intersect_dim needs non-empty bases");
  if (a.cols() != b.cols()) throw std::invalid_argument("subspaces live in different ambient spaces");
  Matrix<T> sum = a;
  sum.append_rows(b);
  const auto ra = static_cast<int>(rank(a));
  const auto rb = static_cast<int>(rank(b));
  const auto rs = static_cast<int>(rank(sum));
  return ra + rb - rs - 1;
}

/// True when `v` lies in the row space of `m`.
template <class T>
bool in_row_space(const Matrix<T>& m, std::span<const T> v) {
  if (m.rows() == 0) {
    for (const auto& x : v)
      if (!is_zero(x)) return false;
    return true;
  }
  auto e = row_echelon(m);
  auto r = reduce_mod(e, v);
  for (const auto& x : r)
    if (!is_zero(x)) return false;
  return true;
}

/// Same row space (exact).
template <class T>
bool same_row_space(const Matrix<T>& a, const Matrix<T>& b) {
  if (a.rows() == 0 || b.rows() == 0) return a.rows() == b.rows();
  auto ea = row_echelon(a);
  auto eb = row_echelon(b);
  return ea.pivots == eb.pivots && ea.basis == eb.basis;
}

// ---------------------------------------------------------------------------
// Integer lattices
// ---------------------------------------------------------------------------
struct SmithResult {
  std::size_t rank = 0;
  std::vector<BigInt> divisors;  // d_1 | d_2 | ... , all positive
};

/// Smith normal form diagonal of an integer matrix.
SmithResult smith_rank(const IntMatrix& m);

IntMatrix to_int_matrix(const std::vector<std::vector<std::int64_t>>& rows, std::size_t cols);

RatMatrix to_rational(const IntMatrix& m);

/// Reduce a rational matrix into F_p; throws EvaluationError when p divides a
/// denominator.
ModMatrix reduce_mod_prime(const RatMatrix& m, std::uint64_t p);

// ---------------------------------------------------------------------------
// Deterministic sampling. One 64-bit seed reproduces every point.
// ---------------------------------------------------------------------------
class Sampler {
 public:
  explicit Sampler(std::uint64_t seed) : engine_(seed) {}

  /// Uniform in [1, bound).
  std::uint64_t nonzero_below(std::uint64_t bound) {
    for (;;) {
      std::uint64_t x = engine_() % bound;
      if (x != 0) return x;
    }
  }

  /// Uniform in [lo, hi], excluding zero.
  std::int64_t small_nonzero(std::int64_t lo, std::int64_t hi) {
    const auto span = static_cast<std::uint64_t>(hi - lo + 1);
    for (;;) {
      auto x = lo + static_cast<std::int64_t>(engine_() % span);
      if (x != 0) return x;
    }
  }

  std::uint64_t next() { return engine_(); }

 private:
  std::mt19937_64 engine_;
};

/// Derive an independent stream seed (splitmix64 finalizer).
std::uint64_t derive_seed(std::uint64_t seed, std::uint64_t salt);

}  // namespace terracini

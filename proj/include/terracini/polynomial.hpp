#pragma once

// Dense univariate polynomials over Q.

#include <string>
#include <utility>
#include <vector>

#include "terracini/exactnum.hpp"

namespace terracini {

class Poly {
 public:
  Poly() = default;
  explicit Poly(std::vector<Rational> coeffs);  // lowest degree first
  static Poly constant(const Rational& c) { return Poly({c}); }
  static Poly monomial(const Rational& c, std::size_t degree);

  /// -1 for the zero polynomial.
  int degree() const { return static_cast<int>(c_.size()) - 1; }
  bool is_zero() const { return c_.empty(); }
  const std::vector<Rational>& coeffs() const { return c_; }
  Rational coeff(std::size_t i) const { return i < c_.size() ? c_[i] : Rational(0); }
  Rational leading() const { return c_.empty() ? Rational(0) : c_.back(); }

  Rational operator()(const Rational& x) const;

  Poly monic() const;

  friend Poly operator+(const Poly& a, const Poly& b);
  friend Poly operator-(const Poly& a, const Poly& b);
  friend Poly operator*(const Poly& a, const Poly& b);
  friend Poly operator*(const Poly& a, const Rational& s);
  friend bool operator==(const Poly& a, const Poly& b) { return a.c_ == b.c_; }

  std::string str() const;

 private:
  void trim();
  std::vector<Rational> c_;
};

/// Quotient and remainder; throws on division by zero.
std::pair<Poly, Poly> divmod(const Poly& a, const Poly& b);

/// Monic gcd (zero when both inputs are zero).
Poly gcd(const Poly& a, const Poly& b);
Poly gcd(const std::vector<Poly>& ps);

}  // namespace terracini

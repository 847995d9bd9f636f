#pragma once

// Parametrized projective varieties. Each variety carries one polynomial (or
// Laurent) map from m parameters to N+1 homogeneous coordinates, evaluable
// over F_p, over second-order jets on F_p, and over Q.

#include <cstdint>
#include <memory>
#include <optional>
#include <span>
#include <string>
#include <type_traits>
#include <vector>

#include "terracini/exactnum.hpp"
#include "terracini/latticegeom.hpp"

namespace terracini {

using FpJet = Jet2<Fp>;

enum class VarietyKind { toric, minor_based, moment, power, secant_of };

std::string to_string(VarietyKind k);

/// Type-erased evaluator. Implementations come from one generic callable, so
/// the three scalar types always agree.
class Model {
 public:
  virtual ~Model() = default;
  virtual std::vector<Fp> eval(std::span<const Fp> u) const = 0;
  virtual std::vector<FpJet> eval(std::span<const FpJet> u) const = 0;
  virtual std::vector<Rational> eval(std::span<const Rational> u) const = 0;
};

template <class F>
class GenericModel final : public Model {
 public:
  explicit GenericModel(F f) : f_(std::move(f)) {}
  std::vector<Fp> eval(std::span<const Fp> u) const override { return f_(u); }
  std::vector<FpJet> eval(std::span<const FpJet> u) const override { return f_(u); }
  std::vector<Rational> eval(std::span<const Rational> u) const override { return f_(u); }

 private:
  F f_;
};

template <class F>
std::shared_ptr<const Model> make_model(F f) {
  return std::make_shared<GenericModel<F>>(std::move(f));
}

struct ParamVariety;

struct SecantInfo {
  std::string base_id;
  std::shared_ptr<const ParamVariety> base;
  int base_n = 0;
  std::size_t base_params = 0;
  int r = 1;
  bool fills = false;  // r·dim(Y) + r - 1 > N
};

struct ParamVariety {
  std::string id;  // canonical spec string
  VarietyKind kind = VarietyKind::toric;
  int n = 0;       // dimension
  int N = 0;       // dimension of the linear span of the image
  std::size_t num_params = 0;
  std::size_t num_coords = 0;
  std::string chart;
  std::shared_ptr<const Model> model;
  std::optional<LatticePolytope> polytope;  // toric only
  std::optional<SecantInfo> secant;         // secant-of only

  std::vector<Fp> eval(std::span<const Fp> u) const { return checked(model->eval(u), u.size()); }
  std::vector<FpJet> eval(std::span<const FpJet> u) const { return checked(model->eval(u), u.size()); }
  std::vector<Rational> eval(std::span<const Rational> u) const { return checked(model->eval(u), u.size()); }

 private:
  template <class T>
  std::vector<T> checked(std::vector<T> v, std::size_t params) const {
    if (params != num_params)
      throw std::invalid_argument(id + ": expected " + std::to_string(num_params) + " parameters, got " +
                                  std::to_string(params));
    return v;
  }
};

// ---------------------------------------------------------------------------
// Jets and tangent data
// ---------------------------------------------------------------------------

/// Jets of every coordinate at `u`, with one jet variable per parameter.
std::vector<FpJet> jet_eval(const ParamVariety& x, std::span<const Fp> u);

/// Jets of every coordinate along u + Σ_k t_k·directions[k]; the jet
/// variables are the t_k.
std::vector<FpJet> jet_eval(const ParamVariety& x, std::span<const Fp> u,
                            const std::vector<std::vector<Fp>>& directions);

/// Rows φ(u), ∂_1φ(u), ..., ∂_mφ(u): the affine cone tangent space.
ModMatrix cone_tangent(const ParamVariety& x, std::span<const Fp> u);

/// Same rows computed from a precomputed jet vector.
ModMatrix cone_tangent(std::span<const FpJet> jets);

/// Integers in [1, 2^60), shared by all primes so that every prime sees the
/// same rational input.
std::vector<std::uint64_t> sample_integers(Sampler& s, std::size_t count);
std::vector<Fp> to_field(std::span<const std::uint64_t> ints, std::uint64_t p);

// ---------------------------------------------------------------------------
// Catalog
// ---------------------------------------------------------------------------

/// Laurent monomials χ^m for m in P. The points must span their lattice.
ParamVariety make_toric(const LatticePolytope& p, std::string id = {});

ParamVariety make_segre_veronese(const std::vector<int>& ns, const std::vector<int>& ds);
ParamVariety make_veronese(int n, int d);
ParamVariety make_rnc(int degree);

/// Plücker embedding of the r-planes of P^n on the chart [I | A].
ParamVariety make_grassmannian(int r, int n);

/// Flags of projective subspaces of dimensions k_1 <= ... <= k_s in P^n, as
/// a Segre product of Plücker charts cut from one flag chart matrix.
ParamVariety make_flag(const std::vector<int>& ks, int n);

/// Lagrangian Grassmannian LG(n, 2n) on the chart [I | S], S symmetric.
ParamVariety make_lagrangian(int n);

/// Gaussian moments of order 0..d in (μ, σ²).
ParamVariety make_moment_surface(int d);

/// d-th powers of degree-a forms in n+1 variables; coordinates are the
/// coefficients of g^d in lexicographic monomial order.
ParamVariety make_powers(int a, int d, int n);

/// Σ λ_i φ_Y(u^i) with λ_r = 1. The dimension is measured by one Terracini
/// probe at construction. r = 1 returns Y under the new id.
ParamVariety make_secant_power(const ParamVariety& y, int r, std::uint64_t seed = kDefaultSeed);

/// Homogeneous monomials of degree k in `vars` variables, lexicographically
/// descending (x0^k first).
std::vector<std::vector<int>> homogeneous_monomials(int vars, int k);

/// Dimension of the GL_{n+1} module with highest weight Σ ω_{k_i+1}; the
/// projective span of the flag variety has this dimension minus one.
BigInt flag_span_size(const std::vector<int>& ks, int n);

BigInt binomial(std::int64_t n, std::int64_t k);

}  // namespace terracini

#ifndef KPBOUND_CONFORMAL_HPP
#define KPBOUND_CONFORMAL_HPP

#include <complex>
#include <functional>
#include <memory>
#include <optional>
#include <vector>

#include "kpbound/geometry.hpp"

namespace kp {

using Complex = std::complex<double>;

/// Conformal map f of the unit disk onto a Jordan domain, normalized by
/// f(0) = 0 and f'(0) > 0.
class ConformalMap {
 public:
  virtual ~ConformalMap() = default;
  virtual Complex map(Complex z) const = 0;
  virtual Complex derivative(Complex z) const = 0;
  virtual const char* kind() const = 0;  // "exact_mobius" | "numeric"
  /// Known closed-form sup |f'| where available (exact maps).
  virtual std::optional<double> analytic_sup_derivative() const { return std::nullopt; }
};

/// Moebius composition f3 o f2 o f1 mapping the unit disk onto D(a, r)
/// with f(0) = 0: f1(z) = (z - a/r)/(1 - (a/r) z), f2(z) = z + a/r,
/// f3(z) = r z. Its derivative attains sup r (r+a)/(r-a) at z = 1.
class ExactDiskMap : public ConformalMap {
 public:
  ExactDiskMap(double a, double r);
  Complex map(Complex z) const override;
  Complex derivative(Complex z) const override;
  const char* kind() const override { return "exact_mobius"; }
  std::optional<double> analytic_sup_derivative() const override;

 private:
  double a_, r_, c_;  // c = a/r
};

/// Numeric map for a convex domain starlike about 0, computed from the
/// boundary correspondence theta(phi) of the radius function rho(theta)
/// by conjugate-function iteration on a uniform circle grid (Theodorsen's
/// method), with the holomorphic log(f(z)/z) recovered from its FFT.
class NumericConformalMap : public ConformalMap {
 public:
  /// `radius` is rho(theta), the boundary radius in direction theta.
  /// `resolution` must be a power of two, >= 64.
  NumericConformalMap(std::function<double(double)> radius, int resolution,
                      double tol = 1e-13, int max_iterations = 20000);

  static NumericConformalMap build(const Domain& dom, int resolution);

  Complex map(Complex z) const override;
  Complex derivative(Complex z) const override;
  const char* kind() const override { return "numeric"; }

  /// f^{-1}(w) by Newton iteration from z0 (default 0); throws on
  /// non-convergence.
  Complex inverse(Complex w, Complex z0 = 0.0) const;

  /// |f'| at the n uniform boundary grid points (n = resolution).
  std::vector<double> boundary_derivative_abs() const;

  int resolution() const { return n_; }
  int iterations() const { return iterations_; }
  /// sup |theta update| at the last iteration.
  double residual() const { return residual_; }
  /// magnitude of the largest discarded negative-frequency coefficient of
  /// log(f(z)/z); a self-consistency diagnostic.
  double spectral_residual() const { return spectral_residual_; }

 private:
  int n_;
  int iterations_ = 0;
  double residual_ = 0.0;
  double spectral_residual_ = 0.0;
  std::vector<Complex> coeff_;  // Taylor coefficients of log(f(z)/z)

  Complex log_series(Complex z) const;
  Complex log_series_derivative(Complex z) const;
};

/// Radius function of a convex domain containing 0 (ray-boundary
/// intersection). Throws if 0 is not interior.
std::function<double(double)> starlike_radius(const Domain& dom);

/// max |f'| over concentric circles approaching |z| = 1 and a boundary
/// grid of n points, with golden-section refinement near the maximum.
double empirical_sup_derivative(const ConformalMap& f, int n_boundary_samples = 4096);

}  // namespace kp

#endif

#include "kpbound/conformal.hpp"

#include <algorithm>
#include <cmath>

namespace kp {

namespace {

constexpr double kPi = 3.14159265358979323846;

bool is_pow2(int n) { return n > 0 && (n & (n - 1)) == 0; }

// In-place iterative radix-2 FFT; inverse = conjugate trick handled by caller.
void fft(std::vector<Complex>& a, bool inverse) {
  const int n = static_cast<int>(a.size());
  for (int i = 1, j = 0; i < n; ++i) {
    int bit = n >> 1;
    for (; j & bit; bit >>= 1) j ^= bit;
    j ^= bit;
    if (i < j) std::swap(a[i], a[j]);
  }
  for (int len = 2; len <= n; len <<= 1) {
    double ang = 2 * kPi / len * (inverse ? 1 : -1);
    Complex wl(std::cos(ang), std::sin(ang));
    for (int i = 0; i < n; i += len) {
      Complex w(1.0);
      for (int j = 0; j < len / 2; ++j) {
        Complex u = a[i + j], v = a[i + j + len / 2] * w;
        a[i + j] = u + v;
        a[i + j + len / 2] = u - v;
        w *= wl;
      }
    }
  }
  if (inverse)
    for (auto& x : a) x /= n;
}

// Conjugate (harmonic conjugate on the circle) of real grid samples, with
// zero mean: multiplies Fourier coefficients by -i*sgn(k).
std::vector<double> conjugate_function(const std::vector<double>& u) {
  const int n = static_cast<int>(u.size());
  std::vector<Complex> a(u.begin(), u.end());
  fft(a, false);
  a[0] = 0.0;
  for (int k = 1; k < n / 2; ++k) {
    a[k] *= Complex(0, -1);
    a[n - k] *= Complex(0, 1);
  }
  a[n / 2] = 0.0;
  fft(a, true);
  std::vector<double> v(n);
  for (int i = 0; i < n; ++i) v[i] = a[i].real();
  return v;
}

}  // namespace

ExactDiskMap::ExactDiskMap(double a, double r) : a_(a), r_(r), c_(a / r) {
  if (!(a >= 0) || !(a < r)) throw std::invalid_argument("ExactDiskMap requires 0 <= a < r");
}

Complex ExactDiskMap::map(Complex z) const {
  Complex f1 = (z - c_) / (1.0 - c_ * z);
  return r_ * (f1 + c_);
}

Complex ExactDiskMap::derivative(Complex z) const {
  Complex den = 1.0 - c_ * z;
  return r_ * (1.0 - c_ * c_) / (den * den);
}

std::optional<double> ExactDiskMap::analytic_sup_derivative() const {
  return r_ * (r_ + a_) / (r_ - a_);
}

std::function<double(double)> starlike_radius(const Domain& dom) {
  if (!contains(dom, {0, 0}, 0.0) || distance_to_boundary(dom, {0, 0}) <= 0)
    throw std::domain_error("starlike_radius: domain must contain 0 in its interior");
  return std::visit(
      [](const auto& d) -> std::function<double(double)> {
        using T = std::decay_t<decltype(d)>;
        if constexpr (std::is_same_v<T, Disk>) {
          Point2 c = d.center;
          double r = d.radius;
          return [c, r](double th) {
            double b = std::cos(th) * c.x + std::sin(th) * c.y;
            return b + std::sqrt(b * b + r * r - (c.x * c.x + c.y * c.y));
          };
        } else if constexpr (std::is_same_v<T, Stadium>) {
          return [d](double th) { return d.ray_boundary_distance({0, 0}, th); };
        } else if constexpr (std::is_same_v<T, DiskUnionDomain>) {
          Stadium s = d.hull();
          return [s](double th) { return s.ray_boundary_distance({0, 0}, th); };
        } else {
          throw std::domain_error("starlike_radius: unbounded domain");
        }
      },
      dom);
}

NumericConformalMap::NumericConformalMap(std::function<double(double)> radius, int resolution,
                                         double tol, int max_iterations)
    : n_(resolution) {
  if (!is_pow2(n_) || n_ < 64)
    throw std::invalid_argument("resolution must be a power of two, >= 64");

  std::vector<double> phi(n_), theta(n_), u(n_);
  for (int j = 0; j < n_; ++j) phi[j] = 2 * kPi * j / n_;
  theta = phi;

  // theta <- phi + K[log rho(theta)], with underrelaxation when the plain
  // iteration is not contracting.
  double omega = 1.0, prev_delta = 1e300;
  int it = 0;
  for (; it < max_iterations; ++it) {
    for (int j = 0; j < n_; ++j) u[j] = std::log(radius(theta[j]));
    std::vector<double> v = conjugate_function(u);
    double delta = 0.0;
    for (int j = 0; j < n_; ++j) delta = std::max(delta, std::abs(phi[j] + v[j] - theta[j]));
    for (int j = 0; j < n_; ++j) theta[j] += omega * (phi[j] + v[j] - theta[j]);
    if (delta > prev_delta && omega > 0.1) omega *= 0.7;
    prev_delta = delta;
    residual_ = delta;
    if (delta < tol) break;
  }
  iterations_ = it;
  if (residual_ > 1e-8)
    throw std::runtime_error("conformal map iteration did not converge, residual " +
                             std::to_string(residual_));

  // log(f(z)/z) from its boundary values u + i(theta - phi)
  std::vector<Complex> g(n_);
  for (int j = 0; j < n_; ++j) g[j] = Complex(std::log(radius(theta[j])), theta[j] - phi[j]);
  fft(g, false);
  coeff_.assign(n_ / 2, 0.0);
  for (int k = 0; k < n_ / 2; ++k) coeff_[k] = g[k] / static_cast<double>(n_);
  for (int k = n_ / 2; k < n_; ++k)
    spectral_residual_ = std::max(spectral_residual_, std::abs(g[k]) / n_);
  coeff_[0] = Complex(coeff_[0].real(), 0.0);  // rotation normalization f'(0) > 0
}

NumericConformalMap NumericConformalMap::build(const Domain& dom, int resolution) {
  return NumericConformalMap(starlike_radius(dom), resolution);
}

Complex NumericConformalMap::log_series(Complex z) const {
  Complex acc = 0.0;
  for (int k = static_cast<int>(coeff_.size()) - 1; k >= 0; --k) acc = acc * z + coeff_[k];
  return acc;
}

Complex NumericConformalMap::log_series_derivative(Complex z) const {
  Complex acc = 0.0;
  for (int k = static_cast<int>(coeff_.size()) - 1; k >= 1; --k)
    acc = acc * z + static_cast<double>(k) * coeff_[k];
  return acc;
}

Complex NumericConformalMap::map(Complex z) const { return z * std::exp(log_series(z)); }

Complex NumericConformalMap::derivative(Complex z) const {
  return std::exp(log_series(z)) * (1.0 + z * log_series_derivative(z));
}

Complex NumericConformalMap::inverse(Complex w, Complex z0) const {
  Complex z = z0;
  double scale = std::abs(w) + std::exp(coeff_[0].real());
  for (int i = 0; i < 200; ++i) {
    Complex r = map(z) - w;
    if (std::abs(r) < 1e-13 * scale) return z;
    z -= r / derivative(z);
    if (std::abs(z) >= 1.0) z *= 0.98 / std::abs(z);
  }
  throw std::runtime_error("NumericConformalMap::inverse: Newton did not converge");
}

std::vector<double> NumericConformalMap::boundary_derivative_abs() const {
  // g and g' on the grid by inverse FFT of the coefficient arrays
  std::vector<Complex> g(n_, 0.0), gp(n_, 0.0);
  for (int k = 0; k < n_ / 2; ++k) {
    g[k] = coeff_[k] * static_cast<double>(n_);
    gp[k] = static_cast<double>(k) * coeff_[k] * static_cast<double>(n_);
  }
  fft(g, true);
  fft(gp, true);
  std::vector<double> out(n_);
  // gp[j] holds sum_k k c_k z^k = z g'(z) on the grid
  for (int j = 0; j < n_; ++j) out[j] = std::abs(std::exp(g[j]) * (1.0 + gp[j]));
  return out;
}

double empirical_sup_derivative(const ConformalMap& f, int n) {
  double best = 0.0;
  double best_phi = 0.0;
  auto consider = [&](double r, double ph) {
    double v = std::abs(f.derivative(std::polar(r, ph)));
    if (v > best) { best = v; best_phi = ph; }
  };

  if (const auto* num = dynamic_cast<const NumericConformalMap*>(&f)) {
    std::vector<double> bd = num->boundary_derivative_abs();
    for (int j = 0; j < num->resolution(); ++j)
      if (bd[j] > best) { best = bd[j]; best_phi = 2 * kPi * j / num->resolution(); }
  } else {
    for (int j = 0; j < n; ++j) consider(1.0, 2 * kPi * j / n);
  }
  // interior circles approaching the boundary (maximum principle sanity)
  for (int k = 2; k <= 10; ++k) {
    double r = 1.0 - std::pow(2.0, -k);
    for (int j = 0; j < n / 4; ++j) consider(r, 2 * kPi * j / (n / 4));
  }
  // golden-section refinement of the boundary angle near the maximum
  double w = 2 * kPi / n * 4;
  double lo = best_phi - w, hi = best_phi + w;
  const double gr = (std::sqrt(5.0) - 1) / 2;
  double c = hi - gr * (hi - lo), d = lo + gr * (hi - lo);
  auto val = [&](double ph) { return std::abs(f.derivative(std::polar(1.0, ph))); };
  double fc = val(c), fd = val(d);
  for (int i = 0; i < 80; ++i) {
    if (fc > fd) { hi = d; d = c; fd = fc; c = hi - gr * (hi - lo); fc = val(c); }
    else { lo = c; c = d; fc = fd; d = lo + gr * (hi - lo); fd = val(d); }
  }
  best = std::max(best, std::max(fc, fd));
  return best;
}

}  // namespace kp

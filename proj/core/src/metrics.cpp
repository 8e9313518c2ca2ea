#include "kpbound/metrics.hpp"

#include <cmath>

namespace kp {

namespace {
constexpr double kPi = 3.14159265358979323846;

void require_finite_positive(double v, const char* what) {
  if (!std::isfinite(v) || v <= 0)
    throw std::invalid_argument(std::string(what) + " must be finite and positive");
}
}  // namespace

const char* to_string(KPCase c) {
  switch (c) {
    case KPCase::equal_radii: return "equal_radii";
    case KPCase::extremal_disk_constant: return "extremal_disk_constant";
    case KPCase::sector_composite: return "sector_composite";
  }
  return "?";
}

MetricValue hyperbolic_density_disk(double r, double d) {
  require_finite_positive(r, "radius");
  if (d < 0 || !std::isfinite(d)) throw std::invalid_argument("offset must be in [0, r)");
  if (d >= r) throw std::domain_error("hyperbolic density diverges at the boundary");
  return {r / (r * r - d * d), MetricKind::hyperbolic, Provenance::closed_form};
}

MetricValue hyperbolic_distance_disk_radial(double r, double d) {
  require_finite_positive(r, "radius");
  if (d < 0 || !std::isfinite(d)) throw std::invalid_argument("offset must be in [0, r)");
  if (d >= r) throw std::domain_error("hyperbolic distance diverges at the boundary");
  return {0.5 * std::log((r + d) / (r - d)), MetricKind::hyperbolic, Provenance::closed_form};
}

MetricValue quasihyperbolic_density(const Domain& dom, Point2 z) {
  double d = distance_to_boundary(dom, z);
  if (d <= 0) throw std::domain_error("quasihyperbolic density diverges at the boundary");
  return {1.0 / d, MetricKind::quasihyperbolic, Provenance::closed_form};
}

MetricValue kp_density_strip(double halfwidth) {
  require_finite_positive(halfwidth, "halfwidth");
  return {1.0 / halfwidth, MetricKind::kulkarni_pinkall, Provenance::closed_form};
}

MetricValue kp_density_sector_axis(double theta, double x) {
  if (!(theta > 0) || theta > kPi / 2) throw std::invalid_argument("theta must be in (0, pi/2]");
  require_finite_positive(x, "axis position");
  return {1.0 / std::tan(theta / 2) / (2 * x), MetricKind::kulkarni_pinkall,
          Provenance::closed_form};
}

std::pair<MetricValue, KPCaseBranch> kp_distance_stadium_centers(double R, double r, double d) {
  require_finite_positive(R, "R");
  require_finite_positive(r, "r");
  if (d < 0 || !std::isfinite(d)) throw std::invalid_argument("d must be finite and >= 0");
  if (r > R) std::swap(r, R);  // the stadium is symmetric in its two disks

  const double theta = (d >= R - r && d > 0) ? std::asin(std::min(1.0, (R - r) / d)) : kPi / 2;
  const double threshold = R * std::tan(theta / 2);
  auto kpval = [](double v) {
    return MetricValue{v, MetricKind::kulkarni_pinkall, Provenance::closed_form};
  };

  if (r == R)
    return {kpval(d / r), {KPCase::equal_radii, theta, threshold}};
  if (d <= threshold)
    return {kpval(0.5 * std::log((R + d) / (R - d))),
            {KPCase::extremal_disk_constant, theta, threshold}};
  const double t2 = std::tan(theta / 2);
  double v = 0.5 * (std::log(R / r * std::cos(theta)) / t2 + std::log((1 + t2) / (1 - t2)));
  return {kpval(v), {KPCase::sector_composite, theta, threshold}};
}

double phi(double a, double b) {
  require_finite_positive(a, "a");
  require_finite_positive(b, "b");
  if (a == b) return 1.0 / a;
  return (std::log(a) - std::log(b)) / (a - b);
}

}  // namespace kp

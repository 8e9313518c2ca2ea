#ifndef KPBOUND_METRICS_HPP
#define KPBOUND_METRICS_HPP

#include <utility>

#include "kpbound/geometry.hpp"

namespace kp {

enum class MetricKind { hyperbolic, quasihyperbolic, kulkarni_pinkall };
enum class Provenance { closed_form, numeric };

/// A density or distance value tagged with the metric it belongs to and
/// how it was obtained. Curvature -4 convention throughout.
struct MetricValue {
  double value;
  MetricKind kind;
  Provenance provenance;
};

enum class KPCase { equal_radii, extremal_disk_constant, sector_composite };

struct KPCaseBranch {
  KPCase tag;
  double theta;      // radians
  double threshold;  // R * tan(theta/2)
};

const char* to_string(KPCase c);

/// lambda = r / (r^2 - d^2) in a disk of radius r at offset d from the center.
MetricValue hyperbolic_density_disk(double r, double d);

/// Hyperbolic distance from the center to a point at offset d:
/// (1/2) log((r+d)/(r-d)).
MetricValue hyperbolic_distance_disk_radial(double r, double d);

/// 1 / dist(z, boundary).
MetricValue quasihyperbolic_density(const Domain& dom, Point2 z);

/// KP density on the axis of the strip {|Im z| < halfwidth}: 1/halfwidth.
MetricValue kp_density_strip(double halfwidth);

/// KP density at x > 0 on the axis of the sector {|Arg z| < theta}:
/// cot(theta/2) / (2x).
MetricValue kp_density_sector_axis(double theta, double x);

/// KP distance between the centers of the two disks generating the
/// stadium S(R, r, d). Arguments are normalized so r <= R; d >= 0.
/// Three closed-form branches; the branch taken is reported.
std::pair<MetricValue, KPCaseBranch> kp_distance_stadium_centers(double R, double r, double d);

/// (log a - log b)/(a - b), continued by 1/a across a = b.
double phi(double a, double b);

}  // namespace kp

#endif

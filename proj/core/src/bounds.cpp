#include "kpbound/bounds.hpp"

#include <cmath>

namespace kp {

namespace {
constexpr double kPi = 3.14159265358979323846;

void require_valid(const RadiiTriple& t) {
  RadiiCheck chk = validate_radii(t);
  if (!chk.ok) throw std::invalid_argument("invalid radii triple: " + chk.reason);
}
}  // namespace

std::pair<double, KPCaseBranch> distance_bound_F(const RadiiTriple& t) {
  require_valid(t);
  const double R = std::max(t.r_curv, t.r_inner);
  const double r = std::min(t.r_curv, t.r_inner);
  const double d = t.r_outer - t.r_curv;
  if (d == 0)  // forces r == R for a valid triple; the domain is D(0, R_C)
    return {0.0, {KPCase::equal_radii, kPi / 2, R}};
  auto [mv, branch] = kp_distance_stadium_centers(R, r, d);
  return {mv.value, branch};
}

BoundReport main_bound(const RadiiTriple& t) {
  auto [f, branch] = distance_bound_F(t);
  BoundReport rep;
  rep.triple = t;
  rep.f_value = f;
  rep.case_branch = branch;
  rep.new_bound = t.r_curv * std::exp(2 * f);
  rep.old_bound = old_bound(t);
  rep.ratio = rep.new_bound / rep.old_bound;
  // Disk shape: R_O = r+a, R_I = r-a, R_C = r, i.e. R_C = (R_O + R_I)/2.
  rep.sharp = std::abs(t.r_curv - 0.5 * (t.r_outer + t.r_inner)) <= 1e-12;
  return rep;
}

double old_bound(const RadiiTriple& t) {
  require_valid(t);
  return t.r_curv * std::exp(2 * (t.r_outer - t.r_curv) * phi(t.r_inner, t.r_curv));
}

double sharp_disk_bound(double a, double r) {
  if (!(a >= 0) || !(a < r) || !std::isfinite(a) || !std::isfinite(r))
    throw std::invalid_argument("sharp_disk_bound requires 0 <= a < r");
  return r * (r + a) / (r - a);
}

double old_bound_disk_ratio(double a, double r) {
  if (!(a >= 0) || !(a < r) || !std::isfinite(a) || !std::isfinite(r))
    throw std::invalid_argument("old_bound_disk_ratio requires 0 <= a < r");
  return 1.0 - (a / r) * (a / r);
}

}  // namespace kp

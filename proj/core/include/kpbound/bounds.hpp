#ifndef KPBOUND_BOUNDS_HPP
#define KPBOUND_BOUNDS_HPP

#include <utility>

#include "kpbound/geometry.hpp"
#include "kpbound/metrics.hpp"

namespace kp {

/// Comparison report for one radii triple: the hyperbolic-distance budget
/// F, the new derivative bound R_C * exp(2F), and the quasihyperbolic-based
/// bound it replaces.
struct BoundReport {
  RadiiTriple triple;
  double f_value;
  KPCaseBranch case_branch;
  double new_bound;
  double old_bound;
  double ratio;  // new / old
  bool sharp;    // triple has exact disk shape, where the bound is attained
};

/// F(R_O, R_I, R_C): with R = max(R_C, R_I), r = min(R_C, R_I),
/// d = R_O - R_C, this is the closed-form KP distance between the centers
/// of S(R, r, d). Rejects invalid triples.
std::pair<double, KPCaseBranch> distance_bound_F(const RadiiTriple& t);

/// sup |f'| <= R_C * exp(2 F) for conformal f: unit disk onto the domain,
/// f(0) = 0, plus the prior bound and their ratio.
BoundReport main_bound(const RadiiTriple& t);

/// R_C * exp(2 (R_O - R_C) * phi(R_I, R_C)).
double old_bound(const RadiiTriple& t);

/// Sharp bound r (r+a)/(r-a) for the disk D(a, r), 0 <= a < r. Equals
/// main_bound((r+a, r-a, r)).
double sharp_disk_bound(double a, double r);

/// Ratio of the sharp disk bound to the prior disk bound r^3/(r-a)^2,
/// i.e. 1 - (a/r)^2.
double old_bound_disk_ratio(double a, double r);

}  // namespace kp

#endif

#ifndef KPBOUND_VERIFY_HPP
#define KPBOUND_VERIFY_HPP

#include <string>

#include "kpbound/bounds.hpp"
#include "kpbound/conformal.hpp"
#include "kpbound/extremal_disk.hpp"
#include "kpbound/geometry.hpp"

namespace kp {

struct VerificationReport {
  RadiiTriple triple;
  double bound_value;
  double empirical_sup;
  double margin;  // bound - empirical_sup
  long samples;
  std::string method;  // "exact_mobius" | "numeric"
  bool pass;           // empirical_sup <= bound * (1 + 1e-3)
};

/// Builds the canonical domain for the triple, a numeric conformal map,
/// and checks sup |f'| against the derivative bound.
VerificationReport check_main_bound(const RadiiTriple& t, int resolution = 4096);

struct SandwichReport {
  Point2 point;            // image point in the domain
  double hyperbolic;       // lambda via conformal pushforward
  double kp;               // mu from the extremal-disk solver
  double quasihyperbolic;  // 1/dist
  bool ok;  // mu/2 <= lambda <= mu and lambda <= quasihyperbolic, 2% slack
};

/// Density comparison at f(z): lambda_Omega(f(z)) = lambda_D(z)/|f'(z)|.
SandwichReport sandwich_check(const DiskUnionDomain& dom, const NumericConformalMap& f,
                              Complex z, const SolverOptions& opt = {});

struct DistanceCheckReport {
  Point2 a;
  double h;        // hyperbolic distance h(0, a) via the numeric map
  double f_bound;  // F(R_O, R_I, R_C)
  bool ok;         // h <= F + 1e-3
};

/// Verifies h(0, a) <= F for a point a with D(a, R_C) inside the
/// canonical domain of the triple.
DistanceCheckReport check_distance_bound(const RadiiTriple& t, Point2 a, int resolution = 4096);

}  // namespace kp

#endif

#include "kpbound/verify.hpp"

#include <cmath>

namespace kp {

VerificationReport check_main_bound(const RadiiTriple& t, int resolution) {
  BoundReport br = main_bound(t);
  DiskUnionDomain dom = DiskUnionDomain::canonical(t);
  NumericConformalMap f = NumericConformalMap::build(Domain{dom}, resolution);
  double sup = empirical_sup_derivative(f, resolution);
  VerificationReport rep;
  rep.triple = t;
  rep.bound_value = br.new_bound;
  rep.empirical_sup = sup;
  rep.margin = br.new_bound - sup;
  rep.samples = resolution;
  rep.method = f.kind();
  rep.pass = sup <= br.new_bound * (1 + 1e-3);
  return rep;
}

SandwichReport sandwich_check(const DiskUnionDomain& dom, const NumericConformalMap& f,
                              Complex z, const SolverOptions& opt) {
  if (std::abs(z) >= 1.0) throw std::invalid_argument("sandwich_check: |z| must be < 1");
  Complex w = f.map(z);
  Point2 p{w.real(), w.imag()};
  double lambda_disk = 1.0 / (1.0 - std::norm(z));
  double lambda = lambda_disk / std::abs(f.derivative(z));
  double mu = kp_density_numeric(Domain{dom}, p, opt).value;
  double qh = 1.0 / dom.distance_to_boundary(p);
  const double slack = 0.02;
  bool ok = lambda >= 0.5 * mu * (1 - slack) && lambda <= mu * (1 + slack) &&
            lambda <= qh * (1 + slack);
  return {p, lambda, mu, qh, ok};
}

DistanceCheckReport check_distance_bound(const RadiiTriple& t, Point2 a, int resolution) {
  DiskUnionDomain dom = DiskUnionDomain::canonical(t);
  if (dom.distance_to_boundary(a) < t.r_curv - 1e-9)
    throw std::invalid_argument("check_distance_bound: D(a, R_C) must lie inside the domain");
  auto [f_val, branch] = distance_bound_F(t);
  NumericConformalMap f = NumericConformalMap::build(Domain{dom}, resolution);
  Complex za = f.inverse(Complex(a.x, a.y));
  double h = 0.5 * std::log((1 + std::abs(za)) / (1 - std::abs(za)));
  return {a, h, f_val, h <= f_val + 1e-3};
}

}  // namespace kp

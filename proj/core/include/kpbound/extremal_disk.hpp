#ifndef KPBOUND_EXTREMAL_DISK_HPP
#define KPBOUND_EXTREMAL_DISK_HPP

#include <vector>

#include "kpbound/geometry.hpp"
#include "kpbound/metrics.hpp"

namespace kp {

struct SolverOptions {
  int grid_n = 64;            // coarse grid resolution per axis
  int top_cells = 5;          // grid cells refined by local search
  int max_iterations = 500;   // local-search iteration cap per start
  double objective_tol = 1e-10;
  int contact_samples = 4096;
  double contact_tol = 1e-7;
  bool compute_contacts = true;
};

/// Result of minimizing lambda_{D(a,r)}(z) = r/(r^2 - |z-a|^2) over
/// inscribed disks containing z. Since the objective decreases in r, the
/// search uses r = dist(a, boundary) and minimizes over the center a.
struct ExtremalDiskResult {
  Disk disk;
  MetricValue density;  // kp, numeric
  std::vector<std::vector<BoundaryPoint>> contact_components;
  int iterations = 0;
  bool converged = false;
  bool arc_contact = false;  // some contact component spans an arc
};

ExtremalDiskResult extremal_disk(const Domain& dom, Point2 z, const SolverOptions& opt = {});

MetricValue kp_density_numeric(const Domain& dom, Point2 z, const SolverOptions& opt = {});

struct PathLengthResult {
  MetricValue length;  // kp, numeric
  long samples = 0;    // density evaluations
  double estimated_error = 0.0;
};

/// Adaptive Simpson integration of the numeric KP density along the
/// segment [p, q]. Error estimate from step halving.
PathLengthResult kp_length_numeric(const Domain& dom, Point2 p, Point2 q,
                                   double rel_tol = 1e-4, const SolverOptions& opt = {});

/// Boundary points of the domain within `opt.contact_tol` of the circle
/// bounding `disk`, clustered into contiguous components.
std::vector<std::vector<BoundaryPoint>> contact_set(const Domain& dom, const Disk& disk,
                                                    const SolverOptions& opt = {});

}  // namespace kp

#endif

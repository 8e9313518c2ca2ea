#include "kpbound/extremal_disk.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <limits>

namespace kp {

namespace {

constexpr double kInfeasible = 1e300;

// Objective over centers, with r = dist(a, boundary). Outside the domain
// or with z outside the candidate disk the true objective is +inf; a
// growing penalty keeps the simplex search pointed back at the feasible set.
struct Objective {
  const Domain& dom;
  Point2 z;
  double scale;

  double radius_at(Point2 a) const {
    if (!contains(dom, a, 0.0)) return -1.0;
    return distance_to_boundary(dom, a);
  }

  double operator()(Point2 a) const {
    double r = radius_at(a);
    if (r <= 0) return kInfeasible * (1 + dist(a, z) / scale);
    double dz = dist(a, z);
    if (dz >= r) return 1e12 * (1 + (dz - r) / scale);
    return r / (r * r - dz * dz);
  }
};

struct NelderMeadResult {
  Point2 best;
  double value;
  int iterations;
  bool converged;
};

NelderMeadResult nelder_mead(const Objective& f, Point2 start, double step, int max_iter) {
  std::array<Point2, 3> x = {start, start + Point2{step, 0}, start + Point2{0, step}};
  std::array<double, 3> fx = {f(x[0]), f(x[1]), f(x[2])};
  int iter = 0;
  bool converged = false;
  auto order = [&] {
    // insertion sort of the 3-simplex by objective
    for (int i = 1; i < 3; ++i)
      for (int j = i; j > 0 && fx[j] < fx[j - 1]; --j) {
        std::swap(fx[j], fx[j - 1]);
        std::swap(x[j], x[j - 1]);
      }
  };
  order();
  for (; iter < max_iter; ++iter) {
    double diam = std::max(dist(x[0], x[1]), std::max(dist(x[0], x[2]), dist(x[1], x[2])));
    double spread = fx[2] - fx[0];
    if (diam < 1e-9 * (1 + norm(x[0])) && spread < 1e-13 * (1 + std::abs(fx[0]))) {
      converged = true;
      break;
    }
    Point2 centroid = 0.5 * (x[0] + x[1]);
    Point2 xr = centroid + 1.0 * (centroid - x[2]);
    double fr = f(xr);
    if (fr < fx[0]) {
      Point2 xe = centroid + 2.0 * (centroid - x[2]);
      double fe = f(xe);
      if (fe < fr) { x[2] = xe; fx[2] = fe; } else { x[2] = xr; fx[2] = fr; }
    } else if (fr < fx[1]) {
      x[2] = xr; fx[2] = fr;
    } else {
      Point2 xc = centroid + 0.5 * (x[2] - centroid);
      double fc = f(xc);
      if (fc < fx[2]) {
        x[2] = xc; fx[2] = fc;
      } else {  // shrink toward the best vertex
        for (int i = 1; i < 3; ++i) {
          x[i] = x[0] + 0.5 * (x[i] - x[0]);
          fx[i] = f(x[i]);
        }
      }
    }
    order();
  }
  return {x[0], fx[0], iter, converged};
}

}  // namespace

std::vector<std::vector<BoundaryPoint>> contact_set(const Domain& dom, const Disk& disk,
                                                    const SolverOptions& opt) {
  const int n = opt.contact_samples;
  const double total = boundary_sample_length(dom, disk.center);
  const double spacing = total / n;
  std::vector<BoundaryPoint> pts(n);
  std::vector<bool> hit(n);
  for (int i = 0; i < n; ++i) {
    pts[i] = boundary_sample(dom, i * spacing, disk.center);
    hit[i] = dist(pts[i].position, disk.center) - disk.radius < opt.contact_tol;
  }

  // Tangential contacts have a quadratic gap minimum that a coarse grid can
  // step over; refine every promising local minimum of the gap before
  // clustering.
  auto gap = [&](double t) {
    return dist(boundary_sample(dom, t, disk.center).position, disk.center) - disk.radius;
  };
  const double coarse = 1e-3 * (1 + disk.radius);
  for (int i = 0; i < n; ++i) {
    if (hit[i]) continue;
    double gi = dist(pts[i].position, disk.center) - disk.radius;
    double gl = dist(pts[(i + n - 1) % n].position, disk.center) - disk.radius;
    double gr = dist(pts[(i + 1) % n].position, disk.center) - disk.radius;
    if (gi > coarse || gi > gl || gi > gr) continue;
    double lo = (i - 1) * spacing, hi = (i + 1) * spacing;
    for (int it = 0; it < 100; ++it) {
      double m1 = lo + (hi - lo) / 3, m2 = hi - (hi - lo) / 3;
      (gap(m1) < gap(m2) ? hi : lo) = (gap(m1) < gap(m2) ? m2 : m1);
    }
    double tm = 0.5 * (lo + hi);
    if (gap(tm) < opt.contact_tol) {
      double tw = std::fmod(tm + total, total);
      pts[i] = boundary_sample(dom, tw, disk.center);
      hit[i] = true;
    }
  }

  std::vector<std::vector<BoundaryPoint>> components;
  std::vector<int> idx;
  auto flush = [&] {
    if (idx.empty()) return;
    std::vector<BoundaryPoint> comp;
    comp.reserve(idx.size());
    for (int i : idx) comp.push_back(pts[i]);
    components.push_back(std::move(comp));
    idx.clear();
  };
  for (int i = 0; i < n; ++i) {
    if (!hit[i]) { flush(); continue; }
    // break clusters across parameterization jumps (strip windows)
    if (!idx.empty() && dist(pts[idx.back()].position, pts[i].position) > 4 * spacing) flush();
    idx.push_back(i);
  }
  flush();
  // merge the wrap-around cluster for cyclic parameterizations
  if (components.size() > 1 && hit[0] && hit[n - 1] &&
      dist(pts[n - 1].position, pts[0].position) <= 4 * spacing) {
    auto last = std::move(components.back());
    components.pop_back();
    last.insert(last.end(), components.front().begin(), components.front().end());
    components.front() = std::move(last);
  }
  return components;
}

ExtremalDiskResult extremal_disk(const Domain& dom, Point2 z, const SolverOptions& opt) {
  if (!contains(dom, z, 0.0) || distance_to_boundary(dom, z) <= 0)
    throw std::domain_error("extremal_disk: query point must be interior");

  BoundingBox box = center_search_box(dom, z);
  const double scale = std::max(box.xmax - box.xmin, box.ymax - box.ymin);
  Objective f{dom, z, scale};

  // Coarse grid, then simplex refinement from the best few cells.
  const int n = opt.grid_n;
  struct Cand { double val; Point2 a; };
  std::vector<Cand> cands;
  cands.reserve(static_cast<size_t>(n + 1) * (n + 1) + 1);
  for (int i = 0; i <= n; ++i)
    for (int j = 0; j <= n; ++j) {
      Point2 a{box.xmin + (box.xmax - box.xmin) * i / n,
               box.ymin + (box.ymax - box.ymin) * j / n};
      double v = f(a);
      if (v < 1e11) cands.push_back({v, a});
    }
  cands.push_back({f(z), z});  // z itself is always feasible
  std::stable_sort(cands.begin(), cands.end(),
                   [](const Cand& a, const Cand& b) { return a.val < b.val; });

  const double cell = scale / n;
  NelderMeadResult best{z, std::numeric_limits<double>::infinity(), 0, false};
  int total_iter = 0;
  int starts = std::min<int>(opt.top_cells, static_cast<int>(cands.size()));
  for (int s = 0; s < starts; ++s) {
    NelderMeadResult r = nelder_mead(f, cands[s].a, cell, opt.max_iterations);
    // polish with a small fresh simplex; helps at conical minima
    NelderMeadResult r2 = nelder_mead(f, r.best, 1e-5 * (1 + norm(r.best)), opt.max_iterations);
    if (r2.value < r.value) r = {r2.best, r2.value, r.iterations + r2.iterations, r2.converged};
    total_iter += r.iterations;
    if (s == 0) { best = r; continue; }
    bool better = r.value < best.value - 1e-12 * std::abs(best.value);
    bool tie = std::abs(r.value - best.value) <= 1e-12 * std::abs(best.value);
    if (better || (tie && f.radius_at(r.best) > f.radius_at(best.best))) best = r;
  }

  ExtremalDiskResult res;
  double r = f.radius_at(best.best);
  res.disk = {best.best, r};
  res.density = {best.value, MetricKind::kulkarni_pinkall, Provenance::numeric};
  res.iterations = total_iter;
  res.converged = best.converged && best.value < 1e11;
  if (opt.compute_contacts && res.converged) {
    res.contact_components = contact_set(dom, res.disk, opt);
    double spacing = boundary_sample_length(dom, res.disk.center) / opt.contact_samples;
    for (const auto& comp : res.contact_components) {
      // consecutive samples in a component are one spacing apart, so the
      // sample count measures the arclength span (robust for full circles,
      // where the wrap-merged component's endpoints are adjacent)
      if (comp.size() > 10 ||
          (comp.size() >= 2 &&
           dist(comp.front().position, comp.back().position) > 10 * spacing))
        res.arc_contact = true;
    }
  }
  return res;
}

MetricValue kp_density_numeric(const Domain& dom, Point2 z, const SolverOptions& opt) {
  SolverOptions o = opt;
  o.compute_contacts = false;
  return extremal_disk(dom, z, o).density;
}

namespace {

struct SimpsonCtx {
  const Domain& dom;
  Point2 p, q;
  const SolverOptions& opt;
  long evals = 0;
  double err = 0.0;

  double g(double t) {
    ++evals;
    Point2 pt = p + t * (q - p);
    return kp_density_numeric(dom, pt, opt).value * dist(p, q);
  }

  double recurse(double a, double b, double fa, double fm, double fb, double whole,
                 double tol, int depth) {
    double m = 0.5 * (a + b);
    double flm = g(0.5 * (a + m)), frm = g(0.5 * (m + b));
    double left = (m - a) / 6 * (fa + 4 * flm + fm);
    double right = (b - m) / 6 * (fm + 4 * frm + fb);
    double delta = left + right - whole;
    if (depth >= 3 && (std::abs(delta) <= 15 * tol || depth >= 14)) {
      err += std::abs(delta) / 15;
      return left + right + delta / 15;
    }
    return recurse(a, m, fa, flm, fm, left, tol / 2, depth + 1) +
           recurse(m, b, fm, frm, fb, right, tol / 2, depth + 1);
  }
};

}  // namespace

PathLengthResult kp_length_numeric(const Domain& dom, Point2 p, Point2 q, double rel_tol,
                                   const SolverOptions& opt) {
  SolverOptions o = opt;
  o.compute_contacts = false;
  if (p.x == q.x && p.y == q.y)
    return {{0.0, MetricKind::kulkarni_pinkall, Provenance::numeric}, 0, 0.0};
  SimpsonCtx ctx{dom, p, q, o};
  double fa = ctx.g(0), fm = ctx.g(0.5), fb = ctx.g(1);
  double whole = (fa + 4 * fm + fb) / 6;
  double value = ctx.recurse(0, 1, fa, fm, fb, whole, rel_tol * std::abs(whole), 0);
  return {{value, MetricKind::kulkarni_pinkall, Provenance::numeric}, ctx.evals, ctx.err};
}

}  // namespace kp

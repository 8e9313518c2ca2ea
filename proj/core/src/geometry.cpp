#include "kpbound/geometry.hpp"

#include <algorithm>
#include <cmath>

namespace kp {

namespace {
constexpr double kPi = 3.14159265358979323846;

double wrap_angle(double a) {  // into [0, 2*pi)
  a = std::fmod(a, 2 * kPi);
  if (a < 0) a += 2 * kPi;
  return a;
}
}  // namespace

RadiiCheck validate_radii(const RadiiTriple& t) {
  if (!std::isfinite(t.r_outer) || !std::isfinite(t.r_inner) || !std::isfinite(t.r_curv))
    throw std::invalid_argument("validate_radii: non-finite input");
  if (t.r_outer <= 0 || t.r_inner <= 0 || t.r_curv <= 0)
    throw std::invalid_argument("validate_radii: radii must be positive");
  if (t.r_inner > t.r_outer)
    return {false, "R_I <= R_O violated"};
  // slack covers round-off for triples sitting exactly on the boundary,
  // e.g. the disk family (r+a, r-a, r)
  if (std::abs(t.r_inner - t.r_curv) >
      t.r_outer - t.r_curv + 1e-12 * (t.r_outer + t.r_curv))
    return {false, "|R_I - R_C| <= R_O - R_C violated"};
  return {true, ""};
}

Stadium::Stadium(Disk a, Disk b) : a_(a), b_(b) {
  if (!(a.radius > 0) || !(b.radius > 0))
    throw std::invalid_argument("Stadium: disk radii must be positive");
  d_ = dist(a.center, b.center);
  degenerate_ = d_ <= std::abs(a.radius - b.radius);
  build_pieces();
}

void Stadium::build_pieces() {
  pieces_.clear();
  if (degenerate_) {
    const Disk& big = a_.radius >= b_.radius ? a_ : b_;
    Piece arc{false, big.center, big.radius, 0.0, 2 * kPi, {}, {}, 2 * kPi * big.radius};
    pieces_.push_back(arc);
  } else {
    // External tangents touch both circles along the direction phi +- beta.
    const Point2 c1 = a_.center, c2 = b_.center;
    const double r1 = a_.radius, r2 = b_.radius;
    const double phi = std::atan2(c2.y - c1.y, c2.x - c1.x);
    const double beta = std::acos((r1 - r2) / d_);
    auto u = [](double ang) { return Point2{std::cos(ang), std::sin(ang)}; };
    const Point2 p1p = c1 + r1 * u(phi + beta), p1m = c1 + r1 * u(phi - beta);
    const Point2 p2p = c2 + r2 * u(phi + beta), p2m = c2 + r2 * u(phi - beta);

    // CCW: far cap of circle b, upper tangent back to circle a, far cap of
    // circle a, lower tangent back to circle b.
    Piece cap_b{false, c2, r2, phi - beta, phi + beta, {}, {}, r2 * 2 * beta};
    Piece top{true, {}, 0, 0, 0, p2p, p1p, dist(p2p, p1p)};
    Piece cap_a{false, c1, r1, phi + beta, phi - beta + 2 * kPi, {}, {}, r1 * (2 * kPi - 2 * beta)};
    Piece bot{true, {}, 0, 0, 0, p1m, p2m, dist(p1m, p2m)};
    pieces_ = {cap_b, top, cap_a, bot};
  }
  total_length_ = 0.0;
  for (const auto& p : pieces_) total_length_ += p.length;

  // Locate the rightmost boundary point to anchor the parameterization.
  double best_x = -1e300, best_y = 0, best_t = 0;
  double acc = 0.0;
  for (const auto& p : pieces_) {
    auto consider = [&](double x, double y, double t) {
      if (x > best_x + 1e-12 || (x > best_x - 1e-12 && std::abs(y) < std::abs(best_y))) {
        best_x = x;
        best_y = y;
        best_t = t;
      }
    };
    if (p.seg) {
      consider(p.p.x, p.p.y, acc);
      consider(p.q.x, p.q.y, acc + p.length);
    } else {
      consider(p.c.x + p.r * std::cos(p.ang0), p.c.y + p.r * std::sin(p.ang0), acc);
      consider(p.c.x + p.r * std::cos(p.ang1), p.c.y + p.r * std::sin(p.ang1), acc + p.length);
      // interior extremum of x over the arc is at angle 0 (mod 2*pi)
      for (double a = std::ceil(p.ang0 / (2 * kPi)) * 2 * kPi; a < p.ang1; a += 2 * kPi) {
        if (a > p.ang0) consider(p.c.x + p.r, p.c.y, acc + p.r * (a - p.ang0));
      }
    }
    acc += p.length;
  }
  start_offset_ = best_t;
}

BoundaryPoint Stadium::raw_boundary(double t) const {
  t = std::fmod(t, total_length_);
  if (t < 0) t += total_length_;
  for (const auto& p : pieces_) {
    if (t <= p.length || &p == &pieces_.back()) {
      t = std::min(t, p.length);
      if (p.seg) {
        Point2 dir = (1.0 / p.length) * (p.q - p.p);
        return {p.p + t * dir, 0.0, dir};
      }
      double a = p.ang0 + t / p.r;
      return {{p.c.x + p.r * std::cos(a), p.c.y + p.r * std::sin(a)},
              0.0,
              {-std::sin(a), std::cos(a)}};
    }
    t -= p.length;
  }
  throw std::logic_error("Stadium::raw_boundary: unreachable");
}

BoundaryPoint Stadium::boundary(double t) const {
  BoundaryPoint bp = raw_boundary(t + start_offset_);
  bp.arclength = std::fmod(t, total_length_);
  if (bp.arclength < 0) bp.arclength += total_length_;
  return bp;
}

bool Stadium::contains(Point2 z, double tol) const {
  if (dist(z, a_.center) <= a_.radius + tol) return true;
  if (degenerate_) return dist(z, b_.center) <= b_.radius + tol;
  if (dist(z, b_.center) <= b_.radius + tol) return true;
  // tangent quadrilateral, CCW winding
  const Piece& top = pieces_[1];
  const Piece& bot = pieces_[3];
  Point2 v[4] = {bot.p, bot.q, top.p, top.q};  // p1-, p2-, p2+, p1+
  for (int i = 0; i < 4; ++i) {
    Point2 e = v[(i + 1) % 4] - v[i];
    if (cross(e, z - v[i]) < -tol * (norm(e) + 1)) return false;
  }
  return true;
}

double Stadium::distance_to_boundary(Point2 z) const {
  double best = 1e300;
  for (const auto& p : pieces_) {
    if (p.seg) {
      Point2 e = p.q - p.p;
      double s = std::clamp(dot(z - p.p, e) / dot(e, e), 0.0, 1.0);
      best = std::min(best, dist(z, p.p + s * e));
    } else {
      double rho = dist(z, p.c);
      double ang = wrap_angle(std::atan2(z.y - p.c.y, z.x - p.c.x));
      bool in_span = false;
      for (double a = ang; a < p.ang1 + 1e-12; a += 2 * kPi)
        if (a >= p.ang0 - 1e-12) { in_span = true; break; }
      if (in_span) {
        best = std::min(best, std::abs(p.r - rho));
      } else {
        Point2 e0{p.c.x + p.r * std::cos(p.ang0), p.c.y + p.r * std::sin(p.ang0)};
        Point2 e1{p.c.x + p.r * std::cos(p.ang1), p.c.y + p.r * std::sin(p.ang1)};
        best = std::min({best, dist(z, e0), dist(z, e1)});
      }
    }
  }
  if (!contains(z, 1e-9))
    throw std::domain_error("distance_to_boundary: point outside the domain");
  return best;
}

std::optional<SectorSpec> Stadium::sector() const {
  if (a_.radius == b_.radius) return std::nullopt;  // strip-like, no finite vertex
  if (degenerate_ && d_ < std::abs(a_.radius - b_.radius)) return std::nullopt;
  const Disk& small = a_.radius < b_.radius ? a_ : b_;
  const Disk& big = a_.radius < b_.radius ? b_ : a_;
  double theta = (d_ > 0) ? std::asin(std::min(1.0, (big.radius - small.radius) / d_)) : kPi / 2;
  if (d_ <= std::abs(a_.radius - b_.radius)) theta = kPi / 2;
  Point2 axis = d_ > 0 ? (1.0 / d_) * (big.center - small.center) : Point2{1, 0};
  Point2 vertex = small.center - (small.radius / std::sin(theta)) * axis;
  return SectorSpec{theta, vertex, std::atan2(axis.y, axis.x)};
}

BoundingBox Stadium::bounding_box() const {
  auto box_of = [](const Disk& dsk) {
    return BoundingBox{dsk.center.x - dsk.radius, dsk.center.x + dsk.radius,
                       dsk.center.y - dsk.radius, dsk.center.y + dsk.radius};
  };
  BoundingBox ba = box_of(a_), bb = box_of(b_);
  if (degenerate_) return a_.radius >= b_.radius ? ba : bb;
  return {std::min(ba.xmin, bb.xmin), std::max(ba.xmax, bb.xmax),
          std::min(ba.ymin, bb.ymin), std::max(ba.ymax, bb.ymax)};
}

double Stadium::ray_boundary_distance(Point2 origin, double angle) const {
  if (!contains(origin, 0.0))
    throw std::domain_error("ray_boundary_distance: origin must be interior");
  const Point2 u{std::cos(angle), std::sin(angle)};
  double best = -1.0;
  for (const auto& p : pieces_) {
    if (p.seg) {
      // solve origin + t*u = p.p + s*e
      Point2 e = p.q - p.p;
      double den = cross(u, e);
      if (std::abs(den) < 1e-300) continue;
      double t = cross(p.p - origin, e) / den;
      double s = cross(p.p - origin, u) / den;
      if (t > 0 && s >= -1e-12 && s <= 1 + 1e-12) best = std::max(best, t);
    } else {
      Point2 oc = origin - p.c;
      double b = dot(u, oc);
      double disc = b * b - (dot(oc, oc) - p.r * p.r);
      if (disc < 0) continue;
      double sq = std::sqrt(disc);
      for (double tt : {-b + sq, -b - sq}) {
        if (tt <= 0) continue;
        Point2 w = origin + tt * u;
        double a = wrap_angle(std::atan2(w.y - p.c.y, w.x - p.c.x));
        bool in_span = false;
        for (double ang = a; ang < p.ang1 + 1e-9; ang += 2 * kPi)
          if (ang >= p.ang0 - 1e-9) { in_span = true; break; }
        if (in_span) best = std::max(best, tt);
      }
    }
  }
  if (best > 0) return best;
  // fallback: bisection on containment (piece-junction corner cases)
  double lo = 0, hi = 1e-6;
  while (contains(origin + hi * u, 0.0) && hi < 1e12) hi *= 2;
  for (int i = 0; i < 200 && hi - lo > 1e-15 * (1 + hi); ++i) {
    double mid = 0.5 * (lo + hi);
    (contains(origin + mid * u, 0.0) ? lo : hi) = mid;
  }
  return 0.5 * (lo + hi);
}

DiskUnionDomain DiskUnionDomain::canonical(const RadiiTriple& t) {
  RadiiCheck chk = validate_radii(t);
  if (!chk.ok)
    throw std::invalid_argument("canonical domain: invalid radii triple: " + chk.reason);
  const double RO = t.r_outer, RI = t.r_inner, RC = t.r_curv;
  if (RI > RC) {
    // K = hull(D(0, RI-RC) u {RO-RC}); Omega = hull(D(0,RI) u D(RO-RC, RC))
    return DiskUnionDomain(t, Stadium({{0, 0}, RI}, {{RO - RC, 0}, RC}));
  }
  // K = [RC-RI, RO-RC]
  return DiskUnionDomain(t, Stadium({{RC - RI, 0}, RC}, {{RO - RC, 0}, RC}));
}

bool contains(const Domain& dom, Point2 z, double tol) {
  return std::visit(
      [&](const auto& d) -> bool {
        using T = std::decay_t<decltype(d)>;
        if constexpr (std::is_same_v<T, Disk>)
          return dist(z, d.center) <= d.radius + tol;
        else if constexpr (std::is_same_v<T, Strip>)
          return std::abs(z.y) <= d.halfwidth + tol;
        else
          return d.contains(z, tol);
      },
      dom);
}

double distance_to_boundary(const Domain& dom, Point2 z) {
  return std::visit(
      [&](const auto& d) -> double {
        using T = std::decay_t<decltype(d)>;
        if constexpr (std::is_same_v<T, Disk>) {
          double v = d.radius - dist(z, d.center);
          if (v < -1e-9) throw std::domain_error("distance_to_boundary: exterior point");
          return std::max(v, 0.0);
        } else if constexpr (std::is_same_v<T, Strip>) {
          double v = d.halfwidth - std::abs(z.y);
          if (v < -1e-9) throw std::domain_error("distance_to_boundary: exterior point");
          return std::max(v, 0.0);
        } else {
          return d.distance_to_boundary(z);
        }
      },
      dom);
}

BoundingBox center_search_box(const Domain& dom, Point2 z) {
  return std::visit(
      [&](const auto& d) -> BoundingBox {
        using T = std::decay_t<decltype(d)>;
        if constexpr (std::is_same_v<T, Disk>) {
          return {d.center.x - d.radius, d.center.x + d.radius,
                  d.center.y - d.radius, d.center.y + d.radius};
        } else if constexpr (std::is_same_v<T, Strip>) {
          double h = d.halfwidth;
          return {z.x - 1.5 * h, z.x + 1.5 * h, -h, h};
        } else if constexpr (std::is_same_v<T, Stadium>) {
          return d.bounding_box();
        } else {
          return d.hull().bounding_box();
        }
      },
      dom);
}

double boundary_sample_length(const Domain& dom, Point2 hint) {
  return std::visit(
      [&](const auto& d) -> double {
        using T = std::decay_t<decltype(d)>;
        if constexpr (std::is_same_v<T, Disk>)
          return 2 * kPi * d.radius;
        else if constexpr (std::is_same_v<T, Strip>)
          return 2 * (8 * d.halfwidth);  // two line windows around the hint
        else
          return d.boundary_length();
      },
      dom);
}

BoundaryPoint boundary_sample(const Domain& dom, double t, Point2 hint) {
  return std::visit(
      [&](const auto& d) -> BoundaryPoint {
        using T = std::decay_t<decltype(d)>;
        if constexpr (std::is_same_v<T, Disk>) {
          double a = t / d.radius;
          return {{d.center.x + d.radius * std::cos(a), d.center.y + d.radius * std::sin(a)},
                  t,
                  {-std::sin(a), std::cos(a)}};
        } else if constexpr (std::is_same_v<T, Strip>) {
          double w = 8 * d.halfwidth;  // window per line
          if (t < w) return {{hint.x - w / 2 + t, d.halfwidth}, t, {1, 0}};
          double s = t - w;
          return {{hint.x + w / 2 - s, -d.halfwidth}, t, {-1, 0}};
        } else {
          return d.boundary(t);
        }
      },
      dom);
}

Disk find_touching_disk(const DiskUnionDomain& dom, const BoundaryPoint& w) {
  const double rc = dom.union_radius();
  // CCW tangent -> outward normal is tangent rotated by -pi/2
  Point2 n_out{w.unit_tangent.y, -w.unit_tangent.x};
  Point2 a = w.position - rc * n_out;
  double slack = dom.distance_to_boundary(a) - rc;
  if (slack < -1e-9)
    throw std::domain_error("find_touching_disk: touching disk leaves the domain");
  return {a, rc};
}

}  // namespace kp

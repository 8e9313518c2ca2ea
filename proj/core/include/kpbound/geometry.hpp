#ifndef KPBOUND_GEOMETRY_HPP
#define KPBOUND_GEOMETRY_HPP

#include <cmath>
#include <optional>
#include <stdexcept>
#include <string>
#include <variant>
#include <vector>

namespace kp {

struct Point2 {
  double x = 0.0;
  double y = 0.0;

  friend Point2 operator+(Point2 a, Point2 b) { return {a.x + b.x, a.y + b.y}; }
  friend Point2 operator-(Point2 a, Point2 b) { return {a.x - b.x, a.y - b.y}; }
  friend Point2 operator*(double s, Point2 p) { return {s * p.x, s * p.y}; }
};

inline double dot(Point2 a, Point2 b) { return a.x * b.x + a.y * b.y; }
inline double cross(Point2 a, Point2 b) { return a.x * b.y - a.y * b.x; }
inline double norm(Point2 p) { return std::hypot(p.x, p.y); }
inline double dist(Point2 a, Point2 b) { return norm(a - b); }

/// D(a,r) = { z : |a - z| < r }
struct Disk {
  Point2 center;
  double radius = 1.0;
};

/// Infinite strip { |Im z| < halfwidth }. Used as an unbounded reference
/// domain for the extremal-disk solver; not part of the serialized schema.
struct Strip {
  double halfwidth = 1.0;
};

/// The (R_O, R_I, R_C) data of a convex C^{1,1} domain containing 0:
/// outer radius, inner radius, and the curvature radius such that the
/// domain is a union of open disks of radius R_C.
struct RadiiTriple {
  double r_outer;
  double r_inner;
  double r_curv;
};

struct RadiiCheck {
  bool ok;
  std::string reason;  // empty when ok
};

/// Validates positivity, R_I <= R_O and |R_I - R_C| <= R_O - R_C.
/// Throws std::invalid_argument on non-finite input.
RadiiCheck validate_radii(const RadiiTriple& t);

struct BoundaryPoint {
  Point2 position;
  double arclength = 0.0;
  Point2 unit_tangent;
};

struct BoundingBox {
  double xmin, xmax, ymin, ymax;
};

/// Infinite sector {|Arg w| < half_angle} after the rigid motion
/// w = exp(-i*axis_angle) * (z - vertex).
struct SectorSpec {
  double half_angle;
  Point2 vertex;
  double axis_angle;
};

/// Convex hull of the union of two open disks. Boundary is parameterized
/// counterclockwise by arclength, starting at the rightmost boundary point.
/// A degenerate stadium (one disk inside the other) collapses to the
/// larger disk.
class Stadium {
 public:
  Stadium(Disk a, Disk b);

  const Disk& disk_a() const { return a_; }
  const Disk& disk_b() const { return b_; }
  double r1() const { return a_.radius; }
  double r2() const { return b_.radius; }
  double center_distance() const { return d_; }
  bool degenerate() const { return degenerate_; }

  double boundary_length() const { return total_length_; }
  BoundaryPoint boundary(double t) const;

  bool contains(Point2 z, double tol = 1e-12) const;
  /// Exact distance to the boundary; throws std::domain_error for
  /// exterior points (beyond a 1e-9 slack).
  double distance_to_boundary(Point2 z) const;

  /// Circumscribing infinite sector, defined when the two radii differ
  /// and d >= |r2 - r1| (half-angle pi/2 at the tangency case d = |r2-r1|).
  std::optional<SectorSpec> sector() const;

  BoundingBox bounding_box() const;

  /// Distance along the ray origin + t*(cos angle, sin angle) to the
  /// boundary crossing. Requires origin interior.
  double ray_boundary_distance(Point2 origin, double angle) const;

 private:
  struct Piece {  // arc (seg == false) or tangent segment
    bool seg;
    Point2 c;          // arc center / segment start
    double r;          // arc radius
    double ang0, ang1; // arc angular span, ang1 > ang0, CCW
    Point2 p, q;       // segment endpoints
    double length;
  };

  Disk a_, b_;
  double d_;
  bool degenerate_;
  std::vector<Piece> pieces_;
  double total_length_ = 0.0;
  double start_offset_ = 0.0;  // raw arclength of the rightmost point

  BoundaryPoint raw_boundary(double t) const;
  void build_pieces();
};

/// Union of disks D(z, R_C) over a convex hull set K, following the
/// canonical construction: for R_I > R_C, K = hull(D(0, R_I - R_C) u
/// {R_O - R_C}); otherwise K = [R_C - R_I, R_O - R_C]. Either way the
/// result is a stadium, which this class wraps together with R_C.
class DiskUnionDomain {
 public:
  static DiskUnionDomain canonical(const RadiiTriple& t);

  const RadiiTriple& triple() const { return triple_; }
  double union_radius() const { return triple_.r_curv; }
  const Stadium& hull() const { return hull_; }

  double boundary_length() const { return hull_.boundary_length(); }
  BoundaryPoint boundary(double t) const { return hull_.boundary(t); }
  bool contains(Point2 z, double tol = 1e-12) const { return hull_.contains(z, tol); }
  double distance_to_boundary(Point2 z) const { return hull_.distance_to_boundary(z); }

 private:
  DiskUnionDomain(RadiiTriple t, Stadium hull) : triple_(t), hull_(std::move(hull)) {}
  RadiiTriple triple_;
  Stadium hull_;
};

using Domain = std::variant<Disk, Stadium, DiskUnionDomain, Strip>;

bool contains(const Domain& dom, Point2 z, double tol = 1e-12);
double distance_to_boundary(const Domain& dom, Point2 z);

/// Search window for inscribed-disk centers admissible for the query
/// point z. Bounded domains return their bounding box; for the strip the
/// feasibility constraint |z - a| < dist(a, boundary) <= halfwidth
/// confines centers to a window around z, so no truncation is involved.
BoundingBox center_search_box(const Domain& dom, Point2 z);

/// Boundary parameterization length for contact-set sampling. For the
/// strip this is the (finite) window of the two boundary lines relevant
/// to a disk centered near `hint`.
double boundary_sample_length(const Domain& dom, Point2 hint);
BoundaryPoint boundary_sample(const Domain& dom, double t, Point2 hint);

/// The disk D(a, R_C) inscribed in the domain and tangent to the boundary
/// at w, with a on the inward normal at w. Throws std::domain_error if the
/// constructed disk leaves the domain by more than 1e-9.
Disk find_touching_disk(const DiskUnionDomain& dom, const BoundaryPoint& w);

inline std::optional<SectorSpec> stadium_sector(const Stadium& s) { return s.sector(); }

}  // namespace kp

#endif

#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>

#include "kpbound/extremal_disk.hpp"
#include "kpbound/metrics.hpp"
#include "test_helpers.hpp"

using namespace kp;
using kptest::close_abs;
using kptest::close_rel;

namespace {
constexpr double kPi = 3.14159265358979323846;
}

TEST_CASE("extremal disk in a disk domain is the whole disk") {
  Domain dom = Disk{{0, 0}, 2};
  kptest::Rng rng(41);
  for (int i = 0; i < 5; ++i) {
    double ang = rng.uniform(0, 2 * kPi), rad = rng.uniform(0, 1.6);
    Point2 z{rad * std::cos(ang), rad * std::sin(ang)};
    ExtremalDiskResult res = extremal_disk(dom, z);
    CHECK(res.converged);
    CHECK(close_abs(res.disk.center.x, 0, 1e-6));
    CHECK(close_abs(res.disk.center.y, 0, 1e-6));
    CHECK(close_rel(res.density.value, hyperbolic_density_disk(2, rad).value, 1e-6));
    // the whole boundary is in contact: one arc component
    CHECK(res.arc_contact);
  }
}

TEST_CASE("extremal disk on the strip axis is D(x, h)") {
  Domain dom = Strip{1};
  for (double x : {0.0, 0.7, -2.3}) {
    ExtremalDiskResult res = extremal_disk(dom, {x, 0});
    CHECK(res.converged);
    CHECK(close_abs(res.disk.center.x, x, 1e-6));
    CHECK(close_abs(res.disk.center.y, 0, 1e-6));
    CHECK(close_abs(res.disk.radius, 1, 1e-6));
    CHECK(close_rel(res.density.value, 1.0, 1e-6));
    // contact set {x-i, x+i}: two point components
    CHECK(res.contact_components.size() == 2);
    CHECK_FALSE(res.arc_contact);
  }
}

TEST_CASE("extremal disk at the larger center of S(2,1,2) is D_R") {
  Domain dom = Stadium({{0, 0}, 2}, {{2, 0}, 1});
  ExtremalDiskResult res = extremal_disk(dom, {0, 0});
  CHECK(res.converged);
  CHECK(close_abs(res.disk.center.x, 0, 1e-5));
  CHECK(close_abs(res.disk.center.y, 0, 1e-5));
  CHECK(close_rel(res.density.value, 0.5, 1e-5));
  CHECK(res.arc_contact);  // the stadium's large cap
}

TEST_CASE("numeric density matches closed forms") {
  // disk
  CHECK(close_rel(kp_density_numeric(Disk{{0, 0}, 2}, {1, 0}).value, 2.0 / 3.0, 1e-6));
  // canonical (1,1,1) = D(0,1)
  CHECK(close_rel(kp_density_numeric(Domain{DiskUnionDomain::canonical({1, 1, 1})}, {0, 0}).value,
                  1.0, 1e-6));
  // strip axis
  CHECK(close_rel(kp_density_numeric(Strip{2}, {0.3, 0}).value, 0.5, 1e-6));

  // sector of half-angle pi/4, realized as a long truncated stadium
  // around the axis; on-axis density ~ cot(pi/8)/(2x)
  double theta = kPi / 4;
  double x1 = 3.0, x2 = 60.0;  // generating disks tangent to the sector sides
  Stadium sec({{x1, 0}, x1 * std::sin(theta)}, {{x2, 0}, x2 * std::sin(theta)});
  double x = 12.0;
  double expected = kp_density_sector_axis(theta, x).value;
  CHECK(close_rel(kp_density_numeric(Domain{sec}, {x, 0}).value, expected, 1e-3));
}

TEST_CASE("every converged result has >= 2 contacts or an arc component") {
  kptest::Rng rng(42);
  Domain doms[] = {Domain{Disk{{0.3, -0.2}, 1.5}}, Domain{Stadium({{0, 0}, 2}, {{2, 0}, 1})},
                   Domain{DiskUnionDomain::canonical({0.6, 0.5, 0.4})}};
  for (const auto& dom : doms) {
    for (int i = 0; i < 5; ++i) {
      // rejection-sample an interior point
      Point2 z;
      BoundingBox bb = center_search_box(dom, {0, 0});
      do {
        z = {rng.uniform(bb.xmin, bb.xmax), rng.uniform(bb.ymin, bb.ymax)};
      } while (!contains(dom, z, 0.0) || distance_to_boundary(dom, z) < 0.05);
      ExtremalDiskResult res = extremal_disk(dom, z);
      CHECK(res.converged);
      size_t pts = 0;
      for (const auto& c : res.contact_components) pts += c.size();
      CHECK((pts >= 2 || res.arc_contact));
      // inscribed: sampled containment
      CHECK(distance_to_boundary(dom, res.disk.center) >= res.disk.radius - 1e-7);
    }
  }
}

TEST_CASE("extremal disk is monotone under domain shrinking") {
  // Omega2 = S(2,1,2); at z = (0,0) the extremal disk is D((0,0),2),
  // which also lies in Omega1 = D(0,2) subset Omega2.
  Domain omega2 = Stadium({{0, 0}, 2}, {{2, 0}, 1});
  Domain omega1 = Disk{{0, 0}, 2};
  ExtremalDiskResult big = extremal_disk(omega2, {0, 0});
  ExtremalDiskResult small = extremal_disk(omega1, {0, 0});
  CHECK(close_abs(dist(big.disk.center, small.disk.center), 0, 1e-5));
  CHECK(close_abs(big.disk.radius, small.disk.radius, 1e-5));

  // density can only grow when the domain shrinks
  kptest::Rng rng(43);
  for (int i = 0; i < 5; ++i) {
    Point2 z{rng.uniform(-0.8, 0.8), rng.uniform(-0.8, 0.8)};
    double mu1 = kp_density_numeric(omega1, z).value;
    double mu2 = kp_density_numeric(omega2, z).value;
    CHECK(mu1 >= mu2 - 1e-6);
  }
}

TEST_CASE("contact_set fixtures") {
  // strictly interior disk: no contacts
  CHECK(contact_set(Domain{Disk{{0, 0}, 2}}, {{0, 0}, 1}).empty());
  // D(x,1) in the strip: two point components at x +- i
  auto comps = contact_set(Domain{Strip{1}}, {{0.5, 0}, 1});
  CHECK(comps.size() == 2);
  for (const auto& c : comps) {
    CHECK(close_abs(c.front().position.x, 0.5, 1e-2));
    CHECK(close_abs(std::abs(c.front().position.y), 1.0, 1e-9));
  }
  // D_R in S(2,1,2): a single arc component (the large cap)
  Domain st = Stadium({{0, 0}, 2}, {{2, 0}, 1});
  auto comps2 = contact_set(st, {{0, 0}, 2});
  CHECK(comps2.size() == 1);
  CHECK(comps2[0].size() > 10);
}

TEST_CASE("KP path length matches the closed forms on stadiums") {
  struct Case { double R, r, d, tol; };
  // covers all three branches of the center-distance formula
  Case cases[] = {{1, 1, 3, 1e-3}, {1, 1, 0.5, 1e-3}, {2, 1, 1, 1e-3},
                  {2, 1, 2, 1e-2}, {2, 1, 3, 1e-2}};
  for (const auto& c : cases) {
    Domain dom = Stadium({{0, 0}, c.R}, {{c.d, 0}, c.r});
    double expected = kp_distance_stadium_centers(c.R, c.r, c.d).first.value;
    PathLengthResult res = kp_length_numeric(dom, {0, 0}, {c.d, 0}, 1e-4);
    CHECK(close_rel(res.length.value, expected, c.tol));
    CHECK(res.samples > 0);
    CHECK(res.estimated_error >= 0);
  }
}

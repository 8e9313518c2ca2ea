#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>

#include "kpbound/geometry.hpp"
#include "test_helpers.hpp"

using namespace kp;
using kptest::close_abs;

namespace {
constexpr double kPi = 3.14159265358979323846;
}

TEST_CASE("validate_radii") {
  CHECK(validate_radii({0.6, 0.5, 0.4}).ok);
  CHECK(validate_radii({1, 1, 1}).ok);
  CHECK_FALSE(validate_radii({1, 0.2, 0.7}).ok);  // |0.2-0.7| = 0.5 > 0.3
  CHECK_FALSE(validate_radii({1, 1.5, 1}).ok);    // R_I > R_O
  CHECK_THROWS_AS(validate_radii({-1, 1, 1}), std::invalid_argument);
  CHECK_THROWS_AS(validate_radii({1, std::nan(""), 1}), std::invalid_argument);

  // monotone: enlarging R_O never invalidates
  kptest::Rng rng(21);
  for (int i = 0; i < 200; ++i) {
    double ro = rng.uniform(0.1, 3), ri = rng.uniform(0.05, 3), rc = rng.uniform(0.05, 3);
    if (!validate_radii({ro, ri, rc}).ok) continue;
    CHECK(validate_radii({ro + rng.uniform(0, 2), ri, rc}).ok);
  }
}

TEST_CASE("canonical domain fixtures") {
  // (1,1,1): K = {0}, the unit disk
  auto d1 = DiskUnionDomain::canonical({1, 1, 1});
  CHECK(d1.hull().degenerate());
  CHECK(d1.distance_to_boundary({0, 0}) == doctest::Approx(1.0));

  // (3,1,2): K = {1}, the disk D(1,2)
  auto d2 = DiskUnionDomain::canonical({3, 1, 2});
  CHECK(d2.hull().degenerate());
  CHECK(d2.distance_to_boundary({1, 0}) == doctest::Approx(2.0));
  CHECK(d2.distance_to_boundary({0, 0}) == doctest::Approx(1.0));

  CHECK_THROWS(DiskUnionDomain::canonical({1, 0.2, 0.7}));
}

TEST_CASE("canonical domain boundary radii by dense sampling") {
  auto dom = DiskUnionDomain::canonical({0.6, 0.5, 0.4});
  double L = dom.boundary_length();
  double rmax = 0, rmin = 1e300;
  for (int i = 0; i < 10000; ++i) {
    Point2 p = dom.boundary(L * i / 10000).position;
    rmax = std::max(rmax, norm(p));
    rmin = std::min(rmin, norm(p));
  }
  CHECK(close_abs(rmax, 0.6, 1e-9));
  CHECK(close_abs(rmin, 0.5, 1e-9));
}

TEST_CASE("containment D(0,R_I) in Omega in D(0,R_O)") {
  kptest::Rng rng(22);
  RadiiTriple cases[] = {{0.6, 0.5, 0.4}, {3, 1, 2}, {2, 1.5, 1}, {1.2, 0.7, 0.9}};
  for (const auto& t : cases) {
    REQUIRE(validate_radii(t).ok);
    auto dom = DiskUnionDomain::canonical(t);
    double L = dom.boundary_length();
    for (int i = 0; i < 10000; ++i) {
      Point2 p = dom.boundary(L * i / 10000).position;
      CHECK(norm(p) <= t.r_outer + 1e-9);
      CHECK(norm(p) >= t.r_inner - 1e-9);
    }
  }
}

TEST_CASE("stadium boundary parameterization") {
  // S(1,1,0): the unit circle, start at the rightmost point, CCW
  Stadium circle({{0, 0}, 1}, {{0, 0}, 1});
  BoundaryPoint bp = circle.boundary(0);
  CHECK(close_abs(bp.position.x, 1, 1e-12));
  CHECK(close_abs(bp.position.y, 0, 1e-12));
  CHECK(close_abs(bp.unit_tangent.x, 0, 1e-12));
  CHECK(close_abs(bp.unit_tangent.y, 1, 1e-12));

  // S(1,1,2): two semicircles plus two segments of length 2
  Stadium s({{0, 0}, 1}, {{2, 0}, 1});
  CHECK(s.boundary_length() == doctest::Approx(2 * kPi + 4));

  // finite-difference tangent agrees with the reported tangent
  kptest::Rng rng(23);
  Stadium s2({{0, 0}, 2}, {{2, 0}, 1});
  double L = s2.boundary_length();
  for (int i = 0; i < 100; ++i) {
    double t = rng.uniform(0, L);
    double h = 1e-6;
    Point2 fd = (0.5 / h) * (s2.boundary(t + h).position - s2.boundary(t - h).position);
    Point2 tan = s2.boundary(t).unit_tangent;
    // a kink inside the difference stencil costs O(h) in one component
    CHECK(close_abs(fd.x, tan.x, 1e-5));
    CHECK(close_abs(fd.y, tan.y, 1e-5));
  }
  // periodicity and unit tangent
  for (int i = 0; i < 50; ++i) {
    double t = rng.uniform(0, L);
    CHECK(close_abs(norm(s2.boundary(t).unit_tangent), 1.0, 1e-12));
    CHECK(close_abs(dist(s2.boundary(t).position, s2.boundary(t + L).position), 0, 1e-9));
  }
}

TEST_CASE("stadium tangent Lipschitz bound") {
  kptest::Rng rng(24);
  Stadium cases[] = {Stadium({{0, 0}, 2}, {{2, 0}, 1}), Stadium({{0, 0}, 1}, {{3, 1}, 1}),
                     Stadium({{-1, 0.5}, 0.8}, {{2, -0.3}, 1.4})};
  for (const auto& s : cases) {
    double lip = 1.0 / std::min(s.r1(), s.r2());
    double L = s.boundary_length();
    for (int i = 0; i < 500; ++i) {
      double t1 = rng.uniform(0, L), t2 = rng.uniform(0, L);
      double dt = std::abs(t1 - t2);
      dt = std::min(dt, L - dt);  // periodic gap
      Point2 dw = s.boundary(t1).unit_tangent - s.boundary(t2).unit_tangent;
      CHECK(norm(dw) <= lip * dt + 1e-6);
    }
  }
}

TEST_CASE("distance_to_boundary") {
  CHECK(distance_to_boundary(Disk{{0, 0}, 1}, {0, 0}) == doctest::Approx(1.0));
  Stadium s({{0, 0}, 2}, {{2, 0}, 1});
  CHECK(s.distance_to_boundary({0, 0}) == doctest::Approx(2.0));
  auto dom = DiskUnionDomain::canonical({0.6, 0.5, 0.4});
  CHECK(dom.distance_to_boundary({0, 0}) == doctest::Approx(0.5));
  CHECK_THROWS_AS(s.distance_to_boundary({10, 0}), std::domain_error);
  CHECK_THROWS_AS(distance_to_boundary(Disk{{0, 0}, 1}, {2, 0}), std::domain_error);
}

TEST_CASE("distance_to_boundary agrees with dense boundary sampling") {
  kptest::Rng rng(25);
  Stadium s({{0, 0}, 2}, {{2.5, 0.5}, 1});
  double L = s.boundary_length();
  for (int i = 0; i < 50; ++i) {
    Point2 z{rng.uniform(-1.5, 3), rng.uniform(-1.5, 1.5)};
    if (!s.contains(z, 0.0) || s.distance_to_boundary(z) < 1e-3) continue;
    double sampled = 1e300;
    for (int j = 0; j < 20000; ++j)
      sampled = std::min(sampled, dist(z, s.boundary(L * j / 20000).position));
    CHECK(close_abs(s.distance_to_boundary(z), sampled, 1e-5));
  }
}

TEST_CASE("find_touching_disk") {
  // disk domain with R_C = radius: center returned
  auto d1 = DiskUnionDomain::canonical({1, 1, 1});
  Disk t1 = find_touching_disk(d1, d1.boundary(0));
  CHECK(close_abs(t1.center.x, 0, 1e-12));
  CHECK(close_abs(t1.center.y, 0, 1e-12));

  auto d2 = DiskUnionDomain::canonical({3, 1, 2});  // D(1,2), w = (3,0) -> a = (1,0)
  Disk t2 = find_touching_disk(d2, d2.boundary(0));
  CHECK(close_abs(t2.center.x, 1, 1e-12));
  CHECK(close_abs(t2.center.y, 0, 1e-12));

  // canonical (0.6,0.5,0.4): w = (0.6,0) -> a = (0.2,0)
  auto d3 = DiskUnionDomain::canonical({0.6, 0.5, 0.4});
  Disk t3 = find_touching_disk(d3, d3.boundary(0));
  CHECK(close_abs(t3.center.x, 0.2, 1e-9));
  CHECK(close_abs(t3.center.y, 0, 1e-9));

  // round trip along the whole boundary: returned disk stays inside
  kptest::Rng rng(26);
  double L = d3.boundary_length();
  for (int i = 0; i < 200; ++i) {
    Disk td = find_touching_disk(d3, d3.boundary(rng.uniform(0, L)));
    CHECK(d3.distance_to_boundary(td.center) >= td.radius - 1e-9);
  }
}

TEST_CASE("stadium_sector") {
  auto sec1 = stadium_sector(Stadium({{0, 0}, 2}, {{2, 0}, 1}));
  REQUIRE(sec1.has_value());
  CHECK(sec1->half_angle == doctest::Approx(kPi / 6));  // asin(1/2)

  auto sec2 = stadium_sector(Stadium({{0, 0}, 2}, {{1, 0}, 1}));  // d = R - r
  REQUIRE(sec2.has_value());
  CHECK(sec2->half_angle == doctest::Approx(kPi / 2));

  CHECK_FALSE(stadium_sector(Stadium({{0, 0}, 1}, {{5, 0}, 1})).has_value());  // equal radii
  CHECK_FALSE(stadium_sector(Stadium({{0, 0}, 3}, {{0.5, 0}, 1})).has_value());  // degenerate

  // vertex of the circumscribed sector lies on the tangent lines
  auto s = Stadium({{0, 0}, 2}, {{2, 0}, 1});
  auto sec = *s.sector();
  // distance from the vertex to the large circle center = R / sin(theta)
  CHECK(close_abs(dist(sec.vertex, {0, 0}), 2.0 / std::sin(sec.half_angle), 1e-9));
}

TEST_CASE("degenerate stadium falls back to the larger disk") {
  Stadium s({{0, 0}, 3}, {{0.5, 0}, 1});
  CHECK(s.degenerate());
  CHECK(s.boundary_length() == doctest::Approx(2 * kPi * 3));
  CHECK(s.distance_to_boundary({0, 0}) == doctest::Approx(3.0));
}

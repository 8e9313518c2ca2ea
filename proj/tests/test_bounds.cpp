#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>

#include "kpbound/bounds.hpp"
#include "test_helpers.hpp"

using namespace kp;
using kptest::close_abs;
using kptest::close_rel;

TEST_CASE("distance bound F") {
  auto [f0, b0] = distance_bound_F({1.3, 1.3, 1.3});
  CHECK(f0 == doctest::Approx(0.0));
  CHECK(b0.tag == KPCase::equal_radii);

  auto [f1, b1] = distance_bound_F({3, 1, 2});
  CHECK(f1 == doctest::Approx(0.5 * std::log(3.0)));
  CHECK(b1.tag == KPCase::extremal_disk_constant);

  auto [f2, b2] = distance_bound_F({0.6, 0.5, 0.4});
  CHECK(f2 == doctest::Approx(0.42263357990582984).epsilon(1e-10));
  CHECK(b2.tag == KPCase::sector_composite);

  CHECK_THROWS(distance_bound_F({1, 0.2, 0.7}));
}

TEST_CASE("F agrees with the stadium center KP distance") {
  kptest::Rng rng(31);
  for (int i = 0; i < 500; ++i) {
    double rc = rng.uniform(0.1, 2), ro = rc + rng.uniform(0, 3);
    double ri = rng.uniform(std::max(0.01, 2 * rc - ro), ro);
    RadiiTriple t{ro, ri, rc};
    if (!validate_radii(t).ok) continue;
    double f = distance_bound_F(t).first;
    CHECK(f >= 0);
    if (ro - rc > 0) {
      double kpd = kp_distance_stadium_centers(std::max(rc, ri), std::min(rc, ri), ro - rc)
                       .first.value;
      CHECK(f == kpd);  // same code path, exact agreement
    } else {
      CHECK(f == 0.0);
    }
  }
}

TEST_CASE("main bound on the worked examples") {
  BoundReport r1 = main_bound({0.6, 0.5, 0.4});
  CHECK(close_abs(std::round(r1.new_bound * 1000) / 1000, 0.931, 1e-12));
  CHECK(close_abs(std::round(r1.old_bound * 1000) / 1000, 0.977, 1e-12));
  CHECK(r1.new_bound < r1.old_bound);
  CHECK_FALSE(r1.sharp);

  BoundReport r2 = main_bound({3, 1, 2});
  CHECK(close_abs(r2.new_bound, 6.0, 1e-9));
  CHECK(close_abs(r2.old_bound, 8.0, 1e-9));
  CHECK(r2.new_bound < r2.old_bound);
  CHECK(r2.sharp);

  BoundReport r3 = main_bound({1.7, 1.7, 1.7});
  CHECK(close_abs(r3.new_bound, 1.7, 1e-12));
  CHECK(close_abs(r3.old_bound, 1.7, 1e-12));
  CHECK(r3.sharp);
}

TEST_CASE("F >= 0 with equality iff R_O = R_C") {
  kptest::Rng rng(32);
  for (int i = 0; i < 300; ++i) {
    double rc = rng.uniform(0.1, 2), ro = rc + rng.uniform(0, 2);
    double ri = rng.uniform(std::max(0.01, 2 * rc - ro), ro);
    RadiiTriple t{ro, ri, rc};
    if (!validate_radii(t).ok) continue;
    double f = distance_bound_F(t).first;
    if (ro == rc)
      CHECK(f == 0.0);
    else
      CHECK(f > 0.0);
  }
}

TEST_CASE("sharp disk bound and disk-family consistency") {
  CHECK(sharp_disk_bound(0, 1.3) == doctest::Approx(1.3));
  CHECK(sharp_disk_bound(1, 2) == doctest::Approx(6.0));
  CHECK(sharp_disk_bound(0.5, 1) == doctest::Approx(3.0));
  CHECK(main_bound({1.5, 0.5, 1}).new_bound == doctest::Approx(3.0).epsilon(1e-12));
  CHECK_THROWS(sharp_disk_bound(2, 1));

  kptest::Rng rng(33);
  for (int i = 0; i < 100; ++i) {
    double r = rng.uniform(0.2, 4), a = rng.uniform(0, 0.95) * r;
    BoundReport rep = main_bound({r + a, r - a, r});
    CHECK(close_rel(rep.new_bound, sharp_disk_bound(a, r), 1e-12));
    CHECK(rep.sharp);
  }
}

TEST_CASE("old bound and disk ratio") {
  CHECK(old_bound({3, 1, 2}) == doctest::Approx(8.0));
  CHECK(old_bound({1.1, 1.1, 1.1}) == doctest::Approx(1.1));
  CHECK(old_bound_disk_ratio(0, 1) == doctest::Approx(1.0));
  CHECK(old_bound_disk_ratio(1, 2) == doctest::Approx(0.75));
  CHECK(old_bound_disk_ratio(0.9, 1) == doctest::Approx(0.19));
  // ratio formula: sharp bound / (r^3/(r-a)^2)
  kptest::Rng rng(34);
  for (int i = 0; i < 50; ++i) {
    double r = rng.uniform(0.2, 4), a = rng.uniform(0, 0.95) * r;
    double direct = sharp_disk_bound(a, r) / (r * r * r / ((r - a) * (r - a)));
    CHECK(close_rel(old_bound_disk_ratio(a, r), direct, 1e-12));
  }
}

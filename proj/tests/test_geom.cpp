#include <cmath>

#include "doctest.h"
#include "mipbs/error.hpp"
#include "mipbs/geom.hpp"
#include "mipbs/mbs.hpp"
#include "support.hpp"

using namespace mipbs;
using test::R;

namespace {

Disk disk(const Rational& x, const Rational& y, const Rational& r) {
  Disk d;
  d.id = "T";
  d.center = Point{x, y};
  d.radius = r;
  return d;
}

}  // namespace

TEST_CASE("penetration depth") {
  CHECK(penetration_depth(disk(0, 0, 2), disk(3, 0, 2)) == doctest::Approx(1));
  CHECK(compare_penetration(disk(0, 0, 2), disk(3, 0, 2), R(1)) == 0);
  CHECK(compare_penetration(disk(0, 0, 2), disk(4, 0, 2), R(0)) == 0);
  CHECK_FALSE(overlaps(disk(0, 0, 2), disk(4, 0, 2)));
  CHECK(compare_penetration(disk(0, 0, 2), disk(5, 0, 2), R(-1)) == 0);
  // 3-4-5 diagonal: exact tie at irrational-free distance.
  CHECK(compare_penetration(disk(0, 0, 3), disk(3, 4, 3), R(1)) == 0);
  // sqrt(2) is irrational: 2 + 2 - sqrt(2) sits strictly between 2.58 and 2.59.
  CHECK(compare_penetration(disk(0, 0, 2), disk(1, 1, 2), R(258, 100)) > 0);
  CHECK(compare_penetration(disk(0, 0, 2), disk(1, 1, 2), R(259, 100)) < 0);
}

TEST_CASE("exact sign of x + y sqrt z") {
  CHECK(sign_with_sqrt(R(-3), R(1), R(9)) == 0);
  CHECK(sign_with_sqrt(R(-3), R(1), R(10)) > 0);
  CHECK(sign_with_sqrt(R(3), R(-1), R(8)) > 0);
  CHECK(sign_with_sqrt(R(0), R(-2), R(5)) < 0);
  CHECK(sqrt_floor(R(2), 20) <= R(1414214, 1000000));
  CHECK(sqrt_floor(R(2), 20) * sqrt_floor(R(2), 20) <= 2);
}

TEST_CASE("circle intersections") {
  const DPoint up = place_on_two_circles({R(0), R(0)}, R(5), {R(6), R(0)}, R(5), Side::kAbove);
  CHECK(up.x == doctest::Approx(3));
  CHECK(up.y == doctest::Approx(4));
  const DPoint down = place_on_two_circles({R(0), R(0)}, R(5), {R(6), R(0)}, R(5), Side::kBelow);
  CHECK(down.y == doctest::Approx(-4));
  CHECK_THROWS_AS(place_on_two_circles({R(0), R(0)}, R(1), {R(6), R(0)}, R(1), Side::kAbove), Error);

  const DPoint a = place_on_two_circles({R(0), R(0)}, R(484), {R(560), R(0)}, R(484), Side::kAbove);
  CHECK(a.x == doctest::Approx(280));
  CHECK(a.y == doctest::Approx(std::sqrt(484.0 * 484 - 280.0 * 280)));
  CHECK(std::hypot(a.x, a.y) == doctest::Approx(484));
  CHECK(std::hypot(a.x - 560, a.y) == doctest::Approx(484));

  const DPoint c = place_on_circle_at_x({R(0), R(0)}, R(5), R(3), Side::kBelow);
  CHECK(c.y == doctest::Approx(-4));
}

TEST_CASE("grid rounding") {
  CHECK(round_to_grid(DPoint{0.26, -0.26}, R(1, 4)) == Point{R(1, 4), R(-1, 4)});
  CHECK(round_to_grid(Point{R(3, 4), R(-1, 2)}, R(1, 4)) == Point{R(3, 4), R(-1, 2)});
  // Halves go away from zero.
  CHECK(round_to_grid(Point{R(1, 8), R(-1, 8)}, R(1, 4)) == Point{R(1, 4), R(-1, 4)});
  const double y = std::sqrt(484.0 * 484 - 280.0 * 280);
  const Point p = round_to_grid(DPoint{280, y}, R(1, 12));
  CHECK(is_integer(Rational(p.y * 12)));
  CHECK(std::abs(to_double(p.y) - y) <= 1.0 / 24 + 1e-12);
}

TEST_CASE("uniform scaling") {
  Scene scene{{disk(R(1, 3), 0, 1)}, {}, R(5)};
  const Scene out = scale_instance(scene, R(3));
  CHECK(out.disks[0].center == Point{R(1), R(0)});
  CHECK(out.disks[0].radius == 3);
  CHECK(out.budget == 15);
  CHECK(scale_instance(scene, R(1), false).budget == 5);
  try {
    scale_instance(scene, R(2));
    FAIL("expected NonIntegerOutput");
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::kNonIntegerOutput);
  }
}

TEST_CASE("rounded construction scales to integers") {
  const MbsInstance inst = build_mbs_instance({{1}, 1});
  CHECK(inst.construction->scale == 12);
  for (const Disk& d : inst.disks) {
    CHECK(is_integer(d.center.x));
    CHECK(is_integer(d.center.y));
    CHECK(is_integer(d.radius));
  }
}

TEST_CASE("triple overlaps") {
  CHECK_FALSE(triple_overlap_free({disk(0, 0, 1), disk(1, 0, 1), disk(R(1, 2), R(866, 1000), 1)}));
  CHECK(triple_overlap_free({disk(0, 0, 1), disk(R(5, 2), 0, 1), disk(R(5, 4), R(2165, 1000), 1)}));
  // Pairwise overlapping chain whose ends are disjoint.
  CHECK(triple_overlap_free({disk(0, 0, 1), disk(R(3, 2), 0, 1), disk(3, 0, 1)}));
  // A small disk inside the lens of two others.
  CHECK_FALSE(triple_overlap_free({disk(0, 0, 2), disk(3, 0, 2), disk(R(3, 2), 0, R(1, 10))}));
  // Lens tips just outside a third disk.
  CHECK(triple_overlap_free({disk(0, 0, 5), disk(6, 0, 5), disk(3, 10, R(59, 10))}));
  CHECK_FALSE(triple_overlap_free({disk(0, 0, 5), disk(6, 0, 5), disk(3, 10, R(61, 10))}));
  CHECK(triple_overlap_free(build_mbs_instance({{2, 1}, 2}).disks));
}

#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "mipbs/rational.hpp"

namespace mipbs {

struct Point {
  Rational x;
  Rational y;
  bool operator==(const Point&) const = default;
};

// Floating-point point; only produced by place_on_two_circles.
struct DPoint {
  double x = 0;
  double y = 0;
};

enum class DiskRole { kD, kDprime, kA, kB, kAprime, kBprime, kCorridor };

const char* to_string(DiskRole role);
std::optional<DiskRole> parse_role(std::string_view text);

/// Open disk. `index` is the block index for D/D'/A/B/A'/B' and the
/// corridor index for corridor disks; `seq` orders disks inside a corridor.
struct Disk {
  std::string id;
  DiskRole role = DiskRole::kD;
  Point center;
  Rational radius;
  int index = 0;
  int seq = 0;
};

Rational dist2(const Point& p, const Point& q);

// r + r' - |c - c'| in double precision, for reporting.
double penetration_depth(const Disk& a, const Disk& b);

// Exact sign of penetration_depth(a, b) - tau.
int compare_penetration(const Disk& a, const Disk& b, const Rational& tau);

// Open disks share a point.
bool overlaps(const Disk& a, const Disk& b);

// Point strictly inside the open disk.
bool contains(const Disk& d, const Point& p);

// Sign of (|p - c| - (r + clearance)): positive means p keeps the clearance.
int compare_clearance(const Disk& d, const Point& p, const Rational& clearance);

enum class Side { kAbove, kBelow };

// Intersection of circle(c1, r1) and circle(c2, r2) left (kAbove) or right
// (kBelow) of the directed line c1 -> c2. Throws Error(kNoIntersection)
// unless the circles cross properly.
DPoint place_on_two_circles(const Point& c1, const Rational& r1, const Point& c2,
                            const Rational& r2, Side side);

// Point on circle(c, r) with the given abscissa, above or below c.
DPoint place_on_circle_at_x(const Point& c, const Rational& r, const Rational& x, Side side);

// Nearest multiple of eps per coordinate, halves away from zero.
Point round_to_grid(const DPoint& p, const Rational& eps);
Point round_to_grid(const Point& p, const Rational& eps);

struct Scene {
  std::vector<Disk> disks;
  std::vector<Point> points;
  Rational budget;
};

// Multiplies every coordinate, radius and the budget by factor. With
// require_integer, throws Error(kNonIntegerOutput) if a value stays fractional.
Scene scale_instance(const Scene& scene, const Rational& factor, bool require_integer = true);

// No point of the plane lies in three of the open disks.
bool triple_overlap_free(const std::vector<Disk>& disks);

// All index pairs (i < j) of overlapping disks.
std::vector<std::pair<std::size_t, std::size_t>> overlapping_pairs(const std::vector<Disk>& disks);

}  // namespace mipbs

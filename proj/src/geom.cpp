#include "mipbs/geom.hpp"

#include <algorithm>
#include <cmath>

#include "mipbs/error.hpp"

namespace mipbs {

const char* to_string(DiskRole role) {
  switch (role) {
    case DiskRole::kD: return "D";
    case DiskRole::kDprime: return "Dprime";
    case DiskRole::kA: return "A";
    case DiskRole::kB: return "B";
    case DiskRole::kAprime: return "Aprime";
    case DiskRole::kBprime: return "Bprime";
    case DiskRole::kCorridor: return "Corridor";
  }
  return "?";
}

std::optional<DiskRole> parse_role(std::string_view text) {
  for (DiskRole r : {DiskRole::kD, DiskRole::kDprime, DiskRole::kA, DiskRole::kB,
                     DiskRole::kAprime, DiskRole::kBprime, DiskRole::kCorridor}) {
    if (text == to_string(r)) return r;
  }
  return std::nullopt;
}

Rational dist2(const Point& p, const Point& q) {
  Rational dx = p.x - q.x;
  Rational dy = p.y - q.y;
  return dx * dx + dy * dy;
}

double penetration_depth(const Disk& a, const Disk& b) {
  return to_double(a.radius) + to_double(b.radius) - std::sqrt(to_double(dist2(a.center, b.center)));
}

int compare_penetration(const Disk& a, const Disk& b, const Rational& tau) {
  // (r + r' - tau) - sqrt(d2)
  return sign_with_sqrt(Rational(a.radius + b.radius - tau), Rational(-1), dist2(a.center, b.center));
}

bool overlaps(const Disk& a, const Disk& b) { return compare_penetration(a, b, Rational(0)) > 0; }

bool contains(const Disk& d, const Point& p) { return dist2(d.center, p) < d.radius * d.radius; }

int compare_clearance(const Disk& d, const Point& p, const Rational& clearance) {
  // sqrt(d2) - (r + clearance)
  return sign_with_sqrt(Rational(-(d.radius + clearance)), Rational(1), dist2(d.center, p));
}

DPoint place_on_two_circles(const Point& c1, const Rational& r1, const Point& c2,
                            const Rational& r2, Side side) {
  const Rational d2 = dist2(c1, c2);
  const Rational sum = r1 + r2;
  const Rational diff = r1 - r2;
  if (!(d2 < sum * sum) || !(diff * diff < d2)) {
    throw Error(ErrorCode::kNoIntersection, "circles do not cross properly");
  }
  // Along-axis offset a = (r1^2 - r2^2 + d^2) / (2d), kept exact up to the sqrt.
  const double d = std::sqrt(to_double(d2));
  const double a = to_double(Rational((r1 * r1 - r2 * r2 + d2) / 2)) / d;
  const double h = std::sqrt(std::max(0.0, to_double(r1) * to_double(r1) - a * a));
  const double ux = to_double(Rational(c2.x - c1.x)) / d;
  const double uy = to_double(Rational(c2.y - c1.y)) / d;
  const double sign = side == Side::kAbove ? 1.0 : -1.0;
  return DPoint{to_double(c1.x) + a * ux - sign * h * uy, to_double(c1.y) + a * uy + sign * h * ux};
}

DPoint place_on_circle_at_x(const Point& c, const Rational& r, const Rational& x, Side side) {
  const Rational dx = x - c.x;
  const Rational h2 = r * r - dx * dx;
  if (sgn(h2) <= 0) throw Error(ErrorCode::kNoIntersection, "vertical line misses the circle");
  const double h = std::sqrt(to_double(h2));
  return DPoint{to_double(x), to_double(c.y) + (side == Side::kAbove ? h : -h)};
}

Point round_to_grid(const Point& p, const Rational& eps) {
  if (sgn(eps) <= 0) throw Error(ErrorCode::kInvalidArgument, "grid step must be positive");
  Rational x(round_half_away(p.x / eps));
  Rational y(round_half_away(p.y / eps));
  return Point{x * eps, y * eps};
}

Point round_to_grid(const DPoint& p, const Rational& eps) {
  return round_to_grid(Point{from_double(p.x), from_double(p.y)}, eps);
}

Scene scale_instance(const Scene& scene, const Rational& factor, bool require_integer) {
  if (sgn(factor) <= 0) throw Error(ErrorCode::kInvalidArgument, "scale factor must be positive");
  auto scaled = [&](const Rational& v, const char* what) {
    Rational out = v * factor;
    if (require_integer && !is_integer(out)) {
      throw Error(ErrorCode::kNonIntegerOutput,
                  std::string(what) + " " + format_rational(out) + " is not an integer");
    }
    return out;
  };
  Scene out;
  out.disks.reserve(scene.disks.size());
  for (const Disk& d : scene.disks) {
    Disk s = d;
    s.center = Point{scaled(d.center.x, "coordinate"), scaled(d.center.y, "coordinate")};
    s.radius = scaled(d.radius, "radius");
    out.disks.push_back(std::move(s));
  }
  for (const Point& p : scene.points) {
    out.points.push_back(Point{scaled(p.x, "coordinate"), scaled(p.y, "coordinate")});
  }
  out.budget = scaled(scene.budget, "budget");
  return out;
}

namespace {

// Closed disk a contains closed disk b.
bool disk_within(const Disk& a, const Disk& b) {
  const Rational gap = a.radius - b.radius;
  return sgn(gap) >= 0 && dist2(a.center, b.center) <= gap * gap;
}

// Sign of (|p - c_k|^2 - r_k^2) at the two crossing points of circles i, j;
// returns true if either crossing point is in the closed disk k.
bool crossing_in_closed(const Disk& di, const Disk& dj, const Disk& dk) {
  const Rational d2 = dist2(di.center, dj.center);
  const Rational a = (di.radius * di.radius - dj.radius * dj.radius + d2) / (2 * d2);
  const Rational ex = dj.center.x - di.center.x;
  const Rational ey = dj.center.y - di.center.y;
  // Crossing points: m +- s * (-ey, ex) with s = sqrt(h2).
  const Point m{di.center.x + a * ex, di.center.y + a * ey};
  const Rational h2 = di.radius * di.radius / d2 - a * a;
  const Rational mx = m.x - dk.center.x;
  const Rational my = m.y - dk.center.y;
  const Rational base = mx * mx + my * my + h2 * d2 - dk.radius * dk.radius;
  const Rational lin = 2 * (mx * -ey + my * ex);
  return sign_with_sqrt(base, lin, h2) <= 0 || sign_with_sqrt(base, Rational(-lin), h2) <= 0;
}

bool triple_meets(const Disk& a, const Disk& b, const Disk& c) {
  // With containment the triple reduces to the remaining pair, which overlaps.
  const Disk* ds[3] = {&a, &b, &c};
  for (int i = 0; i < 3; ++i) {
    for (int j = 0; j < 3; ++j) {
      if (i != j && disk_within(*ds[i], *ds[j])) return true;
    }
  }
  // Otherwise every pair crosses properly and a nonempty intersection has a
  // vertex at some pairwise crossing lying in the third disk. Boundary
  // contact is reported as meeting.
  return crossing_in_closed(a, b, c) || crossing_in_closed(a, c, b) || crossing_in_closed(b, c, a);
}

}  // namespace

std::vector<std::pair<std::size_t, std::size_t>> overlapping_pairs(const std::vector<Disk>& disks) {
  std::vector<std::pair<std::size_t, std::size_t>> out;
  std::vector<double> cx(disks.size()), cy(disks.size()), r(disks.size());
  for (std::size_t i = 0; i < disks.size(); ++i) {
    cx[i] = to_double(disks[i].center.x);
    cy[i] = to_double(disks[i].center.y);
    r[i] = to_double(disks[i].radius);
  }
  for (std::size_t i = 0; i < disks.size(); ++i) {
    for (std::size_t j = i + 1; j < disks.size(); ++j) {
      // Coarse float reject with generous slack; the exact test decides.
      const double reach = (r[i] + r[j]) * (1 + 1e-9) + 1;
      if (std::abs(cx[i] - cx[j]) > reach || std::abs(cy[i] - cy[j]) > reach) continue;
      if (overlaps(disks[i], disks[j])) out.emplace_back(i, j);
    }
  }
  return out;
}

bool triple_overlap_free(const std::vector<Disk>& disks) {
  const auto pairs = overlapping_pairs(disks);
  std::vector<std::vector<std::size_t>> adj(disks.size());
  for (auto [i, j] : pairs) {
    adj[i].push_back(j);
    adj[j].push_back(i);
  }
  for (auto& list : adj) std::sort(list.begin(), list.end());
  for (auto [i, j] : pairs) {
    std::vector<std::size_t> common;
    std::set_intersection(adj[i].begin(), adj[i].end(), adj[j].begin(), adj[j].end(),
                          std::back_inserter(common));
    for (std::size_t k : common) {
      if (k > j && triple_meets(disks[i], disks[j], disks[k])) return false;
    }
  }
  return true;
}

}  // namespace mipbs

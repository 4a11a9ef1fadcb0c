#include "mipbs/mbs.hpp"

#include <algorithm>
#include <cmath>
#include <istream>
#include <ostream>
#include <set>

#include "mipbs/error.hpp"
#include "text.hpp"

namespace mipbs {

std::size_t MbsInstance::n() const {
  std::size_t count = 0;
  for (const Disk& d : disks) count += d.role == DiskRole::kD;
  if (count == 0) throw Error(ErrorCode::kStructureMismatch, "instance has no D disks");
  return count - 1;
}

std::optional<std::size_t> MbsInstance::find(const std::string& id) const {
  for (std::size_t i = 0; i < disks.size(); ++i) {
    if (disks[i].id == id) return i;
  }
  return std::nullopt;
}

std::size_t MbsInstance::at(const std::string& id) const {
  if (auto i = find(id)) return *i;
  throw Error(ErrorCode::kUnknownDiskId, "no disk '" + id + "'");
}

const Disk& MbsInstance::disk(DiskRole role, int index) const {
  for (const Disk& d : disks) {
    if (d.role == role && d.index == index) return d;
  }
  throw Error(ErrorCode::kStructureMismatch,
              std::string("missing disk ") + to_string(role) + " " + std::to_string(index));
}

std::vector<std::size_t> MbsInstance::corridor_chain(int i) const {
  std::vector<std::size_t> inner;
  for (std::size_t k = 0; k < disks.size(); ++k) {
    if (disks[k].role == DiskRole::kCorridor && disks[k].index == i) inner.push_back(k);
  }
  std::sort(inner.begin(), inner.end(),
            [&](std::size_t p, std::size_t q) { return disks[p].seq < disks[q].seq; });
  std::vector<std::size_t> chain{at(disk(DiskRole::kAprime, i).id)};
  chain.insert(chain.end(), inner.begin(), inner.end());
  chain.push_back(at(disk(DiskRole::kBprime, i).id));
  return chain;
}

Rational MbsInstance::gap_target(const Disk& p, const Disk& q) const {
  if (!construction) throw Error(ErrorCode::kStructureMismatch, "instance carries no construction data");
  const MbsConstruction& c = *construction;
  const Disk* big = p.role == DiskRole::kD ? &p : &q;
  const Disk* small = p.role == DiskRole::kD ? &q : &p;
  if (big->role != DiskRole::kD || (small->role != DiskRole::kA && small->role != DiskRole::kB)) {
    throw Error(ErrorCode::kStructureMismatch, "not a block gap: " + p.id + "," + q.id);
  }
  const int n = static_cast<int>(c.source.a.size());
  const int i = small->index;
  std::int64_t target = 0;
  if (i == n + 1 && big->index == n) {
    target = 2 * c.source.b;
  } else if (i >= 1 && i <= n && (big->index == i - 1 || big->index == i)) {
    const std::int64_t ai = c.source.a[i - 1];
    if (small->role == DiskRole::kA) {
      target = c.L + 2 * ai;
    } else {
      target = big->index == i - 1 ? c.L + ai : c.L + 3 * ai;
    }
  } else {
    throw Error(ErrorCode::kStructureMismatch, "not a block gap: " + p.id + "," + q.id);
  }
  return Rational(target) * c.scale;
}

namespace {

Disk make_disk(std::string id, DiskRole role, Point center, Rational radius, int index, int seq = 0) {
  return Disk{std::move(id), role, std::move(center), std::move(radius), index, seq};
}

// Corridor centres between consecutive corners, equal steps of at most
// max_step rounded down to integers; corners included, first corner excluded.
void walk_segment(const Point& from, const Point& to, const Rational& max_step,
                  std::vector<Point>& out) {
  const Rational dx = to.x - from.x;
  const Rational dy = to.y - from.y;
  const Rational len = sgn(dx) != 0 ? abs(dx) : abs(dy);
  const long steps = ceil_of(len / max_step).get_si();
  for (long t = 1; t <= steps; ++t) {
    const Rational along(floor_of(len * t / steps));
    const Rational frac = along / len;
    out.push_back(Point{from.x + dx * frac, from.y + dy * frac});
  }
}

}  // namespace

MbsInstance build_mbs_instance(const SubsetSumInstance& inst, MbsBuildOptions options) {
  inst.validate();
  const int n = static_cast<int>(inst.a.size());
  const std::int64_t sum = inst.total();
  MbsConstruction con;
  con.source = inst;
  con.L = 2 * sum + 2;
  con.C = n * con.L + 2 * sum + inst.b;
  const Rational lam(10 * con.C);
  const Rational L(con.L);

  MbsInstance out;
  auto center_d = [&](int i) { return Point{8 * lam * i, Rational(0)}; };
  auto col = [&](int i) { return Rational(4 * lam * (2 * i - 1)); };

  for (int i = 0; i <= n; ++i) {
    out.disks.push_back(make_disk("D" + std::to_string(i), DiskRole::kD, center_d(i), 4 * lam, i));
  }
  for (int i = 1; i <= n; ++i) {
    out.disks.push_back(
        make_disk("Dp" + std::to_string(i), DiskRole::kDprime, Point{col(i), Rational(0)}, lam, i));
  }

  con.eps = options.round ? Rational(1, 6 * (n + 1)) : Rational(0);
  auto settle = [&](const DPoint& p) {
    return options.round ? round_to_grid(p, con.eps) : Point{from_double(p.x), from_double(p.y)};
  };
  for (int i = 1; i <= n + 1; ++i) {
    DPoint a;
    DPoint b;
    if (i <= n) {
      const Rational ai(inst.a[i - 1]);
      a = place_on_two_circles(center_d(i - 1), 7 * lam - (L + 2 * ai), center_d(i),
                               7 * lam - (L + 2 * ai), Side::kAbove);
      b = place_on_two_circles(center_d(i - 1), 7 * lam - (L + ai), center_d(i),
                               7 * lam - (L + 3 * ai), Side::kBelow);
    } else {
      const Rational reach = 7 * lam - 2 * inst.b;
      a = place_on_circle_at_x(center_d(n), reach, col(n + 1), Side::kAbove);
      b = place_on_circle_at_x(center_d(n), reach, col(n + 1), Side::kBelow);
    }
    out.disks.push_back(make_disk("A" + std::to_string(i), DiskRole::kA, settle(a), 3 * lam, i));
    out.disks.push_back(make_disk("B" + std::to_string(i), DiskRole::kB, settle(b), 3 * lam, i));
  }
  for (int i = 1; i <= n + 1; ++i) {
    out.disks.push_back(
        make_disk("Ap" + std::to_string(i), DiskRole::kAprime, Point{col(i), 8 * lam}, 3 * lam, i));
    out.disks.push_back(
        make_disk("Bp" + std::to_string(i), DiskRole::kBprime, Point{col(i), -8 * lam}, 3 * lam, i));
  }

  // Corridor i: Ap_i up to height H_i, right to X_i, down to -H_i, left,
  // up to Bp_i. Pi_1 is outermost; walls of neighbouring corridors are 8λ apart.
  auto height = [&](int i) -> Rational { return 38 * lam + 8 * lam * (n + 1 - i); };
  auto reach_x = [&](int i) -> Rational { return col(n + 1) + 30 * lam + 8 * lam * (n + 1 - i); };
  for (int i = 1; i <= n + 1; ++i) {
    const Rational h = height(i);
    const Rational xr = reach_x(i);
    const std::vector<Point> corners{{col(i), 8 * lam}, {col(i), h},   {xr, h},
                                     {xr, -h},          {col(i), -h},  {col(i), -8 * lam}};
    std::vector<Point> centres;
    for (std::size_t c = 0; c + 1 < corners.size(); ++c) {
      walk_segment(corners[c], corners[c + 1], 5 * lam, centres);
    }
    centres.pop_back();  // Bp_i
    for (std::size_t k = 0; k < centres.size(); ++k) {
      const int seq = static_cast<int>(k) + 1;
      out.disks.push_back(make_disk("P" + std::to_string(i) + "_" + std::to_string(seq),
                                    DiskRole::kCorridor, centres[k], 3 * lam, i, seq));
    }
  }

  out.x = Point{-6 * lam, Rational(0)};
  out.y = Point{col(n + 1) + lam, Rational(0)};
  for (int i = 1; i <= n; ++i) {
    out.markers.push_back(Point{(reach_x(i) + reach_x(i + 1)) / 2, Rational(0)});
  }
  out.lambda = lam;
  out.budget = Rational(con.C);
  if (options.round) {
    out.budget = Rational(con.C) + Rational(1, 3);
    out.construction = con;  // scale_mbs accumulates the factor into con.scale
    return scale_mbs(out, Rational(6 * (n + 1)));
  }
  out.construction = con;
  return out;
}

MbsInstance scale_mbs(const MbsInstance& inst, const Rational& factor) {
  Scene scene;
  scene.disks = inst.disks;
  scene.points.push_back(inst.x);
  scene.points.push_back(inst.y);
  scene.points.insert(scene.points.end(), inst.markers.begin(), inst.markers.end());
  scene.budget = inst.budget;
  const Scene scaled = scale_instance(scene, factor, false);
  MbsInstance out;
  out.disks = scaled.disks;
  out.x = scaled.points[0];
  out.y = scaled.points[1];
  out.markers.assign(scaled.points.begin() + 2, scaled.points.end());
  out.budget = scaled.budget;
  out.lambda = inst.lambda * factor;
  out.construction = inst.construction;
  if (out.construction) out.construction->scale *= factor;
  return out;
}

bool ValidationReport::ok() const { return first_failure() == nullptr; }

const ValidationCheck* ValidationReport::first_failure() const {
  for (const ValidationCheck& c : checks) {
    if (!c.pass) return &c;
  }
  return nullptr;
}

namespace {

class Validator {
 public:
  explicit Validator(const MbsInstance& inst) : inst_(inst), lam_(to_double(inst.lambda)) {}

  ValidationReport run() {
    const int n = static_cast<int>(inst_.n());
    check_integral();
    check_radii();
    for (int i = 1; i <= n; ++i) {
      disjoint(get(DiskRole::kDprime, i), get(DiskRole::kA, i));
      disjoint(get(DiskRole::kDprime, i), get(DiskRole::kB, i));
      disjoint(get(DiskRole::kA, i), get(DiskRole::kB, i));
      thick(get(DiskRole::kD, i - 1), get(DiskRole::kDprime, i));
      thick(get(DiskRole::kD, i), get(DiskRole::kDprime, i));
    }
    disjoint(get(DiskRole::kA, n + 1), get(DiskRole::kB, n + 1));
    for (int i = 1; i <= n + 1; ++i) {
      thick(get(DiskRole::kA, i), get(DiskRole::kAprime, i));
      thick(get(DiskRole::kB, i), get(DiskRole::kBprime, i));
      holds_center(get(DiskRole::kAprime, i), get(DiskRole::kA, i));
      holds_center(get(DiskRole::kBprime, i), get(DiskRole::kB, i));
      const auto chain = inst_.corridor_chain(i);
      for (std::size_t k = 0; k + 1 < chain.size(); ++k) thick(chain[k], chain[k + 1]);
    }
    for (int i = 1; i <= n; ++i) {
      gap(get(DiskRole::kD, i - 1), get(DiskRole::kA, i));
      gap(get(DiskRole::kA, i), get(DiskRole::kD, i));
      gap(get(DiskRole::kD, i - 1), get(DiskRole::kB, i));
      gap(get(DiskRole::kB, i), get(DiskRole::kD, i));
    }
    gap(get(DiskRole::kD, n), get(DiskRole::kA, n + 1));
    gap(get(DiskRole::kD, n), get(DiskRole::kB, n + 1));
    check_unexpected_overlaps();
    add("triple overlap free", triple_overlap_free(inst_.disks), 0);
    clearance("x", inst_.x);
    clearance("y", inst_.y);
    for (std::size_t i = 0; i < inst_.markers.size(); ++i) {
      clearance("y" + std::to_string(i + 1), inst_.markers[i]);
    }
    check_extent(n);
    return std::move(report_);
  }

 private:
  std::size_t get(DiskRole role, int index) { return inst_.at(inst_.disk(role, index).id); }
  const Disk& d(std::size_t i) const { return inst_.disks[i]; }

  void add(std::string name, bool pass, double margin) {
    report_.checks.push_back(ValidationCheck{std::move(name), pass, margin});
  }

  std::string pair_name(const char* kind, std::size_t p, std::size_t q) const {
    return std::string(kind) + " " + d(p).id + "," + d(q).id;
  }

  void check_integral() {
    if (!inst_.construction || sgn(inst_.construction->eps) == 0) return;
    bool all = is_integer(inst_.budget) && is_integer(inst_.lambda);
    for (const Disk& disk : inst_.disks) {
      all = all && is_integer(disk.center.x) && is_integer(disk.center.y) && is_integer(disk.radius);
    }
    add("integral data", all, 0);
  }

  void check_radii() {
    bool all = true;
    for (const Disk& disk : inst_.disks) {
      Rational want = disk.role == DiskRole::kD        ? 4 * inst_.lambda
                      : disk.role == DiskRole::kDprime ? inst_.lambda
                                                       : 3 * inst_.lambda;
      all = all && disk.radius == want;
    }
    add("radii by role", all, 0);
  }

  void disjoint(std::size_t p, std::size_t q) {
    designed_.insert(std::minmax(p, q));  // recorded so the overlap sweep does not double-report
    add(pair_name("disjoint", p, q), compare_penetration(d(p), d(q), Rational(0)) <= 0,
        -penetration_depth(d(p), d(q)) / lam_);
  }

  void thick(std::size_t p, std::size_t q) {
    designed_.insert(std::minmax(p, q));
    add(pair_name("thick", p, q), compare_penetration(d(p), d(q), inst_.lambda) >= 0,
        penetration_depth(d(p), d(q)) / lam_ - 1);
  }

  void gap(std::size_t p, std::size_t q) {
    designed_.insert(std::minmax(p, q));
    static const Rational kTildeBound(59687, 100000);  // (7 - sqrt(41)) rounded down
    const double pen = penetration_depth(d(p), d(q));
    const bool in_range = compare_penetration(d(p), d(q), Rational(0)) > 0 &&
                          compare_penetration(d(p), d(q), kTildeBound * inst_.lambda) < 0;
    add(pair_name("gap", p, q), in_range, std::min(pen / lam_, 0.59687 - pen / lam_));
    if (inst_.construction && sgn(inst_.construction->eps) > 0) {
      // Rounding moves one disk by at most eps/sqrt(2): two grid steps is ample.
      const Rational slack = 2 * inst_.construction->eps * inst_.construction->scale;
      const Rational target = inst_.gap_target(d(p), d(q));
      const bool near = compare_penetration(d(p), d(q), target - slack) >= 0 &&
                        compare_penetration(d(p), d(q), target + slack) <= 0;
      add(pair_name("gap drift", p, q), near, (to_double(slack) - std::abs(pen - to_double(target))) / lam_);
    }
  }

  void holds_center(std::size_t outer, std::size_t inner) {
    const bool inside = contains(d(outer), d(inner).center);
    const double dist = std::sqrt(to_double(dist2(d(outer).center, d(inner).center)));
    add(d(outer).id + " contains center " + d(inner).id, inside,
        (to_double(d(outer).radius) - dist) / lam_);
  }

  void check_unexpected_overlaps() {
    std::string culprit;
    for (auto [p, q] : overlapping_pairs(inst_.disks)) {
      if (!designed_.count({p, q})) {
        culprit = d(p).id + "," + d(q).id;
        break;
      }
    }
    add(culprit.empty() ? std::string("no unexpected overlaps") : "unexpected overlap " + culprit,
        culprit.empty(), 0);
  }

  void clearance(const std::string& name, const Point& p) {
    bool all = true;
    double worst = std::numeric_limits<double>::infinity();
    const Rational half = inst_.lambda / 2;
    for (const Disk& disk : inst_.disks) {
      all = all && compare_clearance(disk, p, half) >= 0;
      const double dist = std::sqrt(to_double(dist2(disk.center, p)));
      worst = std::min(worst, (dist - to_double(disk.radius)) / lam_ - 0.5);
    }
    add("clearance " + name, all, worst);
  }

  void check_extent(int n) {
    const Rational bound = (16 * n + 41) * inst_.lambda;
    bool all = true;
    for (const Disk& disk : inst_.disks) {
      all = all && abs(disk.center.x) + disk.radius <= bound && abs(disk.center.y) + disk.radius <= bound;
    }
    add("coordinate extent", all, 0);
  }

  const MbsInstance& inst_;
  double lam_;
  std::set<std::pair<std::size_t, std::size_t>> designed_;
  ValidationReport report_;
};

}  // namespace

ValidationReport validation_report(const MbsInstance& inst) {
  try {
    return Validator(inst).run();
  } catch (const Error& e) {
    ValidationReport report;
    report.checks.push_back(ValidationCheck{std::string("structure: ") + e.what(), false, 0});
    return report;
  }
}

ValidationReport validate(const MbsInstance& inst) {
  ValidationReport report = validation_report(inst);
  if (const ValidationCheck* bad = report.first_failure()) {
    throw Error(ErrorCode::kValidationFailure, bad->name);
  }
  return report;
}

void write_mbs(std::ostream& out, const MbsInstance& inst) {
  if (inst.construction) {
    const MbsConstruction& c = *inst.construction;
    out << "# subsetsum b=" << c.source.b << " a=";
    for (std::size_t i = 0; i < c.source.a.size(); ++i) out << (i ? "," : "") << c.source.a[i];
    out << " L=" << c.L << " C=" << c.C << " scale=" << format_rational(c.scale) << '\n';
  }
  out << "mbs " << inst.disks.size() << '\n';
  out << "budget " << format_rational(inst.budget) << '\n';
  out << "lambda " << format_rational(inst.lambda) << '\n';
  out << "point x " << format_rational(inst.x.x) << ' ' << format_rational(inst.x.y) << '\n';
  out << "point y " << format_rational(inst.y.x) << ' ' << format_rational(inst.y.y) << '\n';
  for (std::size_t i = 0; i < inst.markers.size(); ++i) {
    out << "marker y" << i + 1 << ' ' << format_rational(inst.markers[i].x) << ' '
        << format_rational(inst.markers[i].y) << '\n';
  }
  for (const Disk& d : inst.disks) {
    out << "disk " << d.id << ' ' << to_string(d.role) << ' ' << format_rational(d.center.x) << ' '
        << format_rational(d.center.y) << ' ' << format_rational(d.radius) << '\n';
  }
}

namespace {

// Recovers (index, seq) from the id scheme.
bool parse_disk_id(const std::string& id, DiskRole role, int& index, int& seq) {
  std::string prefix;
  switch (role) {
    case DiskRole::kD: prefix = "D"; break;
    case DiskRole::kDprime: prefix = "Dp"; break;
    case DiskRole::kA: prefix = "A"; break;
    case DiskRole::kB: prefix = "B"; break;
    case DiskRole::kAprime: prefix = "Ap"; break;
    case DiskRole::kBprime: prefix = "Bp"; break;
    case DiskRole::kCorridor: prefix = "P"; break;
  }
  if (id.rfind(prefix, 0) != 0) return false;
  std::string rest = id.substr(prefix.size());
  seq = 0;
  if (role == DiskRole::kCorridor) {
    auto us = rest.find('_');
    if (us == std::string::npos) return false;
    const std::string tail = rest.substr(us + 1);
    if (tail.empty() || tail.find_first_not_of("0123456789") != std::string::npos) return false;
    seq = std::stoi(tail);
    rest.resize(us);
  }
  if (rest.empty() || rest.find_first_not_of("0123456789") != std::string::npos) return false;
  index = std::stoi(rest);
  return true;
}

}  // namespace

MbsInstance read_mbs(std::istream& in) {
  detail::LineReader reader(in);
  std::vector<std::string> tok;
  if (!reader.next(tok) || tok[0] != "mbs") reader.fail("expected 'mbs <num_disks>'");
  reader.expect_arity(tok, 2);
  const long declared = reader.integer(tok[1]);
  MbsInstance inst;
  bool have_budget = false, have_lambda = false, have_x = false, have_y = false;
  std::vector<std::pair<int, Point>> markers;
  while (reader.next(tok)) {
    const std::string& kind = tok[0];
    if (kind == "budget") {
      reader.expect_arity(tok, 2);
      inst.budget = reader.number(tok[1]);
      have_budget = true;
    } else if (kind == "lambda") {
      reader.expect_arity(tok, 2);
      inst.lambda = reader.number(tok[1]);
      have_lambda = true;
    } else if (kind == "point") {
      reader.expect_arity(tok, 4);
      Point p{reader.number(tok[2]), reader.number(tok[3])};
      if (tok[1] == "x") {
        inst.x = p;
        have_x = true;
      } else if (tok[1] == "y") {
        inst.y = p;
        have_y = true;
      } else {
        reader.fail("unknown point '" + tok[1] + "'");
      }
    } else if (kind == "marker") {
      reader.expect_arity(tok, 4);
      if (tok[1].size() < 2 || tok[1][0] != 'y') reader.fail("marker names are y<i>");
      markers.emplace_back(static_cast<int>(reader.integer(tok[1].substr(1))),
                           Point{reader.number(tok[2]), reader.number(tok[3])});
    } else if (kind == "disk") {
      reader.expect_arity(tok, 6);
      auto role = parse_role(tok[2]);
      if (!role) reader.fail("unknown role '" + tok[2] + "'");
      Disk d;
      d.id = tok[1];
      d.role = *role;
      if (!parse_disk_id(d.id, d.role, d.index, d.seq)) reader.fail("id '" + d.id + "' does not match role");
      d.center = Point{reader.number(tok[3]), reader.number(tok[4])};
      d.radius = reader.number(tok[5]);
      if (sgn(d.radius) <= 0) reader.fail("radius must be positive");
      if (inst.find(d.id)) reader.fail("duplicate disk id '" + d.id + "'");
      inst.disks.push_back(std::move(d));
    } else {
      reader.fail("unknown record '" + kind + "'");
    }
  }
  if (!have_budget || !have_lambda || !have_x || !have_y) {
    reader.fail("missing one of budget, lambda, point x, point y");
  }
  if (static_cast<long>(inst.disks.size()) != declared) {
    reader.fail("header declares " + std::to_string(declared) + " disks, found " +
                std::to_string(inst.disks.size()));
  }
  std::sort(markers.begin(), markers.end(), [](const auto& a, const auto& b) { return a.first < b.first; });
  for (std::size_t i = 0; i < markers.size(); ++i) {
    if (markers[i].first != static_cast<int>(i) + 1) reader.fail("markers must be y1..yn");
    inst.markers.push_back(markers[i].second);
  }
  return inst;
}

}  // namespace mipbs

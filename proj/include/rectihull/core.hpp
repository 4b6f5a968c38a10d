#ifndef RECTIHULL_CORE_HPP
#define RECTIHULL_CORE_HPP

#include <algorithm>
#include <array>
#include <cmath>
#include <cstdint>
#include <limits>
#include <numbers>
#include <random>
#include <span>
#include <sstream>
#include <stdexcept>
#include <string>
#include <unordered_set>
#include <vector>

namespace rectihull {

using PointId = std::uint32_t;
inline constexpr PointId kNoPoint = std::numeric_limits<PointId>::max();

inline constexpr double kPi = std::numbers::pi;
inline constexpr double kTwoPi = 2.0 * std::numbers::pi;
inline constexpr double kHalfPi = 0.5 * std::numbers::pi;

struct Point3 {
  double x = 0.0;
  double y = 0.0;
  double z = 0.0;
  PointId id = 0;

  friend bool operator==(const Point3&, const Point3&) = default;
};

struct Point2 {
  double x = 0.0;
  double y = 0.0;
  PointId id = 0;

  friend bool operator==(const Point2&, const Point2&) = default;
};

inline double cross(double ax, double ay, double bx, double by) { return ax * by - ay * bx; }

// Orientation of (b - a) x (c - a); > 0 when a, b, c turn counterclockwise.
inline double orient(const Point2& a, const Point2& b, const Point2& c) {
  return cross(b.x - a.x, b.y - a.y, c.x - a.x, c.y - a.y);
}

struct Tolerance {
  double eps_angle = 1e-9;
  double eps_coord = 0.0;
};

class GeneralPositionError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

// One of the eight octant orientations. Index k in 1..8 follows the usual
// octant numbering: (+,+,+) (-,+,+) (-,-,+) (+,-,+) then the same four with z
// negated.
class SignPattern {
 public:
  constexpr SignPattern() = default;

  static constexpr SignPattern from_index(int k) {
    if (k < 1 || k > 8) throw std::out_of_range("sign pattern index must be in 1..8");
    return SignPattern(k);
  }

  static constexpr SignPattern from_signs(int sx, int sy, int sz) {
    for (int k = 1; k <= 8; ++k) {
      SignPattern p(k);
      if (p.sx() == sx && p.sy() == sy && p.sz() == sz) return p;
    }
    throw std::invalid_argument("signs must be +1 or -1");
  }

  static constexpr std::array<SignPattern, 8> all() {
    return {SignPattern(1), SignPattern(2), SignPattern(3), SignPattern(4),
            SignPattern(5), SignPattern(6), SignPattern(7), SignPattern(8)};
  }

  constexpr int index() const { return index_; }
  constexpr int sx() const { return kSigns[index_ - 1][0]; }
  constexpr int sy() const { return kSigns[index_ - 1][1]; }
  constexpr int sz() const { return kSigns[index_ - 1][2]; }

  // Componentwise negation: q dominates p under negated() iff p dominates q.
  constexpr SignPattern negated() const { return from_signs(-sx(), -sy(), -sz()); }

  // Maps a point into the frame where this pattern becomes (+,+,+).
  constexpr Point3 reflect(const Point3& p) const {
    return {sx() * p.x, sy() * p.y, sz() * p.z, p.id};
  }

  std::string to_string() const {
    std::string s = "(";
    s += sx() > 0 ? '+' : '-';
    s += ',';
    s += sy() > 0 ? '+' : '-';
    s += ',';
    s += sz() > 0 ? '+' : '-';
    s += ')';
    return s;
  }

  friend constexpr bool operator==(SignPattern, SignPattern) = default;

 private:
  explicit constexpr SignPattern(int k) : index_(k) {}

  static constexpr int kSigns[8][3] = {{1, 1, 1},   {-1, 1, 1},  {-1, -1, 1}, {1, -1, 1},
                                       {1, 1, -1},  {-1, 1, -1}, {-1, -1, -1}, {1, -1, -1}};
  int index_ = 1;
};

// True iff q precedes p in the closed order of pattern k, i.e. p dominates q.
inline bool dominates(const Point3& p, const Point3& q, SignPattern k) {
  return k.sx() * q.x <= k.sx() * p.x && k.sy() * q.y <= k.sy() * p.y &&
         k.sz() * q.z <= k.sz() * p.z;
}

inline bool strictly_dominates(const Point3& p, const Point3& q, SignPattern k) {
  return k.sx() * q.x < k.sx() * p.x && k.sy() * q.y < k.sy() * p.y &&
         k.sz() * q.z < k.sz() * p.z;
}

class PointSet {
 public:
  PointSet() = default;

  // Ids travel with the points; they must be unique and coordinates finite.
  explicit PointSet(std::vector<Point3> points) : points_(std::move(points)) {
    std::unordered_set<PointId> seen;
    seen.reserve(points_.size());
    for (const auto& p : points_) {
      if (!std::isfinite(p.x) || !std::isfinite(p.y) || !std::isfinite(p.z))
        throw std::invalid_argument("point " + std::to_string(p.id) + " has a non-finite coordinate");
      if (!seen.insert(p.id).second)
        throw std::invalid_argument("duplicate point id " + std::to_string(p.id));
    }
    by_z_.resize(points_.size());
    for (std::size_t i = 0; i < points_.size(); ++i) by_z_[i] = i;
    std::sort(by_z_.begin(), by_z_.end(), [&](std::size_t a, std::size_t b) {
      if (points_[a].z != points_[b].z) return points_[a].z > points_[b].z;
      return points_[a].id < points_[b].id;
    });
  }

  // Assigns ids 0..n-1 in sequence order.
  static PointSet from_coordinates(std::span<const std::array<double, 3>> coords) {
    std::vector<Point3> pts;
    pts.reserve(coords.size());
    for (std::size_t i = 0; i < coords.size(); ++i)
      pts.push_back({coords[i][0], coords[i][1], coords[i][2], static_cast<PointId>(i)});
    return PointSet(std::move(pts));
  }

  const std::vector<Point3>& points() const { return points_; }
  std::size_t size() const { return points_.size(); }
  bool empty() const { return points_.empty(); }
  const Point3& operator[](std::size_t i) const { return points_[i]; }
  auto begin() const { return points_.begin(); }
  auto end() const { return points_.end(); }

  // Positions into points(), ordered by strictly decreasing z (top to bottom).
  const std::vector<std::size_t>& by_z_desc() const { return by_z_; }

  std::vector<PointId> ids() const {
    std::vector<PointId> out;
    out.reserve(points_.size());
    for (const auto& p : points_) out.push_back(p.id);
    return out;
  }

  // Subset with the given ids removed; ids are preserved.
  PointSet without(std::span<const PointId> removed) const {
    std::unordered_set<PointId> drop(removed.begin(), removed.end());
    std::vector<Point3> kept;
    kept.reserve(points_.size());
    for (const auto& p : points_)
      if (!drop.contains(p.id)) kept.push_back(p);
    return PointSet(std::move(kept));
  }

 private:
  std::vector<Point3> points_;
  std::vector<std::size_t> by_z_;
};

struct CoordinateCollision {
  char axis = 'x';
  PointId first = 0;
  PointId second = 0;
};

struct GeneralPositionReport {
  std::vector<CoordinateCollision> collisions;

  bool ok() const { return collisions.empty(); }

  std::string to_string() const {
    if (ok()) return "ok";
    std::ostringstream os;
    os << collisions.size() << " coordinate collision(s):";
    const std::size_t shown = std::min<std::size_t>(collisions.size(), 8);
    for (std::size_t i = 0; i < shown; ++i)
      os << ' ' << collisions[i].axis << "(" << collisions[i].first << "," << collisions[i].second << ")";
    if (shown < collisions.size()) os << " ...";
    return os.str();
  }
};

// Reports every pair of points sharing an x, a y, or a z coordinate.
inline GeneralPositionReport validate_general_position(const PointSet& P) {
  GeneralPositionReport report;
  const auto& pts = P.points();
  std::vector<std::size_t> order(pts.size());
  for (int axis = 0; axis < 3; ++axis) {
    auto coord = [&](std::size_t i) { return axis == 0 ? pts[i].x : axis == 1 ? pts[i].y : pts[i].z; };
    for (std::size_t i = 0; i < order.size(); ++i) order[i] = i;
    std::sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) {
      if (coord(a) != coord(b)) return coord(a) < coord(b);
      return pts[a].id < pts[b].id;
    });
    for (std::size_t lo = 0; lo < order.size();) {
      std::size_t hi = lo + 1;
      while (hi < order.size() && coord(order[hi]) == coord(order[lo])) ++hi;
      for (std::size_t a = lo; a < hi; ++a)
        for (std::size_t b = a + 1; b < hi; ++b)
          report.collisions.push_back({"xyz"[axis], pts[order[a]].id, pts[order[b]].id});
      lo = hi;
    }
  }
  return report;
}

inline void require_general_position(const PointSet& P) {
  auto report = validate_general_position(P);
  if (!report.ok()) throw GeneralPositionError("general position violated: " + report.to_string());
}

// Planar variant used by the 2D routines: distinct x and distinct y.
inline void require_general_position(std::span<const Point2> pts) {
  std::vector<double> xs, ys;
  xs.reserve(pts.size());
  ys.reserve(pts.size());
  for (const auto& p : pts) {
    if (!std::isfinite(p.x) || !std::isfinite(p.y))
      throw std::invalid_argument("planar point has a non-finite coordinate");
    xs.push_back(p.x);
    ys.push_back(p.y);
  }
  std::sort(xs.begin(), xs.end());
  std::sort(ys.begin(), ys.end());
  if (std::adjacent_find(xs.begin(), xs.end()) != xs.end())
    throw GeneralPositionError("general position violated: two planar points share an x coordinate");
  if (std::adjacent_find(ys.begin(), ys.end()) != ys.end())
    throw GeneralPositionError("general position violated: two planar points share a y coordinate");
}

inline constexpr int kPerturbRetries = 16;

// Seeded jitter of every coordinate by at most `magnitude`, retried with fresh
// sub-seeds until the result is in general position.
inline PointSet perturb(const PointSet& P, std::uint64_t seed, double magnitude) {
  if (!(magnitude > 0.0)) throw std::invalid_argument("perturbation magnitude must be positive");
  for (int attempt = 0; attempt < kPerturbRetries; ++attempt) {
    std::mt19937_64 rng(seed + 0x9E3779B97F4A7C15ULL * static_cast<std::uint64_t>(attempt));
    std::uniform_real_distribution<double> jitter(-magnitude, magnitude);
    std::vector<Point3> pts;
    pts.reserve(P.size());
    for (const auto& p : P) {
      const double dx = jitter(rng);
      const double dy = jitter(rng);
      const double dz = jitter(rng);
      pts.push_back({p.x + dx, p.y + dy, p.z + dz, p.id});
    }
    PointSet out(std::move(pts));
    if (validate_general_position(out).ok()) return out;
  }
  throw std::runtime_error("perturb: no generic configuration after " + std::to_string(kPerturbRetries) +
                           " attempts; magnitude too small for the coordinate spacing");
}

// Counterclockwise rotation of every (x, y) about the origin by theta.
inline PointSet rotate_z(const PointSet& P, double theta) {
  if (theta == 0.0) return P;
  const double c = std::cos(theta);
  const double s = std::sin(theta);
  std::vector<Point3> pts;
  pts.reserve(P.size());
  for (const auto& p : P) pts.push_back({c * p.x - s * p.y, s * p.x + c * p.y, p.z, p.id});
  return PointSet(std::move(pts));
}

inline Point2 project_xy(const Point3& p) { return {p.x, p.y, p.id}; }

// Normalizes an angle into [0, 2pi).
inline double normalize_angle(double a) {
  double r = std::fmod(a, kTwoPi);
  if (r < 0.0) r += kTwoPi;
  if (r >= kTwoPi) r -= kTwoPi;
  return r;
}

inline double direction(const Point2& from, const Point2& to) {
  return normalize_angle(std::atan2(to.y - from.y, to.x - from.x));
}

}  // namespace rectihull

#endif  // RECTIHULL_CORE_HPP

#ifndef RECTIHULL_MAXIMA_HPP
#define RECTIHULL_MAXIMA_HPP

#include <algorithm>
#include <map>
#include <span>
#include <vector>

#include "core.hpp"

namespace rectihull {

// Orientation of a planar dominance order; (+,+) is "up and to the right".
struct PlanarPattern {
  int sx = 1;
  int sy = 1;

  static constexpr std::array<PlanarPattern, 4> all() { return {{{1, 1}, {-1, 1}, {-1, -1}, {1, -1}}}; }

  friend constexpr bool operator==(PlanarPattern, PlanarPattern) = default;
};

// Planar maxima under a pattern, kept as a staircase keyed by the reflected x.
// In the reflected frame steps have strictly increasing x and strictly
// decreasing y, so the first step at or right of a query x carries the largest
// y among all steps that could dominate it.
class Staircase2D {
 public:
  Staircase2D() = default;
  explicit Staircase2D(PlanarPattern pattern) : pattern_(pattern) {}

  PlanarPattern pattern() const { return pattern_; }
  std::size_t size() const { return steps_.size(); }
  bool empty() const { return steps_.empty(); }

  // Some step dominates q under the closed order.
  bool dominated(const Point2& q) const {
    const double x = pattern_.sx * q.x;
    const double y = pattern_.sy * q.y;
    auto it = steps_.lower_bound(x);
    return it != steps_.end() && it->second.y >= y;
  }

  // Elbow update: if q is undominated it becomes a step and every step it
  // dominates is dropped (appended to `removed` when given). Returns whether
  // the staircase changed.
  bool insert(const Point2& q, std::vector<PointId>* removed = nullptr) {
    if (dominated(q)) return false;
    const double x = pattern_.sx * q.x;
    const double y = pattern_.sy * q.y;
    auto it = steps_.upper_bound(x);
    while (it != steps_.begin()) {
      auto prev = std::prev(it);
      if (prev->second.y > y) break;
      if (removed) removed->push_back(prev->second.original.id);
      steps_.erase(prev);
    }
    steps_.emplace_hint(it, x, Step{y, q});
    return true;
  }

  // Removes the step with this point if present.
  bool erase(const Point2& q) {
    auto it = steps_.find(pattern_.sx * q.x);
    if (it == steps_.end() || it->second.original.id != q.id) return false;
    steps_.erase(it);
    return true;
  }

  // Steps in original coordinates, in staircase order.
  std::vector<Point2> steps() const {
    std::vector<Point2> out;
    out.reserve(steps_.size());
    for (const auto& [x, s] : steps_) out.push_back(s.original);
    return out;
  }

  std::vector<PointId> ids() const {
    std::vector<PointId> out;
    out.reserve(steps_.size());
    for (const auto& [x, s] : steps_) out.push_back(s.original.id);
    return out;
  }

 private:
  struct Step {
    double y;
    Point2 original;
  };

  PlanarPattern pattern_;
  std::map<double, Step> steps_;
};

inline Staircase2D staircase_insert(Staircase2D s, const Point2& q) {
  s.insert(q);
  return s;
}

// Maximal planar points under `pattern`, via a sweep by decreasing reflected x.
inline Staircase2D maxima2d(std::span<const Point2> points, PlanarPattern pattern) {
  require_general_position(points);
  std::vector<Point2> order(points.begin(), points.end());
  std::sort(order.begin(), order.end(),
            [&](const Point2& a, const Point2& b) { return pattern.sx * a.x > pattern.sx * b.x; });
  Staircase2D stairs(pattern);
  bool any = false;
  double best = 0.0;
  for (const auto& p : order) {
    const double y = pattern.sy * p.y;
    if (!any || y > best) {
      stairs.insert(p);
      best = y;
      any = true;
    }
  }
  return stairs;
}

struct MaximaResult {
  SignPattern pattern;
  std::vector<PointId> ids;  // sorted ascending
};

namespace detail {

// Sweep by decreasing reflected z; a point is maximal iff its reflected
// projection is undominated by the staircase of the points above it.
inline std::vector<PointId> sweep_maxima(const PointSet& P, SignPattern k) {
  std::vector<std::size_t> order(P.size());
  for (std::size_t i = 0; i < order.size(); ++i) order[i] = i;
  if (k.sz() > 0) {
    order = P.by_z_desc();
  } else {
    order.assign(P.by_z_desc().rbegin(), P.by_z_desc().rend());
  }
  Staircase2D stairs({k.sx(), k.sy()});
  std::vector<PointId> ids;
  for (std::size_t idx : order) {
    const Point2 q = project_xy(P[idx]);
    if (stairs.insert(q)) ids.push_back(q.id);
  }
  std::sort(ids.begin(), ids.end());
  return ids;
}

}  // namespace detail

inline MaximaResult maxima3d(const PointSet& P, SignPattern k) {
  require_general_position(P);
  return {k, detail::sweep_maxima(P, k)};
}

// Points of P with at least one P-free open octant: the union of the eight
// maxima sets.
inline std::vector<PointId> rch_vertices(const PointSet& P) {
  require_general_position(P);
  std::vector<PointId> all;
  for (auto k : SignPattern::all()) {
    auto ids = detail::sweep_maxima(P, k);
    all.insert(all.end(), ids.begin(), ids.end());
  }
  std::sort(all.begin(), all.end());
  all.erase(std::unique(all.begin(), all.end()), all.end());
  return all;
}

}  // namespace rectihull

#endif  // RECTIHULL_MAXIMA_HPP

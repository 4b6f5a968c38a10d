#ifndef RECTIHULL_ROTATE_HPP
#define RECTIHULL_ROTATE_HPP

#include <algorithm>
#include <array>
#include <cmath>
#include <optional>
#include <span>
#include <unordered_map>
#include <utility>
#include <vector>

#include "core.hpp"
#include "hull_tree.hpp"
#include "interval.hpp"

namespace rectihull {

enum class AxisRay { PosX, PosY, NegX, NegY };

inline constexpr std::array<AxisRay, 4> kAxisRays{AxisRay::PosX, AxisRay::PosY, AxisRay::NegX, AxisRay::NegY};

inline double ray_angle(AxisRay r) {
  switch (r) {
    case AxisRay::PosX: return 0.0;
    case AxisRay::PosY: return kHalfPi;
    case AxisRay::NegX: return kPi;
    case AxisRay::NegY: return 3.0 * kHalfPi;
  }
  return 0.0;
}

struct AngularNeighbors {
  std::optional<Point2> first_cw;
  std::optional<Point2> first_ccw;
};

// Empty sector (lo, hi) around center_ray with lo < hi unwrapped; width 2pi
// when at most one point is visible.
struct Gap {
  AxisRay center_ray = AxisRay::PosX;
  double lo = 0.0;
  double hi = 0.0;

  double width() const { return hi - lo; }
};

namespace detail {

inline bool serves(const HullTree& t, AxisRay ray) {
  return t.key_axis() == KeyAxis::X ? (ray == AxisRay::PosY || ray == AxisRay::NegY)
                                    : (ray == AxisRay::PosX || ray == AxisRay::NegX);
}

// In the tree frame the served rays are +y (positive) and -y.
inline bool positive_ray(AxisRay ray) { return ray == AxisRay::PosY || ray == AxisRay::PosX; }

inline AngularNeighbors neighbors_from(const HullTree::SideExtremes& ex, bool positive) {
  AngularNeighbors out;
  if (positive) {
    out.first_cw = ex.right_pos ? ex.right_pos : ex.left_neg;
    out.first_ccw = ex.left_pos ? ex.left_pos : ex.right_neg;
  } else {
    out.first_cw = ex.left_neg ? ex.left_neg : ex.right_pos;
    out.first_ccw = ex.right_neg ? ex.right_neg : ex.left_pos;
  }
  return out;
}

inline Gap gap_from(const Point2& q, AxisRay ray, const AngularNeighbors& nb) {
  const double rho = ray_angle(ray);
  if (!nb.first_cw || !nb.first_ccw) return {ray, rho - kPi, rho + kPi};
  const double dcw = normalize_angle(rho - direction(q, *nb.first_cw));
  const double dccw = normalize_angle(direction(q, *nb.first_ccw) - rho);
  double width = dcw + dccw;
  if (nb.first_cw->id == nb.first_ccw->id && width <= 0.0) width = kTwoPi;
  return {ray, rho - dcw, rho - dcw + width};
}

}  // namespace detail

// First active points met by the ray from q rotating clockwise and
// counterclockwise. The tree must be keyed perpendicular to the ray.
inline AngularNeighbors angular_neighbors(const HullTree& t, std::size_t q, AxisRay ray) {
  if (!detail::serves(t, ray)) throw std::invalid_argument("angular_neighbors: ray parallel to the tree key");
  return detail::neighbors_from(t.extremes(q), detail::positive_ray(ray));
}

// Maximal empty sectors of width >= pi/2 - eps around q, found by probing the
// four axis rays; a sector seen from several rays is reported once.
inline std::vector<Gap> empty_gaps(const HullTree& xkeyed, const HullTree& ykeyed, std::size_t q, double eps = 1e-9) {
  const Point2 origin = xkeyed.point(q);
  const auto ex = xkeyed.extremes(q);
  const auto ey = ykeyed.extremes(q);
  std::vector<Gap> gaps;
  for (AxisRay ray : kAxisRays) {
    const bool keyed_x = ray == AxisRay::PosY || ray == AxisRay::NegY;
    const Gap g = detail::gap_from(origin, ray, detail::neighbors_from(keyed_x ? ex : ey, detail::positive_ray(ray)));
    if (g.width() < kHalfPi - eps) continue;
    const bool seen = std::any_of(gaps.begin(), gaps.end(), [&](const Gap& h) {
      if (h.width() >= kTwoPi - eps && g.width() >= kTwoPi - eps) return true;
      const double d = std::abs(normalize_angle(h.lo - g.lo + kPi) - kPi);
      return d <= eps && std::abs(h.width() - g.width()) <= eps;
    });
    if (!seen) gaps.push_back(g);
  }
  return gaps;
}

// Rotations theta for which a quarter-plane wedge, rotated by theta, fits in
// the gap: wedge j spans [theta + j pi/2, theta + (j + 1) pi/2].
inline IntervalSet gaps_to_theta_intervals(const Gap& g, double eps = 1e-9) {
  if (g.width() >= kTwoPi - eps) return IntervalSet::full();
  std::vector<std::pair<double, double>> arcs;
  for (int j = 0; j < 4; ++j) {
    const double lo = g.lo - j * kHalfPi;
    const double hi = std::max(lo, g.hi - kHalfPi - j * kHalfPi);
    arcs.emplace_back(lo, hi);
  }
  return IntervalSet::from_unwrapped(arcs, eps);
}

struct Activity {
  PointId id = 0;
  IntervalSet up;      // an upper octant is free
  IntervalSet down;    // a lower octant is free
  IntervalSet merged;  // vertex of the rotated hull
};

// Per-point activity over theta in [0, 2pi), in the input order of P.
struct ActivityTable {
  std::vector<Activity> points;

  const Activity* find(PointId id) const {
    for (const auto& a : points)
      if (a.id == id) return &a;
    return nullptr;
  }
};

namespace detail {

// One pass over positions in `order`: each point is queried against the
// already activated ones, then activated.
inline std::vector<IntervalSet> activity_pass(std::span<const Point2> pts, const std::vector<std::size_t>& order,
                                              double eps) {
  HullTree xkeyed(pts, KeyAxis::X);
  HullTree ykeyed(pts, KeyAxis::Y);
  std::vector<IntervalSet> out(pts.size());
  for (std::size_t i : order) {
    IntervalSet acc;
    for (const Gap& g : empty_gaps(xkeyed, ykeyed, i, eps)) acc = interval_union(acc, gaps_to_theta_intervals(g, eps), eps);
    out[i] = std::move(acc);
    xkeyed.activate(i);
    ykeyed.activate(i);
  }
  return out;
}

}  // namespace detail

inline ActivityTable active_intervals(const PointSet& P, const Tolerance& tol = {}) {
  require_general_position(P);
  std::vector<Point2> pts;
  pts.reserve(P.size());
  for (const auto& p : P) pts.push_back(project_xy(p));
  const std::vector<std::size_t>& down_order = P.by_z_desc();
  const std::vector<std::size_t> up_order(down_order.rbegin(), down_order.rend());
  // Top-down: the activated points are those above, so gaps are up-octants.
  auto up = detail::activity_pass(pts, down_order, tol.eps_angle);
  auto down = detail::activity_pass(pts, up_order, tol.eps_angle);
  ActivityTable tab;
  tab.points.reserve(P.size());
  for (std::size_t i = 0; i < P.size(); ++i) {
    IntervalSet merged = interval_union(up[i], down[i], tol.eps_angle);
    tab.points.push_back({P[i].id, std::move(up[i]), std::move(down[i]), std::move(merged)});
  }
  return tab;
}

// Ids whose merged set contains theta, ascending.
inline std::vector<PointId> active_at(const ActivityTable& tab, double theta) {
  std::vector<PointId> ids;
  for (const auto& a : tab.points)
    if (a.merged.contains(theta)) ids.push_back(a.id);
  std::sort(ids.begin(), ids.end());
  return ids;
}

}  // namespace rectihull

#endif  // RECTIHULL_ROTATE_HPP

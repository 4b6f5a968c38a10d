#ifndef RECTIHULL_ORACLE_HPP
#define RECTIHULL_ORACLE_HPP

// Brute-force references. Apart from the core types and the interval
// arithmetic, nothing here is shared with the optimized algorithms.

#include <algorithm>
#include <cstdint>
#include <set>
#include <stdexcept>
#include <string>
#include <vector>

#include "core.hpp"
#include "hull.hpp"
#include "interval.hpp"
#include "rotate.hpp"

namespace rectihull {

inline constexpr std::size_t kOracleCap = 300;

inline std::vector<PointId> brute_maxima(const PointSet& P, SignPattern k) {
  std::vector<PointId> ids;
  for (std::size_t i = 0; i < P.size(); ++i) {
    bool maximal = true;
    for (std::size_t j = 0; j < P.size() && maximal; ++j)
      if (j != i && dominates(P[j], P[i], k)) maximal = false;
    if (maximal) ids.push_back(P[i].id);
  }
  std::sort(ids.begin(), ids.end());
  return ids;
}

// Some open octant at P[i] holds no other point.
inline bool brute_has_free_octant(const PointSet& P, std::size_t i) {
  const Point3& p = P[i];
  unsigned occupied = 0;
  for (std::size_t j = 0; j < P.size(); ++j) {
    if (j == i) continue;
    const Point3& q = P[j];
    if (q.x == p.x || q.y == p.y || q.z == p.z) continue;  // on a bounding plane, not inside
    const unsigned bit = (q.x > p.x ? 1u : 0u) | (q.y > p.y ? 2u : 0u) | (q.z > p.z ? 4u : 0u);
    occupied |= 1u << bit;
    if (occupied == 0xFFu) return false;
  }
  return true;
}

inline std::vector<PointId> brute_vertices(const PointSet& P) {
  std::vector<PointId> ids;
  for (std::size_t i = 0; i < P.size(); ++i)
    if (brute_has_free_octant(P, i)) ids.push_back(P[i].id);
  std::sort(ids.begin(), ids.end());
  return ids;
}

// q lies in RCH(P) iff every pattern has a point of P dominating it.
inline bool brute_member(const Point3& q, const PointSet& P) {
  for (auto k : SignPattern::all()) {
    bool covered = false;
    for (const auto& p : P)
      if (dominates(p, q, k)) {
        covered = true;
        break;
      }
    if (!covered) return false;
  }
  return true;
}

inline std::vector<std::vector<PointId>> brute_layers(const PointSet& P) {
  std::vector<std::vector<PointId>> out;
  PointSet rest = P;
  while (!rest.empty()) {
    auto layer = brute_vertices(rest);
    if (layer.empty()) throw std::logic_error("brute_layers: empty layer");
    rest = rest.without(layer);
    out.push_back(std::move(layer));
  }
  return out;
}

namespace detail {

// Arcs of theta where some rotated open quadrant around `from` misses every
// direction in `dirs`.
inline IntervalSet brute_quadrant_activity(const std::vector<double>& dirs, double eps) {
  if (dirs.empty()) return IntervalSet::full();
  std::vector<double> crit;
  crit.reserve(4 * dirs.size());
  for (double phi : dirs)
    for (int j = 0; j < 4; ++j) crit.push_back(normalize_angle(phi - j * kHalfPi));
  std::sort(crit.begin(), crit.end());
  std::vector<double> events;
  for (double c : crit)
    if (events.empty() || c - events.back() > 1e-15) events.push_back(c);

  auto active = [&](double theta) {
    unsigned occupied = 0;
    for (double phi : dirs) {
      const double r = normalize_angle(phi - theta);
      occupied |= 1u << std::min(3, static_cast<int>(r / kHalfPi));
      if (occupied == 0xFu) return false;
    }
    return true;
  };

  std::vector<std::pair<double, double>> arcs;
  for (std::size_t k = 0; k < events.size(); ++k) {
    const double a = events[k];
    const double b = k + 1 < events.size() ? events[k + 1] : events.front() + kTwoPi;
    if (active(0.5 * (a + b))) arcs.emplace_back(a, b);
  }
  return IntervalSet::from_unwrapped(arcs, eps);
}

}  // namespace detail

// Event-angle enumeration: every direction to a point above (below) is a
// critical angle in each of its four quarter-turn copies; the activity is
// tested by a direct quadrant scan at each midpoint.
inline ActivityTable brute_active_intervals(const PointSet& P, std::size_t cap = kOracleCap, double eps = 1e-9) {
  if (P.size() > cap)
    throw std::invalid_argument("brute_active_intervals: " + std::to_string(P.size()) + " points exceed the cap of " +
                                std::to_string(cap));
  ActivityTable tab;
  std::vector<double> above, below;
  for (std::size_t i = 0; i < P.size(); ++i) {
    above.clear();
    below.clear();
    const Point2 p = project_xy(P[i]);
    for (std::size_t j = 0; j < P.size(); ++j) {
      if (j == i) continue;
      const double phi = direction(p, project_xy(P[j]));
      (P[j].z > P[i].z ? above : below).push_back(phi);
    }
    IntervalSet up = detail::brute_quadrant_activity(above, eps);
    IntervalSet down = detail::brute_quadrant_activity(below, eps);
    IntervalSet merged = interval_union(up, down, eps);
    tab.points.push_back({P[i].id, std::move(up), std::move(down), std::move(merged)});
  }
  return tab;
}

// Combinatorial fingerprint of a slab mesh: the event ids top to bottom, then
// for every slab the provenance of each region's breakpoints and spans.
struct HullSignature {
  std::vector<PointId> code;

  friend bool operator==(const HullSignature&, const HullSignature&) = default;
  friend auto operator<=>(const HullSignature&, const HullSignature&) = default;
};

inline HullSignature hull_signature(const SlabMesh& mesh) {
  HullSignature sig;
  auto& c = sig.code;
  for (const auto& e : mesh.events) c.push_back(e.id);
  c.push_back(kNoPoint);
  auto put_regions = [&](const RegionSet& rs) {
    for (const auto& r : rs) {
      for (const auto& x : r.breakpoints()) c.push_back(x.id);
      for (const auto& s : r.at()) {
        c.push_back(s.lo.id);
        c.push_back(s.hi.id);
      }
      for (const auto& s : r.between()) {
        c.push_back(s.lo.id);
        c.push_back(s.hi.id);
      }
      c.push_back(kNoPoint - 1);
    }
    c.push_back(kNoPoint);
  };
  for (const auto& s : mesh.sections) put_regions(s);
  for (const auto& s : mesh.slabs) put_regions(s.regions);
  return sig;
}

// Critical rotations inside the window: any quarter-turn copy of a pairwise
// direction, where two rotated points swap their x or y order.
inline std::vector<double> pairwise_critical_angles(const PointSet& P, const AngleInterval& window, double eps = 1e-9) {
  std::vector<double> offsets;
  const double span = window.measure();
  for (std::size_t i = 0; i < P.size(); ++i)
    for (std::size_t j = i + 1; j < P.size(); ++j) {
      const double phi = direction(project_xy(P[i]), project_xy(P[j]));
      for (int k = 0; k < 4; ++k) {
        const double t = normalize_angle(phi - k * kHalfPi - window.lo);
        if (t > 0.0 && t < span) offsets.push_back(t);
      }
    }
  std::sort(offsets.begin(), offsets.end());
  std::vector<double> out;
  for (double t : offsets)
    if (out.empty() || t - out.back() > eps) out.push_back(t);
  return out;
}

// Distinct hulls over the rotations in the window, one probe per gap between
// consecutive critical angles.
inline std::size_t count_hull_signatures(const PointSet& P, const AngleInterval& window, std::size_t cap = kOracleCap,
                                         double eps = 1e-9) {
  if (P.size() > cap)
    throw std::invalid_argument("count_hull_signatures: " + std::to_string(P.size()) + " points exceed the cap of " +
                                std::to_string(cap));
  if (P.empty()) return 1;
  std::vector<double> cuts{0.0};
  const auto inner = pairwise_critical_angles(P, window, eps);
  cuts.insert(cuts.end(), inner.begin(), inner.end());
  cuts.push_back(window.measure());
  std::set<HullSignature> seen;
  for (std::size_t k = 0; k + 1 < cuts.size(); ++k) {
    const double theta = window.lo + 0.5 * (cuts[k] + cuts[k + 1]);
    seen.insert(hull_signature(rch3_at_theta(P, theta)));
  }
  return seen.size();
}

}  // namespace rectihull

#endif  // RECTIHULL_ORACLE_HPP

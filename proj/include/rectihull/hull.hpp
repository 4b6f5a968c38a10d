#ifndef RECTIHULL_HULL_HPP
#define RECTIHULL_HULL_HPP

#include <algorithm>
#include <array>
#include <unordered_map>
#include <unordered_set>
#include <vector>

#include "core.hpp"
#include "maxima.hpp"
#include "region.hpp"

namespace rectihull {

// Cross-section of RCH(P) by the plane z = c. An exact event height is taken
// as the limit from above.
inline RegionSet slice(const PointSet& P, double c) {
  std::vector<Point2> above, below;
  for (const auto& p : P) (p.z > c ? above : below).push_back(project_xy(p));
  if (above.empty() || below.empty()) return {};
  return intersect_regions(rch2(above), rch2(below));
}

// Change to one of the eight staircases when the sweep plane moves from just
// above a point to just below it.
struct StaircaseDelta {
  std::vector<PointId> added;
  std::vector<PointId> removed;

  bool empty() const { return added.empty() && removed.empty(); }
};

struct HullEvent {
  PointId id = 0;
  double z = 0.0;
  std::array<StaircaseDelta, 8> deltas;  // indexed by pattern index - 1
};

// Top-to-bottom elbow stream. Patterns 1..4 track the points above the plane
// (insert-only going down); patterns 5..8 track the points below it, whose
// top-down deltas are the reversed bottom-up insertions. Only hull vertices
// produce events.
struct HullEvents {
  std::array<std::vector<PointId>, 4> initial_below;  // staircases of all of P, patterns 5..8
  std::vector<HullEvent> events;

  std::size_t total_changes() const {
    std::size_t n = 0;
    for (const auto& e : events)
      for (const auto& d : e.deltas) n += d.added.size() + d.removed.size();
    return n;
  }
};

inline HullEvents rch3_events(const PointSet& P) {
  require_general_position(P);
  const auto& order = P.by_z_desc();
  const std::size_t n = order.size();
  // Per sweep position, the deltas that are non-empty.
  std::vector<std::array<StaircaseDelta, 8>> log;
  std::vector<int> slot(n, -1);
  auto delta_at = [&](std::size_t pos, int k) -> StaircaseDelta& {
    if (slot[pos] < 0) {
      slot[pos] = static_cast<int>(log.size());
      log.emplace_back();
    }
    return log[static_cast<std::size_t>(slot[pos])][static_cast<std::size_t>(k)];
  };

  HullEvents out;
  std::vector<PointId> removed;
  for (int k = 0; k < 8; ++k) {
    const SignPattern pattern = SignPattern::from_index(k + 1);
    Staircase2D stairs({pattern.sx(), pattern.sy()});
    if (pattern.sz() > 0) {
      for (std::size_t pos = 0; pos < n; ++pos) {
        const Point2 q = project_xy(P[order[pos]]);
        removed.clear();
        if (!stairs.insert(q, &removed)) continue;
        auto& d = delta_at(pos, k);
        d.added.push_back(q.id);
        d.removed = removed;
      }
    } else {
      for (std::size_t pos = n; pos-- > 0;) {
        const Point2 q = project_xy(P[order[pos]]);
        removed.clear();
        if (!stairs.insert(q, &removed)) continue;
        auto& d = delta_at(pos, k);
        d.added = removed;
        d.removed.push_back(q.id);
      }
      out.initial_below[static_cast<std::size_t>(k - 4)] = stairs.ids();
    }
  }
  for (std::size_t pos = 0; pos < n; ++pos) {
    if (slot[pos] < 0) continue;
    HullEvent e;
    e.id = P[order[pos]].id;
    e.z = P[order[pos]].z;
    e.deltas = std::move(log[static_cast<std::size_t>(slot[pos])]);
    out.events.push_back(std::move(e));
  }
  return out;
}

struct Slab {
  Coord top;     // event height bounding the slab from above
  Coord bottom;  // and from below
  RegionSet regions;
};

// RCH(P) as a z-ordered stack of constant cross-sections. `events` are the
// heights of the hull vertices (top to bottom), `sections[i]` is the closed
// cross-section at events[i], and `slabs[i]` the constant open-slab section
// between events[i] and events[i + 1]. Caps are derived faces (see mesh.hpp).
struct SlabMesh {
  std::vector<Coord> events;
  std::vector<RegionSet> sections;
  std::vector<Slab> slabs;
  double theta = 0.0;
};

namespace detail {

class StaircaseState {
 public:
  explicit StaircaseState(const PointSet& P) {
    index_.reserve(P.size());
    for (std::size_t i = 0; i < P.size(); ++i) index_.emplace(P[i].id, i);
  }

  void apply(const StaircaseDelta& d, std::unordered_multiset<PointId>& members) {
    for (PointId id : d.removed) {
      auto it = members.find(id);
      if (it != members.end()) members.erase(it);
    }
    members.insert(d.added.begin(), d.added.end());
  }

  std::vector<Point2> points(const PointSet& P, const std::unordered_multiset<PointId>& members) const {
    std::vector<PointId> ids(members.begin(), members.end());
    std::sort(ids.begin(), ids.end());
    ids.erase(std::unique(ids.begin(), ids.end()), ids.end());
    std::vector<Point2> pts;
    pts.reserve(ids.size());
    for (PointId id : ids) pts.push_back(project_xy(P[index_.at(id)]));
    return pts;
  }

 private:
  std::unordered_map<PointId, std::size_t> index_;
};

}  // namespace detail

// Top-to-bottom sweep over the elbow stream; each slab section is rebuilt
// from the union of the live staircases above and below the plane.
inline SlabMesh rch3(const PointSet& P) {
  SlabMesh mesh;
  if (P.empty()) return mesh;
  const HullEvents stream = rch3_events(P);
  detail::StaircaseState state(P);
  // A point may sit on several staircases at once, hence the multiset.
  std::unordered_multiset<PointId> above, below;
  for (const auto& ids : stream.initial_below) below.insert(ids.begin(), ids.end());

  for (std::size_t i = 0; i < stream.events.size(); ++i) {
    const auto& e = stream.events[i];
    for (int k = 0; k < 4; ++k) state.apply(e.deltas[static_cast<std::size_t>(k)], above);
    const RegionSet up = rch2(state.points(P, above));
    mesh.events.push_back({e.z, e.id});
    mesh.sections.push_back(intersect_regions(up, rch2(state.points(P, below))));
    for (int k = 4; k < 8; ++k) state.apply(e.deltas[static_cast<std::size_t>(k)], below);
    if (i + 1 < stream.events.size()) {
      const auto& next = stream.events[i + 1];
      mesh.slabs.push_back(
          {{e.z, e.id}, {next.z, next.id}, intersect_regions(up, rch2(state.points(P, below)))});
    }
  }
  return mesh;
}

inline SlabMesh rch3_at_theta(const PointSet& P, double theta) {
  SlabMesh mesh = rch3(rotate_z(P, -theta));
  mesh.theta = theta;
  return mesh;
}

// Rectilinear convex layers by repeated peeling of the vertex set.
inline std::vector<std::vector<PointId>> layers(const PointSet& P) {
  std::vector<std::vector<PointId>> out;
  PointSet rest = P;
  while (!rest.empty()) {
    auto layer = rch_vertices(rest);
    rest = rest.without(layer);
    out.push_back(std::move(layer));
  }
  return out;
}

}  // namespace rectihull

#endif  // RECTIHULL_HULL_HPP

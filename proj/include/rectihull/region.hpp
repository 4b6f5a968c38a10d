#ifndef RECTIHULL_REGION_HPP
#define RECTIHULL_REGION_HPP

#include <algorithm>
#include <limits>
#include <optional>
#include <span>
#include <vector>

#include "core.hpp"

namespace rectihull {

// A coordinate together with the input point that defines it.
struct Coord {
  double v = 0.0;
  PointId id = kNoPoint;

  friend bool operator==(const Coord&, const Coord&) = default;
};

// Closed vertical extent [lo, hi] of a region above one x (or one open x-range).
struct Span {
  Coord lo{std::numeric_limits<double>::infinity(), kNoPoint};
  Coord hi{-std::numeric_limits<double>::infinity(), kNoPoint};

  static Span none() { return {}; }
  bool empty() const { return lo.v > hi.v; }
  bool contains(double y) const { return lo.v <= y && y <= hi.v; }
  double length() const { return empty() ? 0.0 : hi.v - lo.v; }
  bool same_extent(const Span& o) const { return lo.v == o.lo.v && hi.v == o.hi.v; }

  friend bool operator==(const Span&, const Span&) = default;
};

inline Span intersect(const Span& a, const Span& b) {
  if (a.empty() || b.empty()) return Span::none();
  Span s;
  s.lo = a.lo.v >= b.lo.v ? a.lo : b.lo;
  s.hi = a.hi.v <= b.hi.v ? a.hi : b.hi;
  if (s.empty()) return Span::none();
  return s;
}

struct Vertex2 {
  double x = 0.0;
  double y = 0.0;

  friend bool operator==(const Vertex2&, const Vertex2&) = default;
};

// A connected, closed, rectilinearly convex planar region described by
// columns. Breakpoints x_0 < ... < x_m each carry the closed section at that
// x, and each open range (x_i, x_{i+1}) carries the section constant over it.
// A section at a breakpoint contains the sections of its two neighbouring
// open ranges (closedness), so a region is connected iff every open-range
// section is non-empty. Isolated points and segments are regions too.
class StaircaseRegion {
 public:
  StaircaseRegion() = default;

  StaircaseRegion(std::vector<Coord> xs, std::vector<Span> at, std::vector<Span> between)
      : xs_(std::move(xs)), at_(std::move(at)), between_(std::move(between)) {
    if (xs_.empty() || at_.size() != xs_.size() || between_.size() + 1 != xs_.size())
      throw std::invalid_argument("StaircaseRegion: inconsistent column counts");
  }

  const std::vector<Coord>& breakpoints() const { return xs_; }
  const std::vector<Span>& at() const { return at_; }
  const std::vector<Span>& between() const { return between_; }

  double x_min() const { return xs_.front().v; }
  double x_max() const { return xs_.back().v; }

  // Section over the vertical line at x (empty outside the x-range).
  Span section(double x) const {
    if (x < x_min() || x > x_max()) return Span::none();
    auto it = std::lower_bound(xs_.begin(), xs_.end(), x, [](const Coord& c, double v) { return c.v < v; });
    const auto i = static_cast<std::size_t>(it - xs_.begin());
    if (it != xs_.end() && it->v == x) return at_[i];
    return between_[i - 1];
  }

  bool contains(double x, double y) const { return section(x).contains(y); }

  double area() const {
    double a = 0.0;
    for (std::size_t i = 0; i < between_.size(); ++i) a += between_[i].length() * (xs_[i + 1].v - xs_[i].v);
    return a;
  }

  bool is_degenerate() const { return area() == 0.0; }
  bool is_point() const { return xs_.size() == 1 && at_[0].lo.v == at_[0].hi.v; }

  // Counterclockwise boundary cycle with axis-parallel edges; collinear and
  // repeated vertices are dropped. Degenerate parts show up as zero-width
  // spikes; a point region yields a single vertex.
  std::vector<Vertex2> boundary() const {
    std::vector<Vertex2> raw;
    const std::size_t m = xs_.size() - 1;
    raw.push_back({xs_[0].v, at_[0].hi.v});
    raw.push_back({xs_[0].v, at_[0].lo.v});
    for (std::size_t i = 0; i < m; ++i) {
      raw.push_back({xs_[i].v, between_[i].lo.v});
      raw.push_back({xs_[i + 1].v, between_[i].lo.v});
      raw.push_back({xs_[i + 1].v, at_[i + 1].lo.v});
    }
    raw.push_back({xs_[m].v, at_[m].hi.v});
    for (std::size_t i = m; i-- > 0;) {
      raw.push_back({xs_[i + 1].v, between_[i].hi.v});
      raw.push_back({xs_[i].v, between_[i].hi.v});
      raw.push_back({xs_[i].v, at_[i].hi.v});
    }
    return simplify_cycle(raw);
  }

  // Horizontal lines meet the region in one interval (scanline check).
  bool rectilinearly_convex() const {
    std::vector<double> ys;
    for (const auto& s : at_) {
      ys.push_back(s.lo.v);
      ys.push_back(s.hi.v);
    }
    std::sort(ys.begin(), ys.end());
    ys.erase(std::unique(ys.begin(), ys.end()), ys.end());
    std::vector<double> probes = ys;
    for (std::size_t i = 0; i + 1 < ys.size(); ++i) probes.push_back(0.5 * (ys[i] + ys[i + 1]));
    for (double y : probes) {
      // Columns in x order; the hit pattern must be one contiguous run.
      int runs = 0;
      bool inside = false;
      for (std::size_t i = 0; i < xs_.size(); ++i) {
        const bool hit_at = at_[i].contains(y);
        if (hit_at && !inside) ++runs;
        inside = hit_at;
        if (i < between_.size()) {
          const bool hit = between_[i].contains(y);
          if (hit && !inside) ++runs;
          inside = hit;
        }
      }
      if (runs > 1) return false;
    }
    return true;
  }

  friend bool operator==(const StaircaseRegion&, const StaircaseRegion&) = default;

 private:
  static std::vector<Vertex2> simplify_cycle(const std::vector<Vertex2>& raw) {
    std::vector<Vertex2> v;
    for (const auto& p : raw)
      if (v.empty() || !(v.back() == p)) v.push_back(p);
    while (v.size() > 1 && v.front() == v.back()) v.pop_back();
    bool changed = true;
    while (changed && v.size() > 2) {
      changed = false;
      for (std::size_t i = 0; i < v.size() && v.size() > 2; ++i) {
        const auto& a = v[(i + v.size() - 1) % v.size()];
        const auto& b = v[i];
        const auto& c = v[(i + 1) % v.size()];
        const bool straight_x = a.x == b.x && b.x == c.x && (b.y - a.y) * (c.y - b.y) > 0;
        const bool straight_y = a.y == b.y && b.y == c.y && (b.x - a.x) * (c.x - b.x) > 0;
        if (straight_x || straight_y || b == c) {
          v.erase(v.begin() + static_cast<std::ptrdiff_t>(i));
          changed = true;
          break;
        }
      }
    }
    return v;
  }

  std::vector<Coord> xs_;
  std::vector<Span> at_;
  std::vector<Span> between_;
};

// Pairwise-disjoint regions ordered by x_min.
class RegionSet {
 public:
  RegionSet() = default;
  explicit RegionSet(std::vector<StaircaseRegion> regions) : regions_(std::move(regions)) {
    std::sort(regions_.begin(), regions_.end(),
              [](const StaircaseRegion& a, const StaircaseRegion& b) { return a.x_min() < b.x_min(); });
  }

  const std::vector<StaircaseRegion>& regions() const { return regions_; }
  std::size_t size() const { return regions_.size(); }
  bool empty() const { return regions_.empty(); }
  auto begin() const { return regions_.begin(); }
  auto end() const { return regions_.end(); }
  const StaircaseRegion& operator[](std::size_t i) const { return regions_[i]; }

  bool contains(double x, double y) const {
    return std::any_of(regions_.begin(), regions_.end(),
                       [&](const StaircaseRegion& r) { return r.contains(x, y); });
  }

  // Index of the region containing (x, y), if any.
  std::optional<std::size_t> locate(double x, double y) const {
    for (std::size_t i = 0; i < regions_.size(); ++i)
      if (regions_[i].contains(x, y)) return i;
    return std::nullopt;
  }

  double area() const {
    double a = 0.0;
    for (const auto& r : regions_) a += r.area();
    return a;
  }

  friend bool operator==(const RegionSet&, const RegionSet&) = default;

 private:
  std::vector<StaircaseRegion> regions_;
};

namespace detail {

// Splits an aligned column sequence at empty sections into connected regions
// and drops breakpoints whose section matches both neighbours.
inline void emit_regions(const std::vector<Coord>& xs, const std::vector<Span>& at, const std::vector<Span>& between,
                         std::vector<StaircaseRegion>& out) {
  const std::size_t m = xs.size();
  std::size_t i = 0;
  while (i < m) {
    if (at[i].empty()) {
      ++i;
      continue;
    }
    std::size_t j = i;
    while (j + 1 < m && !between[j].empty() && !at[j + 1].empty()) ++j;
    std::vector<Coord> rx{xs[i]};
    std::vector<Span> ra{at[i]};
    std::vector<Span> rb;
    for (std::size_t k = i; k < j; ++k) {
      const bool redundant = !rb.empty() && rb.back().same_extent(ra.back()) && ra.back().same_extent(between[k]);
      if (redundant) {
        rx.pop_back();
        ra.pop_back();
      } else {
        rb.push_back(between[k]);
      }
      rx.push_back(xs[k + 1]);
      ra.push_back(at[k + 1]);
    }
    out.emplace_back(std::move(rx), std::move(ra), std::move(rb));
    i = j + 1;
  }
}

}  // namespace detail

// Planar rectilinear convex hull: points q dominated, for each of the four
// planar patterns, by some input point. Over a vertical line the hull is
// [max(prefix min y, suffix min y), min(prefix max y, suffix max y)].
inline RegionSet rch2(std::span<const Point2> input) {
  require_general_position(input);
  if (input.empty()) return {};
  std::vector<Point2> pts(input.begin(), input.end());
  std::sort(pts.begin(), pts.end(), [](const Point2& a, const Point2& b) { return a.x < b.x; });
  const std::size_t n = pts.size();
  std::vector<Coord> pre_min(n), pre_max(n), suf_min(n), suf_max(n);
  for (std::size_t i = 0; i < n; ++i) {
    const Coord c{pts[i].y, pts[i].id};
    pre_min[i] = (i == 0 || c.v < pre_min[i - 1].v) ? c : pre_min[i - 1];
    pre_max[i] = (i == 0 || c.v > pre_max[i - 1].v) ? c : pre_max[i - 1];
  }
  for (std::size_t i = n; i-- > 0;) {
    const Coord c{pts[i].y, pts[i].id};
    suf_min[i] = (i + 1 == n || c.v < suf_min[i + 1].v) ? c : suf_min[i + 1];
    suf_max[i] = (i + 1 == n || c.v > suf_max[i + 1].v) ? c : suf_max[i + 1];
  }
  auto column = [](Coord lo_a, Coord lo_b, Coord hi_a, Coord hi_b) {
    Span s{lo_a.v >= lo_b.v ? lo_a : lo_b, hi_a.v <= hi_b.v ? hi_a : hi_b};
    return s.empty() ? Span::none() : s;
  };
  std::vector<Coord> xs(n);
  std::vector<Span> at(n), between(n - 1);
  for (std::size_t i = 0; i < n; ++i) {
    xs[i] = {pts[i].x, pts[i].id};
    at[i] = column(pre_min[i], suf_min[i], pre_max[i], suf_max[i]);
    if (i + 1 < n) between[i] = column(pre_min[i], suf_min[i + 1], pre_max[i], suf_max[i + 1]);
  }
  std::vector<StaircaseRegion> regions;
  detail::emit_regions(xs, at, between, regions);
  return RegionSet(std::move(regions));
}

inline StaircaseRegion region_of_point(const Point2& p) {
  const Coord y{p.y, p.id};
  return StaircaseRegion({Coord{p.x, p.id}}, {Span{y, y}}, {});
}

// Set intersection by merging the column sequences of every x-overlapping
// pair of regions.
inline RegionSet intersect_regions(const RegionSet& a, const RegionSet& b) {
  std::vector<StaircaseRegion> out;
  for (const auto& ra : a) {
    for (const auto& rb : b) {
      const double lo = std::max(ra.x_min(), rb.x_min());
      const double hi = std::min(ra.x_max(), rb.x_max());
      if (lo > hi) continue;
      std::vector<Coord> xs;
      auto gather = [&](const StaircaseRegion& r) {
        for (const auto& c : r.breakpoints())
          if (c.v >= lo && c.v <= hi) xs.push_back(c);
      };
      gather(ra);
      gather(rb);
      std::sort(xs.begin(), xs.end(), [](const Coord& p, const Coord& q) { return p.v < q.v; });
      xs.erase(std::unique(xs.begin(), xs.end(), [](const Coord& p, const Coord& q) { return p.v == q.v; }),
               xs.end());
      std::vector<Span> at(xs.size()), between(xs.size() - 1);
      for (std::size_t i = 0; i < xs.size(); ++i) {
        at[i] = intersect(ra.section(xs[i].v), rb.section(xs[i].v));
        if (i + 1 < xs.size()) {
          const double mid = 0.5 * (xs[i].v + xs[i + 1].v);
          between[i] = intersect(ra.section(mid), rb.section(mid));
        }
      }
      detail::emit_regions(xs, at, between, out);
    }
  }
  return RegionSet(std::move(out));
}

}  // namespace rectihull

#endif  // RECTIHULL_REGION_HPP

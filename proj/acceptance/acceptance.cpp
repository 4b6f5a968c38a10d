// Acceptance run: one PASS/FAIL line per criterion, exit status 1 if any fails.

#include <algorithm>
#include <chrono>
#include <cstdio>
#include <functional>
#include <random>
#include <string>
#include <vector>

#include <rectihull/rectihull.hpp>

using namespace rectihull;

namespace {

using Clock = std::chrono::steady_clock;

double seconds_since(Clock::time_point t0) { return std::chrono::duration<double>(Clock::now() - t0).count(); }

struct Outcome {
  bool pass = true;
  std::string detail;
};

int g_failed = 0;

void report(int id, const char* title, const Outcome& o) {
  std::printf("criterion %2d %s  %s: %s\n", id, o.pass ? "PASS" : "FAIL", title, o.detail.c_str());
  std::fflush(stdout);
  if (!o.pass) ++g_failed;
}

std::string fmt(const char* f, auto... args) {
  char buf[512];
  std::snprintf(buf, sizeof buf, f, args...);
  return buf;
}

double median(std::vector<double> v) {
  std::sort(v.begin(), v.end());
  const std::size_t m = v.size() / 2;
  return v.size() % 2 ? v[m] : 0.5 * (v[m - 1] + v[m]);
}

double angular_distance(double a, double b) {
  const double d = normalize_angle(a - b);
  return std::min(d, kTwoPi - d);
}

bool same_arcs(const IntervalSet& a, const IntervalSet& b, double tol, bool& counts_equal) {
  counts_equal = a.size() == b.size();
  if (!counts_equal) return false;
  for (std::size_t i = 0; i < a.size(); ++i)
    if (angular_distance(a.intervals()[i].lo, b.intervals()[i].lo) > tol ||
        angular_distance(a.intervals()[i].hi, b.intervals()[i].hi) > tol)
      return false;
  return true;
}

// Largest per-point piece counts seen by any activity table built here, each
// set folded to one quarter turn.
struct BoundTracker {
  std::size_t up = 0, down = 0, merged = 0, tables = 0, points = 0;

  void add(const ActivityTable& tab) {
    ++tables;
    for (const auto& a : tab.points) {
      ++points;
      up = std::max(up, folded_components(a.up, kHalfPi));
      down = std::max(down, folded_components(a.down, kHalfPi));
      merged = std::max(merged, folded_components(a.merged, kHalfPi));
    }
  }
} g_bound;

ActivityTable tracked_intervals(const PointSet& P) {
  auto tab = active_intervals(P);
  g_bound.add(tab);
  return tab;
}

Outcome maxima_equivalence() {
  const auto t0 = Clock::now();
  std::size_t bad = 0;
  for (std::uint64_t seed = 1; seed <= 100; ++seed) {
    const PointSet P = uniform_box(500, seed);
    for (auto k : SignPattern::all()) bad += maxima3d(P, k).ids != brute_maxima(P, k);
  }
  const double t = seconds_since(t0);
  return {bad == 0 && t < 60.0, fmt("100 instances x 8 patterns, %zu mismatches, %.1f s (limit 60 s)", bad, t)};
}

Outcome vertex_equivalence() {
  std::size_t bad = 0;
  for (std::uint64_t seed = 101; seed <= 150; ++seed) {
    const PointSet P = uniform_box(300, seed);
    bad += rch_vertices(P) != brute_vertices(P);
  }
  return {bad == 0, fmt("50 instances, n = 300, %zu mismatches", bad)};
}

Outcome slice_membership() {
  std::size_t bad = 0, probes = 0, skipped = 0;
  for (std::uint64_t seed = 201; seed <= 220; ++seed) {
    const PointSet P = uniform_box(200, seed);
    std::mt19937_64 rng(seed);
    std::uniform_real_distribution<double> height(-0.9, 0.9);
    for (int h = 0; h < 5; ++h) {
      const double c = height(rng);
      const RegionSet rs = slice(P, c);
      std::vector<double> xs, ys;
      for (const auto& r : rs)
        for (const auto& v : r.boundary()) {
          xs.push_back(v.x);
          ys.push_back(v.y);
        }
      auto near = [](const std::vector<double>& g, double v) {
        return std::any_of(g.begin(), g.end(), [&](double w) { return std::abs(w - v) < 1e-9; });
      };
      for (int i = 0; i < 50; ++i)
        for (int j = 0; j < 50; ++j) {
          const double x = -1.0 + (i + 0.5) / 25.0, y = -1.0 + (j + 0.5) / 25.0;
          if (near(xs, x) || near(ys, y)) {
            ++skipped;
            continue;
          }
          ++probes;
          bad += rs.contains(x, y) != brute_member({x, y, c, 0}, P);
        }
    }
  }
  return {bad == 0, fmt("20 instances x 5 heights x 50x50 grid, %zu probes, %zu skipped, %zu mismatches", probes,
                        skipped, bad)};
}

Outcome topology() {
  int box_chi = 0, torus_chi = 0;
  std::size_t box_comp = 0, two_comp = 0;
  std::string err;
  try {
    const SlabMesh box = rch3(box_corners(1));
    box_chi = euler_characteristic(box);
    box_comp = components(box);
    torus_chi = euler_characteristic(rch3(torus_cubes(1)));
    two_comp = components(rch3(two_points()));
  } catch (const std::exception& e) {
    err = e.what();
  }
  const bool pass = err.empty() && box_chi == 2 && box_comp == 1 && torus_chi == 0 && two_comp == 2;
  std::string d = fmt("box chi = %d (want 2), box components = %zu (want 1), torus chi = %d (want 0), "
                      "two-point components = %zu (want 2)",
                      box_chi, box_comp, torus_chi, two_comp);
  if (!err.empty()) d += ", error: " + err;
  return {pass, d};
}

Outcome interval_equivalence() {
  std::size_t bad_points = 0, bad_counts = 0;
  for (std::uint64_t seed = 301; seed <= 330; ++seed) {
    const PointSet P = uniform_box(100, seed);
    const auto fast = tracked_intervals(P);
    const auto slow = brute_active_intervals(P);
    for (std::size_t i = 0; i < P.size(); ++i) {
      bool cu = true, cd = true, cm = true;
      const bool ok = same_arcs(fast.points[i].up, slow.points[i].up, 1e-7, cu) &
                      same_arcs(fast.points[i].down, slow.points[i].down, 1e-7, cd) &
                      same_arcs(fast.points[i].merged, slow.points[i].merged, 1e-7, cm);
      bad_points += !ok;
      bad_counts += !(cu && cd && cm);
    }
  }
  return {bad_points == 0,
          fmt("30 instances, n = 100, %zu points differ (%zu with different counts), tolerance 1e-7 rad", bad_points,
              bad_counts)};
}

Outcome rotation_consistency() {
  const double eps = Tolerance{}.eps_angle;
  std::size_t bad = 0, resampled = 0;
  for (std::uint64_t seed = 401; seed <= 420; ++seed) {
    const PointSet P = uniform_box(200, seed);
    const auto tab = tracked_intervals(P);
    std::vector<double> ends;
    for (const auto& a : tab.points)
      for (const auto& iv : a.merged.intervals()) {
        ends.push_back(iv.lo);
        ends.push_back(iv.hi);
      }
    std::mt19937_64 rng(seed);
    std::uniform_real_distribution<double> angle(0.0, kTwoPi);
    for (int k = 0; k < 100; ++k) {
      double th = angle(rng);
      while (std::any_of(ends.begin(), ends.end(), [&](double e) { return angular_distance(e, th) < eps; })) {
        th = angle(rng);
        ++resampled;
      }
      bad += active_at(tab, th) != rch_vertices(rotate_z(P, -th));
    }
  }
  return {bad == 0, fmt("20 instances x 100 angles, n = 200, %zu mismatches, %zu angles resampled", bad, resampled)};
}

Outcome quadratic_changes() {
  const auto t0 = Clock::now();
  std::vector<std::size_t> counts;
  bool constant = true;
  std::string d;
  for (std::size_t n : {16u, 32u, 64u}) {
    const auto inst = cylinder_geodesic(n, 1);
    const auto tab = tracked_intervals(inst.points);
    // Vertex sets at every probe the signature count uses.
    std::vector<double> cuts{0.0};
    const auto inner = pairwise_critical_angles(inst.points, inst.window);
    cuts.insert(cuts.end(), inner.begin(), inner.end());
    cuts.push_back(inst.window.measure());
    const auto first = active_at(tab, inst.window.lo + 0.5 * (cuts[0] + cuts[1]));
    for (std::size_t k = 1; k + 1 < cuts.size(); ++k)
      constant &= active_at(tab, inst.window.lo + 0.5 * (cuts[k] + cuts[k + 1])) == first;
    counts.push_back(count_hull_signatures(inst.points, inst.window));
    d += fmt("n = %zu: %zu hulls over [%.6f, %.6f], %zu probes; ", n, counts.back(), inst.window.lo, inst.window.hi,
             cuts.size() - 1);
  }
  const double r1 = static_cast<double>(counts[1]) / static_cast<double>(counts[0]);
  const double r2 = static_cast<double>(counts[2]) / static_cast<double>(counts[1]);
  const double t = seconds_since(t0);
  d += fmt("ratios %.2f, %.2f (want >= 3.0), vertex set %s, %.1f s (limit 600 s)", r1, r2,
           constant ? "constant" : "NOT constant", t);
  return {constant && r1 >= 3.0 && r2 >= 3.0 && t < 600.0, d};
}

Outcome layer_equivalence() {
  std::size_t bad = 0, bad_sum = 0;
  for (std::uint64_t seed = 501; seed <= 520; ++seed) {
    const PointSet P = uniform_box(200, seed);
    const auto L = layers(P);
    bad += L != brute_layers(P);
    std::size_t total = 0;
    for (const auto& l : L) total += l.size();
    bad_sum += total != P.size();
  }
  return {bad == 0 && bad_sum == 0,
          fmt("20 instances, n = 200, %zu layer mismatches, %zu size-sum mismatches", bad, bad_sum)};
}

// Median over seeds of one timed call per size; then the median of the
// successive ratios.
struct Scaling {
  std::vector<double> times;
  std::vector<double> ratios;
  double worst_last = 0.0;
};

Scaling time_doubling(int lo, int hi, const std::function<void(const PointSet&)>& f) {
  Scaling s;
  for (int e = lo; e <= hi; ++e) {
    std::vector<double> runs;
    for (std::uint64_t seed = 1; seed <= 3; ++seed) {
      const PointSet P = uniform_box(std::size_t{1} << e, 600 + seed);
      const auto t0 = Clock::now();
      f(P);
      runs.push_back(seconds_since(t0));
    }
    s.times.push_back(median(runs));
    if (e == hi) s.worst_last = *std::max_element(runs.begin(), runs.end());
    if (s.times.size() > 1) s.ratios.push_back(s.times.back() / s.times[s.times.size() - 2]);
  }
  return s;
}

std::string list(const std::vector<double>& v) {
  std::string out;
  for (double x : v) out += (out.empty() ? "" : " ") + fmt("%.2f", x);
  return out;
}

Outcome complexity_scaling() {
  volatile std::size_t sink = 0;
  const Scaling hull = time_doubling(14, 20, [&](const PointSet& P) { sink = rch3(P).slabs.size(); });
  const Scaling iv = time_doubling(12, 17, [&](const PointSet& P) { sink = active_intervals(P).points.size(); });
  const double rh = median(hull.ratios), ri = median(iv.ratios);
  const bool pass = rh <= 2.5 && ri <= 2.8 && hull.worst_last < 10.0;
  return {pass, fmt("rch3 ratios [%s] median %.2f (limit 2.5), 2^20 in %.2f s (limit 10 s); "
                    "active_intervals ratios [%s] median %.2f (limit 2.8)",
                    list(hull.ratios).c_str(), rh, hull.worst_last, list(iv.ratios).c_str(), ri)};
}

std::vector<PointId> brute_hull_ids(std::vector<Point2> pts) {
  std::sort(pts.begin(), pts.end(), [](const Point2& a, const Point2& b) { return a.x < b.x; });
  std::vector<PointId> ids;
  if (pts.size() <= 2) {
    for (const auto& p : pts) ids.push_back(p.id);
  } else {
    std::vector<Point2> h(2 * pts.size());
    std::size_t k = 0;
    for (std::size_t i = 0; i < pts.size(); ++i) {
      while (k >= 2 && orient(h[k - 2], h[k - 1], pts[i]) <= 0) --k;
      h[k++] = pts[i];
    }
    for (std::size_t i = pts.size() - 1, t = k + 1; i-- > 0;) {
      while (k >= t && orient(h[k - 2], h[k - 1], pts[i]) <= 0) --k;
      h[k++] = pts[i];
    }
    for (std::size_t i = 0; i + 1 < k; ++i) ids.push_back(h[i].id);
  }
  std::sort(ids.begin(), ids.end());
  return ids;
}

std::vector<Point2> planar_instance(std::size_t n, std::uint64_t seed) {
  const PointSet P = uniform_box(n, seed);
  std::vector<Point2> pts;
  for (std::size_t i = 0; i < P.size(); ++i) pts.push_back({P[i].x, P[i].y, static_cast<PointId>(i)});
  return pts;
}

Outcome hull_tree_structure() {
  std::size_t partition_bad = 0, hull_bad = 0, storage_bad = 0, checks = 0;
  for (std::size_t n = 1; n <= 64; ++n)
    for (KeyAxis axis : {KeyAxis::X, KeyAxis::Y}) {
      const HullTree t(planar_instance(n, 700 + n), axis);
      for (std::size_t q = 0; q < n; ++q) {
        std::vector<int> seen(n, 0);
        bool sides = true;
        for (const auto& [node, side] : t.off_path(q))
          for (std::size_t leaf : t.node_leaves(node)) {
            ++seen[leaf];
            sides &= (side == HullTree::Side::Left) == (t.key_position(leaf) < t.key_position(q));
          }
        for (std::size_t i = 0; i < n; ++i) sides &= seen[i] == (i == q ? 0 : 1);
        partition_bad += !sides;
        ++checks;
      }
    }
  std::size_t hull_checks = 0;
  for (std::size_t n = 1; n <= 128; ++n) {
    const auto pts = planar_instance(n, 900 + n);
    for (KeyAxis axis : {KeyAxis::X, KeyAxis::Y}) {
      HullTree t(pts, axis);
      std::mt19937_64 rng(n);
      std::vector<std::size_t> order(n);
      for (std::size_t i = 0; i < n; ++i) order[i] = i;
      std::shuffle(order.begin(), order.end(), rng);
      for (std::size_t i : order) {
        t.activate(i);
        for (std::size_t node = 0; node < t.nodes().size(); ++node) {
          std::vector<Point2> live;
          for (std::size_t leaf : t.node_leaves(node))
            if (t.is_active(leaf)) live.push_back(t.point(leaf));
          std::vector<PointId> ids;
          for (const auto& p : t.node_hull(node)) ids.push_back(p.id);
          std::sort(ids.begin(), ids.end());
          hull_bad += ids != brute_hull_ids(live);
          ++hull_checks;
        }
      }
      storage_bad += t.hull_storage() > n * (t.depth() + 1);
    }
  }
  return {partition_bad == 0 && hull_bad == 0 && storage_bad == 0,
          fmt("partition: %zu leaves checked for n <= 64, %zu bad; node hulls: %zu checks for n <= 128, %zu bad; "
              "storage bound violated %zu times",
              checks, partition_bad, hull_checks, hull_bad, storage_bad)};
}

// Tables from criteria 5, 7 and 8, plus flat and spherical sets where
// points see many gaps.
Outcome interval_bound() {
  for (std::uint64_t seed = 1; seed <= 10; ++seed) {
    std::mt19937_64 rng(seed);
    std::uniform_real_distribution<double> u(-1.0, 1.0);
    std::vector<Point3> flat;
    for (std::size_t i = 0; i < 300; ++i) flat.push_back({u(rng), u(rng), 0.01 * u(rng), static_cast<PointId>(i)});
    tracked_intervals(PointSet(flat));
    tracked_intervals(sphere_surface(300, seed));
  }
  const bool pass = g_bound.up <= 3 && g_bound.down <= 3 && g_bound.merged <= 6;
  return {pass, fmt("%zu tables, %zu points; max pieces per quarter turn: up %zu, down %zu, merged %zu "
                    "(limits 3, 3, 6)",
                    g_bound.tables, g_bound.points, g_bound.up, g_bound.down, g_bound.merged)};
}

}  // namespace

int main() {
  const auto t0 = Clock::now();
  auto run = [](int id, const char* title, Outcome (*f)()) {
    try {
      report(id, title, f());
    } catch (const std::exception& e) {
      report(id, title, {false, std::string("exception: ") + e.what()});
    }
  };
  run(1, "maxima oracle equivalence", maxima_equivalence);
  run(2, "vertex-set equivalence", vertex_equivalence);
  run(3, "slice membership", slice_membership);
  run(4, "topology", topology);
  run(5, "interval oracle equivalence", interval_equivalence);
  run(7, "rotation consistency", rotation_consistency);
  run(8, "quadratic-change demonstration", quadratic_changes);
  // Aggregates the activity tables built by 5, 7 and 8.
  run(6, "at most six intervals", interval_bound);
  run(9, "layers", layer_equivalence);
  run(10, "complexity scaling", complexity_scaling);
  run(11, "hull tree structure", hull_tree_structure);
  std::printf("%d of 11 criteria passed in %.0f s\n", 11 - g_failed, seconds_since(t0));
  return g_failed == 0 ? 0 : 1;
}

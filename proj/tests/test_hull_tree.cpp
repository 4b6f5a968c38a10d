#include <gtest/gtest.h>

#include <rectihull/hull_tree.hpp>
#include <rectihull/rotate.hpp>

#include "support.hpp"

using namespace rectihull;
using testing_support::Rng;

namespace {

// Monotone chain; ids of the strict hull vertices.
std::vector<PointId> brute_hull(std::vector<Point2> pts) {
  std::sort(pts.begin(), pts.end(), [](const Point2& a, const Point2& b) { return a.x < b.x || (a.x == b.x && a.y < b.y); });
  if (pts.size() <= 2) {
    std::vector<PointId> ids;
    for (const auto& p : pts) ids.push_back(p.id);
    std::sort(ids.begin(), ids.end());
    return ids;
  }
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
  std::vector<PointId> ids;
  for (std::size_t i = 0; i + 1 < k; ++i) ids.push_back(h[i].id);
  std::sort(ids.begin(), ids.end());
  return ids;
}

std::vector<Point2> indexed(std::vector<Point2> pts) {
  for (std::size_t i = 0; i < pts.size(); ++i) pts[i].id = static_cast<PointId>(i);
  return pts;
}

std::optional<PointId> brute_first(const HullTree& t, std::size_t q, double rho, bool ccw) {
  const Point2 o = t.point(q);
  std::optional<PointId> best;
  double best_angle = 0, best_dist = 0;
  for (std::size_t i = 0; i < t.size(); ++i) {
    if (i == q || !t.is_active(i)) continue;
    const double d = direction(o, t.point(i));
    const double a = normalize_angle(ccw ? d - rho : rho - d);
    const double dist = std::hypot(t.point(i).x - o.x, t.point(i).y - o.y);
    if (!best || a < best_angle || (a == best_angle && dist < best_dist)) {
      best = t.point(i).id;
      best_angle = a;
      best_dist = dist;
    }
  }
  return best;
}

std::optional<PointId> id_of(const std::optional<Point2>& p) {
  if (!p) return std::nullopt;
  return p->id;
}

}  // namespace

TEST(HullTree, OffPathPartitionsTheOtherLeaves) {
  for (std::size_t n = 1; n <= 64; ++n) {
    const auto pts = indexed(testing_support::random_planar(n, n));
    for (KeyAxis axis : {KeyAxis::X, KeyAxis::Y}) {
      HullTree t(pts, axis);
      for (std::size_t q = 0; q < n; ++q) {
        std::vector<int> seen(n, 0);
        for (const auto& [node, side] : t.off_path(q))
          for (std::size_t leaf : t.node_leaves(node)) {
            ++seen[leaf];
            if (side == HullTree::Side::Left) {
              EXPECT_LT(t.key_position(leaf), t.key_position(q));
            } else {
              EXPECT_GT(t.key_position(leaf), t.key_position(q));
            }
          }
        for (std::size_t i = 0; i < n; ++i) EXPECT_EQ(seen[i], i == q ? 0 : 1) << "n " << n << " q " << q;
        EXPECT_LE(t.off_path(q).size(), t.depth());
      }
    }
  }
}

TEST(HullTree, DepthIsLogarithmic) {
  for (std::size_t n : {1u, 2u, 3u, 100u, 1000u}) {
    HullTree t(indexed(testing_support::random_planar(n, 7)));
    EXPECT_LE(t.depth(), static_cast<std::size_t>(std::ceil(std::log2(static_cast<double>(n)))));
  }
}

TEST(HullTree, NodeHullsMatchRecomputation) {
  for (std::uint64_t seed = 1; seed <= 4; ++seed) {
    const std::size_t n = 32 * seed;
    const auto pts = indexed(testing_support::random_planar(n, seed + 40));
    for (KeyAxis axis : {KeyAxis::X, KeyAxis::Y}) {
      HullTree t(pts, axis);
      Rng rng(seed);
      std::vector<std::size_t> order(n);
      for (std::size_t i = 0; i < n; ++i) order[i] = i;
      for (std::size_t i = n; i > 1; --i) std::swap(order[i - 1], order[rng.below(i)]);
      for (std::size_t i : order) {
        t.activate(i);
        for (std::size_t node = 0; node < t.nodes().size(); ++node) {
          std::vector<Point2> live;
          for (std::size_t leaf : t.node_leaves(node))
            if (t.is_active(leaf)) live.push_back(t.point(leaf));
          const auto hull = t.node_hull(node);
          std::vector<PointId> ids;
          for (const auto& p : hull) ids.push_back(p.id);
          std::sort(ids.begin(), ids.end());
          ASSERT_EQ(ids, brute_hull(live)) << "seed " << seed << " node " << node;
          for (std::size_t k = 0; hull.size() >= 3 && k < hull.size(); ++k)
            EXPECT_GT(orient(hull[k], hull[(k + 1) % hull.size()], hull[(k + 2) % hull.size()]), 0.0);
        }
      }
      EXPECT_LE(t.hull_storage(), n * (t.depth() + 1));
      EXPECT_EQ(t.active_count(), n);
    }
  }
}

TEST(HullTree, StorageIsBoundedByLeavesPerLevel) {
  for (std::size_t n : {10u, 100u, 1000u}) {
    HullTree t(indexed(testing_support::random_planar(n, n)));
    for (std::size_t i = 0; i < n; ++i) t.activate(i);
    EXPECT_LE(t.hull_storage(), n * (t.depth() + 1));
    EXPECT_LE(t.chain_storage(), 2 * n * (t.depth() + 1));
  }
}

TEST(HullTree, RejectsMisuse) {
  HullTree t(indexed(testing_support::random_planar(5, 1)));
  t.activate(2);
  EXPECT_THROW(t.activate(2), std::logic_error);
  EXPECT_THROW(t.activate(5), std::out_of_range);
  std::vector<Point2> dup{{0, 0, 0}, {0, 1, 1}};
  EXPECT_THROW(HullTree{dup}, GeneralPositionError);
  EXPECT_NO_THROW((HullTree{dup, KeyAxis::Y}));
}

TEST(AngularNeighbors, SmallExample) {
  // Query at the origin, others at 45, 135 and 300 degrees.
  std::vector<Point2> pts{{0, 0, 0}, {1, 1.01, 1}, {-1.02, 0.98, 2}, {0.49, -0.87, 3}};
  HullTree t(pts, KeyAxis::X);
  for (std::size_t i = 1; i < pts.size(); ++i) t.activate(i);
  auto up = angular_neighbors(t, 0, AxisRay::PosY);
  EXPECT_EQ(id_of(up.first_cw), std::optional<PointId>(1));
  EXPECT_EQ(id_of(up.first_ccw), std::optional<PointId>(2));
  auto down = angular_neighbors(t, 0, AxisRay::NegY);
  EXPECT_EQ(id_of(down.first_cw), std::optional<PointId>(2));
  EXPECT_EQ(id_of(down.first_ccw), std::optional<PointId>(3));
  EXPECT_THROW(angular_neighbors(t, 0, AxisRay::PosX), std::invalid_argument);
  HullTree lone(pts, KeyAxis::X);
  auto none = angular_neighbors(lone, 0, AxisRay::PosY);
  EXPECT_FALSE(none.first_cw);
  EXPECT_FALSE(none.first_ccw);
}

TEST(AngularNeighbors, MatchBruteForceOnEveryRay) {
  for (std::uint64_t seed = 1; seed <= 20; ++seed) {
    const auto pts = indexed(testing_support::random_planar(60, seed));
    HullTree tx(pts, KeyAxis::X), ty(pts, KeyAxis::Y);
    Rng rng(seed * 3);
    for (std::size_t i = 0; i < pts.size(); ++i) {
      for (AxisRay ray : kAxisRays) {
        const HullTree& t = ray == AxisRay::PosY || ray == AxisRay::NegY ? tx : ty;
        const auto nb = angular_neighbors(t, i, ray);
        EXPECT_EQ(id_of(nb.first_ccw), brute_first(t, i, ray_angle(ray), true)) << "seed " << seed;
        EXPECT_EQ(id_of(nb.first_cw), brute_first(t, i, ray_angle(ray), false)) << "seed " << seed;
      }
      if (rng.uniform() < 0.7) {
        tx.activate(i);
        ty.activate(i);
      }
    }
  }
}

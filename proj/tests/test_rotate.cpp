#include <gtest/gtest.h>

#include <rectihull/maxima.hpp>
#include <rectihull/oracle.hpp>
#include <rectihull/rotate.hpp>

#include "support.hpp"

using namespace rectihull;
using testing_support::Rng;

namespace {

double deg(double d) { return d * kPi / 180.0; }

// Query at index 0 (the origin); the others placed in the given directions
// at slightly different radii, all active.
struct Fan {
  std::vector<Point2> pts;
  HullTree x, y;

  explicit Fan(const std::vector<double>& degrees) : pts(make(degrees)), x(pts, KeyAxis::X), y(pts, KeyAxis::Y) {
    for (std::size_t i = 1; i < pts.size(); ++i) {
      x.activate(i);
      y.activate(i);
    }
  }

  static std::vector<Point2> make(const std::vector<double>& degrees) {
    std::vector<Point2> out{{0, 0, 0}};
    for (std::size_t i = 0; i < degrees.size(); ++i) {
      const double r = 1.0 + 0.1 * static_cast<double>(i);
      out.push_back({r * std::cos(deg(degrees[i])), r * std::sin(deg(degrees[i])), static_cast<PointId>(i + 1)});
    }
    return out;
  }
};

double angular_distance(double a, double b) {
  const double d = normalize_angle(a - b);
  return std::min(d, kTwoPi - d);
}

void expect_same_intervals(const IntervalSet& a, const IntervalSet& b, double tol, const std::string& what) {
  ASSERT_EQ(a.size(), b.size()) << what;
  for (std::size_t i = 0; i < a.size(); ++i) {
    EXPECT_LT(angular_distance(a.intervals()[i].lo, b.intervals()[i].lo), tol) << what;
    EXPECT_LT(angular_distance(a.intervals()[i].hi, b.intervals()[i].hi), tol) << what;
  }
}

bool near_endpoint(const ActivityTable& tab, double theta, double tol) {
  for (const auto& a : tab.points)
    for (const auto& iv : a.merged.intervals())
      if (angular_distance(iv.lo, theta) < tol || angular_distance(iv.hi, theta) < tol) return true;
  return false;
}

}  // namespace

TEST(EmptyGaps, FourQuarterSectors) {
  Fan f({10, 100, 190, 280});
  auto gaps = empty_gaps(f.x, f.y, 0);
  ASSERT_EQ(gaps.size(), 4u);
  for (const auto& g : gaps) EXPECT_NEAR(g.width(), kHalfPi, 1e-12);
}

TEST(EmptyGaps, OneWideSectorReportedOnce) {
  Fan f({10, 350});
  auto gaps = empty_gaps(f.x, f.y, 0);
  ASSERT_EQ(gaps.size(), 1u);
  EXPECT_NEAR(gaps[0].width(), deg(340), 1e-12);
  EXPECT_NEAR(normalize_angle(gaps[0].lo), deg(10), 1e-12);
}

TEST(EmptyGaps, NothingVisibleIsTheWholeCircle) {
  Fan f({});
  auto gaps = empty_gaps(f.x, f.y, 0);
  ASSERT_EQ(gaps.size(), 1u);
  EXPECT_NEAR(gaps[0].width(), kTwoPi, 1e-12);
  Fan one({45});
  auto g1 = empty_gaps(one.x, one.y, 0);
  ASSERT_EQ(g1.size(), 1u);
  EXPECT_NEAR(g1[0].width(), kTwoPi, 1e-12);
}

TEST(EmptyGaps, AtMostThreeOnRandomFans) {
  Rng rng(4);
  for (int t = 0; t < 200; ++t) {
    std::vector<double> d;
    const int k = 2 + static_cast<int>(rng.below(6));
    for (int i = 0; i < k; ++i) d.push_back(rng.uniform(0, 360));
    Fan f(d);
    auto gaps = empty_gaps(f.x, f.y, 0);
    EXPECT_LE(gaps.size(), 3u);
    for (const auto& g : gaps) EXPECT_GE(g.width(), kHalfPi - 1e-9);
  }
}

TEST(GapsToTheta, Examples) {
  auto four = gaps_to_theta_intervals({AxisRay::PosX, 0.0, kHalfPi});
  ASSERT_EQ(four.size(), 4u);
  for (double t : {0.0, kHalfPi, kPi, 3 * kHalfPi}) EXPECT_TRUE(four.contains(t));
  EXPECT_NEAR(four.measure(), 0.0, 1e-9);
  EXPECT_TRUE(gaps_to_theta_intervals({AxisRay::PosX, 0.0, kPi}).is_full());
  EXPECT_TRUE(gaps_to_theta_intervals({AxisRay::PosY, -kHalfPi, 3 * kHalfPi}).is_full());
}

TEST(GapsToTheta, WedgeFitsExactlyOnTheArcs) {
  Rng rng(5);
  for (int t = 0; t < 100; ++t) {
    const double lo = rng.uniform(0, kTwoPi);
    const Gap g{AxisRay::PosX, lo, lo + rng.uniform(kHalfPi, 1.8 * kPi)};
    auto s = gaps_to_theta_intervals(g);
    for (int k = 0; k < 200; ++k) {
      const double th = rng.uniform(0, kTwoPi);
      bool fits = false;
      for (int j = 0; j < 4; ++j) {
        const double start = normalize_angle(th + j * kHalfPi - g.lo);
        fits |= start + kHalfPi <= g.width();
      }
      EXPECT_EQ(s.contains(th), fits);
    }
  }
}

TEST(ActiveIntervals, ExtremePointsAndPairs) {
  auto P = testing_support::random_points(40, 2);
  auto tab = active_intervals(P);
  const auto& order = P.by_z_desc();
  EXPECT_TRUE(tab.points[order.front()].up.is_full());
  EXPECT_TRUE(tab.points[order.front()].merged.is_full());
  EXPECT_TRUE(tab.points[order.back()].down.is_full());
  EXPECT_TRUE(tab.points[order.back()].merged.is_full());
  auto two = active_intervals(PointSet::from_coordinates(std::vector<std::array<double, 3>>{{0, 0, 0}, {1, 0.5, 2}}));
  for (const auto& a : two.points) EXPECT_TRUE(a.merged.is_full());
  EXPECT_TRUE(active_intervals(PointSet{}).points.empty());
}

TEST(ActiveIntervals, RejectsDegenerateInput) {
  auto P = PointSet::from_coordinates(std::vector<std::array<double, 3>>{{0, 0, 0}, {0, 1, 1}});
  EXPECT_THROW(active_intervals(P), GeneralPositionError);
}

TEST(ActiveIntervals, MatchBruteForce) {
  for (std::uint64_t seed = 1; seed <= 8; ++seed) {
    auto P = testing_support::random_points(100, seed);
    auto fast = active_intervals(P);
    auto slow = brute_active_intervals(P);
    ASSERT_EQ(fast.points.size(), slow.points.size());
    for (std::size_t i = 0; i < P.size(); ++i) {
      const std::string what = "seed " + std::to_string(seed) + " point " + std::to_string(i);
      EXPECT_EQ(fast.points[i].id, slow.points[i].id);
      expect_same_intervals(fast.points[i].up, slow.points[i].up, 1e-7, what + " up");
      expect_same_intervals(fast.points[i].down, slow.points[i].down, 1e-7, what + " down");
      expect_same_intervals(fast.points[i].merged, slow.points[i].merged, 1e-7, what + " merged");
    }
  }
}

// The raw sets repeat every quarter turn; folded to one period each is within
// the bound of three up, three down and six merged pieces.
TEST(ActiveIntervals, FoldedCountsStayWithinTheBound) {
  for (std::uint64_t seed = 1; seed <= 10; ++seed) {
    auto P = seed % 2 ? testing_support::random_points(300, seed) : testing_support::flat_points(300, seed);
    for (const auto& a : active_intervals(P).points) {
      EXPECT_LE(folded_components(a.up, kHalfPi), 3u);
      EXPECT_LE(folded_components(a.down, kHalfPi), 3u);
      EXPECT_LE(folded_components(a.merged, kHalfPi), 6u);
    }
  }
}

TEST(ActiveAt, ZeroRotationAndQuarterTurn) {
  Rng rng(8);
  for (std::uint64_t seed = 1; seed <= 5; ++seed) {
    auto P = testing_support::random_points(150, seed);
    auto tab = active_intervals(P);
    EXPECT_EQ(active_at(tab, 0.0 + 1e-6), rch_vertices(P));
    for (int k = 0; k < 20; ++k) {
      const double th = rng.uniform(0, kTwoPi);
      EXPECT_EQ(active_at(tab, th), active_at(tab, normalize_angle(th + kHalfPi)));
    }
  }
}

TEST(ActiveAt, MatchesVerticesOfTheRotatedSet) {
  Rng rng(9);
  for (std::uint64_t seed = 1; seed <= 5; ++seed) {
    auto P = testing_support::random_points(120, seed + 20);
    auto tab = active_intervals(P);
    const auto& order = P.by_z_desc();
    for (int k = 0; k < 50; ++k) {
      double th = rng.uniform(0, kTwoPi);
      while (near_endpoint(tab, th, 1e-7)) th = rng.uniform(0, kTwoPi);
      const auto ids = active_at(tab, th);
      EXPECT_EQ(ids, rch_vertices(rotate_z(P, -th))) << "theta " << th;
      EXPECT_TRUE(std::binary_search(ids.begin(), ids.end(), P[order.front()].id));
      EXPECT_TRUE(std::binary_search(ids.begin(), ids.end(), P[order.back()].id));
    }
  }
}

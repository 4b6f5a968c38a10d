#include <gtest/gtest.h>

#include <rectihull/interval.hpp>

#include "support.hpp"

using namespace rectihull;
using testing_support::Rng;

namespace {

IntervalSet arc(double lo, double hi) { return IntervalSet::from_unwrapped({{lo, hi}}); }

IntervalSet random_set(Rng& rng) {
  std::vector<std::pair<double, double>> arcs;
  const int k = static_cast<int>(rng.below(4));
  for (int i = 0; i < k; ++i) {
    const double lo = rng.uniform(0, kTwoPi);
    arcs.emplace_back(lo, lo + rng.uniform(0, 2.0));
  }
  return IntervalSet::from_unwrapped(arcs);
}

bool same_membership(const IntervalSet& a, const IntervalSet& b, Rng& rng) {
  for (int s = 0; s < 400; ++s) {
    const double t = rng.uniform(0, kTwoPi);
    if (a.contains(t) != b.contains(t)) return false;
  }
  return true;
}

}  // namespace

TEST(AngleInterval, MeasureAndContains) {
  AngleInterval a{3 * kHalfPi, kPi / 4, true};
  EXPECT_NEAR(a.measure(), kHalfPi + kPi / 4, 1e-15);
  EXPECT_TRUE(a.contains(0.1));
  EXPECT_TRUE(a.contains(-0.1));
  EXPECT_FALSE(a.contains(kPi));
  EXPECT_TRUE(AngleInterval::full().contains(4.0));
  AngleInterval point{1.0, 1.0, false};
  EXPECT_TRUE(point.contains(1.0));
  EXPECT_EQ(point.measure(), 0.0);
}

TEST(IntervalSet, UnionJoinsAcrossZero) {
  auto s = interval_union(arc(3 * kHalfPi, kTwoPi), arc(0, kPi / 4));
  ASSERT_EQ(s.size(), 1u);
  EXPECT_TRUE(s.intervals()[0].wraps);
  EXPECT_NEAR(s.intervals()[0].lo, 3 * kHalfPi, 1e-12);
  EXPECT_NEAR(s.intervals()[0].hi, kPi / 4, 1e-12);
}

TEST(IntervalSet, IntersectOverlap) {
  auto s = interval_intersect(arc(0, kPi), arc(kHalfPi, 3 * kHalfPi));
  ASSERT_EQ(s.size(), 1u);
  EXPECT_NEAR(s.intervals()[0].lo, kHalfPi, 1e-12);
  EXPECT_NEAR(s.intervals()[0].hi, kPi, 1e-12);
}

TEST(IntervalSet, EmptyIsIdentity) {
  auto x = arc(1, 2);
  EXPECT_EQ(interval_union(x, IntervalSet{}), x);
  EXPECT_TRUE(interval_intersect(x, IntervalSet{}).empty());
}

TEST(IntervalSet, FullCircle) {
  auto s = arc(0.5, 0.5 + kTwoPi);
  EXPECT_TRUE(s.is_full());
  EXPECT_NEAR(s.measure(), kTwoPi, 1e-12);
  EXPECT_TRUE(interval_union(arc(0, kPi), arc(kPi, kTwoPi)).is_full());
}

TEST(IntervalSet, DegenerateArcsAreKept) {
  auto s = IntervalSet::from_unwrapped({{1.0, 1.0}, {2.0, 2.0}});
  EXPECT_EQ(s.size(), 2u);
  EXPECT_TRUE(s.contains(1.0));
  EXPECT_FALSE(s.contains(1.5));
}

TEST(IntervalSet, NormalizedForm) {
  Rng rng(3);
  for (int t = 0; t < 300; ++t) {
    auto s = random_set(rng);
    int wrapping = 0;
    for (std::size_t i = 0; i < s.size(); ++i) {
      const auto& a = s.intervals()[i];
      EXPECT_GE(a.lo, 0.0);
      EXPECT_LE(a.hi, kTwoPi);
      if (a.wraps) {
        ++wrapping;
        EXPECT_EQ(i + 1, s.size());
      } else if (i + 1 < s.size() && !s.intervals()[i + 1].wraps) {
        EXPECT_LT(a.hi, s.intervals()[i + 1].lo);
        EXPECT_LE(a.lo, s.intervals()[i + 1].lo);
      }
    }
    EXPECT_LE(wrapping, 1);
  }
}

TEST(IntervalSet, UnionLaws) {
  Rng rng(7);
  for (int t = 0; t < 200; ++t) {
    auto a = random_set(rng), b = random_set(rng), c = random_set(rng);
    EXPECT_TRUE(same_membership(interval_union(a, b), interval_union(b, a), rng));
    EXPECT_TRUE(same_membership(interval_union(interval_union(a, b), c), interval_union(a, interval_union(b, c)), rng));
    EXPECT_EQ(interval_union(a, a), a);
    EXPECT_GE(interval_union(a, b).measure() + 1e-9, std::max(a.measure(), b.measure()));
  }
}

TEST(IntervalSet, IntersectMatchesPointwise) {
  Rng rng(9);
  for (int t = 0; t < 200; ++t) {
    auto a = random_set(rng), b = random_set(rng);
    auto both = interval_intersect(a, b);
    for (int s = 0; s < 200; ++s) {
      const double th = rng.uniform(0, kTwoPi);
      if (both.contains(th) != (a.contains(th) && b.contains(th))) {
        // Only arc endpoints may disagree, up to the merge tolerance.
        bool near = false;
        for (const auto* set : {&a, &b})
          for (const auto& arc : set->intervals())
            near |= std::abs(th - arc.lo) < 1e-9 || std::abs(th - arc.hi) < 1e-9;
        EXPECT_TRUE(near) << th;
      }
    }
  }
}

TEST(FoldedComponents, QuarterTurnCopiesCountOnce) {
  std::vector<std::pair<double, double>> arcs;
  for (int j = 0; j < 4; ++j) arcs.emplace_back(0.2 + j * kHalfPi, 0.4 + j * kHalfPi);
  auto s = IntervalSet::from_unwrapped(arcs);
  EXPECT_EQ(s.size(), 4u);
  EXPECT_EQ(folded_components(s, kHalfPi), 1u);
  EXPECT_EQ(folded_components(IntervalSet{}, kHalfPi), 0u);
  EXPECT_EQ(folded_components(IntervalSet::full(), kHalfPi), 1u);
  // An arc crossing a multiple of the period still folds into one piece.
  EXPECT_EQ(folded_components(arc(kHalfPi - 0.1, kHalfPi + 0.1), kHalfPi), 1u);
}

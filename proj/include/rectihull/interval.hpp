#ifndef RECTIHULL_INTERVAL_HPP
#define RECTIHULL_INTERVAL_HPP

#include <algorithm>
#include <cmath>
#include <utility>
#include <vector>

#include "core.hpp"

namespace rectihull {

// Closed arc of the circle of directions. lo and hi lie in [0, 2pi); an arc
// that crosses 0 has wraps == true. The full circle is the single value
// {0, 2pi, false}.
struct AngleInterval {
  double lo = 0.0;
  double hi = 0.0;
  bool wraps = false;

  static AngleInterval full() { return {0.0, kTwoPi, false}; }

  bool is_full() const { return !wraps && lo <= 0.0 && hi >= kTwoPi; }

  double measure() const { return wraps ? (kTwoPi - lo) + hi : hi - lo; }

  bool contains(double theta) const {
    const double t = normalize_angle(theta);
    if (is_full()) return true;
    return wraps ? (t >= lo || t <= hi) : (t >= lo && t <= hi);
  }

  friend bool operator==(const AngleInterval&, const AngleInterval&) = default;
};

namespace detail {

using Piece = std::pair<double, double>;

// Sorts and merges closed pieces of [0, period], joining pieces whose gap is at
// most eps.
inline std::vector<Piece> merge_pieces(std::vector<Piece> pieces, double eps) {
  std::sort(pieces.begin(), pieces.end());
  std::vector<Piece> out;
  for (const auto& p : pieces) {
    if (!out.empty() && p.first <= out.back().second + eps)
      out.back().second = std::max(out.back().second, p.second);
    else
      out.push_back(p);
  }
  return out;
}

// Splits an unwrapped arc [lo, hi] (hi >= lo) into pieces of [0, period].
inline void append_unwrapped(std::vector<Piece>& pieces, double lo, double hi, double period) {
  if (hi - lo >= period) {
    pieces.emplace_back(0.0, period);
    return;
  }
  double a = std::fmod(lo, period);
  if (a < 0.0) a += period;
  if (a >= period) a -= period;
  const double b = a + (hi - lo);
  if (b <= period) {
    pieces.emplace_back(a, b);
  } else {
    pieces.emplace_back(a, period);
    pieces.emplace_back(0.0, b - period);
  }
}

}  // namespace detail

// Normalized set of pairwise-disjoint closed arcs, sorted by lo. At most one
// arc wraps, and when present it is stored last.
class IntervalSet {
 public:
  IntervalSet() = default;

  static IntervalSet full() {
    IntervalSet s;
    s.arcs_.push_back(AngleInterval::full());
    return s;
  }

  // Builds from arbitrary unwrapped arcs [lo, hi] with hi >= lo.
  static IntervalSet from_unwrapped(const std::vector<std::pair<double, double>>& arcs, double eps = 1e-9) {
    std::vector<detail::Piece> pieces;
    for (const auto& [lo, hi] : arcs) detail::append_unwrapped(pieces, lo, hi, kTwoPi);
    return from_pieces(std::move(pieces), eps);
  }

  static IntervalSet from_intervals(const std::vector<AngleInterval>& arcs, double eps = 1e-9) {
    std::vector<detail::Piece> pieces;
    for (const auto& a : arcs) {
      if (a.is_full()) {
        pieces.emplace_back(0.0, kTwoPi);
      } else if (a.wraps) {
        pieces.emplace_back(a.lo, kTwoPi);
        pieces.emplace_back(0.0, a.hi);
      } else {
        pieces.emplace_back(a.lo, a.hi);
      }
    }
    return from_pieces(std::move(pieces), eps);
  }

  const std::vector<AngleInterval>& intervals() const { return arcs_; }
  std::size_t size() const { return arcs_.size(); }
  bool empty() const { return arcs_.empty(); }
  bool is_full() const { return arcs_.size() == 1 && arcs_.front().is_full(); }

  double measure() const {
    double m = 0.0;
    for (const auto& a : arcs_) m += a.measure();
    return m;
  }

  bool contains(double theta) const {
    return std::any_of(arcs_.begin(), arcs_.end(), [&](const AngleInterval& a) { return a.contains(theta); });
  }

  // Pieces of [0, 2pi] with wrapping arcs split at 0.
  std::vector<detail::Piece> linear_pieces() const {
    std::vector<detail::Piece> pieces;
    for (const auto& a : arcs_) {
      if (a.wraps) {
        pieces.emplace_back(0.0, a.hi);
        pieces.emplace_back(a.lo, kTwoPi);
      } else {
        pieces.emplace_back(a.lo, a.hi);
      }
    }
    std::sort(pieces.begin(), pieces.end());
    return pieces;
  }

  friend bool operator==(const IntervalSet&, const IntervalSet&) = default;

 private:
  static IntervalSet from_pieces(std::vector<detail::Piece> pieces, double eps) {
    auto merged = detail::merge_pieces(std::move(pieces), eps);
    IntervalSet s;
    if (merged.empty()) return s;
    if (merged.size() == 1 && merged.front().first <= eps && merged.front().second >= kTwoPi - eps) {
      s.arcs_.push_back(AngleInterval::full());
      return s;
    }
    const bool joins = merged.size() >= 2 && merged.front().first <= eps && merged.back().second >= kTwoPi - eps;
    if (joins) {
      const auto first = merged.front();
      const auto last = merged.back();
      for (std::size_t i = 1; i + 1 < merged.size(); ++i) s.arcs_.push_back(make(merged[i]));
      s.arcs_.push_back({last.first, first.second, true});
    } else {
      for (const auto& p : merged) s.arcs_.push_back(make(p));
    }
    return s;
  }

  static AngleInterval make(const detail::Piece& p) {
    double lo = std::clamp(p.first, 0.0, kTwoPi);
    double hi = std::clamp(p.second, 0.0, kTwoPi);
    if (hi >= kTwoPi && lo > 0.0) hi = std::nextafter(kTwoPi, 0.0);
    if (lo >= kTwoPi) lo = hi = std::nextafter(kTwoPi, 0.0);
    return {lo, hi, false};
  }

  std::vector<AngleInterval> arcs_;
};

inline IntervalSet interval_union(const IntervalSet& a, const IntervalSet& b, double eps = 1e-9) {
  std::vector<AngleInterval> all = a.intervals();
  all.insert(all.end(), b.intervals().begin(), b.intervals().end());
  return IntervalSet::from_intervals(all, eps);
}

inline IntervalSet interval_intersect(const IntervalSet& a, const IntervalSet& b, double eps = 1e-9) {
  const auto pa = a.linear_pieces();
  const auto pb = b.linear_pieces();
  std::vector<AngleInterval> out;
  std::size_t i = 0, j = 0;
  while (i < pa.size() && j < pb.size()) {
    const double lo = std::max(pa[i].first, pb[j].first);
    const double hi = std::min(pa[i].second, pb[j].second);
    if (lo <= hi) out.push_back({lo, hi, false});
    if (pa[i].second < pb[j].second)
      ++i;
    else
      ++j;
  }
  return IntervalSet::from_intervals(out, eps);
}

// Number of connected arcs once the set is folded onto a circle of the given
// period (e.g. pi/2 to count arcs up to quarter turns).
inline std::size_t folded_components(const IntervalSet& s, double period, double eps = 1e-9) {
  if (s.empty()) return 0;
  std::vector<detail::Piece> pieces;
  for (const auto& [lo, hi] : s.linear_pieces()) detail::append_unwrapped(pieces, lo, hi, period);
  auto merged = detail::merge_pieces(std::move(pieces), eps);
  if (merged.size() >= 2 && merged.front().first <= eps && merged.back().second >= period - eps)
    return merged.size() - 1;
  return merged.size();
}

}  // namespace rectihull

#endif  // RECTIHULL_INTERVAL_HPP

#pragma once

#include <cstdint>
#include <vector>

#include <rectihull/core.hpp>

namespace testing_support {

// splitmix64; small, seedable and identical on every platform, unlike the
// standard distributions.
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : state_(seed) {}

  std::uint64_t next() {
    std::uint64_t z = (state_ += 0x9E3779B97F4A7C15ULL);
    z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
    z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
    return z ^ (z >> 31);
  }

  double uniform() { return static_cast<double>(next() >> 11) * 0x1.0p-53; }
  double uniform(double lo, double hi) { return lo + (hi - lo) * uniform(); }
  std::size_t below(std::size_t n) { return static_cast<std::size_t>(next() % n); }

 private:
  std::uint64_t state_;
};

inline rectihull::PointSet random_points(std::size_t n, std::uint64_t seed, double extent = 1.0) {
  Rng rng(seed);
  std::vector<rectihull::Point3> pts;
  for (std::size_t i = 0; i < n; ++i)
    pts.push_back({rng.uniform(-extent, extent), rng.uniform(-extent, extent), rng.uniform(-extent, extent),
                   static_cast<rectihull::PointId>(i)});
  return rectihull::PointSet(std::move(pts));
}

// Points near a plane z = small, so the hull tends to fall apart into pieces.
inline rectihull::PointSet flat_points(std::size_t n, std::uint64_t seed) {
  Rng rng(seed);
  std::vector<rectihull::Point3> pts;
  for (std::size_t i = 0; i < n; ++i)
    pts.push_back({rng.uniform(-1, 1), rng.uniform(-1, 1), rng.uniform(-0.01, 0.01), static_cast<rectihull::PointId>(i)});
  return rectihull::PointSet(std::move(pts));
}

// Integer grid coordinates with many shared values: input for perturb.
inline rectihull::PointSet lattice_points(std::size_t n, std::uint64_t seed, int side = 4) {
  Rng rng(seed);
  std::vector<rectihull::Point3> pts;
  for (std::size_t i = 0; i < n; ++i)
    pts.push_back({double(rng.below(side)), double(rng.below(side)), double(rng.below(side)),
                   static_cast<rectihull::PointId>(i)});
  return rectihull::PointSet(std::move(pts));
}

inline std::vector<rectihull::Point2> random_planar(std::size_t n, std::uint64_t seed) {
  Rng rng(seed);
  std::vector<rectihull::Point2> pts;
  for (std::size_t i = 0; i < n; ++i)
    pts.push_back({rng.uniform(-1, 1), rng.uniform(-1, 1), static_cast<rectihull::PointId>(i)});
  return pts;
}

inline rectihull::PointSet shuffled(const rectihull::PointSet& P, std::uint64_t seed) {
  Rng rng(seed);
  std::vector<rectihull::Point3> pts = P.points();
  for (std::size_t i = pts.size(); i > 1; --i) std::swap(pts[i - 1], pts[rng.below(i)]);
  return rectihull::PointSet(std::move(pts));
}

}  // namespace testing_support

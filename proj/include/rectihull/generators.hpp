#ifndef RECTIHULL_GENERATORS_HPP
#define RECTIHULL_GENERATORS_HPP

#include <array>
#include <cmath>
#include <cstdint>
#include <random>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "core.hpp"
#include "interval.hpp"
#include "oracle.hpp"

namespace rectihull {

namespace detail {

inline PointSet from_vectors(std::vector<Point3> pts) {
  for (std::size_t i = 0; i < pts.size(); ++i) pts[i].id = static_cast<PointId>(i);
  return PointSet(std::move(pts));
}

// Continuous draws almost surely avoid shared coordinates; redraw if not.
template <class Draw>
PointSet generic_sample(std::size_t n, std::uint64_t seed, Draw draw) {
  for (int attempt = 0; attempt < kPerturbRetries; ++attempt) {
    std::mt19937_64 rng(seed + 0x9E3779B97F4A7C15ULL * static_cast<std::uint64_t>(attempt));
    std::vector<Point3> pts(n);
    for (auto& p : pts) p = draw(rng);
    PointSet P = from_vectors(std::move(pts));
    if (validate_general_position(P).ok()) return P;
  }
  throw std::runtime_error("generator: could not draw a generic sample");
}

}  // namespace detail

inline PointSet uniform_box(std::size_t n, std::uint64_t seed, std::array<double, 3> extent = {1.0, 1.0, 1.0}) {
  return detail::generic_sample(n, seed, [&](std::mt19937_64& rng) {
    std::uniform_real_distribution<double> u(-1.0, 1.0);
    const double x = extent[0] * u(rng);
    const double y = extent[1] * u(rng);
    const double z = extent[2] * u(rng);
    return Point3{x, y, z, 0};
  });
}

inline PointSet sphere_surface(std::size_t n, std::uint64_t seed, double radius = 1.0) {
  return detail::generic_sample(n, seed, [&](std::mt19937_64& rng) {
    std::normal_distribution<double> g(0.0, 1.0);
    double x = 0.0, y = 0.0, z = 0.0, r = 0.0;
    while (r < 1e-12) {
      x = g(rng);
      y = g(rng);
      z = g(rng);
      r = std::sqrt(x * x + y * y + z * z);
    }
    return Point3{radius * x / r, radius * y / r, radius * z / r, 0};
  });
}

// n nodes of the smallest cube grid that holds them, in a seeded random order,
// jittered by eps times the grid spacing.
inline PointSet grid_perturbed(std::size_t n, std::uint64_t seed, double eps = 1e-3) {
  std::size_t side = 1;
  while (side * side * side < n) ++side;
  std::vector<Point3> nodes;
  for (std::size_t i = 0; i < side; ++i)
    for (std::size_t j = 0; j < side; ++j)
      for (std::size_t k = 0; k < side; ++k)
        nodes.push_back({static_cast<double>(i), static_cast<double>(j), static_cast<double>(k), 0});
  std::mt19937_64 rng(seed);
  std::shuffle(nodes.begin(), nodes.end(), rng);
  nodes.resize(n);
  if (n == 0) return {};
  return perturb(detail::from_vectors(std::move(nodes)), seed ^ 0xA5A5A5A5ULL, eps);
}

inline PointSet box_corners(std::uint64_t seed, double eps = 1e-3) {
  std::vector<Point3> pts;
  for (int sz : {1, -1})
    for (int sy : {1, -1})
      for (int sx : {1, -1}) pts.push_back({double(sx), double(sy), double(sz), 0});
  return perturb(detail::from_vectors(std::move(pts)), seed, eps);
}

inline PointSet two_points() { return detail::from_vectors({{0.0, 0.0, 0.0, 0}, {1.0, 1.0, 1.0, 0}}); }

// Vertices of ten unit cubes glued face to face in a ring around a 3x3 frame.
// Two corner columns are two cubes tall, which keeps the hole open: a flat
// ring of eight cubes fills its centre.
//
// Tied coordinates are broken by a small shear (z grows with x + y, and so
// on) plus seeded noise far below the shear's resolution. A plain random
// jitter of the same size sometimes fills the hole with a thin membrane or
// opens extra tunnels.
inline PointSet torus_cubes(std::uint64_t seed, double eps = 1e-3) {
  if (!(eps > 0.0) || eps > 0.05) throw std::invalid_argument("torus_cubes: eps must be in (0, 0.05]");
  static constexpr std::array<std::array<int, 2>, 8> ring{{{0, 0}, {1, 0}, {2, 0}, {2, 1}, {2, 2}, {1, 2}, {0, 2}, {0, 1}}};
  static constexpr std::array<std::array<int, 2>, 8> heights{{{0, 1}, {0, 1}, {0, 2}, {1, 2}, {1, 2}, {1, 2}, {0, 2}, {0, 1}}};
  static constexpr std::array<double, 6> shear{1.0, 0.618, 0.809, 0.5513, 0.937, 0.4142};
  std::vector<std::array<int, 3>> corners;
  for (std::size_t c = 0; c < ring.size(); ++c)
    for (int k = heights[c][0]; k <= heights[c][1]; ++k)
      for (int dx = 0; dx <= 1; ++dx)
        for (int dy = 0; dy <= 1; ++dy) corners.push_back({ring[c][0] + dx, ring[c][1] + dy, k});
  std::sort(corners.begin(), corners.end());
  corners.erase(std::unique(corners.begin(), corners.end()), corners.end());
  std::vector<Point3> pts;
  for (const auto& c : corners) {
    const double x = c[0], y = c[1], z = c[2];
    pts.push_back({x + eps * (shear[0] * y + shear[1] * z), y + eps * (shear[2] * x + shear[3] * z),
                   z + eps * (shear[4] * x + shear[5] * y), 0});
  }
  return perturb(detail::from_vectors(std::move(pts)), seed, eps * 1e-4);
}

struct CylinderParams {
  double radius = 1.0;
  double arc_span = 0.6;                 // angular extent of the arc on the cylinder
  double center = -kHalfPi + kPi / 8.0;  // angular position of the arc's midpoint
  double pitch = 1.0;                    // dz per unit of arc length along the helix
  double jitter = 1e-3;                  // random shift of each arc parameter, in spacings
  double anchor_distance = 2.0;          // in radii, from the arc's midpoint
  std::size_t anchors = 8;
};

struct CylinderInstance {
  PointSet points;       // geodesic points first (ids 0..n-1), then anchors
  std::size_t geodesic = 0;
  AngleInterval window;  // rotations over which the quadratic family lives
};

namespace detail {

inline double chord_rotation(const Point3& a, const Point3& b) {
  // Rotation that makes the x-axis parallel to the chord, taken mod pi.
  double phi = std::atan2(b.y - a.y, b.x - a.x);
  phi = std::fmod(phi, kPi);
  if (phi < 0.0) phi += kPi;
  return phi;
}

// Anchor directions as (tangent, outward) signs and whether the anchor sits
// above the geodesic. No anchor above may lie inward and behind: that quadrant
// holds the octants whose bottoms walk along the arc.
struct AnchorSlot {
  double tangent, outward;
  bool above;
};
inline constexpr std::array<AnchorSlot, 8> kAnchorSlots{{{1, 1, true},
                                                          {1, 1, false},
                                                          {-1, 1, true},
                                                          {-1, 1, false},
                                                          {1, -1, true},
                                                          {1, -1, false},
                                                          {-1, -1, false},
                                                          {0, 1, true}}};

}  // namespace detail

// Points on a helix of a vertical cylinder whose projections are (up to a
// tiny jitter) equidistant on a short arc, z increasing along the arc, plus
// anchors around the arc above and below it. The jitter keeps chords from
// being exactly parallel. Throws if some geodesic point is not a hull vertex.
inline CylinderInstance cylinder_geodesic(std::size_t n, std::uint64_t seed, const CylinderParams& prm = {}) {
  if (n < 4) throw std::invalid_argument("cylinder_geodesic: need at least 4 geodesic points");
  if (!(prm.radius > 0.0) || !(prm.arc_span > 0.0) || prm.arc_span >= kPi || !(prm.pitch > 0.0) || prm.jitter < 0.0 ||
      prm.jitter >= 0.5 || !(prm.anchor_distance > 0.0) || prm.anchors > detail::kAnchorSlots.size())
    throw std::invalid_argument("cylinder_geodesic: invalid parameters");
  std::mt19937_64 rng(seed);
  std::uniform_real_distribution<double> u(-prm.jitter, prm.jitter);
  const double step = prm.arc_span / static_cast<double>(n - 1);
  std::vector<Point3> pts;
  double zmin = 0.0, zmax = 0.0;
  for (std::size_t i = 0; i < n; ++i) {
    const double t = -0.5 * prm.arc_span + step * (static_cast<double>(i) + u(rng));
    const double psi = prm.center + t;
    const double z = prm.pitch * prm.radius * t;
    pts.push_back({prm.radius * std::cos(psi), prm.radius * std::sin(psi), z, 0});
    if (i == 0) zmin = z;
    zmax = z;
  }
  const double ux = std::cos(prm.center), uy = std::sin(prm.center);
  const double tx = -uy, ty = ux;
  const double dz = zmax - zmin;
  for (std::size_t a = 0; a < prm.anchors; ++a) {
    const auto& slot = detail::kAnchorSlots[a];
    const double w = prm.anchor_distance * prm.radius * (1.0 + 0.013 * static_cast<double>(a));
    const double lift = dz * (1.0 + 0.01 * static_cast<double>(a));
    const double z = slot.above ? zmax + lift : zmin - lift;
    pts.push_back({prm.radius * ux + w * (slot.tangent * tx + slot.outward * ux),
                   prm.radius * uy + w * (slot.tangent * ty + slot.outward * uy), z, 0});
  }
  CylinderInstance inst;
  inst.points = detail::from_vectors(std::move(pts));
  inst.geodesic = n;
  require_general_position(inst.points);

  const auto verts = brute_vertices(inst.points);
  for (std::size_t i = 0; i < n; ++i)
    if (!std::binary_search(verts.begin(), verts.end(), static_cast<PointId>(i)))
      throw std::runtime_error("cylinder_geodesic: geodesic point " + std::to_string(i) + " is not a hull vertex");

  const double a = detail::chord_rotation(inst.points[0], inst.points[n - 1]);
  const double b = detail::chord_rotation(inst.points[n - 4], inst.points[n - 1]);
  inst.window = {std::min(a, b), std::max(a, b), false};
  return inst;
}

}  // namespace rectihull

#endif  // RECTIHULL_GENERATORS_HPP

#ifndef RECTIHULL_MESH_HPP
#define RECTIHULL_MESH_HPP

#include <algorithm>
#include <array>
#include <cstdint>
#include <numeric>
#include <ostream>
#include <stdexcept>
#include <unordered_map>
#include <unordered_set>
#include <vector>

#include "hull.hpp"

namespace rectihull {

class DegenerateMeshError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

enum class FaceKind : std::uint8_t { Cap, Wall };

// Boundary of the regularized solid (closure of the interior) as axis-parallel
// quads on the grid spanned by all region breakpoints and event heights.
// Quads are counterclockwise seen from outside.
struct FaceComplex {
  std::vector<std::array<double, 3>> vertices;
  std::vector<std::array<std::uint32_t, 4>> quads;
  std::vector<FaceKind> kinds;

  std::size_t cap_count() const { return static_cast<std::size_t>(std::count(kinds.begin(), kinds.end(), FaceKind::Cap)); }
};

namespace detail {

class UnionFind {
 public:
  explicit UnionFind(std::size_t n) : parent_(n) { std::iota(parent_.begin(), parent_.end(), std::size_t{0}); }

  std::size_t find(std::size_t a) {
    while (parent_[a] != a) a = parent_[a] = parent_[parent_[a]];
    return a;
  }

  void unite(std::size_t a, std::size_t b) {
    a = find(a);
    b = find(b);
    if (a != b) parent_[std::max(a, b)] = std::min(a, b);
  }

 private:
  std::vector<std::size_t> parent_;
};

inline std::size_t grid_index(const std::vector<double>& grid, double v) {
  return static_cast<std::size_t>(std::lower_bound(grid.begin(), grid.end(), v) - grid.begin());
}

}  // namespace detail

inline FaceComplex extract_faces(const SlabMesh& mesh) {
  std::vector<double> xs, ys;
  for (const auto& slab : mesh.slabs) {
    for (const auto& r : slab.regions) {
      for (std::size_t k = 0; k < r.between().size(); ++k) {
        const Span& s = r.between()[k];
        if (s.length() <= 0.0) continue;
        xs.push_back(r.breakpoints()[k].v);
        xs.push_back(r.breakpoints()[k + 1].v);
        ys.push_back(s.lo.v);
        ys.push_back(s.hi.v);
      }
    }
  }
  std::sort(xs.begin(), xs.end());
  xs.erase(std::unique(xs.begin(), xs.end()), xs.end());
  std::sort(ys.begin(), ys.end());
  ys.erase(std::unique(ys.begin(), ys.end()), ys.end());

  FaceComplex fc;
  if (xs.size() < 2 || ys.size() < 2) return fc;
  const std::size_t nx = xs.size() - 1, ny = ys.size() - 1, ns = mesh.slabs.size();
  std::vector<std::uint8_t> occ(ns * nx * ny, 0);
  auto cell = [&](std::size_t s, std::size_t i, std::size_t j) -> std::uint8_t& { return occ[(s * nx + i) * ny + j]; };
  auto filled = [&](std::ptrdiff_t s, std::ptrdiff_t i, std::ptrdiff_t j) -> bool {
    if (s < 0 || i < 0 || j < 0 || s >= static_cast<std::ptrdiff_t>(ns) || i >= static_cast<std::ptrdiff_t>(nx) ||
        j >= static_cast<std::ptrdiff_t>(ny))
      return false;
    return occ[(static_cast<std::size_t>(s) * nx + static_cast<std::size_t>(i)) * ny + static_cast<std::size_t>(j)] != 0;
  };
  for (std::size_t s = 0; s < ns; ++s) {
    for (const auto& r : mesh.slabs[s].regions) {
      for (std::size_t k = 0; k < r.between().size(); ++k) {
        const Span& sp = r.between()[k];
        if (sp.length() <= 0.0) continue;
        const std::size_t i0 = detail::grid_index(xs, r.breakpoints()[k].v);
        const std::size_t i1 = detail::grid_index(xs, r.breakpoints()[k + 1].v);
        const std::size_t j0 = detail::grid_index(ys, sp.lo.v);
        const std::size_t j1 = detail::grid_index(ys, sp.hi.v);
        for (std::size_t i = i0; i < i1; ++i)
          for (std::size_t j = j0; j < j1; ++j) cell(s, i, j) = 1;
      }
    }
  }

  std::unordered_map<std::uint64_t, std::uint32_t> vindex;
  auto vertex = [&](std::size_t i, std::size_t j, std::size_t l) {
    const std::uint64_t key = (static_cast<std::uint64_t>(i) << 42) | (static_cast<std::uint64_t>(j) << 21) | l;
    auto [it, inserted] = vindex.emplace(key, static_cast<std::uint32_t>(fc.vertices.size()));
    if (inserted) fc.vertices.push_back({xs[i], ys[j], mesh.events[l].v});
    return it->second;
  };
  auto add = [&](std::array<std::uint32_t, 4> q, FaceKind kind) {
    fc.quads.push_back(q);
    fc.kinds.push_back(kind);
  };

  // Level l is event l; slab s spans levels s (top) and s + 1 (bottom).
  for (std::size_t l = 0; l <= ns; ++l) {
    for (std::size_t i = 0; i < nx; ++i) {
      for (std::size_t j = 0; j < ny; ++j) {
        const bool up = filled(static_cast<std::ptrdiff_t>(l) - 1, static_cast<std::ptrdiff_t>(i), static_cast<std::ptrdiff_t>(j));
        const bool down = filled(static_cast<std::ptrdiff_t>(l), static_cast<std::ptrdiff_t>(i), static_cast<std::ptrdiff_t>(j));
        if (up == down) continue;
        std::array<std::uint32_t, 4> q{vertex(i, j, l), vertex(i + 1, j, l), vertex(i + 1, j + 1, l), vertex(i, j + 1, l)};
        if (up) std::reverse(q.begin(), q.end());  // solid above: normal points down
        add(q, FaceKind::Cap);
      }
    }
  }
  for (std::size_t s = 0; s < ns; ++s) {
    const auto ss = static_cast<std::ptrdiff_t>(s);
    for (std::size_t i = 0; i <= nx; ++i) {
      for (std::size_t j = 0; j < ny; ++j) {
        const bool left = filled(ss, static_cast<std::ptrdiff_t>(i) - 1, static_cast<std::ptrdiff_t>(j));
        const bool right = filled(ss, static_cast<std::ptrdiff_t>(i), static_cast<std::ptrdiff_t>(j));
        if (left == right) continue;
        // +x normal ordering: (y0,zlow) (y1,zlow) (y1,zhigh) (y0,zhigh).
        std::array<std::uint32_t, 4> q{vertex(i, j, s + 1), vertex(i, j + 1, s + 1), vertex(i, j + 1, s), vertex(i, j, s)};
        if (right) std::reverse(q.begin(), q.end());
        add(q, FaceKind::Wall);
      }
    }
    for (std::size_t i = 0; i < nx; ++i) {
      for (std::size_t j = 0; j <= ny; ++j) {
        const bool front = filled(ss, static_cast<std::ptrdiff_t>(i), static_cast<std::ptrdiff_t>(j) - 1);
        const bool back = filled(ss, static_cast<std::ptrdiff_t>(i), static_cast<std::ptrdiff_t>(j));
        if (front == back) continue;
        // +y normal ordering: (x0,zlow) (x0,zhigh) (x1,zhigh) (x1,zlow).
        std::array<std::uint32_t, 4> q{vertex(i, j, s + 1), vertex(i, j, s), vertex(i + 1, j, s), vertex(i + 1, j, s + 1)};
        if (back) std::reverse(q.begin(), q.end());
        add(q, FaceKind::Wall);
      }
    }
  }
  return fc;
}

namespace detail {

inline int euler_of(const FaceComplex& fc, const std::vector<std::size_t>& faces) {
  std::unordered_set<std::uint32_t> verts;
  std::unordered_set<std::uint64_t> edges;
  for (std::size_t f : faces) {
    const auto& q = fc.quads[f];
    for (int c = 0; c < 4; ++c) {
      const std::uint32_t a = q[static_cast<std::size_t>(c)];
      const std::uint32_t b = q[static_cast<std::size_t>((c + 1) % 4)];
      verts.insert(a);
      edges.insert((static_cast<std::uint64_t>(std::min(a, b)) << 32) | std::max(a, b));
    }
  }
  return static_cast<int>(verts.size()) - static_cast<int>(edges.size()) + static_cast<int>(faces.size());
}

}  // namespace detail

// V - E + F of each connected piece of the boundary surface.
inline std::vector<int> euler_characteristics(const SlabMesh& mesh) {
  const FaceComplex fc = extract_faces(mesh);
  if (fc.quads.empty()) throw DegenerateMeshError("mesh has no interior; euler characteristic undefined");
  detail::UnionFind uf(fc.vertices.size());
  for (const auto& q : fc.quads)
    for (int c = 1; c < 4; ++c) uf.unite(q[0], q[static_cast<std::size_t>(c)]);
  std::unordered_map<std::size_t, std::vector<std::size_t>> groups;
  std::vector<std::size_t> roots;
  for (std::size_t f = 0; f < fc.quads.size(); ++f) {
    const std::size_t r = uf.find(fc.quads[f][0]);
    auto [it, inserted] = groups.try_emplace(r);
    if (inserted) roots.push_back(r);
    it->second.push_back(f);
  }
  std::vector<int> out;
  for (std::size_t r : roots) out.push_back(detail::euler_of(fc, groups[r]));
  return out;
}

inline int euler_characteristic(const SlabMesh& mesh) {
  const auto per = euler_characteristics(mesh);
  return std::accumulate(per.begin(), per.end(), 0);
}

// Connected components of the closed hull, isolated points and segments
// included. Each slab region is glued to the section regions containing it at
// its two bounding events.
inline std::size_t components(const SlabMesh& mesh) {
  std::vector<std::size_t> section_base(mesh.sections.size() + 1, 0);
  for (std::size_t i = 0; i < mesh.sections.size(); ++i) section_base[i + 1] = section_base[i] + mesh.sections[i].size();
  std::size_t nodes = section_base.back();
  std::vector<std::size_t> slab_base(mesh.slabs.size() + 1, nodes);
  for (std::size_t s = 0; s < mesh.slabs.size(); ++s) slab_base[s + 1] = slab_base[s] + mesh.slabs[s].regions.size();
  nodes = slab_base.back();
  detail::UnionFind uf(nodes);
  for (std::size_t s = 0; s < mesh.slabs.size(); ++s) {
    for (std::size_t r = 0; r < mesh.slabs[s].regions.size(); ++r) {
      const auto& region = mesh.slabs[s].regions[r];
      const double x = region.breakpoints().front().v;
      const double y = region.at().front().lo.v;
      for (std::size_t level : {s, s + 1}) {
        auto hit = mesh.sections[level].locate(x, y);
        if (!hit) throw std::logic_error("slab region not contained in the section at its bounding event");
        uf.unite(slab_base[s] + r, section_base[level] + *hit);
      }
    }
  }
  std::size_t count = 0;
  for (std::size_t v = 0; v < nodes; ++v)
    if (uf.find(v) == v) ++count;
  return count;
}

inline void write_off(std::ostream& os, const FaceComplex& fc, bool triangulate) {
  const std::size_t faces = triangulate ? 2 * fc.quads.size() : fc.quads.size();
  os << "OFF\n" << fc.vertices.size() << ' ' << faces << " 0\n";
  os.precision(17);
  for (const auto& v : fc.vertices) os << v[0] << ' ' << v[1] << ' ' << v[2] << '\n';
  for (const auto& q : fc.quads) {
    if (triangulate) {
      os << "3 " << q[0] << ' ' << q[1] << ' ' << q[2] << '\n';
      os << "3 " << q[0] << ' ' << q[2] << ' ' << q[3] << '\n';
    } else {
      os << "4 " << q[0] << ' ' << q[1] << ' ' << q[2] << ' ' << q[3] << '\n';
    }
  }
}

}  // namespace rectihull

#endif  // RECTIHULL_MESH_HPP

#ifndef RECTIHULL_HULL_TREE_HPP
#define RECTIHULL_HULL_TREE_HPP

#include <algorithm>
#include <cmath>
#include <optional>
#include <span>
#include <stdexcept>
#include <vector>

#include "convex_chain.hpp"
#include "core.hpp"

namespace rectihull {

enum class KeyAxis { X, Y };

// Balanced tree over planar points sorted by one coordinate. Every node keeps
// the insertion-only convex hull of its active leaves, so the active points
// on either side of a leaf are covered by O(log n) hulls.
//
// A y-keyed tree works in the frame (x, y) -> (-y, x): frame x is then a key,
// and frame +y is original +x. Points are addressed by their input index and
// reported in original coordinates with id set to that index.
class HullTree {
 public:
  struct Node {
    std::size_t lo = 0;  // key positions [lo, hi)
    std::size_t hi = 0;
    int left = -1;
    int right = -1;
    ChainForest::Handle upper = 0;
    ChainForest::Handle lower = 0;
  };

  enum class Side { Left, Right };

  struct OffPath {
    std::size_t node;
    Side side;
  };

  // Active points nearest to frame +y and frame -y, seen from the query, on
  // each side of its key.
  struct SideExtremes {
    std::optional<Point2> left_pos, left_neg, right_pos, right_neg;
  };

  HullTree(std::span<const Point2> points, KeyAxis axis = KeyAxis::X) : axis_(axis) {
    const std::size_t n = points.size();
    original_.reserve(n);
    frame_.reserve(n);
    for (std::size_t i = 0; i < n; ++i) {
      const Point2& p = points[i];
      if (!std::isfinite(p.x) || !std::isfinite(p.y)) throw std::invalid_argument("hull tree: non-finite key");
      original_.push_back({p.x, p.y, static_cast<PointId>(i)});
      frame_.push_back(to_frame(original_.back()));
    }
    order_.resize(n);
    for (std::size_t i = 0; i < n; ++i) order_[i] = i;
    std::sort(order_.begin(), order_.end(), [&](std::size_t a, std::size_t b) { return frame_[a].x < frame_[b].x; });
    for (std::size_t k = 1; k < n; ++k)
      if (frame_[order_[k]].x == frame_[order_[k - 1]].x)
        throw GeneralPositionError("hull tree: duplicate key");
    position_.resize(n);
    for (std::size_t k = 0; k < n; ++k) position_[order_[k]] = k;
    leaf_.assign(n, 0);
    active_.assign(n, false);
    if (n > 0) root_ = build(0, n);
  }

  KeyAxis key_axis() const { return axis_; }
  std::size_t size() const { return original_.size(); }
  bool empty() const { return original_.empty(); }
  std::size_t root() const { return root_; }
  const std::vector<Node>& nodes() const { return nodes_; }
  bool is_leaf(std::size_t node) const { return nodes_[node].left < 0; }
  std::size_t leaf_of(std::size_t input) const { return leaf_[input]; }
  std::size_t key_position(std::size_t input) const { return position_[input]; }
  std::size_t input_at(std::size_t position) const { return order_[position]; }
  bool is_active(std::size_t input) const { return active_[input]; }
  const Point2& point(std::size_t input) const { return original_[input]; }
  std::size_t active_count() const { return active_count_; }

  std::size_t depth() const { return empty() ? 0 : depth_of(root_); }

  // Input indices of the leaves below a node, in key order.
  std::vector<std::size_t> node_leaves(std::size_t node) const {
    std::vector<std::size_t> out;
    for (std::size_t k = nodes_[node].lo; k < nodes_[node].hi; ++k) out.push_back(order_[k]);
    return out;
  }

  void activate(std::size_t input) {
    if (input >= size()) throw std::out_of_range("hull tree: no such leaf");
    if (active_[input]) throw std::logic_error("hull tree: leaf already active");
    active_[input] = true;
    ++active_count_;
    const Point2 f = frame_[input];
    const Point2 reflected{f.x, -f.y, f.id};
    std::size_t t = root_;
    for (;;) {
      forest_.insert(nodes_[t].upper, f);
      forest_.insert(nodes_[t].lower, reflected);
      if (is_leaf(t)) break;
      const Node& nd = nodes_[t];
      t = position_[input] < nodes_[static_cast<std::size_t>(nd.left)].hi ? static_cast<std::size_t>(nd.left)
                                                                          : static_cast<std::size_t>(nd.right);
    }
  }

  // Siblings of the root-to-leaf path: together they hold every leaf except
  // the query, each wholly on one side of it.
  std::vector<OffPath> off_path(std::size_t input) const {
    std::vector<OffPath> out;
    if (empty()) return out;
    const std::size_t pos = position_[input];
    std::size_t t = root_;
    while (!is_leaf(t)) {
      const auto l = static_cast<std::size_t>(nodes_[t].left);
      const auto r = static_cast<std::size_t>(nodes_[t].right);
      if (pos < nodes_[l].hi) {
        out.push_back({r, Side::Right});
        t = l;
      } else {
        out.push_back({l, Side::Left});
        t = r;
      }
    }
    return out;
  }

  SideExtremes extremes(std::size_t input) const {
    SideExtremes ex;
    const Point2 q = frame_[input];
    const Point2 qr{q.x, -q.y, q.id};
    for (const auto& [node, side] : off_path(input)) {
      const double s = side == Side::Left ? 1.0 : -1.0;
      auto& pos = side == Side::Left ? ex.left_pos : ex.right_pos;
      auto& neg = side == Side::Left ? ex.left_neg : ex.right_neg;
      if (auto c = forest_.extreme(nodes_[node].upper, q)) pos = pick(q, s, pos, *c);
      if (auto c = forest_.extreme(nodes_[node].lower, qr)) neg = pick(qr, s, neg, *c);
    }
    auto back = [&](std::optional<Point2>& p) {
      if (p) p = original_[p->id];
    };
    back(ex.left_pos);
    back(ex.left_neg);
    back(ex.right_pos);
    back(ex.right_neg);
    return ex;
  }

  // Hull vertices of a node in original coordinates, counterclockwise.
  std::vector<Point2> node_hull(std::size_t node) const {
    auto upper = forest_.points(nodes_[node].upper);
    auto lower = forest_.points(nodes_[node].lower);
    std::vector<Point2> out;
    // Lower chain left to right, then upper chain right to left.
    for (const auto& p : lower) out.push_back(original_[p.id]);
    for (auto it = upper.rbegin(); it != upper.rend(); ++it) {
      if (!out.empty() && (it->id == out.back().id || it->id == out.front().id)) continue;
      out.push_back(original_[it->id]);
    }
    return out;
  }

  // Chain vertices over all nodes, upper and lower counted separately.
  std::size_t chain_storage() const {
    std::size_t total = 0;
    for (const auto& nd : nodes_) total += forest_.size(nd.upper) + forest_.size(nd.lower);
    return total;
  }

  // Distinct hull vertices over all nodes (upper and lower chains share ends).
  std::size_t hull_storage() const {
    std::size_t total = 0;
    for (std::size_t t = 0; t < nodes_.size(); ++t) total += node_hull(t).size();
    return total;
  }

 private:
  Point2 to_frame(const Point2& p) const {
    if (axis_ == KeyAxis::X) return p;
    return {-p.y, p.x, p.id};
  }

  static std::optional<Point2> pick(const Point2& q, double s, const std::optional<Point2>& cur, const Point2& cand) {
    if (!cur) return cand;
    const double c = s * cross(cand.x - q.x, cand.y - q.y, cur->x - q.x, cur->y - q.y);
    if (c > 0.0) return cand;
    if (c < 0.0) return cur;
    const double dc = std::hypot(cand.x - q.x, cand.y - q.y);
    const double du = std::hypot(cur->x - q.x, cur->y - q.y);
    return dc < du ? cand : *cur;
  }

  std::size_t build(std::size_t lo, std::size_t hi) {
    const std::size_t t = nodes_.size();
    nodes_.push_back({lo, hi, -1, -1, forest_.create(), forest_.create()});
    if (hi - lo == 1) {
      leaf_[order_[lo]] = t;
      return t;
    }
    const std::size_t mid = lo + (hi - lo) / 2;
    const std::size_t l = build(lo, mid);
    const std::size_t r = build(mid, hi);
    nodes_[t].left = static_cast<int>(l);
    nodes_[t].right = static_cast<int>(r);
    return t;
  }

  std::size_t depth_of(std::size_t t) const {
    if (is_leaf(t)) return 0;
    return 1 + std::max(depth_of(static_cast<std::size_t>(nodes_[t].left)),
                        depth_of(static_cast<std::size_t>(nodes_[t].right)));
  }

  KeyAxis axis_;
  std::vector<Point2> original_;
  std::vector<Point2> frame_;
  std::vector<std::size_t> order_;     // key position -> input index
  std::vector<std::size_t> position_;  // input index -> key position
  std::vector<std::size_t> leaf_;
  std::vector<bool> active_;
  std::size_t active_count_ = 0;
  std::vector<Node> nodes_;
  std::size_t root_ = 0;
  ChainForest forest_;
};

}  // namespace rectihull

#endif  // RECTIHULL_HULL_TREE_HPP

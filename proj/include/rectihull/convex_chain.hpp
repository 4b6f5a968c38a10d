#ifndef RECTIHULL_CONVEX_CHAIN_HPP
#define RECTIHULL_CONVEX_CHAIN_HPP

#include <cstdint>
#include <optional>
#include <vector>

#include "core.hpp"

namespace rectihull {

// A family of insertion-only upper convex chains sharing one node pool. Each
// chain is a treap keyed by x whose nodes are also threaded in x order, so a
// tangent query descends the treap comparing each node with its successor.
// Lower chains are stored as upper chains of (x, -y).
class ChainForest {
 public:
  using Handle = std::uint32_t;

  Handle create() {
    chains_.push_back({});
    return static_cast<Handle>(chains_.size() - 1);
  }

  std::size_t size(Handle h) const { return chains_[h].size; }
  bool empty(Handle h) const { return chains_[h].size == 0; }

  // Adds p to the chain if it lies strictly above it, evicting the vertices
  // that stop being strictly convex. Returns whether p became a vertex.
  bool insert(Handle h, const Point2& p) {
    Chain& ch = chains_[h];
    const int a = neighbour(ch.root, p.x, false);
    const int b = neighbour(ch.root, p.x, true);
    if (a >= 0 && b >= 0 && orient(nodes_[a].p, nodes_[b].p, p) <= 0) return false;

    const int v = allocate(p);
    auto [lo, hi] = split_less(ch.root, p.x);
    ch.root = merge(merge(lo, v), hi);
    link(a, v);
    link(v, b);
    ++ch.size;

    int left = a;
    while (left >= 0 && nodes_[left].prev >= 0 && orient(nodes_[nodes_[left].prev].p, nodes_[left].p, p) >= 0) {
      const int drop = left;
      left = nodes_[left].prev;
      erase(ch, drop);
    }
    int right = b;
    while (right >= 0 && nodes_[right].next >= 0 && orient(p, nodes_[right].p, nodes_[nodes_[right].next].p) >= 0) {
      const int drop = right;
      right = nodes_[right].next;
      erase(ch, drop);
    }
    return true;
  }

  // The chain vertex whose direction from q is closest to +y. q must lie
  // strictly left or strictly right of every vertex.
  std::optional<Point2> extreme(Handle h, const Point2& q) const {
    const Chain& ch = chains_[h];
    if (ch.root < 0) return std::nullopt;
    const double side = q.x > nodes_[ch.root].p.x ? 1.0 : -1.0;
    int best = -1;
    int t = ch.root;
    while (t >= 0) {
      const int w = nodes_[t].next;
      const double c = w >= 0 ? side * cross_from(q, nodes_[w].p, nodes_[t].p) : -1.0;
      // On a tie the vertex nearer to q wins; from the right that is w.
      if (c > 0.0 || (c == 0.0 && side > 0.0)) {
        t = nodes_[t].right;
      } else {
        best = t;
        t = nodes_[t].left;
      }
    }
    return nodes_[best].p;
  }

  // Vertices in x order.
  std::vector<Point2> points(Handle h) const {
    std::vector<Point2> out;
    int t = chains_[h].root;
    if (t < 0) return out;
    while (nodes_[t].left >= 0) t = nodes_[t].left;
    for (; t >= 0; t = nodes_[t].next) out.push_back(nodes_[t].p);
    return out;
  }

  std::size_t pool_size() const { return nodes_.size(); }

 private:
  struct Node {
    Point2 p;
    std::uint32_t prio = 0;
    int left = -1;
    int right = -1;
    int prev = -1;
    int next = -1;
  };

  struct Chain {
    int root = -1;
    std::size_t size = 0;
  };

  static double cross_from(const Point2& q, const Point2& a, const Point2& b) {
    return cross(a.x - q.x, a.y - q.y, b.x - q.x, b.y - q.y);
  }

  int allocate(const Point2& p) {
    rng_ ^= rng_ << 13;
    rng_ ^= rng_ >> 7;
    rng_ ^= rng_ << 17;
    Node n;
    n.p = p;
    n.prio = static_cast<std::uint32_t>(rng_ >> 32);
    if (!free_.empty()) {
      const int v = free_.back();
      free_.pop_back();
      nodes_[static_cast<std::size_t>(v)] = n;
      return v;
    }
    nodes_.push_back(n);
    return static_cast<int>(nodes_.size() - 1);
  }

  void link(int a, int b) {
    if (a >= 0) nodes_[a].next = b;
    if (b >= 0) nodes_[b].prev = a;
  }

  // Nearest node strictly left (after == false) or strictly right of x.
  int neighbour(int t, double x, bool after) const {
    int found = -1;
    while (t >= 0) {
      const double k = nodes_[t].p.x;
      if (after) {
        if (k > x) {
          found = t;
          t = nodes_[t].left;
        } else {
          t = nodes_[t].right;
        }
      } else {
        if (k < x) {
          found = t;
          t = nodes_[t].right;
        } else {
          t = nodes_[t].left;
        }
      }
    }
    return found;
  }

  // (keys < x, keys >= x)
  std::pair<int, int> split_less(int t, double x) {
    if (t < 0) return {-1, -1};
    if (nodes_[t].p.x < x) {
      auto [l, r] = split_less(nodes_[t].right, x);
      nodes_[t].right = l;
      return {t, r};
    }
    auto [l, r] = split_less(nodes_[t].left, x);
    nodes_[t].left = r;
    return {l, t};
  }

  int merge(int a, int b) {
    if (a < 0) return b;
    if (b < 0) return a;
    if (nodes_[a].prio > nodes_[b].prio) {
      nodes_[a].right = merge(nodes_[a].right, b);
      return a;
    }
    nodes_[b].left = merge(a, nodes_[b].left);
    return b;
  }

  int erase_key(int t, double x) {
    if (t < 0) return t;
    if (nodes_[t].p.x == x) return merge(nodes_[t].left, nodes_[t].right);
    if (x < nodes_[t].p.x)
      nodes_[t].left = erase_key(nodes_[t].left, x);
    else
      nodes_[t].right = erase_key(nodes_[t].right, x);
    return t;
  }

  void erase(Chain& ch, int v) {
    ch.root = erase_key(ch.root, nodes_[v].p.x);
    link(nodes_[v].prev, nodes_[v].next);
    free_.push_back(v);
    --ch.size;
  }

  std::vector<Node> nodes_;
  std::vector<int> free_;
  std::vector<Chain> chains_;
  std::uint64_t rng_ = 0x2545F4914F6CDD1DULL;
};

}  // namespace rectihull

#endif  // RECTIHULL_CONVEX_CHAIN_HPP

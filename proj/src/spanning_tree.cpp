#include "unavoidable/spanning_tree.hpp"

#include <algorithm>
#include <stdexcept>

namespace unavoidable {

NormalSpanningTree NormalSpanningTree::build(const Graph& g, Vertex root) {
  if (!g.contains(root)) throw std::invalid_argument("root is not a vertex");
  const std::size_t n = g.order();
  NormalSpanningTree t;
  t.root_ = root;
  t.parent_.assign(n, -1);
  t.depth_.assign(n, -1);
  t.pre_.assign(n, -1);
  t.size_.assign(n, 1);
  t.children_.assign(n, {});
  struct Frame {
    Vertex v;
    std::size_t next;
  };
  std::vector<Frame> stack{{root, 0}};
  t.depth_[root] = 0;
  t.pre_[root] = 0;
  t.preorder_list_.push_back(root);
  while (!stack.empty()) {
    Frame& f = stack.back();
    const auto& nbrs = g.neighbors(f.v);
    if (f.next < nbrs.size()) {
      Vertex w = nbrs[f.next++];
      if (t.depth_[w] >= 0) continue;
      t.parent_[w] = f.v;
      t.depth_[w] = t.depth_[f.v] + 1;
      t.height_ = std::max(t.height_, t.depth_[w]);
      t.pre_[w] = static_cast<int>(t.preorder_list_.size());
      t.preorder_list_.push_back(w);
      t.children_[f.v].push_back(w);
      stack.push_back({w, 0});
    } else {
      Vertex v = f.v;
      stack.pop_back();
      if (!stack.empty()) t.size_[stack.back().v] += t.size_[v];
    }
  }
  if (t.preorder_list_.size() != n) throw std::invalid_argument("graph is disconnected");
  return t;
}

VertexList NormalSpanningTree::segment(Vertex a, Vertex b, SegmentKind kind) const {
  if (!leq(a, b)) return {};
  VertexList out;
  for (Vertex x = b;; x = parent_[x]) {
    out.push_back(x);
    if (x == a) break;
  }
  std::reverse(out.begin(), out.end());
  const bool drop_front = kind == SegmentKind::open || kind == SegmentKind::left_open;
  const bool drop_back = kind == SegmentKind::open || kind == SegmentKind::right_open;
  if (drop_back && !out.empty()) out.pop_back();
  if (drop_front && !out.empty()) out.erase(out.begin());
  return out;
}

VertexList NormalSpanningTree::descendants(Vertex v) const {
  auto first = preorder_list_.begin() + pre_[v] + 1;
  return VertexList(first, first + size_[v] - 1);
}

VertexList NormalSpanningTree::deepest_branch() const {
  Vertex deepest = root_;
  for (Vertex v = 0; v < static_cast<Vertex>(order()); ++v) {
    if (depth_[v] > depth_[deepest] || (depth_[v] == depth_[deepest] && v < deepest)) deepest = v;
  }
  return root_path(deepest);
}

bool is_normal_spanning_tree(const Graph& g, const NormalSpanningTree& tree) {
  if (tree.order() != g.order()) return false;
  for (Vertex v = 0; v < static_cast<Vertex>(g.order()); ++v) {
    if (v != tree.root() && !g.adjacent(v, tree.parent(v))) return false;
  }
  for (const auto& [u, v] : g.edges()) {
    if (!tree.comparable(u, v)) return false;
  }
  return true;
}

}  // namespace unavoidable

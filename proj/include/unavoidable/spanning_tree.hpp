#pragma once

#include <vector>

#include "unavoidable/graph.hpp"

namespace unavoidable {

enum class SegmentKind { closed, open, left_open, right_open };

/// Depth-first spanning tree, rooted, with neighbors explored in increasing
/// order. Every edge of the graph joins two vertices comparable in the tree
/// order, which is what makes it normal.
class NormalSpanningTree {
 public:
  /// Throws std::invalid_argument if `g` is disconnected or `root` invalid.
  static NormalSpanningTree build(const Graph& g, Vertex root = 0);

  [[nodiscard]] std::size_t order() const { return parent_.size(); }
  [[nodiscard]] Vertex root() const { return root_; }
  /// -1 for the root.
  [[nodiscard]] Vertex parent(Vertex v) const { return parent_[v]; }
  [[nodiscard]] int depth(Vertex v) const { return depth_[v]; }
  /// In the order the search discovered them.
  [[nodiscard]] const VertexList& children(Vertex v) const { return children_[v]; }
  [[nodiscard]] int preorder(Vertex v) const { return pre_[v]; }
  [[nodiscard]] int subtree_size(Vertex v) const { return size_[v]; }

  /// a lies on the root-to-b path (a <= a holds).
  [[nodiscard]] bool leq(Vertex a, Vertex b) const {
    return pre_[a] <= pre_[b] && pre_[b] < pre_[a] + size_[a];
  }
  [[nodiscard]] bool comparable(Vertex a, Vertex b) const { return leq(a, b) || leq(b, a); }
  /// Vertices from a down to b, ends included per `kind`; empty unless
  /// a <= b.
  [[nodiscard]] VertexList segment(Vertex a, Vertex b, SegmentKind kind = SegmentKind::closed) const;
  [[nodiscard]] VertexList root_path(Vertex v) const { return segment(root_, v); }
  /// Strict descendants in preorder.
  [[nodiscard]] VertexList descendants(Vertex v) const;
  /// Maximum depth, counted in edges.
  [[nodiscard]] int height() const { return height_; }
  /// Root to the smallest-id vertex of maximum depth.
  [[nodiscard]] VertexList deepest_branch() const;

 private:
  Vertex root_ = 0;
  std::vector<Vertex> parent_;
  std::vector<int> depth_, pre_, size_;
  std::vector<VertexList> children_;
  VertexList preorder_list_;
  int height_ = 0;
};

[[nodiscard]] inline NormalSpanningTree build_normal_spanning_tree(const Graph& g, Vertex root = 0) {
  return NormalSpanningTree::build(g, root);
}

/// Every edge of `g` joins comparable vertices and every tree edge is a
/// graph edge.
[[nodiscard]] bool is_normal_spanning_tree(const Graph& g, const NormalSpanningTree& tree);

}  // namespace unavoidable

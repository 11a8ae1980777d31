#pragma once

#include <optional>
#include <vector>

#include "unavoidable/graph.hpp"

namespace unavoidable {

/// An X-Y edge of a ladder, with its endpoints' rail positions.
struct Rung {
  Vertex x_end = 0;
  Vertex y_end = 0;
  int x_pos = 0;
  int y_pos = 0;

  friend bool operator==(const Rung&, const Rung&) = default;
};

/// A messy ladder (X, Y) stored as its own graph L = G[V(X) u V(Y)].
///
/// Vertices of L carry local ids; `labels()` maps them to the ids of the
/// graph the ladder was cut from and is strictly increasing, so a ladder
/// obtained from another by deleting vertices keeps comparable labels. Every
/// vertex of L lies on exactly one rail. Rungs are all X-Y edges, including
/// sigma = (X[0], Y[0]) and tau = (X[last], Y[last]).
class MessyLadder {
 public:
  /// Throws std::invalid_argument unless (rail_x, rail_y) is a messy ladder
  /// of `g`.
  static MessyLadder from_host(const Graph& g, const VertexList& rail_x, const VertexList& rail_y);

  [[nodiscard]] const Graph& graph() const { return graph_; }
  [[nodiscard]] std::size_t order() const { return graph_.order(); }
  [[nodiscard]] const VertexList& labels() const { return labels_; }
  [[nodiscard]] Vertex label(Vertex local) const { return labels_[local]; }
  [[nodiscard]] std::optional<Vertex> local_of(Vertex label) const;

  [[nodiscard]] const VertexList& rail_x() const { return x_; }
  [[nodiscard]] const VertexList& rail_y() const { return y_; }
  [[nodiscard]] VertexList labelled_rail_x() const;
  [[nodiscard]] VertexList labelled_rail_y() const;

  /// -1 when the vertex is on the other rail.
  [[nodiscard]] int pos_x(Vertex local) const { return pos_x_[local]; }
  [[nodiscard]] int pos_y(Vertex local) const { return pos_y_[local]; }

  /// Sorted by (x_pos, y_pos).
  [[nodiscard]] const std::vector<Rung>& rungs() const { return rungs_; }
  [[nodiscard]] const Rung& sigma() const { return rungs_.front(); }
  [[nodiscard]] const Rung& tau() const { return rungs_.back(); }

  /// The messy ladder induced by new rails given in local ids of this
  /// ladder. Throws std::invalid_argument if they do not form one.
  [[nodiscard]] MessyLadder sub_ladder(const VertexList& rail_x, const VertexList& rail_y) const;

 private:
  MessyLadder() = default;

  Graph graph_;
  VertexList labels_;
  VertexList x_, y_;
  std::vector<int> pos_x_, pos_y_;
  std::vector<Rung> rungs_;
};

}  // namespace unavoidable

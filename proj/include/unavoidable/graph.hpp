#pragma once

#include <cstddef>
#include <cstdint>
#include <limits>
#include <optional>
#include <span>
#include <utility>
#include <vector>

namespace unavoidable {

using Vertex = std::int32_t;
using VertexList = std::vector<Vertex>;
using Edge = std::pair<Vertex, Vertex>;

/// Immutable simple undirected graph on the vertices 0..n-1.
///
/// Neighbor lists are kept sorted, so every traversal that walks them visits
/// vertices in increasing order. All tie-breaking in the library relies on
/// this.
class Graph {
 public:
  Graph() = default;
  explicit Graph(std::size_t n);
  /// Throws std::invalid_argument on self-loops, repeated edges or endpoints
  /// outside 0..n-1.
  Graph(std::size_t n, std::span<const Edge> edges);

  [[nodiscard]] std::size_t order() const { return adj_.size(); }
  [[nodiscard]] std::size_t size() const { return edge_count_; }
  [[nodiscard]] bool contains(Vertex v) const {
    return v >= 0 && static_cast<std::size_t>(v) < adj_.size();
  }
  [[nodiscard]] const VertexList& neighbors(Vertex v) const { return adj_[v]; }
  [[nodiscard]] std::size_t degree(Vertex v) const { return adj_[v].size(); }
  [[nodiscard]] bool adjacent(Vertex u, Vertex v) const;
  /// Edges as (u, v) with u < v, sorted lexicographically.
  [[nodiscard]] std::vector<Edge> edges() const;

  friend bool operator==(const Graph&, const Graph&) = default;

 private:
  std::vector<VertexList> adj_;
  std::size_t edge_count_ = 0;
};

/// A sequence of distinct vertices, consecutive ones adjacent in the host.
/// `induced` records whether the host has no chord between non-consecutive
/// vertices of the sequence.
struct Path {
  VertexList vertices;
  bool induced = false;

  [[nodiscard]] std::size_t order() const { return vertices.size(); }
  [[nodiscard]] bool empty() const { return vertices.empty(); }
  [[nodiscard]] Vertex front() const { return vertices.front(); }
  [[nodiscard]] Vertex back() const { return vertices.back(); }
};

[[nodiscard]] bool is_path(const Graph& g, std::span<const Vertex> seq);
[[nodiscard]] bool is_induced_path(const Graph& g, std::span<const Vertex> seq);
/// Wraps `seq` into a Path, computing the induced flag from `g`.
/// Throws std::invalid_argument if `seq` is not a path of `g`.
[[nodiscard]] Path make_path(const Graph& g, VertexList seq);

/// Induced subgraph together with the local-to-host vertex map. Local vertex
/// i corresponds to host vertex `to_host[i]`; `to_host` is increasing.
struct InducedSubgraph {
  Graph graph;
  VertexList to_host;

  [[nodiscard]] Vertex host(Vertex local) const { return to_host[local]; }
  [[nodiscard]] std::optional<Vertex> local(Vertex host_vertex) const;
  [[nodiscard]] VertexList lift(std::span<const Vertex> local_vertices) const;
};

/// Duplicates in `subset` are ignored. Throws std::out_of_range on a vertex
/// that is not in `g`.
[[nodiscard]] InducedSubgraph induced_subgraph(const Graph& g, std::span<const Vertex> subset);

[[nodiscard]] bool is_connected(const Graph& g);
[[nodiscard]] VertexList cut_vertices(const Graph& g);
/// At least three vertices, connected, and no cut-vertex.
[[nodiscard]] bool is_two_connected(const Graph& g);

/// Breadth-first shortest u-v path; neighbors are explored in increasing
/// order. Throws std::invalid_argument if u and v are disconnected.
[[nodiscard]] Path shortest_path(const Graph& g, Vertex u, Vertex v);

/// Shortest u-v path all of whose internal vertices satisfy `interior[w]`,
/// with at least one internal vertex (a direct u-v edge is never used).
/// The result is induced in `g` whenever u and v are non-adjacent.
[[nodiscard]] std::optional<VertexList> shortest_path_through(const Graph& g, Vertex u, Vertex v,
                                                              const std::vector<char>& interior);

inline constexpr std::uint64_t kUnlimitedBudget = std::numeric_limits<std::uint64_t>::max();

struct InducedPathSearch {
  Path path;
  bool exhaustive = false;
  std::uint64_t expansions = 0;
};

/// Depth-first enumeration of induced paths. Each vertex pushed onto the
/// search stack costs one unit of `budget`. When the search finishes inside
/// the budget the returned path has maximum order. Throws
/// std::invalid_argument if `budget` is zero or `g` is empty.
[[nodiscard]] InducedPathSearch longest_induced_path(const Graph& g, std::uint64_t budget);

/// Two vertices and a set of common neighbors: a K_{2,s} subgraph
/// (not necessarily induced).
struct K2sWitness {
  Vertex a = 0;
  Vertex b = 0;
  VertexList common;
};

/// Pair {a, b} with lexicographically least (a, b) having at least `s` common
/// neighbors, with its `s` smallest common neighbors.
[[nodiscard]] std::optional<K2sWitness> find_k2s_subgraph(const Graph& g, std::size_t s);

/// Every pair with at least `min_common` common neighbors, in lexicographic
/// order, each with all of its common neighbors.
[[nodiscard]] std::vector<K2sWitness> k2s_pairs(const Graph& g, std::size_t min_common);

}  // namespace unavoidable

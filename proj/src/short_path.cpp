#include "unavoidable/short_path.hpp"

#include <algorithm>
#include <limits>
#include <optional>
#include <stdexcept>

#include "unavoidable/spanning_tree.hpp"
#include "unavoidable/thresholds.hpp"

namespace unavoidable {
namespace {

std::size_t saturating_children_bound(std::size_t q, int r) {
  // d = 1 + (q - 2)(r - 1)
  const auto a = static_cast<unsigned __int128>(q - 2) * static_cast<unsigned __int128>(r - 1) + 1;
  const auto cap = static_cast<unsigned __int128>(std::numeric_limits<std::size_t>::max());
  return static_cast<std::size_t>(a > cap ? cap : a);
}

// Theta from v's child subtrees meeting a common vertex u of the root path.
std::optional<ThetaPayload> theta_at(const Graph& g, const NormalSpanningTree& tree, Vertex v, int r) {
  const VertexList& kids = tree.children(v);
  if (static_cast<long long>(kids.size()) < r) return std::nullopt;
  VertexList above = tree.segment(tree.root(), v, SegmentKind::right_open);
  if (above.empty()) return std::nullopt;
  std::vector<int> pos_above(g.order(), -1);
  for (std::size_t i = 0; i < above.size(); ++i) pos_above[above[i]] = static_cast<int>(i);

  // attached[i] lists the positions on R - v that child subtree i touches.
  std::vector<std::vector<int>> attached(kids.size());
  for (std::size_t i = 0; i < kids.size(); ++i) {
    std::vector<char> hit(above.size(), 0);
    auto scan = [&](Vertex w) {
      for (Vertex x : g.neighbors(w)) {
        if (pos_above[x] >= 0) hit[pos_above[x]] = 1;
      }
    };
    scan(kids[i]);
    for (Vertex w : tree.descendants(kids[i])) scan(w);
    for (std::size_t p = 0; p < above.size(); ++p) {
      if (hit[p]) attached[i].push_back(static_cast<int>(p));
    }
    if (attached[i].empty()) {
      throw PreconditionError("child subtree without an edge above its parent; graph is not 2-connected");
    }
  }

  for (std::size_t p = 0; p < above.size(); ++p) {
    std::vector<std::size_t> chosen;
    for (std::size_t i = 0; i < kids.size() && static_cast<long long>(chosen.size()) < r; ++i) {
      if (std::binary_search(attached[i].begin(), attached[i].end(), static_cast<int>(p))) chosen.push_back(i);
    }
    if (static_cast<long long>(chosen.size()) < r) continue;
    const Vertex u = above[p];
    ThetaPayload theta{u, v, {}, g.adjacent(u, v)};
    std::vector<char> interior(g.order(), 0);
    for (std::size_t i : chosen) {
      VertexList subtree = tree.descendants(kids[i]);
      subtree.push_back(kids[i]);
      for (Vertex w : subtree) interior[w] = 1;
      auto path = shortest_path_through(g, u, v, interior);
      for (Vertex w : subtree) interior[w] = 0;
      if (!path) return std::nullopt;
      theta.paths.push_back(std::move(*path));
    }
    if (verify_theta(g, theta, r)) return theta;
  }
  return std::nullopt;
}

}  // namespace

ShortPathOutcome extract_short_path_structure(const Graph& g, std::size_t q, int r, Vertex root) {
  if (q < 2 || r < 2) throw std::invalid_argument("extract_short_path_structure needs q >= 2 and r >= 2");
  if (!is_two_connected(g)) throw PreconditionError("graph is not 2-connected");

  ShortPathOutcome out;
  try {
    out.guarantee_met = BigInt(g.order()) >= f_shortp(BigInt(q), BigInt(r));
  } catch (const std::overflow_error&) {
    out.guarantee_met = false;
  }

  const NormalSpanningTree tree = NormalSpanningTree::build(g, root);
  if (static_cast<std::size_t>(tree.height()) >= q) {
    out.result = make_path(g, tree.deepest_branch());
    return out;
  }

  const std::size_t d = saturating_children_bound(q, r);
  VertexList by_depth(g.order());
  for (Vertex v = 0; v < static_cast<Vertex>(g.order()); ++v) by_depth[v] = v;
  std::stable_sort(by_depth.begin(), by_depth.end(),
                   [&](Vertex a, Vertex b) { return tree.depth(a) < tree.depth(b); });

  // Vertices meeting the bound first, then any other vertex with r children.
  VertexList candidates;
  for (Vertex v : by_depth) {
    if (tree.children(v).size() >= d) candidates.push_back(v);
  }
  for (Vertex v : by_depth) {
    const auto c = tree.children(v).size();
    if (c < d && static_cast<long long>(c) >= r) candidates.push_back(v);
  }
  for (Vertex v : candidates) {
    if (auto theta = theta_at(g, tree, v, r)) {
      out.result = std::move(*theta);
      return out;
    }
  }
  out.result = StageFailure{"short_path", "no vertex with enough child subtrees sharing an attachment"};
  return out;
}

}  // namespace unavoidable

#include "unavoidable/messy_ladder.hpp"

#include <algorithm>
#include <stdexcept>
#include <tuple>

#include "unavoidable/certificates.hpp"

namespace unavoidable {

MessyLadder MessyLadder::from_host(const Graph& g, const VertexList& rail_x, const VertexList& rail_y) {
  if (!verify_messy_ladder(g, rail_x, rail_y)) throw std::invalid_argument("rails do not form a messy ladder");
  VertexList all(rail_x);
  all.insert(all.end(), rail_y.begin(), rail_y.end());
  InducedSubgraph sub = induced_subgraph(g, all);

  MessyLadder ladder;
  ladder.graph_ = std::move(sub.graph);
  ladder.labels_ = std::move(sub.to_host);
  const std::size_t n = ladder.labels_.size();
  ladder.pos_x_.assign(n, -1);
  ladder.pos_y_.assign(n, -1);
  for (Vertex v : rail_x) {
    Vertex local = *ladder.local_of(v);
    ladder.pos_x_[local] = static_cast<int>(ladder.x_.size());
    ladder.x_.push_back(local);
  }
  for (Vertex v : rail_y) {
    Vertex local = *ladder.local_of(v);
    ladder.pos_y_[local] = static_cast<int>(ladder.y_.size());
    ladder.y_.push_back(local);
  }
  for (Vertex xv : ladder.x_) {
    for (Vertex w : ladder.graph_.neighbors(xv)) {
      if (ladder.pos_y_[w] >= 0) ladder.rungs_.push_back({xv, w, ladder.pos_x_[xv], ladder.pos_y_[w]});
    }
  }
  std::sort(ladder.rungs_.begin(), ladder.rungs_.end(),
            [](const Rung& a, const Rung& b) { return std::tie(a.x_pos, a.y_pos) < std::tie(b.x_pos, b.y_pos); });
  return ladder;
}

std::optional<Vertex> MessyLadder::local_of(Vertex label) const {
  auto it = std::lower_bound(labels_.begin(), labels_.end(), label);
  if (it == labels_.end() || *it != label) return std::nullopt;
  return static_cast<Vertex>(it - labels_.begin());
}

VertexList MessyLadder::labelled_rail_x() const {
  VertexList out;
  for (Vertex v : x_) out.push_back(labels_[v]);
  return out;
}

VertexList MessyLadder::labelled_rail_y() const {
  VertexList out;
  for (Vertex v : y_) out.push_back(labels_[v]);
  return out;
}

MessyLadder MessyLadder::sub_ladder(const VertexList& rail_x, const VertexList& rail_y) const {
  MessyLadder inner = from_host(graph_, rail_x, rail_y);
  for (auto& l : inner.labels_) l = labels_[l];
  return inner;
}

}  // namespace unavoidable

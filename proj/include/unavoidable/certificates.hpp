#pragma once

#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include <json.hpp>

#include "unavoidable/graph.hpp"
#include "unavoidable/messy_ladder.hpp"

namespace unavoidable {

enum class CertificateKind {
  clique,
  theta,
  theta_plus,
  clean_ladder,
  path,
  messy_ladder,
  clean_cycle,
  clean_fan,
  independent_set,
};

[[nodiscard]] std::string_view to_string(CertificateKind kind);
/// Throws FormatError on an unknown name.
[[nodiscard]] CertificateKind certificate_kind_from_string(std::string_view name);

/// Internally disjoint u-v paths; `plus_edge` says whether uv is an edge.
struct ThetaPayload {
  Vertex u = 0;
  Vertex v = 0;
  std::vector<VertexList> paths;
  bool plus_edge = false;
};

struct LadderPayload {
  VertexList rail_x;
  VertexList rail_y;
};

struct FanPayload {
  Vertex apex = 0;
  VertexList rim;
};

/// A finite witness that can be checked against the host graph alone.
///
/// For clique, independent_set and path the witness is `vertices` itself
/// (in path order for path). For the other kinds `vertices` is the sorted
/// union of the payload's vertices.
struct Certificate {
  CertificateKind kind = CertificateKind::clique;
  int parameter = 0;
  VertexList vertices;
  std::variant<std::monostate, ThetaPayload, LadderPayload, FanPayload> payload;
};

[[nodiscard]] Certificate make_clique_certificate(VertexList clique, int r);
[[nodiscard]] Certificate make_independent_set_certificate(VertexList set, int r);
[[nodiscard]] Certificate make_path_certificate(VertexList path, int r);
[[nodiscard]] Certificate make_theta_certificate(ThetaPayload theta, int r);
/// kind must be clean_ladder, messy_ladder or clean_cycle.
[[nodiscard]] Certificate make_ladder_certificate(CertificateKind kind, VertexList rail_x, VertexList rail_y, int r);
[[nodiscard]] Certificate make_fan_certificate(Vertex apex, VertexList rim, int s);

[[nodiscard]] bool verify_clique(const Graph& g, std::span<const Vertex> set, int r);
[[nodiscard]] bool verify_independent_set(const Graph& g, std::span<const Vertex> set, int r);
[[nodiscard]] bool verify_induced_path(const Graph& g, std::span<const Vertex> path, int r);
[[nodiscard]] bool verify_theta(const Graph& g, const ThetaPayload& theta, int r);
/// Disjoint induced rails, not both trivial, with sigma and tau present.
[[nodiscard]] bool verify_messy_ladder(const Graph& g, const VertexList& rail_x, const VertexList& rail_y);
/// Messy ladder all of whose crosses are degenerate. The cross test here is
/// written separately from the ladder cleaner on purpose.
[[nodiscard]] bool verify_clean_ladder(const Graph& g, const VertexList& rail_x, const VertexList& rail_y);
[[nodiscard]] bool verify_clean_ladder(const MessyLadder& ladder);
/// Messy ladder whose only rungs are sigma and tau, that is an induced cycle.
[[nodiscard]] bool verify_clean_cycle(const Graph& g, const VertexList& rail_x, const VertexList& rail_y, int r);
/// `rim` is an induced path, the apex sees both of its ends and at least
/// s - 1 of its vertices.
[[nodiscard]] bool verify_clean_fan(const Graph& g, Vertex apex, const VertexList& rim, int s);

struct Verdict {
  bool ok = false;
  std::string reason;
};

[[nodiscard]] Verdict check_certificate(const Graph& g, const Certificate& cert);
[[nodiscard]] inline bool verify_certificate(const Graph& g, const Certificate& cert) {
  return check_certificate(g, cert).ok;
}

[[nodiscard]] nlohmann::json to_json(const Certificate& cert);
/// Throws FormatError on missing fields, wrong types or an unknown kind.
[[nodiscard]] Certificate certificate_from_json(const nlohmann::json& doc);

}  // namespace unavoidable

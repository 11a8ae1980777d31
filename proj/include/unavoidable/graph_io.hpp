#pragma once

#include <filesystem>
#include <functional>
#include <iosfwd>
#include <string>
#include <string_view>
#include <vector>

#include "unavoidable/graph.hpp"

namespace unavoidable {

// Edge-list format: lines starting with '#' are comments, blank lines are
// skipped, the first data line is "n m" and is followed by m lines "u v" with
// 0 <= u < v < n. Repeated edges are rejected.
[[nodiscard]] Graph read_edge_list(std::istream& in);
[[nodiscard]] Graph parse_edge_list(std::string_view text);
void write_edge_list(std::ostream& out, const Graph& g);

/// Standard graph6 encoding of a single graph, without header or newline.
[[nodiscard]] std::string encode_graph6(const Graph& g);
/// Accepts an optional ">>graph6<<" prefix and trailing whitespace.
[[nodiscard]] Graph decode_graph6(std::string_view line);

/// Calls `visit` for every non-blank line of a graph6 stream, passing the
/// 1-based line number, the raw line (without line terminator) and the
/// decoded graph. Decoding errors are reported as FormatError with the line
/// number in the message.
void for_each_graph6(std::istream& in,
                     const std::function<void(std::size_t, const std::string&, const Graph&)>& visit);
[[nodiscard]] std::vector<Graph> read_graph6_all(std::istream& in);

enum class GraphFormat { automatic, edge_list, graph6 };

[[nodiscard]] GraphFormat parse_graph_format(std::string_view name);
/// ".g6" selects graph6, anything else the edge-list format.
[[nodiscard]] GraphFormat detect_format(const std::filesystem::path& file);
/// Reads one graph. For graph6 files only the first graph is used.
[[nodiscard]] Graph load_graph(const std::filesystem::path& file, GraphFormat format = GraphFormat::automatic);

}  // namespace unavoidable

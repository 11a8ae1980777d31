#include "unavoidable/graph_io.hpp"

#include <algorithm>
#include <charconv>
#include <fstream>
#include <limits>
#include <istream>
#include <ostream>
#include <sstream>

#include "unavoidable/error.hpp"

namespace unavoidable {
namespace {

std::string_view trim(std::string_view s) {
  auto is_space = [](char c) { return c == ' ' || c == '\t' || c == '\r' || c == '\n'; };
  while (!s.empty() && is_space(s.front())) s.remove_prefix(1);
  while (!s.empty() && is_space(s.back())) s.remove_suffix(1);
  return s;
}

std::vector<long long> parse_integers(std::string_view line, std::size_t line_no) {
  std::vector<long long> out;
  std::size_t i = 0;
  while (i < line.size()) {
    while (i < line.size() && (line[i] == ' ' || line[i] == '\t')) ++i;
    if (i == line.size()) break;
    long long value = 0;
    auto [ptr, ec] = std::from_chars(line.data() + i, line.data() + line.size(), value);
    std::size_t used = static_cast<std::size_t>(ptr - (line.data() + i));
    if (ec != std::errc() || used == 0) {
      throw FormatError("line " + std::to_string(line_no) + ": expected an integer");
    }
    i += used;
    if (i < line.size() && line[i] != ' ' && line[i] != '\t') {
      throw FormatError("line " + std::to_string(line_no) + ": unexpected character");
    }
    out.push_back(value);
  }
  return out;
}

}  // namespace

Graph read_edge_list(std::istream& in) {
  std::string raw;
  std::size_t line_no = 0;
  bool have_header = false;
  long long n = 0, m = 0;
  std::vector<Edge> edges;
  while (std::getline(in, raw)) {
    ++line_no;
    std::string_view line = trim(raw);
    if (line.empty() || line.front() == '#') continue;
    auto nums = parse_integers(line, line_no);
    if (nums.size() != 2) {
      throw FormatError("line " + std::to_string(line_no) + ": expected two integers");
    }
    if (!have_header) {
      n = nums[0];
      m = nums[1];
      if (n < 0 || m < 0 || n > std::numeric_limits<Vertex>::max()) {
        throw FormatError("line " + std::to_string(line_no) + ": invalid header");
      }
      have_header = true;
      continue;
    }
    long long u = nums[0], v = nums[1];
    if (!(0 <= u && u < v && v < n)) {
      throw FormatError("line " + std::to_string(line_no) + ": edge must satisfy 0 <= u < v < n");
    }
    if (static_cast<long long>(edges.size()) == m) {
      throw FormatError("line " + std::to_string(line_no) + ": more edges than declared");
    }
    edges.emplace_back(static_cast<Vertex>(u), static_cast<Vertex>(v));
  }
  if (!have_header) throw FormatError("missing header line");
  if (static_cast<long long>(edges.size()) != m) throw FormatError("fewer edges than declared");
  std::vector<Edge> sorted = edges;
  std::sort(sorted.begin(), sorted.end());
  if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end()) {
    throw FormatError("repeated edge");
  }
  return Graph(static_cast<std::size_t>(n), edges);
}

Graph parse_edge_list(std::string_view text) {
  std::istringstream in{std::string(text)};
  return read_edge_list(in);
}

void write_edge_list(std::ostream& out, const Graph& g) {
  out << g.order() << ' ' << g.size() << '\n';
  for (const auto& [u, v] : g.edges()) out << u << ' ' << v << '\n';
}

std::string encode_graph6(const Graph& g) {
  const std::size_t n = g.order();
  std::string out;
  if (n <= 62) {
    out.push_back(static_cast<char>(63 + n));
  } else if (n <= 258047) {
    out.push_back(126);
    for (int shift = 12; shift >= 0; shift -= 6) out.push_back(static_cast<char>(63 + ((n >> shift) & 63)));
  } else {
    out.push_back(126);
    out.push_back(126);
    for (int shift = 30; shift >= 0; shift -= 6) out.push_back(static_cast<char>(63 + ((n >> shift) & 63)));
  }
  int acc = 0, bits = 0;
  for (std::size_t j = 1; j < n; ++j) {
    for (std::size_t i = 0; i < j; ++i) {
      acc = (acc << 1) | (g.adjacent(static_cast<Vertex>(i), static_cast<Vertex>(j)) ? 1 : 0);
      if (++bits == 6) {
        out.push_back(static_cast<char>(63 + acc));
        acc = bits = 0;
      }
    }
  }
  if (bits > 0) out.push_back(static_cast<char>(63 + (acc << (6 - bits))));
  return out;
}

Graph decode_graph6(std::string_view line) {
  line = trim(line);
  constexpr std::string_view kHeader = ">>graph6<<";
  if (line.substr(0, kHeader.size()) == kHeader) line.remove_prefix(kHeader.size());
  if (line.empty()) throw FormatError("empty graph6 string");
  for (char c : line) {
    if (c < 63 || c > 126) throw FormatError("invalid graph6 character");
  }
  std::size_t pos = 0;
  std::size_t n = 0;
  auto take = [&](int count) {
    std::size_t value = 0;
    for (int k = 0; k < count; ++k) {
      if (pos >= line.size()) throw FormatError("truncated graph6 header");
      value = (value << 6) | static_cast<std::size_t>(line[pos++] - 63);
    }
    return value;
  };
  if (line[0] != 126) {
    n = take(1);
  } else if (line.size() > 1 && line[1] != 126) {
    pos = 1;
    n = take(3);
  } else {
    pos = 2;
    n = take(6);
  }
  if (n > static_cast<std::size_t>(std::numeric_limits<Vertex>::max())) throw FormatError("graph6 order too large");
  const std::size_t bit_count = n * (n - (n > 0 ? 1 : 0)) / 2;
  const std::size_t chars = (bit_count + 5) / 6;
  if (line.size() - pos != chars) throw FormatError("graph6 body has wrong length");
  std::vector<Edge> edges;
  std::size_t k = 0;
  for (std::size_t j = 1; j < n; ++j) {
    for (std::size_t i = 0; i < j; ++i, ++k) {
      int c = line[pos + k / 6] - 63;
      if ((c >> (5 - k % 6)) & 1) edges.emplace_back(static_cast<Vertex>(i), static_cast<Vertex>(j));
    }
  }
  if (bit_count % 6 != 0) {
    int c = line.back() - 63;
    if (c & ((1 << (6 - bit_count % 6)) - 1)) throw FormatError("graph6 padding bits are not zero");
  }
  return Graph(n, edges);
}

void for_each_graph6(std::istream& in,
                     const std::function<void(std::size_t, const std::string&, const Graph&)>& visit) {
  std::string raw;
  std::size_t line_no = 0;
  while (std::getline(in, raw)) {
    ++line_no;
    if (!raw.empty() && raw.back() == '\r') raw.pop_back();
    if (trim(raw).empty()) continue;
    Graph g;
    try {
      g = decode_graph6(raw);
    } catch (const FormatError& e) {
      throw FormatError("line " + std::to_string(line_no) + ": " + e.what());
    }
    visit(line_no, raw, g);
  }
}

std::vector<Graph> read_graph6_all(std::istream& in) {
  std::vector<Graph> out;
  for_each_graph6(in, [&](std::size_t, const std::string&, const Graph& g) { out.push_back(g); });
  return out;
}

GraphFormat parse_graph_format(std::string_view name) {
  if (name == "auto") return GraphFormat::automatic;
  if (name == "edgelist" || name == "el") return GraphFormat::edge_list;
  if (name == "graph6" || name == "g6") return GraphFormat::graph6;
  throw std::invalid_argument("unknown graph format: " + std::string(name));
}

GraphFormat detect_format(const std::filesystem::path& file) {
  return file.extension() == ".g6" ? GraphFormat::graph6 : GraphFormat::edge_list;
}

Graph load_graph(const std::filesystem::path& file, GraphFormat format) {
  std::ifstream in(file);
  if (!in) throw std::runtime_error("cannot open " + file.string());
  if (format == GraphFormat::automatic) format = detect_format(file);
  if (format == GraphFormat::edge_list) return read_edge_list(in);
  std::string raw;
  while (std::getline(in, raw)) {
    if (trim(raw).empty()) continue;
    return decode_graph6(raw);
  }
  throw FormatError("no graph in " + file.string());
}

}  // namespace unavoidable

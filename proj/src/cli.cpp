#include "unavoidable/cli.hpp"

#include <CLI11.hpp>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>

#include "unavoidable/error.hpp"
#include "unavoidable/graph_io.hpp"
#include "unavoidable/oracle.hpp"
#include "unavoidable/pipeline.hpp"
#include "unavoidable/thresholds.hpp"

namespace unavoidable {
namespace {

struct InputError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

Graph read_graph(const std::string& file, const std::string& format) {
  std::ifstream probe(file);
  if (!probe) throw InputError("cannot open " + file);
  return load_graph(file, parse_graph_format(format));
}

void emit(const std::string& output, std::ostream& out, const std::string& text) {
  if (output.empty()) {
    out << text << '\n';
    return;
  }
  std::ofstream f(output);
  if (!f) throw InputError("cannot write " + output);
  f << text << '\n';
}

LadderPattern parse_pattern(const std::string& name) {
  if (name == "random") return LadderPattern::random;
  if (name == "strip") return LadderPattern::strip;
  if (name == "one_degenerate_cross") return LadderPattern::one_degenerate_cross;
  if (name == "independent_crosses") return LadderPattern::independent_crosses;
  throw std::invalid_argument("unknown ladder pattern: " + name);
}

}  // namespace

int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"Extract and check certificates of unavoidable induced subgraphs in 2-connected graphs"};
  app.require_subcommand(1);

  std::string input, format = "auto", output, cert_file, grs = "none";
  int r = 3;
  std::size_t cap = kDefaultOracleCap;
  unsigned workers = 1;
  bool no_pipeline = false;
  Budgets budgets;

  auto add_budgets = [&](CLI::App* cmd) {
    cmd->add_option("--path-budget", budgets.induced_path, "Vertices pushed by the induced path search");
    cmd->add_option("--window-budget", budgets.subladder_windows, "Windows examined by the sub-ladder search");
    cmd->add_option("--grs", grs, "GRS bound: none, identity or const:N");
  };

  auto* extract = app.add_subcommand("extract", "Run the pipeline on one graph and print the report");
  extract->add_option("--input", input, "Graph file (.el or .g6)")->required();
  extract->add_option("--format", format, "auto, el or g6");
  extract->add_option("--r", r, "Structure size, at least 3")->required();
  extract->add_option("--output", output, "Write the report here instead of stdout");
  add_budgets(extract);

  auto* verify = app.add_subcommand("verify", "Check a certificate against a graph");
  verify->add_option("--graph", input, "Graph file")->required();
  verify->add_option("--cert", cert_file, "Certificate JSON, or a report containing one")->required();
  verify->add_option("--format", format, "auto, el or g6");

  auto* oracle = app.add_subcommand("oracle", "Brute-force search for the four structures");
  oracle->add_option("--input", input, "Graph file")->required();
  oracle->add_option("--format", format, "auto, el or g6");
  oracle->add_option("--r", r, "Structure size")->required();
  oracle->add_option("--cap", cap, "Largest order accepted");

  auto* corpus = app.add_subcommand("corpus", "Oracle and pipeline over a graph6 corpus, as JSON lines");
  corpus->add_option("--input", input, "graph6 file")->required();
  corpus->add_option("--r", r, "Structure size")->required();
  corpus->add_option("--cap", cap, "Oracle cap");
  corpus->add_option("--workers", workers, "Worker threads");
  corpus->add_flag("--no-pipeline", no_pipeline, "Only run the oracle");
  corpus->add_option("--output", output, "Write records here instead of stdout");
  add_budgets(corpus);

  std::string kind = "two_connected", pattern = "random";
  std::size_t n = 8, len_x = 6, len_y = 6, crosses = 1;
  double density = 0.2;
  std::optional<std::uint64_t> seed;
  auto* gen = app.add_subcommand("gen", "Generate a random 2-connected graph or messy ladder");
  gen->add_option("--kind", kind, "two_connected or ladder");
  gen->add_option("--n", n, "Order of a two_connected graph");
  gen->add_option("--seed", seed, "Seed, required")->required();
  gen->add_option("--format", format, "el or g6 (default el)");
  gen->add_option("--len-x", len_x, "Ladder rail X order");
  gen->add_option("--len-y", len_y, "Ladder rail Y order");
  gen->add_option("--density", density, "Ladder rung density");
  gen->add_option("--pattern", pattern, "random, strip, one_degenerate_cross, independent_crosses");
  gen->add_option("--crosses", crosses, "Number of crosses for independent_crosses");
  gen->add_option("--output", output, "Write here instead of stdout");

  std::string name;
  std::vector<std::string> args;
  bool list = false;
  auto* thresholds = app.add_subcommand("thresholds", "Evaluate a threshold function exactly");
  thresholds->add_option("--name", name, "Function name");
  thresholds->add_option("--args", args, "Integer arguments");
  thresholds->add_option("--grs", grs, "GRS bound: none, identity or const:N");
  thresholds->add_flag("--list", list, "List function names");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kExitOk : kExitUsage;
  }

  try {
    budgets.thresholds = parse_grs_config(grs);
    if (extract->parsed()) {
      const Graph g = read_graph(input, format);
      const ExtractionReport report = extract_unavoidable(g, r, budgets);
      emit(output, out, to_json(report).dump());
      return kExitOk;
    }
    if (verify->parsed()) {
      const Graph g = read_graph(input, format);
      std::ifstream f(cert_file);
      if (!f) throw InputError("cannot open " + cert_file);
      nlohmann::json doc;
      try {
        doc = nlohmann::json::parse(f);
      } catch (const nlohmann::json::exception& e) {
        throw FormatError(std::string("certificate is not JSON: ") + e.what());
      }
      if (doc.is_object() && doc.contains("certificate")) doc = doc["certificate"];
      if (doc.is_null()) throw FormatError("report carries no certificate");
      const Certificate cert = certificate_from_json(doc);
      const Verdict v = check_certificate(g, cert);
      out << nlohmann::json{{"valid", v.ok}, {"reason", v.reason}}.dump() << '\n';
      return v.ok ? kExitOk : kExitVerificationFailed;
    }
    if (oracle->parsed()) {
      const Graph g = read_graph(input, format);
      out << to_json(brute_force_structures(g, r, cap)).dump() << '\n';
      return kExitOk;
    }
    if (corpus->parsed()) {
      std::ifstream f(input);
      if (!f) throw InputError("cannot open " + input);
      CorpusOptions opts{r, cap, workers, !no_pipeline, budgets};
      std::ofstream file_out;
      std::ostream* sink = &out;
      if (!output.empty()) {
        file_out.open(output);
        if (!file_out) throw InputError("cannot write " + output);
        sink = &file_out;
      }
      const CorpusSummary summary =
          verify_theorem_on_corpus(f, opts, [&](const CorpusRecord& rec) { *sink << to_json(rec).dump() << '\n'; });
      *sink << nlohmann::json{{"summary", to_json(summary)}}.dump() << '\n';
      return kExitOk;
    }
    if (gen->parsed()) {
      std::ostringstream text;
      const bool g6 = format == "g6" || format == "graph6";
      if (!g6 && format != "auto" && format != "el" && format != "edgelist") {
        throw std::invalid_argument("gen writes el or g6");
      }
      if (kind == "two_connected") {
        const Graph g = gen_two_connected(n, *seed);
        if (g6) {
          text << encode_graph6(g);
        } else {
          write_edge_list(text, g);
        }
      } else if (kind == "ladder") {
        LadderParams p{len_x, len_y, density, parse_pattern(pattern), crosses, true};
        const MessyLadder ladder = gen_messy_ladder(p, *seed);
        if (g6) {
          text << encode_graph6(ladder.graph());
        } else {
          text << "# rail_x";
          for (Vertex v : ladder.labelled_rail_x()) text << ' ' << v;
          text << "\n# rail_y";
          for (Vertex v : ladder.labelled_rail_y()) text << ' ' << v;
          text << '\n';
          write_edge_list(text, ladder.graph());
        }
      } else {
        throw std::invalid_argument("unknown generator kind: " + kind);
      }
      std::string s = text.str();
      if (!s.empty() && s.back() == '\n') s.pop_back();
      emit(output, out, s);
      return kExitOk;
    }
    if (thresholds->parsed()) {
      if (list) {
        for (const auto& fn : threshold_names()) out << fn << '\n';
        return kExitOk;
      }
      if (name.empty()) throw std::invalid_argument("--name is required");
      std::vector<BigInt> values;
      for (const auto& a : args) {
        if (a.empty() || a.find_first_not_of("-0123456789") != std::string::npos) {
          throw std::invalid_argument("argument is not an integer: " + a);
        }
        values.emplace_back(a);
      }
      out << to_string(evaluate_threshold(name, values, budgets.thresholds)) << '\n';
      return kExitOk;
    }
  } catch (const FormatError& e) {
    err << "error: " << e.what() << '\n';
    return kExitBadInput;
  } catch (const InputError& e) {
    err << "error: " << e.what() << '\n';
    return kExitBadInput;
  } catch (const PreconditionError& e) {
    err << "error: " << e.what() << '\n';
    return kExitBadInput;
  } catch (const std::invalid_argument& e) {
    err << "error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const std::overflow_error& e) {
    err << "error: " << e.what() << '\n';
    return kExitUsage;
  }
  return kExitUsage;
}

}  // namespace unavoidable

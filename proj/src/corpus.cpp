#include <algorithm>
#include <atomic>
#include <exception>
#include <istream>
#include <mutex>
#include <thread>

#include "unavoidable/error.hpp"
#include "unavoidable/graph_io.hpp"
#include "unavoidable/oracle.hpp"

namespace unavoidable {
namespace {

constexpr std::size_t kBlock = 2048;

CorpusRecord process(std::size_t line, std::string text, const CorpusOptions& options) {
  CorpusRecord rec;
  rec.line = line;
  rec.graph6 = std::move(text);
  Graph g;
  try {
    g = decode_graph6(rec.graph6);
  } catch (const FormatError& e) {
    throw FormatError("line " + std::to_string(line) + ": " + e.what());
  }
  rec.order = g.order();
  rec.oracle.r = options.r;
  if (!is_two_connected(g)) {
    rec.skipped = true;
    rec.note = "not 2-connected";
    return rec;
  }
  if (g.order() > options.cap) {
    rec.skipped = true;
    rec.note = "order exceeds the oracle cap";
    return rec;
  }
  rec.oracle = brute_force_structures(g, options.r, options.cap);
  if (options.run_pipeline) {
    rec.pipeline = extract_unavoidable(g, options.r, options.budgets);
    const auto& cert = rec.pipeline->certificate;
    rec.agreement = !rec.oracle.any() || cert.has_value();
    rec.contained = !cert || (verify_certificate(g, *cert) && rec.oracle.family(cert->kind).present);
  }
  return rec;
}

}  // namespace

CorpusSummary verify_theorem_on_corpus(std::istream& corpus, const CorpusOptions& options,
                                       const std::function<void(const CorpusRecord&)>& sink) {
  CorpusSummary summary;
  const unsigned workers = std::max(1u, options.workers);
  std::string raw;
  std::size_t line_no = 0;
  bool done = false;
  while (!done) {
    std::vector<std::pair<std::size_t, std::string>> block;
    while (block.size() < kBlock) {
      if (!std::getline(corpus, raw)) {
        done = true;
        break;
      }
      ++line_no;
      if (!raw.empty() && raw.back() == '\r') raw.pop_back();
      if (raw.find_first_not_of(" \t") == std::string::npos) continue;
      block.emplace_back(line_no, raw);
    }
    std::vector<CorpusRecord> records(block.size());
    std::atomic<std::size_t> cursor{0};
    std::exception_ptr failure;
    std::mutex failure_mutex;
    auto work = [&] {
      for (std::size_t i = cursor++; i < block.size(); i = cursor++) {
        try {
          records[i] = process(block[i].first, block[i].second, options);
        } catch (...) {
          std::lock_guard<std::mutex> lock(failure_mutex);
          if (!failure) failure = std::current_exception();
        }
      }
    };
    if (workers == 1 || block.size() < 2) {
      work();
    } else {
      std::vector<std::thread> pool;
      for (unsigned w = 0; w < workers; ++w) pool.emplace_back(work);
      for (auto& t : pool) t.join();
    }
    if (failure) std::rethrow_exception(failure);
    for (const CorpusRecord& rec : records) {
      ++summary.graphs;
      if (rec.skipped) {
        ++summary.skipped;
      } else {
        auto& slot = summary.by_order[rec.order];
        ++slot.first;
        if (rec.oracle.any()) {
          ++summary.with_structure;
          ++slot.second;
        }
        if (rec.pipeline && rec.pipeline->certificate) ++summary.pipeline_found;
        if (rec.oracle.any() && rec.agreement) ++summary.agreements;
        if (!rec.contained) ++summary.containment_failures;
      }
      if (sink) sink(rec);
    }
  }
  for (auto it = summary.by_order.rbegin(); it != summary.by_order.rend(); ++it) {
    if (it->second.first != it->second.second) break;
    summary.minimal_order = it->first;
  }
  return summary;
}

nlohmann::json to_json(const CorpusRecord& rec) {
  nlohmann::json doc;
  doc["line"] = rec.line;
  doc["graph6"] = rec.graph6;
  doc["order"] = rec.order;
  doc["skipped"] = rec.skipped;
  if (!rec.note.empty()) doc["note"] = rec.note;
  if (rec.skipped) return doc;
  doc["oracle"] = {{"clique", rec.oracle.clique.present},
                   {"theta", rec.oracle.theta.present},
                   {"theta_plus", rec.oracle.theta_plus.present},
                   {"clean_ladder", rec.oracle.clean_ladder.present}};
  if (rec.pipeline) {
    const auto& cert = rec.pipeline->certificate;
    doc["pipeline_kind"] = cert ? nlohmann::json(std::string(to_string(cert->kind))) : nlohmann::json(nullptr);
    doc["guarantee_met"] = rec.pipeline->guarantee_met;
  }
  doc["agreement"] = rec.agreement;
  doc["contained"] = rec.contained;
  return doc;
}

nlohmann::json to_json(const CorpusSummary& s) {
  nlohmann::json doc;
  doc["graphs"] = s.graphs;
  doc["skipped"] = s.skipped;
  doc["with_structure"] = s.with_structure;
  doc["pipeline_found"] = s.pipeline_found;
  doc["agreements"] = s.agreements;
  doc["containment_failures"] = s.containment_failures;
  nlohmann::json orders = nlohmann::json::object();
  for (const auto& [n, counts] : s.by_order) {
    orders[std::to_string(n)] = {{"graphs", counts.first}, {"with_structure", counts.second}};
  }
  doc["by_order"] = orders;
  doc["minimal_order"] = s.minimal_order ? nlohmann::json(*s.minimal_order) : nlohmann::json(nullptr);
  return doc;
}

}  // namespace unavoidable

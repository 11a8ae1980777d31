#include "unavoidable/pipeline.hpp"

#include <stdexcept>

#include "unavoidable/error.hpp"
#include "unavoidable/ladder_builder.hpp"
#include "unavoidable/ladder_cleaner.hpp"
#include "unavoidable/short_path.hpp"
#include "unavoidable/thresholds.hpp"

namespace unavoidable {
namespace {

std::size_t certificate_size(const Certificate& c) { return c.vertices.size(); }

class Run {
 public:
  Run(const Graph& g, int r, const Budgets& budgets) : g_(g), r_(r), budgets_(budgets) {}

  ExtractionReport execute() {
    report_.guarantee_met = at_least(g_.order(), f_main(BigInt(r_), budgets_.thresholds));
    const std::size_t q = saturate(f_messy_to_clean(BigInt(r_), budgets_.thresholds));

    const ShortPathOutcome sp = extract_short_path_structure(g_, std::max<std::size_t>(q, 2), r_);
    std::optional<Path> path;
    if (const auto* theta = std::get_if<ThetaPayload>(&sp.result)) {
      Certificate cert = make_theta_certificate(*theta, r_);
      trace("short_path", "theta", g_.order(), certificate_size(cert));
      return finish(std::move(cert));
    }
    if (const auto* p = std::get_if<Path>(&sp.result)) {
      trace("short_path", "path", g_.order(), p->order());
      path = *p;
    } else {
      trace("short_path", "failure", g_.order(), 0);
    }

    if (attempt(path)) return report_;

    const InducedPathSearch longest = longest_induced_path(g_, budgets_.induced_path);
    trace("longest_induced_path", longest.exhaustive ? "exhaustive" : "budget_exhausted", g_.order(),
          longest.path.order());
    if (attempt(longest.path)) return report_;
    return report_;
  }

 private:
  // One pass of the long-path and cleaning stages; true when a certificate
  // was produced.
  bool attempt(const std::optional<Path>& path) {
    const std::size_t q = saturate(f_messyfinite(BigInt(r_)));
    const LongPathOutcome lp = long_path_to_messy(g_, r_, q, path, budgets_);
    const std::size_t in = path ? path->order() : g_.order();
    if (const auto* cert = std::get_if<Certificate>(&lp.result)) {
      trace("long_path_to_messy", std::string(to_string(cert->kind)), in, certificate_size(*cert));
      finish(*cert);
      return true;
    }
    if (const auto* f = std::get_if<StageFailure>(&lp.result)) {
      trace("long_path_to_messy", "failure: " + f->reason, in, 0);
      return false;
    }
    const MessyLadder& messy = std::get<MessyLadder>(lp.result);
    trace("long_path_to_messy", "messy_ladder", in, messy.order());

    const CleanResult cl = clean_messy_ladder(messy, r_, budgets_);
    if (const auto* f = std::get_if<StageFailure>(&cl.result)) {
      trace("clean_messy_ladder", "failure: " + f->reason, messy.order(), 0);
      return false;
    }
    const auto& clean = std::get<CleanLadderOutcome>(cl.result);
    const bool sub = clean.route == CleanLadderOutcome::Route::cross_free_subladder;
    trace("clean_messy_ladder", sub ? "cross_free_subladder" : "resolved", messy.order(), clean.ladder.order());
    report_.ladder_subtype = ladder_subtype(clean.ladder);
    finish(make_ladder_certificate(CertificateKind::clean_ladder, clean.ladder.labelled_rail_x(),
                                   clean.ladder.labelled_rail_y(), r_));
    return true;
  }

  void trace(std::string stage, std::string outcome, std::size_t in, std::size_t out) {
    report_.trace.push_back({std::move(stage), std::move(outcome), in, out});
  }

  ExtractionReport finish(Certificate cert) {
    const Verdict v = check_certificate(g_, cert);
    if (!v.ok) throw std::logic_error("internal error: produced certificate failed verification: " + v.reason);
    report_.certificate = std::move(cert);
    return report_;
  }

  const Graph& g_;
  int r_;
  const Budgets& budgets_;
  ExtractionReport report_;
};

}  // namespace

ExtractionReport extract_unavoidable(const Graph& g, int r, const Budgets& budgets) {
  if (r < 3) throw std::invalid_argument("extract_unavoidable needs r > 2");
  if (!is_two_connected(g)) throw PreconditionError("graph is not 2-connected");
  return Run(g, r, budgets).execute();
}

nlohmann::json to_json(const ExtractionReport& report) {
  nlohmann::json doc;
  doc["certificate"] = report.certificate ? to_json(*report.certificate) : nlohmann::json(nullptr);
  doc["trace"] = nlohmann::json::array();
  for (const auto& t : report.trace) {
    doc["trace"].push_back(
        {{"stage", t.stage}, {"outcome", t.outcome}, {"input_size", t.input_size}, {"output_size", t.output_size}});
  }
  doc["guarantee_met"] = report.guarantee_met;
  if (report.ladder_subtype) doc["ladder_subtype"] = *report.ladder_subtype;
  return doc;
}

}  // namespace unavoidable

#include "sbt/pipeline.hpp"

#include <algorithm>
#include <chrono>

#include <json.hpp>

#include "sbt/emitter.hpp"
#include "sbt/error.hpp"
#include "sbt/reduction.hpp"

namespace sbt {

bool PipelineReport::all_passed() const {
  return std::all_of(checks.begin(), checks.end(), [](const PipelineCheck &c) { return c.passed; });
}

bool PipelineReport::budget_exhausted() const {
  return collapsible == Outcome::budget_exhausted || sorts_in_db3 == Outcome::budget_exhausted;
}

std::string PipelineReport::to_json() const {
  nlohmann::ordered_json j;
  auto stats = [](const FormulaStats &s) {
    return nlohmann::ordered_json{{"m", s.m}, {"gamma", s.gamma}};
  };
  j["formula"] = stats(original);
  j["normalized"] = stats(normalized);
  j["satisfiable"] = satisfiable;
  j["instance"] = {{"span", span}, {"triples", triples}, {"blocks", blocks}};
  j["permutation"] = permutation;
  j["collapsible"] = collapsible ? nlohmann::ordered_json(std::string(to_string(*collapsible))) : nullptr;
  j["sorts_in_db3"] = sorts_in_db3 ? nlohmann::ordered_json(std::string(to_string(*sorts_in_db3))) : nullptr;
  j["guided_trace_length"] = guided_trace_length ? nlohmann::ordered_json(*guided_trace_length) : nullptr;
  j["timings"] = timings;
  j["trace_files"] = trace_files;
  nlohmann::ordered_json cs = nlohmann::ordered_json::array();
  for (const PipelineCheck &c : checks)
    cs.push_back({{"name", c.name}, {"passed", c.passed}, {"detail", c.detail}});
  j["checks"] = std::move(cs);
  return j.dump(2) + "\n";
}

namespace {

class Stopwatch {
public:
  double lap() {
    const auto now = std::chrono::steady_clock::now();
    const double s = std::chrono::duration<double>(now - last_).count();
    last_ = now;
    return s;
  }

private:
  std::chrono::steady_clock::time_point last_ = std::chrono::steady_clock::now();
};

Outcome as_outcome(bool yes) { return yes ? Outcome::yes : Outcome::no; }

} // namespace

PipelineReport run_pipeline(const CnfFormula &f, const PipelineConfig &cfg) {
  PipelineReport rep;
  auto check = [&](std::string name, bool ok, std::string detail = {}) {
    rep.checks.push_back({std::move(name), ok, std::move(detail)});
    return ok;
  };
  Stopwatch sw;
  rep.original = f.stats();
  const CnfFormula nf = normalize(f);
  rep.normalized = nf.stats();
  const std::optional<Assignment> model = solve(nf);
  rep.satisfiable = model.has_value();
  check("normalization preserves satisfiability", solve(f).has_value() == rep.satisfiable);
  rep.timings["normalize"] = sw.lap();

  const ReductionOutput out = reduce(nf);
  const TdtInstance &inst = out.assembling.instance();
  rep.span = inst.span();
  rep.triples = inst.triple_count();
  rep.blocks = out.assembling.specs.size();
  check("span is three times the triple count", rep.span == 3 * static_cast<int>(rep.triples));
  rep.timings["reduce"] = sw.lap();

  const EmittedPermutation em = emit_permutation(out.assembling);
  rep.permutation = format_permutation(em.permutation);
  const auto violations = check_emission(out.assembling, em);
  check("emission rules", violations.empty(), violations.empty() ? "" : violations.front());
  check("instance and permutation are equivalent", is_equivalent(inst, em.permutation));
  check("emitted permutation is a 3-permutation", is_three_permutation(em.permutation));
  check("breakpoints equal the span", breakpoint_count(em.permutation) == rep.span,
        std::to_string(breakpoint_count(em.permutation)));
  rep.timings["emit"] = sw.lap();

  std::optional<Assignment> drive = cfg.assignment ? cfg.assignment : model;
  if (cfg.assignment && !nf.satisfied_by(*cfg.assignment)) {
    check("given assignment satisfies the formula", false);
    drive.reset();
  }
  if (drive) {
    try {
      const StepTrace tr = guided_collapse(out, *drive);
      rep.guided_trace_length = tr.size();
      check("guided trace has n/3 steps", static_cast<int>(tr.size()) * 3 == rep.span);
      check("guided trace reaches the empty instance", replay_trace(inst, tr).is_empty());
      const auto moves = tr.moves();
      check("guided moves sort the permutation",
            replay_moves(em.permutation, moves).is_identity());
      const bool short_factors = std::all_of(moves.begin(), moves.end(), [](const Transposition &t) {
        return t.min_factor() <= 6;
      });
      check("every guided move has a factor of length at most 6", short_factors);
      check("extracted assignment satisfies the formula",
            nf.satisfied_by(extract_assignment(out, tr)));
    } catch (const Error &e) {
      check("guided collapse", false, e.what());
    }
    rep.timings["guided"] = sw.lap();
  }

  if (cfg.run_searches) {
    const CollapseResult cr = collapse_search(inst, cfg.search);
    rep.collapsible = cr.outcome;
    rep.timings["collapse_search"] = sw.lap();
    if (cr.outcome != Outcome::budget_exhausted)
      check("collapsible iff satisfiable", cr.outcome == as_outcome(rep.satisfiable));
    if (cr.trace) {
      try {
        check("searched trace yields a model", nf.satisfied_by(extract_assignment(out, *cr.trace)));
      } catch (const Error &e) {
        check("searched trace yields a model", false, e.what());
      }
    }
    const SortResult sr = db3_sort_decision(em.permutation, cfg.search);
    rep.sorts_in_db3 = sr.outcome;
    rep.timings["db3_sort_decision"] = sw.lap();
    if (sr.outcome != Outcome::budget_exhausted)
      check("d_t = n/3 iff satisfiable", sr.outcome == as_outcome(rep.satisfiable));
    if (sr.outcome == Outcome::yes)
      check("sort witness sorts the permutation",
            replay_moves(em.permutation, sr.moves).is_identity() &&
                static_cast<int>(sr.moves.size()) * 3 == rep.span);
  }
  return rep;
}

} // namespace sbt

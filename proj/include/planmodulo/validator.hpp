#pragma once

// Sound plan verification, structured failure reports, feedback text and
// response adjudication for the planning domains.

#include <optional>
#include <set>
#include <string>
#include <vector>

#include "planmodulo/pddl.hpp"

#include <json.hpp>

namespace planmodulo::validate {

using pddl::Atom;
using pddl::Domain;
using pddl::GroundAction;
using pddl::Plan;
using pddl::Problem;

enum class Verdict { Valid, PreconditionFailure, UnknownAction, GoalFailure };

inline const char* to_string(Verdict v) {
  switch (v) {
    case Verdict::Valid: return "valid";
    case Verdict::PreconditionFailure: return "precondition-failure";
    case Verdict::UnknownAction: return "unknown-action";
    case Verdict::GoalFailure: return "goal-failure";
  }
  return "?";
}

struct ValidationReport {
  Verdict verdict = Verdict::Valid;
  std::size_t step_index = 0;            // 1-based; first failing step, or plan
                                         // length for goal failures
  std::optional<GroundAction> action;    // failing step
  std::vector<Atom> unmet;               // unmet preconditions, text order
  std::vector<Atom> missing_goals;       // goal atoms absent from the final state
  std::optional<std::vector<pddl::State>> states;  // trace, when requested

  bool valid() const { return verdict == Verdict::Valid; }
};

inline nlohmann::json to_json(const ValidationReport& r) {
  nlohmann::json j;
  j["verdict"] = to_string(r.verdict);
  if (r.verdict != Verdict::Valid) {
    j["step"] = r.step_index;
    if (r.action) j["action"] = r.action->text();
  }
  if (!r.unmet.empty()) {
    j["unmet"] = nlohmann::json::array();
    for (const Atom& a : r.unmet) j["unmet"].push_back(a.text());
  }
  if (!r.missing_goals.empty()) {
    j["missing_goals"] = nlohmann::json::array();
    for (const Atom& a : r.missing_goals) j["missing_goals"].push_back(a.text());
  }
  return j;
}

// Simulates the plan step by step from the initial state. Reports the FIRST
// failing step only. The simulation below deliberately runs on its own atom
// set rather than through pddl::apply, so tests can replay reports against
// that second code path.
inline ValidationReport validate_plan(const Domain& domain, const Problem& problem,
                                      const Plan& plan, bool keep_trace = false) {
  ValidationReport report;
  std::set<Atom> state(problem.init.begin(), problem.init.end());
  if (keep_trace) {
    report.states.emplace();
    report.states->push_back(pddl::State(problem.init));
  }

  for (std::size_t i = 0; i < plan.steps.size(); ++i) {
    const GroundAction& step = plan.steps[i];
    const pddl::ActionSchema* schema = domain.find_action(step.schema);
    bool known = schema && schema->params.size() == step.args.size();
    if (known) {
      for (pddl::Identifier arg : step.args)
        if (!problem.find_object(arg)) known = false;
    }
    if (!known) {
      report.verdict = Verdict::UnknownAction;
      report.step_index = i + 1;
      report.action = step;
      return report;
    }
    GroundAction ga = pddl::instantiate(*schema, step.args);

    std::vector<Atom> unmet;
    for (const Atom& a : ga.pre)
      if (!state.count(a)) unmet.push_back(a);
    if (!unmet.empty()) {
      std::sort(unmet.begin(), unmet.end());
      report.verdict = Verdict::PreconditionFailure;
      report.step_index = i + 1;
      report.action = ga;
      report.unmet = std::move(unmet);
      return report;
    }
    for (const Atom& a : ga.del) state.erase(a);
    for (const Atom& a : ga.add) state.insert(a);
    if (keep_trace)
      report.states->push_back(pddl::State(std::vector<Atom>(state.begin(), state.end())));
  }

  std::vector<Atom> missing;
  for (const Atom& g : problem.goal)
    if (!state.count(g)) missing.push_back(g);
  if (!missing.empty()) {
    std::sort(missing.begin(), missing.end());
    report.verdict = Verdict::GoalFailure;
    report.step_index = plan.steps.size();
    report.missing_goals = std::move(missing);
  }
  return report;
}

// ---------------------------------------------------------------------------
// Feedback text

enum class BackpromptStyle { PddlPlan };

inline constexpr const char* kPddlAnswerInstructions =
    "Provide your revised plan as a sequence of actions in PDDL format. An action ACTION which "
    "acts on two objects OBJ1 and OBJ2 would be written (ACTION OBJ1 OBJ2). Do not provide "
    "anything else in your answer.";

// Instantiates the feedback template for an invalid report. Precondition
// failures follow the published wording; the goal-failure and unknown-action
// variants are local conventions pinned by golden files. Calling this with a
// valid report is a contract violation.
inline std::string build_backprompt(const ValidationReport& report,
                                    BackpromptStyle style = BackpromptStyle::PddlPlan) {
  (void)style;
  if (report.valid())
    throw std::logic_error("build_backprompt requires an invalid report");

  std::string out;
  switch (report.verdict) {
    case Verdict::PreconditionFailure:
      out = "The above plan is invalid. The following action at step " +
            std::to_string(report.step_index) + " has an unmet precondition:\n" +
            report.action->text() + "\nThe unmet precondition is:\n" +
            report.unmet.front().text() + "\n";
      break;
    case Verdict::GoalFailure: {
      out = "The above plan is invalid. After executing the entire plan the goal is still not "
            "satisfied. The following goal conditions are unmet:\n";
      for (const Atom& a : report.missing_goals) out += a.text() + "\n";
      break;
    }
    case Verdict::UnknownAction:
      out = "The above plan is invalid. The following action at step " +
            std::to_string(report.step_index) +
            " could not be matched to any action in the domain:\n" + report.action->text() +
            "\n";
      break;
    case Verdict::Valid:
      break;
  }
  out += kPddlAnswerInstructions;
  out += "\n\n[PLAN]";
  return out;
}

// ---------------------------------------------------------------------------
// Response classification and adjudication

enum class ResponseKind { PlanAttempt, EmptyPlan, ImpossibilityClaim };

struct ResponseClass {
  ResponseKind kind = ResponseKind::EmptyPlan;
  std::optional<Plan> extracted;  // non-empty iff kind == PlanAttempt
};

inline std::vector<std::string> default_impossibility_cues() {
  return {"unsolvable", "no plan exists", "cannot be accomplished", "no sequence of actions"};
}

// Textual classification only; plan extraction is the generator clients'
// job. A response that both claims impossibility and carries an extractable
// plan is classified PlanAttempt by the caller (the full plan is the
// stronger commitment), see classify_with_plan.
inline ResponseKind classify_response(
    std::string_view text,
    const std::vector<std::string>& cues = default_impossibility_cues()) {
  for (const std::string& cue : cues)
    if (contains_ci(text, cue)) return ResponseKind::ImpossibilityClaim;
  std::string body = trim(text);
  if (body.empty() || body == "." || contains_ci(body, "[empty plan]"))
    return ResponseKind::EmptyPlan;
  return ResponseKind::PlanAttempt;
}

inline ResponseClass classify_with_plan(
    std::string_view text, std::optional<Plan> extracted,
    const std::vector<std::string>& cues = default_impossibility_cues()) {
  ResponseClass rc;
  if (extracted && !extracted->empty()) {
    rc.kind = ResponseKind::PlanAttempt;
    rc.extracted = std::move(extracted);
    return rc;
  }
  ResponseKind textual = classify_response(text, cues);
  rc.kind = textual == ResponseKind::PlanAttempt ? ResponseKind::EmptyPlan : textual;
  return rc;
}

enum class UnsolvableOutcome {
  TrueNegative,
  FalseNegative,
  WrongFullPlan,
  WrongEmptyPlan,
  CorrectPlan,
  InvalidPlan,
};

inline const char* to_string(UnsolvableOutcome o) {
  switch (o) {
    case UnsolvableOutcome::TrueNegative: return "true-negative";
    case UnsolvableOutcome::FalseNegative: return "false-negative";
    case UnsolvableOutcome::WrongFullPlan: return "wrong-full-plan";
    case UnsolvableOutcome::WrongEmptyPlan: return "wrong-empty-plan";
    case UnsolvableOutcome::CorrectPlan: return "correct-plan";
    case UnsolvableOutcome::InvalidPlan: return "invalid-plan";
  }
  return "?";
}

// Category definitions for scoring answers against solvable and unsolvable
// instances. `report` is the validation of the attempted plan (the empty
// plan for EmptyPlan responses); it is ignored for impossibility claims and
// for any response to an unsolvable instance.
inline UnsolvableOutcome adjudicate(bool problem_solvable, const ResponseClass& response,
                                    const std::optional<ValidationReport>& report) {
  if (!problem_solvable) {
    switch (response.kind) {
      case ResponseKind::ImpossibilityClaim: return UnsolvableOutcome::TrueNegative;
      case ResponseKind::EmptyPlan: return UnsolvableOutcome::WrongEmptyPlan;
      case ResponseKind::PlanAttempt: return UnsolvableOutcome::WrongFullPlan;
    }
  }
  if (response.kind == ResponseKind::ImpossibilityClaim)
    return UnsolvableOutcome::FalseNegative;
  if (!report)
    throw std::logic_error("adjudicate: plan attempts on solvable instances need a report");
  return report->valid() ? UnsolvableOutcome::CorrectPlan : UnsolvableOutcome::InvalidPlan;
}

}  // namespace planmodulo::validate

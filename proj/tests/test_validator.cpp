#include <catch2/catch_amalgamated.hpp>

#include "planmodulo/pddl.hpp"
#include "planmodulo/util/rng.hpp"
#include "planmodulo/validator.hpp"

#include "helpers.hpp"

using namespace planmodulo;
using namespace planmodulo::pddl;
using namespace planmodulo::validate;

namespace {

Domain bw_domain() {
  static Domain d = parse_domain(testutil::fixture("pddl/blocksworld/domain.pddl"));
  return d;
}

Problem four_block_instance() {
  Problem p;
  p.name = id("bw-walkthrough");
  p.domain_name = id("blocksworld-4ops");
  for (const char* o : {"a", "b", "c", "d"}) p.objects.push_back({id(o), std::nullopt});
  p.init = {atom("clear", {"a"}),   atom("clear", {"b"}),   atom("clear", {"d"}),
            atom("handempty"),      atom("on", {"b", "c"}), atom("ontable", {"a"}),
            atom("ontable", {"c"}), atom("ontable", {"d"})};
  p.goal = {atom("on", {"c", "b"})};
  return p;
}

}  // namespace

TEST_CASE("validate_plan: the four-step walkthrough plan is valid") {
  Domain d = bw_domain();
  Problem p = four_block_instance();
  Plan plan = parse_plan("(unstack b c)\n(put-down b)\n(pick-up c)\n(stack c b)");
  ValidationReport r = validate_plan(d, p, plan);
  CHECK(r.valid());
  CHECK(r.unmet.empty());
  CHECK(r.missing_goals.empty());
}

TEST_CASE("validate_plan: the 22-step response fails at step 4 with (clear c) unmet") {
  Domain d = bw_domain();
  Problem p = parse_problem(testutil::fixture("pddl/blocksworld/bw_rand_6.pddl"), d);
  Plan plan = parse_plan(testutil::fixture("responses/bw_pddl_22step.txt"));
  REQUIRE(plan.size() == 22);

  ValidationReport r = validate_plan(d, p, plan);
  REQUIRE(r.verdict == Verdict::PreconditionFailure);
  CHECK(r.step_index == 4);
  CHECK(r.action->text() == "stack b c");
  REQUIRE(r.unmet.size() == 1);
  CHECK(r.unmet[0] == atom("clear", {"c"}));
}

TEST_CASE("validate_plan: empty plan is valid exactly when the goal already holds") {
  Domain d = bw_domain();
  Problem sat = parse_problem(
      "(define (problem t) (:domain blocksworld-4ops) (:objects a)"
      " (:init (ontable a) (clear a) (handempty)) (:goal (ontable a)))",
      d);
  CHECK(validate_plan(d, sat, Plan{}).valid());

  Problem unsat = four_block_instance();
  ValidationReport r = validate_plan(d, unsat, Plan{});
  REQUIRE(r.verdict == Verdict::GoalFailure);
  CHECK(r.step_index == 0);
  REQUIRE(r.missing_goals.size() == 1);
  CHECK(r.missing_goals[0] == atom("on", {"c", "b"}));
}

TEST_CASE("validate_plan: unknown or malformed actions fail at the first offender") {
  Domain d = bw_domain();
  Problem p = four_block_instance();

  ValidationReport r = validate_plan(d, p, parse_plan("(flip a)"));
  CHECK(r.verdict == Verdict::UnknownAction);
  CHECK(r.step_index == 1);

  // wrong arity
  r = validate_plan(d, p, parse_plan("(unstack b c)\n(stack b)"));
  CHECK(r.verdict == Verdict::UnknownAction);
  CHECK(r.step_index == 2);

  // undeclared object
  r = validate_plan(d, p, parse_plan("(pick-up z)"));
  CHECK(r.verdict == Verdict::UnknownAction);
  CHECK(r.step_index == 1);
}

TEST_CASE("validate_plan: report agrees with an independent replay") {
  Domain d = bw_domain();
  Problem p = parse_problem(testutil::fixture("pddl/blocksworld/bw_rand_6.pddl"), d);
  Plan plan = parse_plan(testutil::fixture("responses/bw_pddl_22step.txt"));
  ValidationReport r = validate_plan(d, p, plan);
  REQUIRE(r.verdict == Verdict::PreconditionFailure);

  // replay the prefix through pddl::apply: every step before the failure
  // must be applicable, the failing one must not
  State s = initial_state(p);
  for (std::size_t i = 0; i + 1 < r.step_index; ++i) {
    GroundAction ga = instantiate(*d.find_action(plan.steps[i].schema), plan.steps[i].args);
    REQUIRE(applicable(s, ga));
    s = apply(s, ga);
  }
  GroundAction failing =
      instantiate(*d.find_action(plan.steps[r.step_index - 1].schema),
                  plan.steps[r.step_index - 1].args);
  CHECK_FALSE(applicable(s, failing));
  CHECK(unmet_preconditions(s, failing) == r.unmet);
}

TEST_CASE("validate_plan: prefixes of a valid plan never hit precondition failures") {
  Domain d = bw_domain();
  Problem p = four_block_instance();
  Plan plan = parse_plan("(unstack b c)\n(put-down b)\n(pick-up c)\n(stack c b)");
  REQUIRE(validate_plan(d, p, plan).valid());
  for (std::size_t len = 0; len <= plan.size(); ++len) {
    Plan prefix;
    prefix.steps.assign(plan.steps.begin(), plan.steps.begin() + len);
    ValidationReport r = validate_plan(d, p, prefix);
    CHECK(r.verdict != Verdict::PreconditionFailure);
    CHECK(r.verdict != Verdict::UnknownAction);
  }
}

TEST_CASE("build_backprompt: precondition failure reproduces the golden text") {
  Domain d = bw_domain();
  Problem p = parse_problem(testutil::fixture("pddl/blocksworld/bw_rand_6.pddl"), d);
  Plan plan = parse_plan(testutil::fixture("responses/bw_pddl_22step.txt"));
  ValidationReport r = validate_plan(d, p, plan);
  CHECK(build_backprompt(r) == testutil::golden("backprompt_precondition.txt"));
}

TEST_CASE("build_backprompt: grid-domain report instantiates the same template") {
  ValidationReport r;
  r.verdict = Verdict::PreconditionFailure;
  r.step_index = 20;
  GroundAction ga;
  ga.schema = id("push");
  for (const char* a : {"f8-5f", "f8-6f", "f8-7f", "right", "box1"}) ga.args.push_back(id(a));
  r.action = ga;
  r.unmet = {atom("clear", {"f8-7f"})};
  CHECK(build_backprompt(r) == testutil::golden("backprompt_sokoban.txt"));
}

TEST_CASE("build_backprompt: goal and unknown-action variants are stable") {
  ValidationReport goal_report;
  goal_report.verdict = Verdict::GoalFailure;
  goal_report.step_index = 3;
  goal_report.missing_goals = {atom("on", {"a", "b"})};
  std::string text = build_backprompt(goal_report);
  CHECK(text.find("(on a b)") != std::string::npos);
  CHECK(text.find("The above plan is invalid.") == 0);
  CHECK(text.rfind("[PLAN]") == text.size() - 6);

  ValidationReport unknown;
  unknown.verdict = Verdict::UnknownAction;
  unknown.step_index = 1;
  GroundAction ga;
  ga.schema = id("flip");
  ga.args.push_back(id("a"));
  unknown.action = ga;
  text = build_backprompt(unknown);
  CHECK(text.find("step 1") != std::string::npos);
  CHECK(text.find("flip a") != std::string::npos);

  ValidationReport ok;
  CHECK_THROWS_AS(build_backprompt(ok), std::logic_error);
}

TEST_CASE("build_backprompt: ties on unmet atoms break by text order") {
  ValidationReport r;
  r.verdict = Verdict::PreconditionFailure;
  r.step_index = 1;
  GroundAction ga;
  ga.schema = id("pick-up");
  ga.args.push_back(id("a"));
  r.action = ga;
  r.unmet = {atom("clear", {"a"}), atom("handempty")};  // already sorted by text
  std::string text = build_backprompt(r);
  CHECK(text.find("The unmet precondition is:\n(clear a)\n") != std::string::npos);
}

TEST_CASE("classify_response: impossibility cues") {
  CHECK(classify_response(testutil::fixture("responses/mystery_random_impossible.txt")) ==
        ResponseKind::ImpossibilityClaim);
  CHECK(classify_response(testutil::fixture("responses/bw_no_plan_exists.txt")) ==
        ResponseKind::ImpossibilityClaim);
  CHECK(classify_response("The goal cannot be accomplished from this state.") ==
        ResponseKind::ImpossibilityClaim);
  CHECK(classify_response("This instance is UNSOLVABLE.") == ResponseKind::ImpossibilityClaim);
}

TEST_CASE("classify_response: empty-plan markers") {
  CHECK(classify_response(".") == ResponseKind::EmptyPlan);
  CHECK(classify_response("  .  \n") == ResponseKind::EmptyPlan);
  CHECK(classify_response("") == ResponseKind::EmptyPlan);
  CHECK(classify_response("[empty plan]") == ResponseKind::EmptyPlan);
  CHECK(classify_response("(pick-up a)") == ResponseKind::PlanAttempt);
}

TEST_CASE("classify_response: custom cue list is honored") {
  std::vector<std::string> cues = {"geen plan"};
  CHECK(classify_response("geen plan mogelijk", cues) == ResponseKind::ImpossibilityClaim);
  CHECK(classify_response("no plan exists", cues) == ResponseKind::PlanAttempt);
}

TEST_CASE("classify_with_plan: a parseable plan outranks an impossibility claim") {
  Plan plan = parse_plan("(pick-up a)");
  ResponseClass rc = classify_with_plan("this is unsolvable, but anyway: (pick-up a)", plan);
  CHECK(rc.kind == ResponseKind::PlanAttempt);
  REQUIRE(rc.extracted.has_value());
  CHECK(rc.extracted->size() == 1);

  // no plan extracted and no cue: treated as an empty attempt
  rc = classify_with_plan("lorem ipsum", std::nullopt);
  CHECK(rc.kind == ResponseKind::EmptyPlan);
}

TEST_CASE("adjudicate: category definitions") {
  ResponseClass impossibility{ResponseKind::ImpossibilityClaim, std::nullopt};
  ResponseClass empty{ResponseKind::EmptyPlan, std::nullopt};
  ResponseClass attempt{ResponseKind::PlanAttempt, Plan{}};

  ValidationReport valid_report;
  ValidationReport invalid_report;
  invalid_report.verdict = Verdict::GoalFailure;

  CHECK(adjudicate(false, impossibility, std::nullopt) == UnsolvableOutcome::TrueNegative);
  CHECK(adjudicate(false, empty, std::nullopt) == UnsolvableOutcome::WrongEmptyPlan);
  CHECK(adjudicate(false, attempt, invalid_report) == UnsolvableOutcome::WrongFullPlan);
  CHECK(adjudicate(false, attempt, std::nullopt) == UnsolvableOutcome::WrongFullPlan);
  CHECK(adjudicate(true, impossibility, std::nullopt) == UnsolvableOutcome::FalseNegative);
  CHECK(adjudicate(true, attempt, valid_report) == UnsolvableOutcome::CorrectPlan);
  CHECK(adjudicate(true, attempt, invalid_report) == UnsolvableOutcome::InvalidPlan);
  // an empty plan on a goal-already-satisfied instance scores as correct
  CHECK(adjudicate(true, empty, valid_report) == UnsolvableOutcome::CorrectPlan);
  CHECK(adjudicate(true, empty, invalid_report) == UnsolvableOutcome::InvalidPlan);
}

TEST_CASE("adjudicate: each (solvable, response) pair reaches exactly one label set") {
  ValidationReport valid_report;
  ValidationReport invalid_report;
  invalid_report.verdict = Verdict::GoalFailure;

  for (bool solvable : {false, true}) {
    for (ResponseKind kind :
         {ResponseKind::ImpossibilityClaim, ResponseKind::EmptyPlan, ResponseKind::PlanAttempt}) {
      ResponseClass rc{kind, kind == ResponseKind::PlanAttempt
                                 ? std::optional<Plan>(Plan{})
                                 : std::nullopt};
      std::set<UnsolvableOutcome> reachable;
      for (const auto& rep :
           {std::optional<ValidationReport>(valid_report),
            std::optional<ValidationReport>(invalid_report)}) {
        if (kind == ResponseKind::ImpossibilityClaim)
          reachable.insert(adjudicate(solvable, rc, std::nullopt));
        else
          reachable.insert(adjudicate(solvable, rc, rep));
      }
      if (!solvable || kind == ResponseKind::ImpossibilityClaim)
        CHECK(reachable.size() == 1);  // report cannot change the label
      else
        CHECK(reachable.size() == 2);  // valid/invalid split
    }
  }
}

TEST_CASE("report serialization carries the failure fields") {
  Domain d = bw_domain();
  Problem p = parse_problem(testutil::fixture("pddl/blocksworld/bw_rand_6.pddl"), d);
  Plan plan = parse_plan(testutil::fixture("responses/bw_pddl_22step.txt"));
  nlohmann::json j = to_json(validate_plan(d, p, plan));
  CHECK(j["verdict"] == "precondition-failure");
  CHECK(j["step"] == 4);
  CHECK(j["action"] == "stack b c");
  CHECK(j["unmet"][0] == "(clear c)");
}

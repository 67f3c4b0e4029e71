#pragma once

// Prompt rendering for every benchmark family, matching the published
// templates: natural-language and PDDL planning prompts (plain, named
// mystery and randomized vocabularies), graph coloring, trip planning and
// calendar scheduling, with zero- or few-shot example sections.

#include <cstdio>
#include <optional>
#include <string>
#include <vector>

#include "planmodulo/assets/calendar_bank.hpp"
#include "planmodulo/assets/nl_prompt_texts.hpp"
#include "planmodulo/assets/trip_bank.hpp"
#include "planmodulo/csp/calendar_verify.hpp"
#include "planmodulo/csp/coloring.hpp"
#include "planmodulo/gen/calendar.hpp"
#include "planmodulo/gen/domains.hpp"
#include "planmodulo/gen/graph.hpp"
#include "planmodulo/gen/trip.hpp"
#include "planmodulo/obfuscation.hpp"
#include "planmodulo/pddl.hpp"

namespace planmodulo::gen {

using pddl::Atom;
using pddl::Domain;
using pddl::GroundAction;
using pddl::Identifier;
using pddl::Plan;
using pddl::Problem;

enum class PromptStyle { Natural, Pddl };

struct PromptError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

inline constexpr const char* kPddlPromptInstruction =
    "The following is a PDDL specification of a planning problem. The first part, under the "
    "heading [DOMAIN], is the domain file. The second part, under the heading [QUERY PROBLEM], "
    "is the problem file. Using this information, which is correct, and no further assumptions, "
    "find a plan which, when run from the specified initial state, satisfies the specified "
    "goal. Provide your answer as a sequence of actions in PDDL format. An action ACTION which "
    "acts on two objects OBJ1 and OBJ2 would be written (ACTION OBJ1 OBJ2). Do not provide "
    "anything else in your answer.";

inline constexpr const char* kNaturalQuestion =
    "What is the plan to achieve my goal? Just give the actions in the plan.";

// ---------------------------------------------------------------------------
// Vocabulary-aware phrase rendering

// colors assigned to blocks in object order for the plain natural prompts
inline const std::vector<std::string>& block_color_names() {
  static const std::vector<std::string> colors = {"red",  "blue",    "orange", "yellow",
                                                  "white", "magenta", "black",  "cyan",
                                                  "green", "violet",  "silver", "gold"};
  return colors;
}

namespace detail {

inline std::string join_natural(const std::vector<std::string>& items) {
  if (items.empty()) return "";
  if (items.size() == 1) return items[0];
  std::string out;
  for (std::size_t i = 0; i + 1 < items.size(); ++i) {
    if (i) out += ", ";
    out += items[i];
  }
  out += " and " + items.back();
  return out;
}

// "A", "A, and B", "A, B, and C" -- the randomized restriction-list style
inline std::string join_fact_list(const std::vector<std::string>& items) {
  if (items.empty()) return "";
  if (items.size() == 1) return items[0];
  std::string out;
  for (std::size_t i = 0; i + 1 < items.size(); ++i) out += items[i] + ", ";
  out += "and " + items.back();
  return out;
}

struct BlocksPhrases {
  std::map<Identifier, std::string> object_word;  // a -> "red" etc.

  std::string block(Identifier obj) const { return "the " + object_word.at(obj) + " block"; }

  std::string atom_phrase(const Atom& a) const {
    const std::string& p = a.predicate.text();
    if (p == "clear") return block(a.args[0]) + " is clear";
    if (p == "ontable") return block(a.args[0]) + " is on the table";
    if (p == "handempty") return "the hand is empty";
    if (p == "holding") return "the hand is holding " + block(a.args[0]);
    if (p == "on") return block(a.args[0]) + " is on top of " + block(a.args[1]);
    throw PromptError("no natural phrasing for predicate " + p);
  }

  std::string action_phrase(const GroundAction& ga) const {
    const std::string& n = ga.schema.text();
    if (n == "pick-up") return "pick up " + block(ga.args[0]);
    if (n == "put-down") return "put down " + block(ga.args[0]);
    if (n == "stack") return "stack " + block(ga.args[0]) + " on top of " + block(ga.args[1]);
    if (n == "unstack")
      return "unstack " + block(ga.args[0]) + " from on top of " + block(ga.args[1]);
    throw PromptError("no natural phrasing for action " + n);
  }
};

struct MysteryPhrases {
  std::string object(Identifier obj) const { return "object " + obj.text(); }

  std::string atom_phrase(const Atom& a) const {
    const std::string& p = a.predicate.text();
    if (p == "province") return "province " + object(a.args[0]);
    if (p == "planet") return "planet " + object(a.args[0]);
    if (p == "harmony") return "harmony";
    if (p == "pain") return "pain " + object(a.args[0]);
    if (p == "craves") return object(a.args[0]) + " craves " + object(a.args[1]);
    throw PromptError("no mystery phrasing for predicate " + p);
  }

  std::string action_phrase(const GroundAction& ga) const {
    const std::string& n = ga.schema.text();
    if (n == "attack") return "attack " + object(ga.args[0]);
    if (n == "succumb") return "succumb " + object(ga.args[0]);
    if (n == "overcome")
      return "overcome " + object(ga.args[0]) + " from " + object(ga.args[1]);
    if (n == "feast") return "feast " + object(ga.args[0]) + " from " + object(ga.args[1]);
    throw PromptError("no mystery phrasing for action " + n);
  }
};

// positional object_0 / object_1 wording for randomized vocabularies
struct RandomizedPhrases {
  std::map<Identifier, std::string> object_word;  // problem object -> "object_i"

  std::string atom_phrase(const Atom& a) const {
    std::string out = a.predicate.text();
    for (Identifier arg : a.args) out += " " + object_word.at(arg);
    return out;
  }
};

inline std::vector<Atom> sorted_atoms(std::vector<Atom> atoms) {
  std::sort(atoms.begin(), atoms.end());
  return atoms;
}

template <typename Phrases>
std::string statement_block(const Problem& problem, const Phrases& phrases) {
  std::vector<std::string> init_phrases, goal_phrases;
  for (const Atom& a : sorted_atoms(problem.init)) init_phrases.push_back(phrases.atom_phrase(a));
  for (const Atom& a : sorted_atoms(problem.goal)) goal_phrases.push_back(phrases.atom_phrase(a));
  std::string out = "[STATEMENT]\n";
  out += "As initial conditions I have that, " + join_natural(init_phrases) + ".\n";
  out += "My goal is to have that " + join_natural(goal_phrases) + ".";
  return out;
}

inline std::string capitalize(std::string s) {
  if (!s.empty()) s[0] = static_cast<char>(std::toupper(static_cast<unsigned char>(s[0])));
  return s;
}

// Generated rules paragraph for an arbitrary STRIPS vocabulary, in the
// randomized-prompt wording.
inline std::string randomized_rules(const Domain& domain) {
  std::string out = "I am playing with a set of objects. Here are the actions I can do\n\n";
  for (const auto& action : domain.actions) {
    std::string line = action.name.text();
    for (std::size_t i = 0; i < action.params.size(); ++i)
      line += " object_" + std::to_string(i);
    out += capitalize(line) + ".\n";
  }
  out += "\nI have the following restrictions on my actions:\n";
  for (const auto& action : domain.actions) {
    std::map<Identifier, std::string> param_word;
    for (std::size_t i = 0; i < action.params.size(); ++i)
      param_word[action.params[i].name] = "object_" + std::to_string(i);
    auto phrase = [&](const Atom& a) {
      std::string p = a.predicate.text();
      for (Identifier arg : a.args) p += " " + param_word.at(arg);
      return p;
    };
    std::vector<std::string> pre, add, del;
    for (const Atom& a : action.precondition) pre.push_back(phrase(a));
    for (const Atom& a : action.add_effects) add.push_back(phrase(a));
    for (const Atom& a : action.del_effects) del.push_back(phrase(a));
    out += "To perform " + action.name.text() +
           " action, the following facts need to be true: " + join_fact_list(pre) + "\n";
    out += "Once " + action.name.text() +
           " is performed the following facts will be true: " + join_fact_list(add) + "\n";
    out += "Once " + action.name.text() +
           " is performed the following facts will be false: " + join_fact_list(del) + "\n";
  }
  return out;
}

}  // namespace detail

// ---------------------------------------------------------------------------
// Planning prompts

enum class NaturalVocabulary { Blocks, Mystery, Randomized };

inline NaturalVocabulary natural_vocabulary_for(const Domain& domain) {
  if (domain.name.text() == "blocksworld-4ops") return NaturalVocabulary::Blocks;
  bool mystery = domain.find_action(pddl::id("attack")) != nullptr &&
                 domain.find_predicate(pddl::id("craves")) != nullptr;
  if (mystery) return NaturalVocabulary::Mystery;
  return NaturalVocabulary::Randomized;
}

inline detail::BlocksPhrases blocks_phrases_for(const Problem& problem) {
  detail::BlocksPhrases phrases;
  const auto& colors = block_color_names();
  if (problem.objects.size() > colors.size())
    throw PromptError("natural block phrasing supports at most " +
                      std::to_string(colors.size()) + " blocks");
  for (std::size_t i = 0; i < problem.objects.size(); ++i)
    phrases.object_word[problem.objects[i].name] = colors[i];
  return phrases;
}

inline detail::RandomizedPhrases randomized_phrases_for(const Problem& problem) {
  detail::RandomizedPhrases phrases;
  for (std::size_t i = 0; i < problem.objects.size(); ++i)
    phrases.object_word[problem.objects[i].name] = "object_" + std::to_string(i);
  return phrases;
}

struct ShotExample {
  Problem problem;
  Plan plan;
};

// Natural-language planning prompt. The plain-blocks and named-mystery rule
// paragraphs are fixed texts; randomized vocabularies derive theirs from the
// domain. One-shot inserts a worked statement/plan pair before the query.
inline std::string render_natural_prompt(const Domain& domain, const Problem& problem,
                                         const std::optional<ShotExample>& shot = std::nullopt) {
  NaturalVocabulary vocab = natural_vocabulary_for(domain);
  std::string header;
  switch (vocab) {
    case NaturalVocabulary::Blocks: header = std::string(assets::kBlocksNaturalHeader); break;
    case NaturalVocabulary::Mystery: header = std::string(assets::kMysteryNaturalHeader); break;
    case NaturalVocabulary::Randomized: header = detail::randomized_rules(domain); break;
  }

  auto statement = [&](const Problem& p) {
    switch (vocab) {
      case NaturalVocabulary::Blocks: return detail::statement_block(p, blocks_phrases_for(p));
      case NaturalVocabulary::Mystery:
        return detail::statement_block(p, detail::MysteryPhrases{});
      case NaturalVocabulary::Randomized:
        return detail::statement_block(p, randomized_phrases_for(p));
    }
    return std::string();
  };
  auto plan_lines = [&](const Problem& p, const Plan& plan) {
    std::string out;
    for (const GroundAction& ga : plan.steps) {
      switch (vocab) {
        case NaturalVocabulary::Blocks:
          out += blocks_phrases_for(p).action_phrase(ga) + "\n";
          break;
        case NaturalVocabulary::Mystery:
          out += detail::MysteryPhrases{}.action_phrase(ga) + "\n";
          break;
        case NaturalVocabulary::Randomized: {
          std::string line = ga.schema.text();
          auto words = randomized_phrases_for(p);
          for (Identifier arg : ga.args) line += " " + words.object_word.at(arg);
          out += line + "\n";
          break;
        }
      }
    }
    return out;
  };

  // headers end with exactly one newline; one more gives the blank separator
  std::string out = header;
  if (shot) {
    out += "\n" + statement(shot->problem) + "\n\nMy plan is as follows:\n\n[PLAN]\n" +
           plan_lines(shot->problem, shot->plan);
  }
  out += "\n" + statement(problem) + "\n\n" + kNaturalQuestion;
  return out;
}

// PDDL planning prompt. The three stock domains are quoted verbatim; other
// domains (obfuscated variants in particular) use the canonical rendering.
inline std::string render_pddl_prompt(const Domain& domain, const Problem& problem,
                                      const std::optional<ShotExample>& shot = std::nullopt) {
  std::string domain_text;
  if (domain.name.text() == "blocksworld-4ops")
    domain_text = std::string(kBlocksworldDomainText);
  else if (domain.name.text() == "logistics-strips")
    domain_text = std::string(kLogisticsDomainText);
  else if (domain.name.text() == "typed-sokoban")
    domain_text = std::string(kSokobanDomainText);
  else
    domain_text = pddl::render(domain);

  std::string out = std::string(kPddlPromptInstruction) + "\n";
  out += "[DOMAIN]\n" + domain_text + "\n";
  if (shot) {
    out += "[EXAMPLE PROBLEM]\n" + pddl::render(shot->problem) + "\n";
    out += "[EXAMPLE PLAN]\n" + pddl::render(shot->plan) + "\n\n";
  }
  out += "[QUERY PROBLEM]\n" + pddl::render(problem) + "\n[PLAN]";
  return out;
}

inline std::string render_planning_prompt(const Domain& domain, const Problem& problem,
                                          PromptStyle style,
                                          const std::optional<ShotExample>& shot = std::nullopt) {
  return style == PromptStyle::Natural ? render_natural_prompt(domain, problem, shot)
                                       : render_pddl_prompt(domain, problem, shot);
}

// ---------------------------------------------------------------------------
// Graph-coloring prompt

inline std::string render_coloring_prompt(const Graph& graph, int k) {
  std::string out =
      "Color the following graph, described as a set of edges, such that no two vertices on "
      "the same edge share a color.\n";
  out += "You may use at most " + std::to_string(k) + " colors.\n";
  for (auto [u, v] : graph.edges)
    out += "Vertex " + std::to_string(u) + " is connected to vertex " + std::to_string(v) + ".\n";
  out += "There are a total of " + std::to_string(graph.n) +
         " vertices. Please label every vertex, even if it is disconnected from the rest of the "
         "graph." +
         csp::kColoringAnswerFormat;
  return out;
}

// ---------------------------------------------------------------------------
// Trip prompts

inline std::string render_trip_task(const TripSpec& spec) {
  std::string out = "TASK: You plan to visit " + std::to_string(spec.cities.size()) +
                    " European cities for " + std::to_string(spec.total_days) +
                    " days in total. You only take direct flights to commute between cities.";
  static const char* duration_forms[] = {"You plan to stay in %s for %d days.",
                                         "You want to spend %d days in %s.",
                                         "You would like to visit %s for %d days."};
  int form = 0;
  for (const auto& [city, days] : spec.cities) {
    char buf[160];
    switch (form % 3) {
      case 0: std::snprintf(buf, sizeof buf, duration_forms[0], city.c_str(), days); break;
      case 1: std::snprintf(buf, sizeof buf, duration_forms[1], days, city.c_str()); break;
      case 2: std::snprintf(buf, sizeof buf, duration_forms[2], city.c_str(), days); break;
    }
    ++form;
    out += " " + std::string(buf);
    for (const TripEvent& e : spec.events) {
      if (e.city != city) continue;
      std::string s = std::to_string(e.window_start), t = std::to_string(e.window_end);
      if (e.kind == "wedding")
        out += " You are going to attend a wedding in " + city + " between day " + s +
               " and day " + t + ".";
      else if (e.kind == "conference")
        out += " During day " + s + " and day " + t + ", you have to attend a conference in " +
               city + ".";
      else if (e.kind == "workshop")
        out += " You have to attend a workshop in " + city + " between day " + s + " and day " +
               t + ".";
      else if (e.kind == "friend")
        out += " You want to meet a friend in " + city + " between day " + s + " and day " + t +
               ".";
      else if (e.kind == "relatives")
        out += " You plan to visit relatives in " + city + " between day " + s + " and day " +
               t + ".";
      else if (e.kind == "show")
        out += " From day " + s + " to day " + t +
               ", there is a annual show you want to attend in " + city + ".";
      else
        out += " You would like to meet your friends at " + city + " between day " + s +
               " and day " + t + " to tour together.";
    }
  }
  return out;
}

inline std::string render_trip_flights(const TripSpec& spec) {
  std::string out = "Here are the cities that have direct flights:\n";
  std::vector<std::string> parts;
  for (const Flight& f : spec.flights)
    parts.push_back(f.bidirectional ? f.from + " and " + f.to : "from " + f.from + " to " + f.to);
  out += join(parts, ", ") + ".";
  return out;
}

inline std::string render_trip_query(const TripSpec& spec) {
  return render_trip_task(spec) + "\n\n" + render_trip_flights(spec) + "\n\n" +
         "Find a trip plan of visiting the cities for " + std::to_string(spec.total_days) +
         " days by taking direct flights to commute between them.";
}

inline std::string render_trip_prompt(const TripSpec& spec, int shots = 5) {
  if (shots < 0 || shots > static_cast<int>(assets::kTripExamples.size()))
    throw PromptError("trip prompt supports 0.." +
                      std::to_string(assets::kTripExamples.size()) + " shots");
  std::string out = std::string(assets::kTripPromptHeader) + "\n\n";
  for (int i = 0; i < shots; ++i) out += std::string(assets::kTripExamples[static_cast<std::size_t>(i)]) + "\n\n";
  out += "\nQuery:\n" + render_trip_query(spec);
  return out;
}

// itinerary -> the SOLUTION text shape the parser understands
inline std::string render_trip_solution(const TripSpec& spec, const TripItinerary& itinerary) {
  std::string out = "SOLUTION: Here is the trip plan for visiting the " +
                    std::to_string(spec.cities.size()) + " European cities for " +
                    std::to_string(spec.total_days) + " days:\n\n";
  int day = 1;
  for (std::size_t i = 0; i < itinerary.size(); ++i) {
    const auto& [city, stay] = itinerary[i];
    int end = day + stay - 1;
    if (i == 0)
      out += "**Day " + std::to_string(day) + "-" + std::to_string(end) + ":** Arriving in " +
             city + " and visit " + city + " for " + std::to_string(stay) + " days.\n";
    else
      out += "**Day " + std::to_string(day) + "-" + std::to_string(end) + ":** Visit " + city +
             " for " + std::to_string(stay) + " days.\n";
    if (i + 1 < itinerary.size())
      out += "**Day " + std::to_string(end) + ":** Fly from " + city + " to " +
             itinerary[i + 1].first + ".\n";
    day = end;
  }
  return out;
}

// The fix-it prompt: full self-contained backprompt embedding the query, the
// incorrect plan, its parsed form and the verifier's feedback.
inline std::string render_trip_backprompt(const TripSpec& spec, const std::string& raw_response,
                                          const std::string& parsed_repr,
                                          const std::string& feedback, int shots = 5) {
  std::string out = std::string(assets::kTripFixHeader) + "\n\n";
  for (int i = 0; i < shots; ++i) out += std::string(assets::kTripExamples[static_cast<std::size_t>(i)]) + "\n\n";
  out += "\nQuery:\n" + render_trip_query(spec) + "\n\n";
  out += "Incorrect plan in natural language:\n" + raw_response + "\n\n";
  out += "Incorrect plan in parsed format:\n" + parsed_repr + "\n\n";
  out += "Errors with the above plan:\n" + feedback + "\n\n";
  out += "Give the corrected plan in natural language such that it can be parsed by the above "
         "python code. \n";
  out += "Strictly adhere to the format shown in the examples below, without any extra "
         "information.\n\n";
  out += "Corrected plan:\n";
  return out;
}

// ---------------------------------------------------------------------------
// Calendar prompts

inline std::string duration_phrase(int minutes) {
  if (minutes == 30) return "half an hour";
  if (minutes == 60) return "one hour";
  return std::to_string(minutes) + " minutes";
}

inline std::string render_calendar_task(const CalendarSpec& spec) {
  std::vector<std::string> names;
  for (const auto& p : spec.participants) names.push_back(p.name);
  std::string out = "TASK: You need to schedule a meeting for " + detail::join_natural(names) +
                    " for " + duration_phrase(spec.duration_minutes) +
                    " between the work hours of 9:00 to 17:00 on " + spec.day + ". \n\n";
  out += "Here are the existing schedules for everyone during the day: \n";
  for (const auto& p : spec.participants) {
    if (p.busy.empty()) {
      out += p.name + " is free the entire day.\n";
      continue;
    }
    std::vector<std::string> intervals;
    for (const MinuteInterval& iv : p.busy)
      intervals.push_back(format_clock(iv.start) + " to " + format_clock(iv.end));
    out += p.name + " is busy on " + spec.day + " during " + join(intervals, ", ") + "; \n";
  }
  out += "\n";
  for (const CalendarPreference& pref : spec.preferences)
    out += pref.participant + " can not meet on " + spec.day +
           (pref.kind == CalendarPreference::Kind::NotBefore ? " before " : " after ") +
           format_clock(pref.minute) + ". ";
  out += "Find a time that works for everyone's schedule and constraints. ";
  return out;
}

inline std::string render_calendar_prompt(const CalendarSpec& spec, int shots = 5) {
  if (shots < 0 || shots > static_cast<int>(assets::kCalendarExamples.size()))
    throw PromptError("calendar prompt supports 0.." +
                      std::to_string(assets::kCalendarExamples.size()) + " shots");
  std::string out = std::string(assets::kCalendarPromptHeader) + "\n\n";
  for (int i = 0; i < shots; ++i)
    out += std::string(assets::kCalendarExamples[static_cast<std::size_t>(i)]) + "\n\n";
  out += "Query:\n" + render_calendar_task(spec) + "\nSOLUTION: ";
  return out;
}

inline std::string render_calendar_solution(const csp::TimeSlot& slot) {
  return "SOLUTION: Here is the proposed time: " + slot.text() + " ";
}

}  // namespace planmodulo::gen

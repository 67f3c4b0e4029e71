#pragma once

// Plan extraction from free-form generator text. The rule-based pass
// collects action-shaped lines (parenthesized PDDL, bare "name obj..."
// matching a declared schema, or natural-language verb phrases) and keeps
// the LAST contiguous block of them: worked explanations typically restate
// the plan in a final summary, and that summary is the answer. Blank lines
// do not break a block; prose lines do.

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "planmodulo/pddl.hpp"

namespace planmodulo::client {

using pddl::Domain;
using pddl::GroundAction;
using pddl::Identifier;
using pddl::Plan;
using pddl::Problem;

// Object vocabulary for resolving natural-language mentions: word -> object.
// Built from the prompt rendering (color words, "object_i" aliases, plus
// every object under its own name).
struct ExtractionContext {
  std::map<std::string, Identifier> aliases;

  static ExtractionContext for_problem(const Problem& problem) {
    ExtractionContext ctx;
    for (const auto& o : problem.objects) ctx.aliases[o.name.text()] = o.name;
    return ctx;
  }

  void add_alias(const std::string& word, Identifier object) { aliases[word] = object; }

  std::optional<Identifier> resolve(const std::string& word) const {
    auto it = aliases.find(word);
    if (it == aliases.end()) return std::nullopt;
    return it->second;
  }
};

namespace detail {

// strips markdown emphasis, backticks, list markers and step labels
inline std::string clean_line(const std::string& raw) {
  std::string s;
  for (char c : raw)
    if (c != '*' && c != '`') s += c;
  s = trim(s);
  // leading "-" bullet
  while (!s.empty() && (s.front() == '-' || s.front() == '#')) s = trim(s.substr(1));
  // leading "12." / "12)" numbering
  std::size_t i = 0;
  while (i < s.size() && std::isdigit(static_cast<unsigned char>(s[i]))) ++i;
  if (i > 0 && i < s.size() && (s[i] == '.' || s[i] == ')')) s = trim(s.substr(i + 1));
  // "Action 3:" / "Step 3:" labels
  for (const char* label : {"action", "step"}) {
    std::string lowered = to_lower(s);
    if (starts_with(lowered, label)) {
      std::size_t j = std::string(label).size();
      while (j < s.size() && (std::isspace(static_cast<unsigned char>(s[j])) ||
                              std::isdigit(static_cast<unsigned char>(s[j]))))
        ++j;
      if (j < s.size() && s[j] == ':') s = trim(s.substr(j + 1));
    }
  }
  return s;
}

inline std::string strip_punct(std::string word) {
  while (!word.empty() && (word.back() == '.' || word.back() == ',' || word.back() == ';' ||
                           word.back() == ':' || word.back() == '!'))
    word.pop_back();
  return word;
}

inline std::vector<std::string> words_of(const std::string& line) {
  std::vector<std::string> words;
  for (std::string w : split_ws(line)) {
    w = strip_punct(to_lower(w));
    if (!w.empty()) words.push_back(w);
  }
  return words;
}

// "(unstack d b)" with optional trailing punctuation
inline std::optional<GroundAction> match_paren_form(const std::string& line, const Domain& d) {
  std::string s = line;
  while (!s.empty() && (s.back() == '.' || s.back() == ',')) s.pop_back();
  if (s.size() < 2 || s.front() != '(' || s.back() != ')') return std::nullopt;
  std::vector<std::string> toks = split_ws(s.substr(1, s.size() - 2));
  if (toks.empty()) return std::nullopt;
  const pddl::ActionSchema* schema = d.find_action(pddl::id(toks[0]));
  if (!schema || schema->params.size() != toks.size() - 1) return std::nullopt;
  GroundAction ga;
  ga.schema = schema->name;
  for (std::size_t i = 1; i < toks.size(); ++i) ga.args.push_back(pddl::id(toks[i]));
  return ga;
}

// "wio5amhq7814n006 object_1 object_2" -- name must be a schema, every
// argument must resolve to a known object and the arity must match
inline std::optional<GroundAction> match_bare_form(const std::vector<std::string>& words,
                                                   const Domain& d,
                                                   const ExtractionContext& ctx) {
  if (words.empty()) return std::nullopt;
  const pddl::ActionSchema* schema = d.find_action(pddl::id(words[0]));
  if (!schema || schema->params.size() != words.size() - 1) return std::nullopt;
  GroundAction ga;
  ga.schema = schema->name;
  for (std::size_t i = 1; i < words.size(); ++i) {
    auto obj = ctx.resolve(words[i]);
    if (!obj) return std::nullopt;
    ga.args.push_back(*obj);
  }
  return ga;
}

// blocks phrasing: "unstack the blue block from on top of the orange block",
// "pick up the red block", "stack the orange block on top of the blue block"
inline std::optional<GroundAction> match_blocks_form(const std::vector<std::string>& words,
                                                     const Domain& d,
                                                     const ExtractionContext& ctx) {
  if (words.empty()) return std::nullopt;
  std::string verb;
  std::size_t rest = 0;
  if (words[0] == "unstack" || words[0] == "stack") {
    verb = words[0];
    rest = 1;
  } else if (words.size() >= 2 && words[0] == "pick" && words[1] == "up") {
    verb = "pick-up";
    rest = 2;
  } else if (words.size() >= 2 && words[0] == "put" && words[1] == "down") {
    verb = "put-down";
    rest = 2;
  } else {
    return std::nullopt;
  }
  const pddl::ActionSchema* schema = d.find_action(pddl::id(verb));
  if (!schema) return std::nullopt;

  // collect "the X block" mentions in order
  std::vector<Identifier> mentions;
  for (std::size_t i = rest; i + 2 < words.size(); ++i) {
    if (words[i] == "the" && words[i + 2] == "block") {
      auto obj = ctx.resolve(words[i + 1]);
      if (obj) mentions.push_back(*obj);
    }
  }
  if (mentions.size() != schema->params.size()) return std::nullopt;
  GroundAction ga;
  ga.schema = schema->name;
  ga.args = mentions;
  return ga;
}

// mystery phrasing: "feast object b from object c", "succumb object b";
// generalizes to any vocabulary whose first word names a schema and whose
// arguments appear as "object X" mentions
inline std::optional<GroundAction> match_object_form(const std::vector<std::string>& words,
                                                     const Domain& d,
                                                     const ExtractionContext& ctx) {
  if (words.empty()) return std::nullopt;
  const pddl::ActionSchema* schema = d.find_action(pddl::id(words[0]));
  if (!schema) return std::nullopt;
  std::vector<Identifier> mentions;
  for (std::size_t i = 1; i + 1 < words.size(); ++i) {
    if (words[i] != "object") continue;
    auto obj = ctx.resolve(words[i + 1]);
    if (obj) mentions.push_back(*obj);
  }
  if (mentions.size() != schema->params.size()) return std::nullopt;
  GroundAction ga;
  ga.schema = schema->name;
  ga.args = mentions;
  return ga;
}

}  // namespace detail

// Rule-based extraction. Returns the last contiguous block of recognized
// action lines, or nothing when no line matches. Every extracted step names
// a declared action by construction.
inline std::optional<Plan> extract_plan(const std::string& text, const Domain& domain,
                                        const ExtractionContext& ctx) {
  std::vector<std::vector<GroundAction>> blocks;
  bool in_block = false;
  for (const std::string& raw : split_lines(text)) {
    std::string line = detail::clean_line(raw);
    if (line.empty()) continue;  // blanks do not break a block

    std::optional<GroundAction> ga = detail::match_paren_form(line, domain);
    if (!ga) {
      std::vector<std::string> words = detail::words_of(line);
      if (!ga) ga = detail::match_bare_form(words, domain, ctx);
      if (!ga) ga = detail::match_blocks_form(words, domain, ctx);
      if (!ga) ga = detail::match_object_form(words, domain, ctx);
    }

    if (ga) {
      if (!in_block) blocks.emplace_back();
      blocks.back().push_back(std::move(*ga));
      in_block = true;
    } else {
      in_block = false;
    }
  }
  if (blocks.empty()) return std::nullopt;
  Plan plan;
  plan.steps = std::move(blocks.back());
  return plan;
}

inline ExtractionContext context_with_colors(const Problem& problem,
                                             const std::vector<std::string>& colors) {
  ExtractionContext ctx = ExtractionContext::for_problem(problem);
  for (std::size_t i = 0; i < problem.objects.size() && i < colors.size(); ++i)
    ctx.add_alias(colors[i], problem.objects[i].name);
  return ctx;
}

inline ExtractionContext context_with_positions(const Problem& problem) {
  ExtractionContext ctx = ExtractionContext::for_problem(problem);
  for (std::size_t i = 0; i < problem.objects.size(); ++i)
    ctx.add_alias("object_" + std::to_string(i), problem.objects[i].name);
  return ctx;
}

}  // namespace planmodulo::client

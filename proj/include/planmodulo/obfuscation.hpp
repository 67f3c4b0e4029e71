#pragma once

// Deterministic, seeded renaming of domain vocabulary. Two schemes: the
// fixed "named mystery" vocabulary for blocksworld-4ops, and fully
// randomized 16-character identifiers. Renaming is structure preserving, so
// validation verdicts and solvability are invariant under translation.

#include <optional>
#include <set>
#include <stdexcept>
#include <string>
#include <vector>

#include "planmodulo/pddl.hpp"
#include "planmodulo/util/rng.hpp"
#include "planmodulo/util/strings.hpp"

namespace planmodulo::obf {

using pddl::Atom;
using pddl::Domain;
using pddl::GroundAction;
using pddl::Identifier;
using pddl::Plan;
using pddl::Problem;

enum class Scheme { NamedMystery, Randomized };

inline const char* to_string(Scheme s) {
  return s == Scheme::NamedMystery ? "named-mystery" : "randomized";
}

struct ObfuscationError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// 16 lowercase alphanumerics, first a letter. Uniqueness is the caller's
// collision check.
inline Identifier fresh_identifier(Rng& rng) {
  static const char letters[] = "abcdefghijklmnopqrstuvwxyz";
  static const char alnum[] = "abcdefghijklmnopqrstuvwxyz0123456789";
  std::string out;
  out += letters[rng.index(26)];
  for (int i = 0; i < 15; ++i) out += alnum[rng.index(36)];
  return pddl::id(out);
}

class ObfuscationMap {
 public:
  Scheme scheme = Scheme::Randomized;
  std::uint64_t seed = 0;
  std::pair<Identifier, Identifier> domain_name;
  std::vector<std::pair<Identifier, Identifier>> predicates;
  std::vector<std::pair<Identifier, Identifier>> actions;
  std::vector<std::pair<Identifier, Identifier>> objects;  // empty unless enabled

  enum class Direction { Forward, Inverse };

  Identifier rename_action(Identifier name, Direction dir = Direction::Forward) const {
    return lookup(actions, name, dir, "action");
  }
  Identifier rename_predicate(Identifier name, Direction dir = Direction::Forward) const {
    return lookup(predicates, name, dir, "predicate");
  }
  Identifier rename_object(Identifier name, Direction dir = Direction::Forward) const {
    if (objects.empty()) return name;
    return lookup(objects, name, dir, "object");
  }

  bool bijective() const {
    auto check = [](const std::vector<std::pair<Identifier, Identifier>>& side) {
      std::set<Identifier> from, to;
      for (const auto& [a, b] : side) {
        if (!from.insert(a).second || !to.insert(b).second) return false;
      }
      return true;
    };
    return check(predicates) && check(actions) && check(objects);
  }

  std::string serialize() const {
    std::string out;
    out += "scheme " + std::string(to_string(scheme)) + "\n";
    out += "seed " + std::to_string(seed) + "\n";
    out += "domain " + domain_name.first.text() + " " + domain_name.second.text() + "\n";
    for (const auto& [a, b] : predicates)
      out += "predicate " + a.text() + " " + b.text() + "\n";
    for (const auto& [a, b] : actions) out += "action " + a.text() + " " + b.text() + "\n";
    for (const auto& [a, b] : objects) out += "object " + a.text() + " " + b.text() + "\n";
    return out;
  }

  static ObfuscationMap deserialize(std::string_view text) {
    ObfuscationMap m;
    for (const std::string& line : split_lines(text)) {
      std::vector<std::string> toks = split_ws(line);
      if (toks.empty()) continue;
      if (toks[0] == "scheme" && toks.size() == 2) {
        m.scheme = toks[1] == "named-mystery" ? Scheme::NamedMystery : Scheme::Randomized;
      } else if (toks[0] == "seed" && toks.size() == 2) {
        m.seed = std::stoull(toks[1]);
      } else if (toks[0] == "domain" && toks.size() == 3) {
        m.domain_name = {pddl::id(toks[1]), pddl::id(toks[2])};
      } else if (toks[0] == "predicate" && toks.size() == 3) {
        m.predicates.emplace_back(pddl::id(toks[1]), pddl::id(toks[2]));
      } else if (toks[0] == "action" && toks.size() == 3) {
        m.actions.emplace_back(pddl::id(toks[1]), pddl::id(toks[2]));
      } else if (toks[0] == "object" && toks.size() == 3) {
        m.objects.emplace_back(pddl::id(toks[1]), pddl::id(toks[2]));
      } else {
        throw ObfuscationError("unrecognized map line: " + line);
      }
    }
    return m;
  }

  friend bool operator==(const ObfuscationMap& a, const ObfuscationMap& b) {
    return a.scheme == b.scheme && a.seed == b.seed && a.domain_name == b.domain_name &&
           a.predicates == b.predicates && a.actions == b.actions && a.objects == b.objects;
  }

 private:
  static Identifier lookup(const std::vector<std::pair<Identifier, Identifier>>& side,
                           Identifier name, Direction dir, const char* what) {
    for (const auto& [from, to] : side) {
      if (dir == Direction::Forward && from == name) return to;
      if (dir == Direction::Inverse && to == name) return from;
    }
    throw ObfuscationError(std::string("unmapped ") + what + " name: " + name.text());
  }
};

// The fixed mystery vocabulary for blocksworld-4ops and its
// natural-language phrase table (one line per predicate/action, used by the
// prompt renderer).
inline const std::vector<std::pair<std::string, std::string>>& mystery_predicate_names() {
  static const std::vector<std::pair<std::string, std::string>> table = {
      {"clear", "province"}, {"ontable", "planet"},   {"handempty", "harmony"},
      {"holding", "pain"},   {"on", "craves"},
  };
  return table;
}

inline const std::vector<std::pair<std::string, std::string>>& mystery_action_names() {
  static const std::vector<std::pair<std::string, std::string>> table = {
      {"pick-up", "attack"}, {"put-down", "succumb"}, {"stack", "overcome"},
      {"unstack", "feast"},
  };
  return table;
}

namespace detail {

inline Atom rename_atom(const Atom& a, const ObfuscationMap& m,
                        ObfuscationMap::Direction dir) {
  Atom out = a;
  out.predicate = m.rename_predicate(a.predicate, dir);
  for (Identifier& arg : out.args)
    if (!arg.is_variable()) arg = m.rename_object(arg, dir);
  return out;
}

inline Domain rename_domain(const Domain& d, const ObfuscationMap& m) {
  Domain out = d;
  out.name = m.domain_name.second;
  for (auto& p : out.predicates) p.name = m.rename_predicate(p.name);
  for (auto& a : out.actions) {
    a.name = m.rename_action(a.name);
    for (Atom& at : a.precondition) at = rename_atom(at, m, ObfuscationMap::Direction::Forward);
    for (Atom& at : a.add_effects) at = rename_atom(at, m, ObfuscationMap::Direction::Forward);
    for (Atom& at : a.del_effects) at = rename_atom(at, m, ObfuscationMap::Direction::Forward);
  }
  return out;
}

inline Problem rename_problem(const Problem& p, const ObfuscationMap& m) {
  Problem out = p;
  out.domain_name = m.domain_name.second;
  for (auto& o : out.objects) o.name = m.rename_object(o.name);
  for (Atom& a : out.init) a = rename_atom(a, m, ObfuscationMap::Direction::Forward);
  for (Atom& a : out.goal) a = rename_atom(a, m, ObfuscationMap::Direction::Forward);
  return out;
}

}  // namespace detail

struct ObfuscationResult {
  Domain domain;
  std::vector<Problem> problems;
  ObfuscationMap map;
};

// Builds the map and renames domain and problems. Objects keep their names
// unless `rename_objects` is set. Randomized identifiers are drawn from the
// seed with a collision check against the whole old and new vocabulary.
inline ObfuscationResult obfuscate(const Domain& domain, const std::vector<Problem>& problems,
                                   Scheme scheme, std::uint64_t seed,
                                   bool rename_objects = false) {
  ObfuscationMap m;
  m.scheme = scheme;
  m.seed = seed;

  if (scheme == Scheme::NamedMystery) {
    if (domain.name.text() != "blocksworld-4ops")
      throw ObfuscationError("named-mystery only applies to the blocksworld-4ops vocabulary");
    m.domain_name = {domain.name, pddl::id("mystery-bw")};
    for (const auto& [from, to] : mystery_predicate_names())
      m.predicates.emplace_back(pddl::id(from), pddl::id(to));
    for (const auto& [from, to] : mystery_action_names())
      m.actions.emplace_back(pddl::id(from), pddl::id(to));
    if (rename_objects)
      throw ObfuscationError("named-mystery keeps object names");
  } else {
    Rng rng(seed);
    std::set<Identifier> taken;
    taken.insert(domain.name);
    for (const auto& p : domain.predicates) taken.insert(p.name);
    for (const auto& a : domain.actions) taken.insert(a.name);
    for (const Problem& p : problems)
      for (const auto& o : p.objects) taken.insert(o.name);

    auto draw = [&] {
      for (int attempt = 0; attempt < 1000; ++attempt) {
        Identifier candidate = fresh_identifier(rng);
        if (taken.insert(candidate).second) return candidate;
      }
      throw ObfuscationError("collision retry budget exceeded");
    };

    m.domain_name = {domain.name, draw()};
    for (const auto& p : domain.predicates) m.predicates.emplace_back(p.name, draw());
    for (const auto& a : domain.actions) m.actions.emplace_back(a.name, draw());
    if (rename_objects) {
      std::set<Identifier> seen;
      for (const Problem& p : problems)
        for (const auto& o : p.objects)
          if (seen.insert(o.name).second) m.objects.emplace_back(o.name, draw());
    }
  }

  ObfuscationResult result;
  result.domain = detail::rename_domain(domain, m);
  for (const Problem& p : problems) result.problems.push_back(detail::rename_problem(p, m));
  result.map = std::move(m);
  return result;
}

// Step-wise rename of a plan; inverse . forward is the identity.
inline Plan translate_plan(const Plan& plan, const ObfuscationMap& m,
                           ObfuscationMap::Direction dir = ObfuscationMap::Direction::Forward) {
  Plan out;
  for (const GroundAction& step : plan.steps) {
    GroundAction ga;
    ga.schema = m.rename_action(step.schema, dir);
    for (Identifier arg : step.args) ga.args.push_back(m.rename_object(arg, dir));
    out.steps.push_back(std::move(ga));
  }
  return out;
}

inline Atom translate_atom(const Atom& a, const ObfuscationMap& m,
                           ObfuscationMap::Direction dir = ObfuscationMap::Direction::Forward) {
  return detail::rename_atom(a, m, dir);
}

}  // namespace planmodulo::obf

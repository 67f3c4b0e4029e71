#pragma once

// Seeded blocksworld instance generation: random legal configurations for
// init and goal, plus the one-conjunct mutation that makes a goal
// structurally unsatisfiable.

#include <optional>
#include <set>
#include <stdexcept>
#include <string>
#include <vector>

#include "planmodulo/gen/domains.hpp"
#include "planmodulo/pddl.hpp"
#include "planmodulo/search.hpp"
#include "planmodulo/util/rng.hpp"

namespace planmodulo::gen {

using pddl::Atom;
using pddl::Identifier;
using pddl::Problem;

struct GenerationError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

enum class GoalMode { Full, Partial };  // all on/ontable atoms vs on atoms only

namespace detail {

// towers[t] lists blocks bottom to top
using Towers = std::vector<std::vector<int>>;

// Random sequential placement: each block (in shuffled order) starts a new
// tower or lands on a uniformly chosen existing top.
inline Towers random_towers(int n_blocks, Rng& rng) {
  std::vector<int> order(static_cast<std::size_t>(n_blocks));
  for (int i = 0; i < n_blocks; ++i) order[static_cast<std::size_t>(i)] = i;
  rng.shuffle(order);
  Towers towers;
  for (int block : order) {
    std::size_t choice = rng.index(towers.size() + 1);
    if (choice == towers.size())
      towers.push_back({block});
    else
      towers[choice].push_back(block);
  }
  return towers;
}

inline std::vector<Atom> config_atoms(const Towers& towers,
                                      const std::vector<Identifier>& names, bool full) {
  std::vector<Atom> atoms;
  for (const auto& tower : towers) {
    if (full) atoms.emplace_back(pddl::id("ontable"),
                                 std::vector<Identifier>{names[static_cast<std::size_t>(tower[0])]});
    for (std::size_t i = 1; i < tower.size(); ++i)
      atoms.emplace_back(pddl::id("on"),
                         std::vector<Identifier>{names[static_cast<std::size_t>(tower[i])],
                                                 names[static_cast<std::size_t>(tower[i - 1])]});
  }
  std::sort(atoms.begin(), atoms.end());
  return atoms;
}

}  // namespace detail

inline std::vector<Identifier> block_names(int n_blocks) {
  if (n_blocks < 2 || n_blocks > 26)
    throw GenerationError("block count must be between 2 and 26");
  std::vector<Identifier> names;
  for (int i = 0; i < n_blocks; ++i)
    names.push_back(pddl::id(std::string(1, static_cast<char>('a' + i))));
  return names;
}

// Init is a uniformly drawn legal configuration (hand empty); the goal comes
// from a second independent draw. Degenerate goal-subset-of-init draws are
// resampled unless allowed. The instance is oracle-checked solvable.
inline Problem gen_blocksworld(int n_blocks, std::uint64_t seed,
                               GoalMode goal_mode = GoalMode::Partial,
                               bool allow_trivial = false) {
  std::vector<Identifier> names = block_names(n_blocks);
  Rng rng(seed);

  Problem p;
  p.name = pddl::id("bw-rand-" + std::to_string(n_blocks));
  p.domain_name = blocksworld_domain().name;
  for (Identifier n : names) p.objects.push_back({n, std::nullopt});

  detail::Towers init_towers = detail::random_towers(n_blocks, rng);
  p.init.push_back(pddl::atom("handempty"));
  for (const auto& tower : init_towers)
    p.init.push_back(Atom(pddl::id("clear"),
                          {names[static_cast<std::size_t>(tower.back())]}));
  for (const Atom& a : detail::config_atoms(init_towers, names, /*full=*/true))
    p.init.push_back(a);
  std::sort(p.init.begin(), p.init.end());

  pddl::State init_state(p.init);
  for (int attempt = 0; attempt < 1000; ++attempt) {
    detail::Towers goal_towers = detail::random_towers(n_blocks, rng);
    std::vector<Atom> goal =
        detail::config_atoms(goal_towers, names, goal_mode == GoalMode::Full);
    if (goal.empty()) continue;  // partial goals need at least one stacked pair
    if (!allow_trivial && pddl::satisfies(init_state, goal)) continue;
    p.goal = std::move(goal);

    if (search::plan_exists(blocksworld_domain(), p) != search::Solvability::Solvable)
      throw GenerationError("generated blocksworld instance failed the oracle check");
    return p;
  }
  throw GenerationError("could not draw a non-degenerate goal configuration");
}

// Adds exactly one ground on(x,y) atom chosen uniformly among the
// structurally inconsistent candidates: an on-cycle, a second block on one
// target, or one block on two targets. The result is confirmed unsolvable
// by exhaustive search.
inline Problem mutate_unsolvable(const Problem& problem, std::uint64_t seed) {
  std::vector<Identifier> blocks;
  for (const auto& o : problem.objects) blocks.push_back(o.name);

  std::set<std::pair<Identifier, Identifier>> goal_on;
  for (const Atom& a : problem.goal)
    if (a.predicate == pddl::id("on")) goal_on.insert({a.args[0], a.args[1]});

  auto creates_cycle = [&](Identifier x, Identifier y) {
    // path y -> ... -> x through goal on-edges closes a cycle with on(x,y)
    std::vector<Identifier> frontier{y};
    std::set<Identifier> seen{y};
    while (!frontier.empty()) {
      Identifier cur = frontier.back();
      frontier.pop_back();
      if (cur == x) return true;
      for (const auto& [above, below] : goal_on)
        if (above == cur && seen.insert(below).second) frontier.push_back(below);
    }
    return false;
  };

  std::vector<std::pair<Identifier, Identifier>> candidates;
  for (Identifier x : blocks) {
    for (Identifier y : blocks) {
      if (x == y) continue;
      if (goal_on.count({x, y})) continue;
      bool second_on_target = false, block_on_two = false;
      for (const auto& [above, below] : goal_on) {
        if (below == y && above != x) second_on_target = true;
        if (above == x && below != y) block_on_two = true;
      }
      if (second_on_target || block_on_two || creates_cycle(x, y))
        candidates.emplace_back(x, y);
    }
  }
  if (candidates.empty())
    throw GenerationError("no admissible unsolvability conjunct exists");

  Rng rng(seed);
  auto [x, y] = candidates[rng.index(candidates.size())];
  Problem mutated = problem;
  mutated.goal.push_back(Atom(pddl::id("on"), {x, y}));
  std::sort(mutated.goal.begin(), mutated.goal.end());

  if (search::plan_exists(blocksworld_domain(), mutated) != search::Solvability::Unsolvable)
    throw GenerationError("mutated goal unexpectedly remained solvable");
  return mutated;
}

}  // namespace planmodulo::gen

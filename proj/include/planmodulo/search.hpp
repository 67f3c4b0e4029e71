#pragma once

// Complete forward state-space search over grounded STRIPS tasks. Provides
// ground truth at desk scale: satisficing plans, optimal plan lengths and
// solvable/unsolvable decisions.

#include <chrono>
#include <cstdint>
#include <optional>
#include <queue>
#include <unordered_map>
#include <unordered_set>
#include <vector>

#include "planmodulo/pddl.hpp"

namespace planmodulo::search {

using pddl::Atom;
using pddl::Domain;
using pddl::GroundAction;
using pddl::Plan;
using pddl::Problem;

struct SearchLimits {
  std::size_t max_expanded_nodes = 5'000'000;
  double max_seconds = 60.0;
};

enum class SearchStatus { Solved, Unsolvable, LimitExceeded };
enum class Solvability { Solvable, Unsolvable, Unknown };

struct SearchResult {
  SearchStatus status = SearchStatus::LimitExceeded;
  std::optional<Plan> plan;
  std::size_t expanded_nodes = 0;
  double elapsed_s = 0.0;
};

enum class Strategy { BreadthFirst, GreedyGoalCount };

namespace detail {

// Grounded task over dense atom ids; all per-state work happens on sorted
// id vectors.
struct GroundTask {
  std::vector<GroundAction> actions;
  std::vector<std::vector<int>> pre, add, del;  // sorted ids per action
  std::vector<int> init, goal;                  // sorted ids
  std::unordered_map<Atom, int, pddl::AtomHash> ids;

  int intern(const Atom& a) {
    auto [it, inserted] = ids.emplace(a, static_cast<int>(ids.size()));
    return it->second;
  }
};

inline GroundTask build_task(const Domain& domain, const Problem& problem) {
  GroundTask t;
  t.actions = pddl::ground_actions(domain, problem);
  auto intern_sorted = [&](const std::vector<Atom>& atoms) {
    std::vector<int> out;
    out.reserve(atoms.size());
    for (const Atom& a : atoms) out.push_back(t.intern(a));
    std::sort(out.begin(), out.end());
    out.erase(std::unique(out.begin(), out.end()), out.end());
    return out;
  };
  t.pre.reserve(t.actions.size());
  for (const GroundAction& ga : t.actions) {
    t.pre.push_back(intern_sorted(ga.pre));
    t.add.push_back(intern_sorted(ga.add));
    t.del.push_back(intern_sorted(ga.del));
  }
  t.init = intern_sorted(problem.init);
  t.goal = intern_sorted(problem.goal);
  return t;
}

using IdState = std::vector<int>;

struct IdStateHash {
  std::size_t operator()(const IdState& s) const {
    std::uint64_t h = 1469598103934665603ULL;
    for (int v : s) {
      h ^= static_cast<std::uint64_t>(v) + 0x9E3779B9ULL;
      h *= 1099511628211ULL;
    }
    return static_cast<std::size_t>(h);
  }
};

inline bool subset_of(const std::vector<int>& needle, const IdState& state) {
  return std::includes(state.begin(), state.end(), needle.begin(), needle.end());
}

inline IdState successor(const IdState& state, const std::vector<int>& del,
                         const std::vector<int>& add) {
  IdState next;
  next.reserve(state.size() + add.size());
  std::set_difference(state.begin(), state.end(), del.begin(), del.end(),
                      std::back_inserter(next));
  IdState merged;
  merged.reserve(next.size() + add.size());
  std::set_union(next.begin(), next.end(), add.begin(), add.end(), std::back_inserter(merged));
  return merged;
}

struct Node {
  IdState state;
  int parent;  // index into node arena, -1 for the root
  int action;  // grounded action index leading here
};

}  // namespace detail

inline SearchResult solve(const Domain& domain, const Problem& problem, Strategy strategy,
                          const SearchLimits& limits = {}) {
  using namespace detail;
  const auto start_time = std::chrono::steady_clock::now();
  auto elapsed = [&] {
    return std::chrono::duration<double>(std::chrono::steady_clock::now() - start_time).count();
  };

  GroundTask task = build_task(domain, problem);
  SearchResult result;

  std::vector<Node> arena;
  std::unordered_set<IdState, IdStateHash> closed;
  arena.push_back(Node{task.init, -1, -1});
  closed.insert(task.init);

  auto goal_count_unsat = [&](const IdState& s) {
    int cnt = 0;
    for (int g : task.goal)
      if (!std::binary_search(s.begin(), s.end(), g)) ++cnt;
    return cnt;
  };

  auto extract_plan = [&](int node_index) {
    Plan plan;
    for (int i = node_index; arena[i].parent >= 0; i = arena[i].parent)
      plan.steps.push_back(task.actions[static_cast<std::size_t>(arena[i].action)]);
    std::reverse(plan.steps.begin(), plan.steps.end());
    return plan;
  };

  // (priority, insertion sequence) with FIFO tie-breaking keeps runs
  // reproducible; breadth-first is the zero-priority special case.
  using Entry = std::pair<std::pair<int, std::size_t>, int>;
  auto cmp = [](const Entry& a, const Entry& b) { return a.first > b.first; };
  std::priority_queue<Entry, std::vector<Entry>, decltype(cmp)> open(cmp);
  std::size_t seq = 0;
  auto priority = [&](const IdState& s) {
    return strategy == Strategy::GreedyGoalCount ? goal_count_unsat(s) : 0;
  };
  open.push({{priority(task.init), seq++}, 0});

  while (!open.empty()) {
    if (result.expanded_nodes >= limits.max_expanded_nodes || elapsed() > limits.max_seconds) {
      result.status = SearchStatus::LimitExceeded;
      result.elapsed_s = elapsed();
      return result;
    }
    int index = open.top().second;
    open.pop();
    ++result.expanded_nodes;

    if (subset_of(task.goal, arena[index].state)) {
      result.status = SearchStatus::Solved;
      result.plan = extract_plan(index);
      result.elapsed_s = elapsed();
      // guard: replay the extracted plan before handing it out
      {
        IdState s = task.init;
        std::vector<int> chain;
        for (int i = index; arena[i].parent >= 0; i = arena[i].parent) chain.push_back(i);
        std::reverse(chain.begin(), chain.end());
        for (int i : chain) {
          auto a = static_cast<std::size_t>(arena[i].action);
          if (!subset_of(task.pre[a], s))
            throw std::logic_error("search produced an inapplicable step");
          s = successor(s, task.del[a], task.add[a]);
        }
        if (!subset_of(task.goal, s))
          throw std::logic_error("search produced a non-goal-reaching plan");
      }
      return result;
    }

    const IdState state = arena[index].state;  // copy: arena may reallocate
    for (std::size_t a = 0; a < task.actions.size(); ++a) {
      if (!subset_of(task.pre[a], state)) continue;
      IdState next = successor(state, task.del[a], task.add[a]);
      if (!closed.insert(next).second) continue;
      arena.push_back(Node{std::move(next), index, static_cast<int>(a)});
      open.push({{priority(arena.back().state), seq++}, static_cast<int>(arena.size() - 1)});
    }
  }

  result.status = SearchStatus::Unsolvable;
  result.elapsed_s = elapsed();
  return result;
}

// Length of a shortest plan (breadth-first layer index). The result status
// reports limit hits and unsolvability.
struct OptimalLength {
  SearchStatus status;
  std::size_t length = 0;  // meaningful when status == Solved
  std::size_t expanded_nodes = 0;
  double elapsed_s = 0.0;
};

inline OptimalLength optimal_length(const Domain& domain, const Problem& problem,
                                    const SearchLimits& limits = {}) {
  SearchResult r = solve(domain, problem, Strategy::BreadthFirst, limits);
  OptimalLength out{r.status, 0, r.expanded_nodes, r.elapsed_s};
  if (r.status == SearchStatus::Solved) out.length = r.plan->size();
  return out;
}

inline Solvability plan_exists(const Domain& domain, const Problem& problem,
                               const SearchLimits& limits = {}) {
  SearchResult r = solve(domain, problem, Strategy::BreadthFirst, limits);
  switch (r.status) {
    case SearchStatus::Solved: return Solvability::Solvable;
    case SearchStatus::Unsolvable: return Solvability::Unsolvable;
    case SearchStatus::LimitExceeded: return Solvability::Unknown;
  }
  return Solvability::Unknown;
}

}  // namespace planmodulo::search

#pragma once

// Typed sokoban grid instances: full adjacency over the grid, walls as
// non-clear cells, robot and boxes on distinct clear cells. Emitted
// instances are oracle-checked solvable within the given limits; deadlocked
// placements are resampled.

#include <string>
#include <vector>

#include "planmodulo/gen/blocksworld.hpp"
#include "planmodulo/gen/domains.hpp"

namespace planmodulo::gen {

struct SokobanConfig {
  int grid_w = 7;
  int grid_h = 7;
  int boxes = 1;
  int walls = 2;
  std::uint64_t seed = 0;
};

namespace detail {

inline void check_sokoban_config(const SokobanConfig& c) {
  if (c.grid_w < 4 || c.grid_w > 10 || c.grid_h < 4 || c.grid_h > 10)
    throw GenerationError("sokoban grid sides must be within 4..10");
  if (c.boxes < 1 || c.boxes > 4) throw GenerationError("sokoban boxes must be within 1..4");
  if (c.walls < 1 || c.walls > 4) throw GenerationError("sokoban walls must be within 1..4");
}

}  // namespace detail

inline Identifier sokoban_cell(int row, int col) {
  return pddl::id("f" + std::to_string(row) + "-" + std::to_string(col) + "f");
}

// One placement attempt; solvability is checked by the caller.
inline Problem sokoban_layout(const SokobanConfig& config, Rng& rng) {
  const int w = config.grid_w, h = config.grid_h;
  Problem p;
  p.name = pddl::id("typed-sokoban-grid" + std::to_string(std::max(w, h)) + "-boxes" +
                    std::to_string(config.boxes) + "-walls" + std::to_string(config.walls));
  p.domain_name = sokoban_domain().name;

  for (const char* d : {"up", "down", "left", "right"})
    p.objects.push_back({pddl::id(d), pddl::id("dir")});
  for (int b = 0; b < config.boxes; ++b)
    p.objects.push_back({pddl::id("box" + std::to_string(b)), pddl::id("box")});
  for (int r = 0; r < h; ++r)
    for (int c = 0; c < w; ++c) p.objects.push_back({sokoban_cell(r, c), pddl::id("loc")});

  // distinct cells: walls, then boxes, goals and the robot on the rest
  std::vector<int> cells(static_cast<std::size_t>(w * h));
  for (int i = 0; i < w * h; ++i) cells[static_cast<std::size_t>(i)] = i;
  rng.shuffle(cells);
  std::size_t cursor = 0;
  auto take = [&] { return cells[cursor++]; };

  std::vector<int> wall_cells, box_cells, goal_cells;
  for (int i = 0; i < config.walls; ++i) wall_cells.push_back(take());
  for (int i = 0; i < config.boxes; ++i) box_cells.push_back(take());
  for (int i = 0; i < config.boxes; ++i) goal_cells.push_back(take());
  int robot_cell = take();

  auto row_of = [&](int cell) { return cell / w; };
  auto col_of = [&](int cell) { return cell % w; };
  auto is_in = [](const std::vector<int>& v, int x) {
    return std::find(v.begin(), v.end(), x) != v.end();
  };

  // adjacency facts for every cell, directions in left/right/up/down order
  for (int r = 0; r < h; ++r) {
    for (int c = 0; c < w; ++c) {
      Identifier from = sokoban_cell(r, c);
      if (c > 0)
        p.init.push_back(Atom(pddl::id("adjacent"), {from, sokoban_cell(r, c - 1), pddl::id("left")}));
      if (c + 1 < w)
        p.init.push_back(Atom(pddl::id("adjacent"), {from, sokoban_cell(r, c + 1), pddl::id("right")}));
      if (r > 0)
        p.init.push_back(Atom(pddl::id("adjacent"), {from, sokoban_cell(r - 1, c), pddl::id("up")}));
      if (r + 1 < h)
        p.init.push_back(Atom(pddl::id("adjacent"), {from, sokoban_cell(r + 1, c), pddl::id("down")}));
    }
  }
  for (int b = 0; b < config.boxes; ++b)
    p.init.push_back(Atom(pddl::id("at"), {pddl::id("box" + std::to_string(b)),
                                           sokoban_cell(row_of(box_cells[static_cast<std::size_t>(b)]),
                                                        col_of(box_cells[static_cast<std::size_t>(b)]))}));
  // clear facts in row-major order; the robot's own cell stays clear
  for (int cell = 0; cell < w * h; ++cell) {
    if (cell == robot_cell)
      p.init.push_back(Atom(pddl::id("at-robot"), {sokoban_cell(row_of(cell), col_of(cell))}));
    if (is_in(wall_cells, cell) || is_in(box_cells, cell)) continue;
    p.init.push_back(Atom(pddl::id("clear"), {sokoban_cell(row_of(cell), col_of(cell))}));
  }

  for (int b = 0; b < config.boxes; ++b)
    p.goal.push_back(Atom(pddl::id("at"), {pddl::id("box" + std::to_string(b)),
                                           sokoban_cell(row_of(goal_cells[static_cast<std::size_t>(b)]),
                                                        col_of(goal_cells[static_cast<std::size_t>(b)]))}));
  return p;
}

inline Problem gen_sokoban(const SokobanConfig& config,
                           const search::SearchLimits& limits = {2'000'000, 60.0},
                           int retry_budget = 25) {
  detail::check_sokoban_config(config);
  Rng rng(config.seed);
  for (int attempt = 0; attempt < retry_budget; ++attempt) {
    Problem p = sokoban_layout(config, rng);
    search::SearchResult r =
        search::solve(sokoban_domain(), p, search::Strategy::GreedyGoalCount, limits);
    if (r.status == search::SearchStatus::Solved && !r.plan->empty()) return p;
    // unsolvable, trivial or over budget: draw a fresh placement
  }
  throw GenerationError("sokoban placement infeasible after retry budget");
}

}  // namespace planmodulo::gen

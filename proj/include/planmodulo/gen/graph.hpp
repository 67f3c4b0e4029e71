#pragma once

// Random graphs via the G(n, p) edge-probability model and an exact
// chromatic-number solver: iterative-deepening k-colorability backtracking
// with degree-ordered vertices, first vertex pinned to color 1 and new
// colors introduced in order.

#include <algorithm>
#include <chrono>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "planmodulo/util/rng.hpp"
#include "planmodulo/util/strings.hpp"

namespace planmodulo::gen {

struct Graph {
  int n = 0;
  std::vector<std::pair<int, int>> edges;  // u < v, sorted lexicographically

  bool adjacent(int u, int v) const {
    if (u > v) std::swap(u, v);
    return std::binary_search(edges.begin(), edges.end(), std::make_pair(u, v));
  }

  std::vector<std::vector<int>> adjacency() const {
    std::vector<std::vector<int>> adj(static_cast<std::size_t>(n));
    for (auto [u, v] : edges) {
      adj[static_cast<std::size_t>(u)].push_back(v);
      adj[static_cast<std::size_t>(v)].push_back(u);
    }
    return adj;
  }

  // line-oriented text format: first line n, then "u v" per edge
  std::string serialize() const {
    std::string out = std::to_string(n) + "\n";
    for (auto [u, v] : edges) out += std::to_string(u) + " " + std::to_string(v) + "\n";
    return out;
  }

  static Graph deserialize(std::string_view text) {
    Graph g;
    bool first = true;
    for (const std::string& line : split_lines(text)) {
      std::vector<std::string> toks = split_ws(line);
      if (toks.empty()) continue;
      if (first) {
        g.n = std::stoi(toks[0]);
        first = false;
        continue;
      }
      if (toks.size() != 2) throw std::runtime_error("bad edge line: " + line);
      int u = std::stoi(toks[0]), v = std::stoi(toks[1]);
      if (u > v) std::swap(u, v);
      g.edges.emplace_back(u, v);
    }
    std::sort(g.edges.begin(), g.edges.end());
    return g;
  }

  friend bool operator==(const Graph& a, const Graph& b) {
    return a.n == b.n && a.edges == b.edges;
  }
};

// Each of the n(n-1)/2 pairs joins independently with probability p; no
// planarity rejection.
inline Graph gen_graph(int n, double p, std::uint64_t seed) {
  if (n < 1 || p < 0.0 || p > 1.0) throw std::invalid_argument("gen_graph parameters");
  Rng rng(seed);
  Graph g;
  g.n = n;
  for (int u = 0; u < n; ++u)
    for (int v = u + 1; v < n; ++v)
      if (rng.unit() < p) g.edges.emplace_back(u, v);
  return g;
}

struct ChromaticResult {
  int k = 0;                // exact chromatic number
  std::vector<int> colors;  // a witness coloring, colors 1..k
};

struct ChromaticLimits {
  std::size_t max_nodes = 500'000'000;
  double max_seconds = 300.0;
};

struct ChromaticLimitExceeded : std::runtime_error {
  ChromaticLimitExceeded() : std::runtime_error("chromatic search limit exceeded") {}
};

namespace detail {

struct KColorSearch {
  const std::vector<std::vector<int>>& adj;
  const std::vector<int>& order;
  std::vector<int>& colors;
  int k;
  std::size_t* nodes;
  const ChromaticLimits& limits;
  std::chrono::steady_clock::time_point start;

  bool assign(std::size_t depth, int used) {
    if (++*nodes > limits.max_nodes) throw ChromaticLimitExceeded();
    if ((*nodes & 0xFFFF) == 0 &&
        std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count() >
            limits.max_seconds)
      throw ChromaticLimitExceeded();
    if (depth == order.size()) return true;
    int v = order[depth];
    int tries = std::min(k, used + 1);  // symmetry breaking
    for (int c = 1; c <= tries; ++c) {
      bool legal = true;
      for (int u : adj[static_cast<std::size_t>(v)])
        if (colors[static_cast<std::size_t>(u)] == c) {
          legal = false;
          break;
        }
      if (!legal) continue;
      colors[static_cast<std::size_t>(v)] = c;
      if (assign(depth + 1, std::max(used, c))) return true;
      colors[static_cast<std::size_t>(v)] = 0;
    }
    return false;
  }
};

}  // namespace detail

inline std::optional<std::vector<int>> k_colorable(const Graph& g, int k,
                                                   const ChromaticLimits& limits,
                                                   std::size_t* nodes) {
  auto adj = g.adjacency();
  std::vector<int> order(static_cast<std::size_t>(g.n));
  for (int i = 0; i < g.n; ++i) order[static_cast<std::size_t>(i)] = i;
  std::stable_sort(order.begin(), order.end(), [&](int a, int b) {
    return adj[static_cast<std::size_t>(a)].size() > adj[static_cast<std::size_t>(b)].size();
  });
  std::vector<int> colors(static_cast<std::size_t>(g.n), 0);
  detail::KColorSearch search{adj,   order,  colors,
                              k,     nodes,  limits,
                              std::chrono::steady_clock::now()};
  if (search.assign(0, 0)) return colors;
  return std::nullopt;
}

inline ChromaticResult solve_chromatic(const Graph& g, const ChromaticLimits& limits = {}) {
  if (g.n == 0) return {0, {}};
  std::size_t nodes = 0;
  for (int k = 1; k <= g.n; ++k) {
    if (auto colors = k_colorable(g, k, limits, &nodes)) return {k, std::move(*colors)};
  }
  throw std::logic_error("a graph on n vertices is always n-colorable");
}

inline int chromatic_number(const Graph& g, const ChromaticLimits& limits = {}) {
  return solve_chromatic(g, limits).k;
}

}  // namespace planmodulo::gen

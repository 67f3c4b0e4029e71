#include <catch2/catch_amalgamated.hpp>

#include "planmodulo/csp/calendar_verify.hpp"
#include "planmodulo/csp/trip_verify.hpp"
#include "planmodulo/gen/blocksworld.hpp"
#include "planmodulo/gen/calendar.hpp"
#include "planmodulo/gen/graph.hpp"
#include "planmodulo/gen/logistics.hpp"
#include "planmodulo/gen/sokoban.hpp"
#include "planmodulo/gen/trip.hpp"
#include "planmodulo/search.hpp"

#include "helpers.hpp"

using namespace planmodulo;
using namespace planmodulo::gen;
using namespace planmodulo::pddl;

TEST_CASE("gen_blocksworld: structural invariants") {
  for (std::uint64_t seed : {1ULL, 2ULL, 3ULL, 99ULL}) {
    Problem p = gen_blocksworld(4, seed);
    CHECK(p.objects.size() == 4);

    int handempty = 0, clear = 0, ontable = 0, on = 0;
    for (const Atom& a : p.init) {
      if (a.predicate == id("handempty")) ++handempty;
      if (a.predicate == id("clear")) ++clear;
      if (a.predicate == id("ontable")) ++ontable;
      if (a.predicate == id("on")) ++on;
    }
    CHECK(handempty == 1);
    CHECK(clear == ontable);       // one clear top and one table block per tower
    CHECK(ontable + on == 4);      // every block is somewhere
    CHECK(p.init.size() == static_cast<std::size_t>(1 + clear + ontable + on));

    // goal drawn from a second config, not already satisfied
    CHECK_FALSE(satisfies(initial_state(p), p.goal));
    CHECK(search::plan_exists(blocksworld_domain(), p) == search::Solvability::Solvable);
  }
}

TEST_CASE("gen_blocksworld: determinism and distinct seeds") {
  Problem a = gen_blocksworld(5, 7), b = gen_blocksworld(5, 7), c = gen_blocksworld(5, 8);
  CHECK(render(a) == render(b));
  CHECK(render(a) != render(c));
}

TEST_CASE("gen_blocksworld: two-block optima stay within the tiny state space") {
  for (std::uint64_t seed = 1; seed <= 10; ++seed) {
    Problem p = gen_blocksworld(2, seed, GoalMode::Full);
    auto r = search::optimal_length(blocksworld_domain(), p);
    REQUIRE(r.status == search::SearchStatus::Solved);
    CHECK(r.length <= 4);
  }
}

TEST_CASE("gen_blocksworld: batch lengths fall in the documented band") {
  // 3..5 blocks, partial goals, oracle optimum between 2 and 16
  for (std::uint64_t seed = 1; seed <= 30; ++seed) {
    int n = 3 + static_cast<int>(seed % 3);
    Problem p = gen_blocksworld(n, seed);
    auto r = search::optimal_length(blocksworld_domain(), p);
    REQUIRE(r.status == search::SearchStatus::Solved);
    CHECK(r.length >= 2);
    CHECK(r.length <= 16);
  }
}

TEST_CASE("mutate_unsolvable: documented shapes") {
  Domain d = blocksworld_domain();

  // cyclic: goal on(d,c) plus added on(c,d)
  Problem p;
  p.name = id("cycle");
  p.domain_name = d.name;
  for (const char* o : {"c", "d"}) p.objects.push_back({id(o), std::nullopt});
  p.init = {atom("clear", {"d"}), atom("handempty"), atom("on", {"d", "c"}),
            atom("ontable", {"c"})};
  p.goal = {atom("on", {"d", "c"})};
  // the only admissible conjunct for two blocks is the cycle-closing one
  Problem mutated = mutate_unsolvable(p, 1);
  CHECK(mutated.goal.size() == 2);
  CHECK(std::find(mutated.goal.begin(), mutated.goal.end(), atom("on", {"c", "d"})) !=
        mutated.goal.end());
  CHECK(search::plan_exists(d, mutated) == search::Solvability::Unsolvable);

  // never returns the input unchanged
  for (std::uint64_t seed = 1; seed <= 20; ++seed) {
    Problem solvable = gen_blocksworld(4, seed);
    Problem unsat = mutate_unsolvable(solvable, seed);
    CHECK(unsat.goal.size() == solvable.goal.size() + 1);
    CHECK(search::plan_exists(d, unsat) == search::Solvability::Unsolvable);
  }
}

TEST_CASE("gen_logistics: structure matches the classic scheme") {
  LogisticsParams params;  // 2 cities, 1 location each, 1 package, 2 airplanes
  Problem p = gen_logistics(params, 3);
  CHECK(p.name.text() == "logistics-c2-s1-p1-a2");
  CHECK(p.objects.size() == 2 + 2 + 2 + 2 + 1);

  int airports = 0, cities = 0, airplanes = 0;
  for (const Atom& a : p.init) {
    if (a.predicate == id("airport")) ++airports;
    if (a.predicate == id("city")) ++cities;
    if (a.predicate == id("airplane")) ++airplanes;
  }
  CHECK(airports == 2);
  CHECK(cities == 2);
  CHECK(airplanes == 2);

  // emitted instance parses back against the stock domain
  Problem reparsed = parse_problem(render(p), logistics_domain());
  CHECK(reparsed == p);
  CHECK(search::plan_exists(logistics_domain(), p) == search::Solvability::Solvable);

  // package goals always move the package
  for (const Atom& g : p.goal) CHECK(std::find(p.init.begin(), p.init.end(), g) == p.init.end());
}

TEST_CASE("gen_logistics: determinism") {
  LogisticsParams params;
  params.cities = 3;
  params.locs_per_city = 2;
  params.packages = 2;
  CHECK(render(gen_logistics(params, 11)) == render(gen_logistics(params, 11)));
}

TEST_CASE("gen_sokoban: counts and layout facts") {
  SokobanConfig config;
  config.grid_w = 7;
  config.grid_h = 7;
  config.boxes = 1;
  config.walls = 2;
  config.seed = 5;
  Problem p = gen_sokoban(config);

  int locs = 0, dirs = 0;
  for (const auto& o : p.objects) {
    if (o.type == id("loc")) ++locs;
    if (o.type == id("dir")) ++dirs;
  }
  CHECK(locs == 49);
  CHECK(dirs == 4);

  // an interior cell carries four outgoing adjacency facts
  int adjacency_from_center = 0, at_robot = 0, clear_count = 0;
  for (const Atom& a : p.init) {
    if (a.predicate == id("adjacent") && a.args[0] == sokoban_cell(3, 3))
      ++adjacency_from_center;
    if (a.predicate == id("at-robot")) ++at_robot;
    if (a.predicate == id("clear")) ++clear_count;
  }
  CHECK(adjacency_from_center == 4);
  CHECK(at_robot == 1);
  CHECK(clear_count == 49 - config.walls - config.boxes);  // robot cell stays clear

  CHECK(p.goal.size() == 1);
  Problem reparsed = parse_problem(render(p), sokoban_domain());
  CHECK(reparsed == p);
}

TEST_CASE("gen_sokoban: emitted instances are solvable and non-trivial") {
  for (std::uint64_t seed : {1ULL, 2ULL}) {
    SokobanConfig config;
    config.grid_w = 5;
    config.grid_h = 5;
    config.boxes = 1;
    config.walls = 2;
    config.seed = seed;
    Problem p = gen_sokoban(config);
    auto r = search::solve(sokoban_domain(), p, search::Strategy::GreedyGoalCount);
    REQUIRE(r.status == search::SearchStatus::Solved);
    CHECK_FALSE(r.plan->empty());
  }
}

TEST_CASE("gen_sokoban: range validation") {
  SokobanConfig bad;
  bad.grid_w = 3;
  CHECK_THROWS_AS(gen_sokoban(bad), GenerationError);
  bad.grid_w = 7;
  bad.boxes = 5;
  CHECK_THROWS_AS(gen_sokoban(bad), GenerationError);
}

TEST_CASE("gen_graph: degenerate probabilities") {
  Graph empty = gen_graph(8, 0.0, 1);
  CHECK(empty.edges.empty());
  Graph full = gen_graph(8, 1.0, 1);
  CHECK(full.edges.size() == 8 * 7 / 2);
}

TEST_CASE("gen_graph: edge count concentrates around n(n-1)/2 * p") {
  double total = 0;
  const int samples = 200;
  for (int s = 1; s <= samples; ++s) total += static_cast<double>(gen_graph(20, 0.4, static_cast<std::uint64_t>(s)).edges.size());
  double mean = total / samples;
  // binomial(190, 0.4): mean 76, sd ~6.75; 3 standard errors ~ 1.43
  CHECK(mean > 76 - 1.5);
  CHECK(mean < 76 + 1.5);
}

TEST_CASE("gen_graph: serialization round-trip") {
  Graph g = gen_graph(12, 0.3, 9);
  CHECK(Graph::deserialize(g.serialize()) == g);
}

TEST_CASE("chromatic_number: reference values") {
  Graph empty;
  empty.n = 6;
  CHECK(chromatic_number(empty) == 1);
  CHECK(chromatic_number(Graph{}) == 0);

  Graph k4 = gen_graph(4, 1.0, 1);
  CHECK(chromatic_number(k4) == 4);

  Graph c5;
  c5.n = 5;
  c5.edges = {{0, 1}, {0, 4}, {1, 2}, {2, 3}, {3, 4}};
  CHECK(chromatic_number(c5) == 3);
}

TEST_CASE("chromatic_number: witness coloring is proper and uses exactly k colors") {
  for (std::uint64_t seed = 1; seed <= 10; ++seed) {
    Graph g = gen_graph(12, 0.4, seed);
    ChromaticResult r = solve_chromatic(g);
    std::set<int> used;
    for (int v = 0; v < g.n; ++v) {
      CHECK(r.colors[static_cast<std::size_t>(v)] >= 1);
      used.insert(r.colors[static_cast<std::size_t>(v)]);
    }
    CHECK(static_cast<int>(used.size()) == r.k);
    for (auto [u, v] : g.edges)
      CHECK(r.colors[static_cast<std::size_t>(u)] != r.colors[static_cast<std::size_t>(v)]);
  }
}

TEST_CASE("chromatic_number: matches brute force on small graphs") {
  // independent oracle: try every assignment of k colors to n vertices
  auto brute_chromatic = [](const Graph& g) {
    if (g.n == 0) return 0;
    for (int k = 1; k <= g.n; ++k) {
      std::vector<int> colors(static_cast<std::size_t>(g.n), 0);
      auto enumerate = [&](auto&& self, int v) -> bool {
        if (v == g.n) {
          for (auto [a, b] : g.edges)
            if (colors[static_cast<std::size_t>(a)] == colors[static_cast<std::size_t>(b)])
              return false;
          return true;
        }
        for (int c = 0; c < k; ++c) {
          colors[static_cast<std::size_t>(v)] = c;
          if (self(self, v + 1)) return true;
        }
        return false;
      };
      if (enumerate(enumerate, 0)) return k;
    }
    return g.n;
  };

  for (std::uint64_t seed = 1; seed <= 12; ++seed) {
    Graph g = gen_graph(3 + static_cast<int>(seed % 5), 0.45, seed * 13);
    CHECK(chromatic_number(g) == brute_chromatic(g));
  }
}

TEST_CASE("gen_trip: the duration identity holds on every emitted spec") {
  for (std::uint64_t seed = 1; seed <= 25; ++seed) {
    TripSpec spec = gen_trip(10, 21 + static_cast<int>(seed % 6), seed);
    int duration_sum = 0;
    for (const auto& [city, days] : spec.cities) {
      CHECK(days >= 2);
      CHECK(days <= 5);
      duration_sum += days;
    }
    CHECK(duration_sum - (static_cast<int>(spec.cities.size()) - 1) == spec.total_days);

    for (const auto& e : spec.events) {
      CHECK(e.window_start >= 1);
      CHECK(e.window_end <= spec.total_days);
      CHECK(e.window_end - e.window_start + 1 <= spec.required_days(e.city));
    }

    // generator guarantee: an exhaustive search finds a valid itinerary
    auto itinerary = solve_trip(spec);
    REQUIRE(itinerary.has_value());
    csp::ParsedTrip parsed;
    parsed.segments = *itinerary;
    CHECK(csp::verify_trip(spec, parsed).valid);
  }
}

TEST_CASE("gen_trip: two cities with one flight has the unique plan") {
  TripSpec spec;
  spec.total_days = 5;
  spec.cities = {{"Paris", 3}, {"Rome", 3}};
  spec.flights = {{"Paris", "Rome", false}};
  auto itinerary = solve_trip(spec);
  REQUIRE(itinerary.has_value());
  CHECK((*itinerary)[0].first == "Paris");
  CHECK((*itinerary)[1].first == "Rome");
}

TEST_CASE("gen_trip: json round-trip") {
  TripSpec spec = gen_trip(8, 20, 4);
  nlohmann::json j = spec;
  TripSpec back = j.get<TripSpec>();
  CHECK(back.total_days == spec.total_days);
  CHECK(back.cities == spec.cities);
  CHECK(back.flights.size() == spec.flights.size());
  CHECK(back.events.size() == spec.events.size());
}

TEST_CASE("gen_calendar: construction guarantee and rendering rules") {
  for (std::uint64_t seed = 1; seed <= 40; ++seed) {
    CalendarSpec spec = gen_calendar(5, 30, seed);
    CHECK(spec.participants.size() == 5);
    for (const auto& p : spec.participants)
      for (const auto& iv : p.busy) {
        CHECK(iv.start >= kWorkStartMin);
        CHECK(iv.end <= kWorkEndMin);
        CHECK(iv.start < iv.end);
        CHECK(iv.start % 30 == 0);
        CHECK(iv.end % 30 == 0);
      }
    CHECK(csp::solve_calendar(spec).has_value());
  }
}

TEST_CASE("gen_calendar: validation") {
  CHECK_THROWS_AS(gen_calendar(0, 30, 1), std::invalid_argument);
  CHECK_THROWS_AS(gen_calendar(3, 45, 1), std::invalid_argument);
  CalendarSpec spec = gen_calendar(3, 60, 2);
  CHECK(spec.duration_minutes == 60);
  nlohmann::json j = spec;
  CalendarSpec back = j.get<CalendarSpec>();
  CHECK(back.duration_minutes == 60);
  CHECK(back.participants.size() == spec.participants.size());
}

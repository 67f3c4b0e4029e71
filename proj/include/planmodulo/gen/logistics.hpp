#pragma once

// Logistics instances following the classic predicate scheme: one truck per
// city, location 0 of each city is its airport, package goals are
// at-location atoms.

#include <string>
#include <vector>

#include "planmodulo/gen/blocksworld.hpp"
#include "planmodulo/gen/domains.hpp"

namespace planmodulo::gen {

struct LogisticsParams {
  int cities = 2;
  int locs_per_city = 1;
  int packages = 1;
  int airplanes = 2;
};

inline Problem gen_logistics(const LogisticsParams& params, std::uint64_t seed) {
  if (params.cities < 1 || params.locs_per_city < 1 || params.packages < 1 ||
      params.airplanes < 1)
    throw GenerationError("logistics parameters must all be at least 1");
  Rng rng(seed);

  Problem p;
  p.name = pddl::id("logistics-c" + std::to_string(params.cities) + "-s" +
                    std::to_string(params.locs_per_city) + "-p" +
                    std::to_string(params.packages) + "-a" + std::to_string(params.airplanes));
  p.domain_name = logistics_domain().name;

  auto airplane = [](int i) { return pddl::id("a" + std::to_string(i)); };
  auto city = [](int i) { return pddl::id("c" + std::to_string(i)); };
  auto truck = [](int i) { return pddl::id("t" + std::to_string(i)); };
  auto loc = [](int c, int s) {
    return pddl::id("l" + std::to_string(c) + "-" + std::to_string(s));
  };
  auto package = [](int i) { return pddl::id("p" + std::to_string(i)); };

  for (int i = 0; i < params.airplanes; ++i) p.objects.push_back({airplane(i), std::nullopt});
  for (int i = 0; i < params.cities; ++i) p.objects.push_back({city(i), std::nullopt});
  for (int i = 0; i < params.cities; ++i) p.objects.push_back({truck(i), std::nullopt});
  for (int c = 0; c < params.cities; ++c)
    for (int s = 0; s < params.locs_per_city; ++s) p.objects.push_back({loc(c, s), std::nullopt});
  for (int i = 0; i < params.packages; ++i) p.objects.push_back({package(i), std::nullopt});

  auto at = [](Identifier what, Identifier where) {
    return Atom(pddl::id("at"), {what, where});
  };

  for (int i = 0; i < params.airplanes; ++i)
    p.init.push_back(Atom(pddl::id("airplane"), {airplane(i)}));
  for (int i = 0; i < params.cities; ++i) p.init.push_back(Atom(pddl::id("city"), {city(i)}));
  for (int i = 0; i < params.cities; ++i) p.init.push_back(Atom(pddl::id("truck"), {truck(i)}));
  for (int c = 0; c < params.cities; ++c) {
    for (int s = 0; s < params.locs_per_city; ++s) {
      p.init.push_back(Atom(pddl::id("location"), {loc(c, s)}));
      p.init.push_back(Atom(pddl::id("in-city"), {loc(c, s), city(c)}));
    }
  }
  for (int c = 0; c < params.cities; ++c)
    p.init.push_back(Atom(pddl::id("airport"), {loc(c, 0)}));
  for (int i = 0; i < params.packages; ++i)
    p.init.push_back(Atom(pddl::id("obj"), {package(i)}));

  // trucks somewhere in their own city, airplanes at airports, packages anywhere
  for (int i = 0; i < params.cities; ++i)
    p.init.push_back(at(truck(i), loc(i, rng.range(0, params.locs_per_city - 1))));
  std::vector<Identifier> package_init;
  for (int i = 0; i < params.packages; ++i) {
    Identifier where =
        loc(rng.range(0, params.cities - 1), rng.range(0, params.locs_per_city - 1));
    package_init.push_back(where);
    p.init.push_back(at(package(i), where));
  }
  for (int i = 0; i < params.airplanes; ++i)
    p.init.push_back(at(airplane(i), loc(rng.range(0, params.cities - 1), 0)));

  // goals move every package somewhere else
  for (int i = 0; i < params.packages; ++i) {
    for (int attempt = 0;; ++attempt) {
      if (attempt > 1000) throw GenerationError("could not draw a non-trivial package goal");
      Identifier dest =
          loc(rng.range(0, params.cities - 1), rng.range(0, params.locs_per_city - 1));
      if (dest == package_init[static_cast<std::size_t>(i)]) continue;
      p.goal.push_back(at(package(i), dest));
      break;
    }
  }

  if (search::plan_exists(logistics_domain(), p) != search::Solvability::Solvable)
    throw GenerationError("generated logistics instance failed the oracle check");
  return p;
}

}  // namespace planmodulo::gen

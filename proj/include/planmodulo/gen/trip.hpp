#pragma once

// Trip-planning specs: visit n cities for D days total, consecutive visits
// share the flight day, events pin cities to day windows. The generator
// hides a feasible order, emits its consecutive flights plus distractors,
// then discards the order. solve_trip recovers some valid itinerary by
// exhaustive ordered search, which backs the generator guarantee.

#include <optional>
#include <set>
#include <string>
#include <vector>

#include "planmodulo/util/rng.hpp"

#include <json.hpp>

namespace planmodulo::gen {

struct TripEvent {
  std::string city;
  int window_start = 0;
  int window_end = 0;
  std::string kind;  // wedding, conference, workshop, friend, relatives, show, tour
};

struct Flight {
  std::string from;
  std::string to;
  bool bidirectional = true;
};

struct TripSpec {
  int total_days = 0;
  std::vector<std::pair<std::string, int>> cities;  // (name, required stay days)
  std::vector<TripEvent> events;
  std::vector<Flight> flights;

  bool flight_allowed(const std::string& from, const std::string& to) const {
    for (const Flight& f : flights) {
      if (f.from == from && f.to == to) return true;
      if (f.bidirectional && f.from == to && f.to == from) return true;
    }
    return false;
  }

  int required_days(const std::string& city) const {
    for (const auto& [name, days] : cities)
      if (name == city) return days;
    return -1;
  }
};

inline void to_json(nlohmann::json& j, const TripSpec& s) {
  j = nlohmann::json::object();
  j["total_days"] = s.total_days;
  j["cities"] = nlohmann::json::array();
  for (const auto& [name, days] : s.cities)
    j["cities"].push_back({{"name", name}, {"days", days}});
  j["events"] = nlohmann::json::array();
  for (const TripEvent& e : s.events)
    j["events"].push_back({{"city", e.city},
                           {"start", e.window_start},
                           {"end", e.window_end},
                           {"kind", e.kind}});
  j["flights"] = nlohmann::json::array();
  for (const Flight& f : s.flights)
    j["flights"].push_back(
        {{"from", f.from}, {"to", f.to}, {"bidirectional", f.bidirectional}});
}

inline void from_json(const nlohmann::json& j, TripSpec& s) {
  s = TripSpec{};
  s.total_days = j.at("total_days").get<int>();
  for (const auto& c : j.at("cities"))
    s.cities.emplace_back(c.at("name").get<std::string>(), c.at("days").get<int>());
  for (const auto& e : j.at("events"))
    s.events.push_back(TripEvent{e.at("city").get<std::string>(), e.at("start").get<int>(),
                                 e.at("end").get<int>(), e.at("kind").get<std::string>()});
  for (const auto& f : j.at("flights"))
    s.flights.push_back(Flight{f.at("from").get<std::string>(), f.at("to").get<std::string>(),
                               f.at("bidirectional").get<bool>()});
}

// itinerary: ordered (city, stay) pairs; day arithmetic has consecutive
// stays overlapping on the flight day
using TripItinerary = std::vector<std::pair<std::string, int>>;

// Exhaustive ordered search with event pruning. Returns the first valid
// itinerary in city-index order, or nothing.
inline std::optional<TripItinerary> solve_trip(const TripSpec& spec) {
  const std::size_t n = spec.cities.size();
  std::vector<bool> used(n, false);
  std::vector<std::size_t> order;

  auto events_ok = [&](std::size_t city_index, int start_day, int end_day) {
    const std::string& name = spec.cities[city_index].first;
    for (const TripEvent& e : spec.events)
      if (e.city == name && (e.window_start < start_day || e.window_end > end_day))
        return false;
    return true;
  };

  auto dfs = [&](auto&& self, int day) -> bool {
    if (order.size() == n) return day == spec.total_days;
    for (std::size_t i = 0; i < n; ++i) {
      if (used[i]) continue;
      if (!order.empty()) {
        const std::string& prev = spec.cities[order.back()].first;
        if (!spec.flight_allowed(prev, spec.cities[i].first)) continue;
      }
      int start = order.empty() ? 1 : day;
      int end = start + spec.cities[i].second - 1;
      if (end > spec.total_days) continue;
      if (!events_ok(i, start, end)) continue;
      used[i] = true;
      order.push_back(i);
      if (self(self, end)) return true;
      order.pop_back();
      used[i] = false;
    }
    return false;
  };

  if (!dfs(dfs, 1)) return std::nullopt;
  TripItinerary plan;
  for (std::size_t i : order) plan.push_back(spec.cities[i]);
  return plan;
}

inline const std::vector<std::string>& trip_city_pool() {
  static const std::vector<std::string> pool = {
      "Vienna",    "Frankfurt", "Oslo",     "Prague",   "Valencia", "Dubrovnik", "Edinburgh",
      "London",    "Munich",    "Budapest", "Helsinki", "Vilnius",  "Istanbul",  "Hamburg",
      "Porto",     "Athens",    "Krakow",   "Tallinn",  "Paris",    "Lisbon",    "Brussels",
      "Lyon",      "Riga",      "Barcelona", "Naples",  "Venice",   "Rome",      "Amsterdam",
      "Berlin",    "Stuttgart", "Manchester", "Nice",   "Reykjavik", "Florence", "Split",
      "Madrid",    "Seville",   "Milan"};
  return pool;
}

inline const std::vector<std::string>& trip_event_kinds() {
  static const std::vector<std::string> kinds = {"wedding", "conference", "workshop",
                                                 "friend",  "relatives",  "show",
                                                 "tour"};
  return kinds;
}

inline TripSpec gen_trip(int n_cities, int total_days, std::uint64_t seed) {
  if (n_cities < 2) throw std::invalid_argument("gen_trip needs at least two cities");
  const int target = total_days + (n_cities - 1);  // flight days overlap
  if (target < 2 * n_cities || target > 5 * n_cities)
    throw std::invalid_argument("total_days incompatible with stay durations in 2..5");
  Rng rng(seed);

  // durations in 2..5 summing to the target
  std::vector<int> durations(static_cast<std::size_t>(n_cities), 2);
  int remainder = target - 2 * n_cities;
  while (remainder > 0) {
    std::size_t i = rng.index(static_cast<std::size_t>(n_cities));
    if (durations[i] < 5) {
      ++durations[i];
      --remainder;
    }
  }

  // hidden visit order
  std::vector<std::string> pool = trip_city_pool();
  rng.shuffle(pool);
  std::vector<std::string> visit(pool.begin(), pool.begin() + n_cities);

  TripSpec spec;
  spec.total_days = total_days;
  for (int i = 0; i < n_cities; ++i)
    spec.cities.emplace_back(visit[static_cast<std::size_t>(i)],
                             durations[static_cast<std::size_t>(i)]);

  // needed flights along the hidden order, mostly bidirectional
  std::set<std::pair<std::string, std::string>> covered;
  for (int i = 0; i + 1 < n_cities; ++i) {
    Flight f{visit[static_cast<std::size_t>(i)], visit[static_cast<std::size_t>(i + 1)],
             !rng.chance(0.2)};
    covered.insert({std::min(f.from, f.to), std::max(f.from, f.to)});
    spec.flights.push_back(f);
  }
  // distractor pairs
  int distractors = n_cities;
  for (int tries = 0; tries < 100 && distractors > 0; ++tries) {
    std::size_t a = rng.index(static_cast<std::size_t>(n_cities));
    std::size_t b = rng.index(static_cast<std::size_t>(n_cities));
    if (a == b) continue;
    auto key = std::make_pair(std::min(visit[a], visit[b]), std::max(visit[a], visit[b]));
    if (!covered.insert(key).second) continue;
    spec.flights.push_back(Flight{visit[a], visit[b], !rng.chance(0.3)});
    --distractors;
  }

  // events on 2..4 distinct cities, windows equal to the hidden stay interval
  std::vector<int> starts(static_cast<std::size_t>(n_cities));
  int day = 1;
  for (int i = 0; i < n_cities; ++i) {
    starts[static_cast<std::size_t>(i)] = day;
    day += durations[static_cast<std::size_t>(i)] - 1;
  }
  std::vector<std::size_t> event_cities;
  for (std::size_t i = 0; i < static_cast<std::size_t>(n_cities); ++i) event_cities.push_back(i);
  rng.shuffle(event_cities);
  int n_events = rng.range(2, std::min(4, n_cities));
  for (int e = 0; e < n_events; ++e) {
    std::size_t i = event_cities[static_cast<std::size_t>(e)];
    TripEvent ev;
    ev.city = visit[i];
    ev.window_start = starts[i];
    ev.window_end = starts[i] + durations[i] - 1;
    ev.kind = rng.pick(trip_event_kinds());
    spec.events.push_back(ev);
  }

  // present cities in an order unrelated to the hidden one
  rng.shuffle(spec.cities);
  return spec;
}

}  // namespace planmodulo::gen

#pragma once

// Trip-plan answer parsing and verification. The parser reimplements the
// reference response parser's observable behavior, quirks included: visit
// ranges collected until one ends at the announced total, flight lines
// matched by a Day-from-to pattern that keeps the first from/to pair, and
// stays recomputed from flight days with sentinel days 1 and last-visit-end.

#include <optional>
#include <regex>
#include <string>
#include <vector>

#include "planmodulo/gen/trip.hpp"
#include "planmodulo/util/strings.hpp"

namespace planmodulo::csp {

using gen::TripSpec;

struct ParsedTrip {
  std::vector<std::pair<std::string, int>> segments;  // (city, stay_days)

  bool empty() const { return segments.empty(); }

  // "[['Dubrovnik', 4], ['Manchester', 4]]"
  std::string repr() const {
    std::string out = "[";
    for (std::size_t i = 0; i < segments.size(); ++i) {
      if (i) out += ", ";
      out += "['" + segments[i].first + "', " + std::to_string(segments[i].second) + "]";
    }
    out += "]";
    return out;
  }
};

inline ParsedTrip parse_trip(const std::string& text) {
  static const std::regex visit_re(R"(\d+-\d+)");
  static const std::regex flight_re(R"(.*Day (\d+).*from (\w+) to (\w+))");
  static const std::regex days_re(R"(European cities for (\d+) days)");

  std::optional<int> total_days;
  std::vector<std::string> day_ranges;
  struct FlightLine {
    int day;
    std::string from, to;
  };
  std::vector<FlightLine> flights;

  for (const std::string& line : split_lines(text)) {
    std::smatch m;
    if (std::regex_search(line, m, days_re)) total_days = std::stoi(m[1].str());
    if (std::regex_search(line, m, visit_re)) {
      std::string range = m[0].str();
      day_ranges.push_back(range);
      int end_day = std::stoi(range.substr(range.find('-') + 1));
      // reached the end of the plan; stop to avoid parsing alternatives
      if (total_days && end_day == *total_days) break;
    }
    if (std::regex_search(line, m, flight_re))
      flights.push_back({std::stoi(m[1].str()), m[2].str(), m[3].str()});
  }

  ParsedTrip parsed;
  if (day_ranges.empty() || flights.empty()) return parsed;

  std::vector<std::string> cities;
  std::vector<int> flight_days;
  for (const FlightLine& f : flights) {
    flight_days.push_back(f.day);
    if (cities.empty()) cities.push_back(f.from);
    cities.push_back(f.to);
  }

  const std::string& last_range = day_ranges.back();
  int last_day = std::stoi(last_range.substr(last_range.find('-') + 1));
  std::vector<int> days{1};
  days.insert(days.end(), flight_days.begin(), flight_days.end());
  days.push_back(last_day);

  for (std::size_t i = 0; i < cities.size(); ++i)
    parsed.segments.emplace_back(cities[i], days[i + 1] - days[i] + 1);
  return parsed;
}

enum class TripViolationKind {
  CityCount,
  RepeatVisit,
  Duration,
  MissingFlight,
  TotalDays,
  EventWindow,
};

struct TripViolation {
  TripViolationKind kind;
  std::string message;
};

struct TripReport {
  std::vector<TripViolation> violations;
  bool valid = false;
};

inline std::string event_phrase(const std::string& kind) {
  if (kind == "wedding") return "wedding";
  if (kind == "conference") return "conference";
  if (kind == "workshop") return "workshop";
  if (kind == "friend") return "meeting with a friend";
  if (kind == "relatives") return "visit to relatives";
  if (kind == "show") return "annual show";
  if (kind == "tour") return "tour with friends";
  return kind;
}

inline TripReport verify_trip(const TripSpec& spec, const ParsedTrip& parsed) {
  TripReport report;
  auto add = [&](TripViolationKind kind, std::string message) {
    report.violations.push_back({kind, std::move(message)});
  };

  if (parsed.segments.size() != spec.cities.size())
    add(TripViolationKind::CityCount,
        "Number of cities in plan is " + std::to_string(parsed.segments.size()) +
            ", expected " + std::to_string(spec.cities.size()));

  std::set<std::string> seen;
  for (const auto& [city, stay] : parsed.segments)
    if (!seen.insert(city).second)
      add(TripViolationKind::RepeatVisit, "City " + city + " is visited more than once");

  for (const auto& [city, stay] : parsed.segments) {
    int required = spec.required_days(city);
    if (required < 0)
      add(TripViolationKind::Duration, "City " + city + " is not one of the cities to visit");
    else if (stay != required)
      add(TripViolationKind::Duration, "Stay in " + city + " is " + std::to_string(stay) +
                                           " days, expected " + std::to_string(required));
  }

  for (std::size_t i = 0; i + 1 < parsed.segments.size(); ++i) {
    const std::string& from = parsed.segments[i].first;
    const std::string& to = parsed.segments[i + 1].first;
    if (!spec.flight_allowed(from, to))
      add(TripViolationKind::MissingFlight, "There is no direct flight from " + from + " to " + to);
  }

  // day arithmetic: consecutive stays share the flight day
  std::vector<std::pair<int, int>> intervals;  // aligned with segments
  int day = 1;
  for (const auto& [city, stay] : parsed.segments) {
    intervals.emplace_back(day, day + stay - 1);
    day += stay - 1;
  }
  if (!parsed.segments.empty() && day != spec.total_days)
    add(TripViolationKind::TotalDays, "Total days in plan is " + std::to_string(day) +
                                          ", expected " + std::to_string(spec.total_days));

  for (const gen::TripEvent& e : spec.events) {
    std::optional<std::pair<int, int>> interval;
    for (std::size_t i = 0; i < parsed.segments.size(); ++i)
      if (parsed.segments[i].first == e.city) interval = intervals[i];
    if (!interval) {
      add(TripViolationKind::EventWindow,
          "The " + event_phrase(e.kind) + " in " + e.city + " between day " +
              std::to_string(e.window_start) + " and day " + std::to_string(e.window_end) +
              " cannot be attended because " + e.city + " is not visited");
    } else if (e.window_start < interval->first || e.window_end > interval->second) {
      add(TripViolationKind::EventWindow,
          "The " + event_phrase(e.kind) + " in " + e.city + " between day " +
              std::to_string(e.window_start) + " and day " + std::to_string(e.window_end) +
              " does not fit the stay from day " + std::to_string(interval->first) + " to day " +
              std::to_string(interval->second));
    }
  }

  report.valid = report.violations.empty();
  return report;
}

// One violation per line, unnumbered, matching the published feedback line
// shape ("Number of cities in plan is 7, expected 10").
inline std::string trip_feedback(const TripReport& report) {
  std::vector<std::string> lines;
  for (const TripViolation& v : report.violations) lines.push_back(v.message);
  return join(lines, "\n");
}

}  // namespace planmodulo::csp

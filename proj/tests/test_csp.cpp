#include <catch2/catch_amalgamated.hpp>

#include "planmodulo/csp/calendar_verify.hpp"
#include "planmodulo/csp/coloring.hpp"
#include "planmodulo/csp/trip_verify.hpp"
#include "planmodulo/gen/graph.hpp"

#include "helpers.hpp"

using namespace planmodulo;
using namespace planmodulo::csp;
using namespace planmodulo::gen;

namespace {

// the ten-city query behind the trip fixtures
TripSpec ten_city_spec() {
  TripSpec spec;
  spec.total_days = 25;
  spec.cities = {{"Berlin", 4},    {"Prague", 2}, {"Stuttgart", 5}, {"Manchester", 3},
                 {"Nice", 2},      {"Reykjavik", 2}, {"Florence", 3}, {"Vilnius", 5},
                 {"Oslo", 4},      {"Dubrovnik", 4}};
  spec.events = {{"Berlin", 12, 15, "workshop"},
                 {"Vilnius", 15, 19, "tour"},
                 {"Dubrovnik", 1, 4, "relatives"}};
  spec.flights.push_back({"Reykjavik", "Stuttgart", false});
  for (auto [a, b] : std::vector<std::pair<const char*, const char*>>{
           {"Manchester", "Stuttgart"}, {"Nice", "Berlin"},      {"Oslo", "Prague"},
           {"Stuttgart", "Berlin"},     {"Manchester", "Nice"},  {"Reykjavik", "Oslo"},
           {"Reykjavik", "Prague"},     {"Manchester", "Prague"}, {"Reykjavik", "Berlin"},
           {"Dubrovnik", "Manchester"}, {"Manchester", "Oslo"},  {"Manchester", "Berlin"},
           {"Prague", "Florence"},      {"Berlin", "Vilnius"},   {"Dubrovnik", "Oslo"},
           {"Nice", "Oslo"},            {"Berlin", "Oslo"},      {"Nice", "Reykjavik"},
           {"Vilnius", "Oslo"}})
    spec.flights.push_back({a, b, true});
  return spec;
}

// the five-person scheduling query behind the calendar fixtures
CalendarSpec five_person_spec() {
  CalendarSpec spec;
  spec.duration_minutes = 30;
  auto busy = [](std::initializer_list<std::pair<int, int>> list) {
    std::vector<MinuteInterval> v;
    for (auto [s, e] : list) v.push_back({s, e});
    return v;
  };
  spec.participants = {
      {"Stephen", {}},
      {"Elijah", busy({{540, 570}, {750, 780}, {870, 900}, {960, 990}})},
      {"William", busy({{570, 600}, {930, 960}})},
      {"Jeremy", busy({{540, 570}, {600, 720}, {780, 900}, {930, 1020}})},
      {"Timothy", busy({{600, 630}, {690, 870}, {930, 960}})},
  };
  return spec;
}

}  // namespace

TEST_CASE("parse_coloring: the twenty-line answer fixture") {
  Coloring c = parse_coloring(testutil::fixture("responses/coloring_20vertex.txt"));
  CHECK(c.assignment.size() == 20);
  CHECK(c.assignment.at(0) == "1");
  CHECK(c.assignment.at(19) == "2");
}

TEST_CASE("parse_coloring: edge behavior") {
  CHECK(parse_coloring("").assignment.empty());
  CHECK(parse_coloring("garbage\nmore garbage").assignment.empty());

  Coloring c = parse_coloring("0: red\n0: blue");
  CHECK(c.assignment.at(0) == "blue");  // last write wins

  // sentinel stops the scan
  c = parse_coloring("0: red\n[ANSWER END]\n1: blue");
  CHECK(c.assignment.size() == 1);

  // non-matching lines between assignments are ignored
  c = parse_coloring("Here is my answer:\n0: 1\nbecause it works\n1: 2");
  CHECK(c.assignment.size() == 2);
}

TEST_CASE("verify_coloring: proper three-coloring of the five-cycle") {
  Graph c5;
  c5.n = 5;
  c5.edges = {{0, 1}, {0, 4}, {1, 2}, {2, 3}, {3, 4}};
  Coloring c;
  c.assignment = {{0, "1"}, {1, "2"}, {2, "1"}, {3, "2"}, {4, "3"}};
  ColoringReport r = verify_coloring(c5, 3, c);
  CHECK(r.valid);
  CHECK(r.colors_used == 3);

  // same coloring against k=4 fails the exact-count rule
  r = verify_coloring(c5, 4, c);
  CHECK_FALSE(r.valid);
  CHECK(r.colors_used == 3);
  CHECK(r.monochromatic.empty());
}

TEST_CASE("verify_coloring: missing vertices and monochromatic edges") {
  Graph k3;
  k3.n = 3;
  k3.edges = {{0, 1}, {0, 2}, {1, 2}};

  Coloring partial;
  partial.assignment = {{0, "1"}, {1, "2"}};
  ColoringReport r = verify_coloring(k3, 3, partial);
  CHECK_FALSE(r.valid);
  REQUIRE(r.missing_vertices.size() == 1);
  CHECK(r.missing_vertices[0] == 2);

  Coloring mono;
  mono.assignment = {{0, "1"}, {1, "1"}, {2, "1"}};
  r = verify_coloring(k3, 3, mono);
  CHECK(r.monochromatic.size() == 3);
  CHECK(r.colors_used == 1);
}

TEST_CASE("coloring_feedback: unassigned-vertex lines reproduce the golden text") {
  // the golden feedback enumerates, per edge, one line per missing endpoint;
  // rebuild the graph from those line pairs and regenerate the text
  std::string golden = testutil::golden("coloring_feedback_unassigned.txt");
  std::vector<std::string> lines = split_lines(golden);
  Graph g;
  g.n = 20;
  for (std::size_t i = 1; i + 1 < lines.size(); i += 2) {
    if (lines[i].empty()) break;
    auto vertex_of = [](const std::string& line) {
      return std::stoi(split_ws(line)[1]);
    };
    g.edges.emplace_back(vertex_of(lines[i]), vertex_of(lines[i + 1]));
  }
  REQUIRE(g.edges.size() == 84);

  Coloring empty;
  ColoringReport r = verify_coloring(g, 5, empty);
  REQUIRE_FALSE(r.valid);
  CHECK(r.missing_vertices.size() == 20);
  CHECK(coloring_feedback(g, r, empty) == golden);
}

TEST_CASE("coloring_feedback: same-color line and exact-count line") {
  Graph g;
  g.n = 2;
  g.edges = {{0, 1}};
  Coloring c;
  c.assignment = {{0, "3"}, {1, "3"}};
  ColoringReport r = verify_coloring(g, 2, c);
  std::string text = coloring_feedback(g, r, c);
  CHECK(text.find("Vertices 0 and 1 share an edge and are both colored 3.") != std::string::npos);
  CHECK(text.find("The coloring uses 1 colors, but exactly 2 colors must be used.") !=
        std::string::npos);

  Coloring ok;
  ok.assignment = {{0, "1"}, {1, "2"}};
  CHECK_THROWS_AS(coloring_feedback(g, verify_coloring(g, 2, ok), ok), std::logic_error);
}

TEST_CASE("parse_trip: the seven-segment response parses to the reference result") {
  ParsedTrip p = parse_trip(testutil::fixture("responses/trip_10city_7segments.txt"));
  std::vector<std::pair<std::string, int>> expected = {
      {"Dubrovnik", 4}, {"Manchester", 4}, {"Stuttgart", 6}, {"Berlin", 4},
      {"Vilnius", 5},   {"Oslo", 5},       {"Reykjavik", 3}};
  CHECK(p.segments == expected);
  CHECK(p.repr() ==
        "[['Dubrovnik', 4], ['Manchester', 4], ['Stuttgart', 6], ['Berlin', 4], "
        "['Vilnius', 5], ['Oslo', 5], ['Reykjavik', 3]]");
}

TEST_CASE("parse_trip: the corrected ten-segment response") {
  ParsedTrip p = parse_trip(testutil::fixture("responses/trip_10city_corrected.txt"));
  REQUIRE(p.segments.size() == 10);
  CHECK(p.segments.front() == std::pair<std::string, int>{"Dubrovnik", 4});
  CHECK(p.segments.back() == std::pair<std::string, int>{"Florence", 4});
  // flight-day arithmetic: stays are differences of flight days plus one
  int total = 0;
  for (const auto& [city, stay] : p.segments) total += stay - 1;
  CHECK(total + 1 == 25);
}

TEST_CASE("parse_trip: structural failures give an empty parse") {
  CHECK(parse_trip("no flights here, just days 1-5").empty());
  CHECK(parse_trip("").empty());
  CHECK(parse_trip("**Day 3:** Fly from A to B.").empty());  // no visit ranges
}

TEST_CASE("verify_trip: city-count violation renders the exact feedback line") {
  TripSpec spec = ten_city_spec();
  ParsedTrip p = parse_trip(testutil::fixture("responses/trip_10city_7segments.txt"));
  TripReport r = verify_trip(spec, p);
  REQUIRE_FALSE(r.valid);
  CHECK(r.violations.front().message == testutil::golden("trip_feedback_line.txt"));
  CHECK(trip_feedback(r).find("Number of cities in plan is 7, expected 10") == 0);
}

TEST_CASE("verify_trip: a feasible itinerary for the ten-city query validates") {
  TripSpec spec = ten_city_spec();
  auto itinerary = solve_trip(spec);
  REQUIRE(itinerary.has_value());
  ParsedTrip parsed;
  parsed.segments = *itinerary;
  TripReport r = verify_trip(spec, parsed);
  CHECK(r.valid);
}

TEST_CASE("verify_trip: missing flights and wrong durations are flagged") {
  TripSpec spec = ten_city_spec();
  auto itinerary = solve_trip(spec);
  REQUIRE(itinerary.has_value());

  ParsedTrip swapped;
  swapped.segments = *itinerary;
  std::swap(swapped.segments[1], swapped.segments[2]);
  TripReport r = verify_trip(spec, swapped);
  CHECK_FALSE(r.valid);
  bool flight_violation = false;
  for (const TripViolation& v : r.violations)
    if (v.kind == TripViolationKind::MissingFlight) flight_violation = true;
  CHECK(flight_violation);

  ParsedTrip wrong_duration;
  wrong_duration.segments = *itinerary;
  wrong_duration.segments[0].second += 1;
  r = verify_trip(spec, wrong_duration);
  CHECK_FALSE(r.valid);
  bool duration_violation = false;
  for (const TripViolation& v : r.violations)
    if (v.kind == TripViolationKind::Duration) duration_violation = true;
  CHECK(duration_violation);

  ParsedTrip repeated;
  repeated.segments = *itinerary;
  repeated.segments[1] = repeated.segments[0];
  r = verify_trip(spec, repeated);
  bool repeat_violation = false;
  for (const TripViolation& v : r.violations)
    if (v.kind == TripViolationKind::RepeatVisit) repeat_violation = true;
  CHECK(repeat_violation);
}

TEST_CASE("parse_calendar: solution lines") {
  auto slot = parse_calendar(testutil::fixture("responses/calendar_monday_1500.txt"));
  REQUIRE(slot.has_value());
  CHECK(slot->day == "Monday");
  CHECK(slot->start_min == 15 * 60);
  CHECK(slot->end_min == 15 * 60 + 30);

  CHECK_FALSE(parse_calendar("").has_value());
  CHECK_FALSE(parse_calendar("no proposal, sorry").has_value());

  auto last = parse_calendar("Monday, 9:00 - 9:30\nactually Monday, 10:00 - 10:30");
  REQUIRE(last.has_value());
  CHECK(last->start_min == 600);
}

TEST_CASE("verify_calendar: the proposed slot fits everyone") {
  CalendarSpec spec = five_person_spec();
  CHECK(verify_calendar(spec, {"Monday", 900, 930}).valid);

  // 9:00 collides with Elijah and Jeremy
  CalendarReport r = verify_calendar(spec, {"Monday", 540, 570});
  CHECK_FALSE(r.valid);
  CHECK(r.violations.size() == 2);
  CHECK(r.violations[0].message.find("Elijah") == 0);
  CHECK(r.violations[1].message.find("Jeremy") == 0);

  // touching endpoints do not conflict (half-open intervals)
  CHECK(verify_calendar(spec, {"Monday", 900, 930}).valid);

  r = verify_calendar(spec, {"Monday", 16 * 60 + 45, 17 * 60 + 15});
  CHECK_FALSE(r.valid);
  CHECK(r.violations[0].kind == CalendarViolationKind::OutsideHours);

  r = verify_calendar(spec, {"Tuesday", 900, 930});
  CHECK_FALSE(r.valid);

  r = verify_calendar(spec, {"Monday", 900, 960});
  bool duration = false;
  for (const auto& v : r.violations)
    if (v.kind == CalendarViolationKind::WrongDuration) duration = true;
  CHECK(duration);
}

TEST_CASE("verify_calendar: preferences") {
  CalendarSpec spec = five_person_spec();
  spec.preferences.push_back(
      {"Stephen", gen::CalendarPreference::Kind::NotAfter, 12 * 60 + 30});
  CalendarReport r = verify_calendar(spec, {"Monday", 900, 930});
  CHECK_FALSE(r.valid);
  CHECK(r.violations[0].kind == CalendarViolationKind::Preference);
  CHECK(r.violations[0].message == "Stephen can not meet on Monday after 12:30");

  // a slot ending exactly at the bound is fine
  spec.preferences[0] = {"Stephen", gen::CalendarPreference::Kind::NotBefore, 600};
  CHECK_FALSE(verify_calendar(spec, {"Monday", 570, 600}).valid);
  CHECK(verify_calendar(spec, {"Monday", 900, 930}).valid);
}

TEST_CASE("solve_calendar: the unique half-hour slot") {
  CalendarSpec spec = five_person_spec();
  auto slot = solve_calendar(spec);
  REQUIRE(slot.has_value());
  CHECK(*slot == TimeSlot{"Monday", 900, 930});

  // sweep: exactly one of the sixteen aligned slots is valid
  int valid_count = 0;
  for (int start = kWorkStartMin; start + 30 <= kWorkEndMin; start += 30)
    if (verify_calendar(spec, {"Monday", start, start + 30}).valid) ++valid_count;
  CHECK(valid_count == 1);
}

TEST_CASE("solve_calendar: trivial cases") {
  CalendarSpec all_free;
  all_free.duration_minutes = 30;
  all_free.participants = {{"Solo", {}}};
  auto slot = solve_calendar(all_free);
  REQUIRE(slot.has_value());
  CHECK(*slot == TimeSlot{"Monday", 540, 570});  // earliest slot

  CalendarSpec blocked = all_free;
  blocked.participants[0].busy = {{540, 1020}};
  CHECK_FALSE(solve_calendar(blocked).has_value());
}

TEST_CASE("solve_calendar: agrees with exhaustive enumeration") {
  for (std::uint64_t seed = 1; seed <= 30; ++seed) {
    CalendarSpec spec = gen_calendar(4, 30, seed);
    auto slot = solve_calendar(spec);
    bool any = false;
    for (int start = kWorkStartMin; start + 30 <= kWorkEndMin; start += 30)
      if (verify_calendar(spec, {"Monday", start, start + 30}).valid) {
        any = true;
        break;
      }
    CHECK(slot.has_value() == any);
    if (slot) CHECK(verify_calendar(spec, *slot).valid);
  }
}

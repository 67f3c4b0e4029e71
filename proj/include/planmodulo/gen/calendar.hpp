#pragma once

// Calendar-scheduling specs: participants with busy intervals on one work
// day (9:00-17:00), a required meeting duration and optional not-before /
// not-after preferences. Generation reserves a hidden feasible slot first,
// so every emitted spec has a solution.

#include <optional>
#include <string>
#include <vector>

#include "planmodulo/util/rng.hpp"
#include "planmodulo/util/strings.hpp"

#include <json.hpp>

namespace planmodulo::gen {

inline constexpr int kWorkStartMin = 9 * 60;
inline constexpr int kWorkEndMin = 17 * 60;

struct MinuteInterval {
  int start = 0;  // minutes since midnight, half-open [start, end)
  int end = 0;

  bool overlaps(const MinuteInterval& other) const {
    return std::max(start, other.start) < std::min(end, other.end);
  }
  friend bool operator==(const MinuteInterval& a, const MinuteInterval& b) {
    return a.start == b.start && a.end == b.end;
  }
};

inline std::string format_clock(int minutes) {
  return std::to_string(minutes / 60) + ":" +
         (minutes % 60 < 10 ? "0" : "") + std::to_string(minutes % 60);
}

struct CalendarParticipant {
  std::string name;
  std::vector<MinuteInterval> busy;  // sorted, merged, within work hours
};

struct CalendarPreference {
  std::string participant;
  enum class Kind { NotBefore, NotAfter } kind = Kind::NotBefore;
  int minute = kWorkStartMin;
};

struct CalendarSpec {
  std::string day = "Monday";
  int duration_minutes = 30;
  std::vector<CalendarParticipant> participants;
  std::vector<CalendarPreference> preferences;
};

inline void to_json(nlohmann::json& j, const CalendarSpec& s) {
  j = nlohmann::json::object();
  j["day"] = s.day;
  j["duration_minutes"] = s.duration_minutes;
  j["participants"] = nlohmann::json::array();
  for (const CalendarParticipant& p : s.participants) {
    nlohmann::json busy = nlohmann::json::array();
    for (const MinuteInterval& iv : p.busy) busy.push_back({{"start", iv.start}, {"end", iv.end}});
    j["participants"].push_back({{"name", p.name}, {"busy", busy}});
  }
  j["preferences"] = nlohmann::json::array();
  for (const CalendarPreference& pref : s.preferences)
    j["preferences"].push_back(
        {{"participant", pref.participant},
         {"kind", pref.kind == CalendarPreference::Kind::NotBefore ? "not-before" : "not-after"},
         {"minute", pref.minute}});
}

inline void from_json(const nlohmann::json& j, CalendarSpec& s) {
  s = CalendarSpec{};
  s.day = j.at("day").get<std::string>();
  s.duration_minutes = j.at("duration_minutes").get<int>();
  for (const auto& p : j.at("participants")) {
    CalendarParticipant cp;
    cp.name = p.at("name").get<std::string>();
    for (const auto& iv : p.at("busy"))
      cp.busy.push_back(MinuteInterval{iv.at("start").get<int>(), iv.at("end").get<int>()});
    s.participants.push_back(std::move(cp));
  }
  for (const auto& pref : j.at("preferences"))
    s.preferences.push_back(CalendarPreference{
        pref.at("participant").get<std::string>(),
        pref.at("kind").get<std::string>() == "not-before" ? CalendarPreference::Kind::NotBefore
                                                           : CalendarPreference::Kind::NotAfter,
        pref.at("minute").get<int>()});
}

inline const std::vector<std::string>& calendar_name_pool() {
  static const std::vector<std::string> pool = {
      "George",  "Steven",  "Aaron",   "Patrick", "Cynthia", "Elizabeth", "Eugene",
      "Nancy",   "Justin",  "Roy",     "Mason",   "Linda",   "Barbara",   "Roger",
      "Lisa",    "Thomas",  "Olivia",  "Doris",   "Amber",   "Ronald",    "Kathleen",
      "Frank",   "Patricia", "Carolyn", "Stephen", "Elijah",  "William",   "Jeremy",
      "Timothy", "Helen",   "Walter",  "Diana",   "Gerald",  "Sophie",    "Victor"};
  return pool;
}

inline CalendarSpec gen_calendar(int n_participants, int duration_minutes, std::uint64_t seed) {
  if (n_participants < 1) throw std::invalid_argument("need at least one participant");
  if (duration_minutes <= 0 || duration_minutes % 30 != 0)
    throw std::invalid_argument("duration must be a positive multiple of 30 minutes");
  Rng rng(seed);

  CalendarSpec spec;
  spec.duration_minutes = duration_minutes;

  std::vector<std::string> pool = calendar_name_pool();
  rng.shuffle(pool);

  // reserve the hidden feasible slot on the half-hour grid
  const int slots = (kWorkEndMin - kWorkStartMin - duration_minutes) / 30 + 1;
  const int hidden_start = kWorkStartMin + 30 * rng.range(0, slots - 1);
  const MinuteInterval hidden{hidden_start, hidden_start + duration_minutes};

  for (int i = 0; i < n_participants; ++i) {
    CalendarParticipant p;
    p.name = pool[static_cast<std::size_t>(i)];
    if (!rng.chance(0.2)) {  // some participants stay entirely free
      MinuteInterval current{0, 0};
      for (int t = kWorkStartMin; t < kWorkEndMin; t += 30) {
        MinuteInterval cell{t, t + 30};
        bool busy = !cell.overlaps(hidden) && rng.chance(0.45);
        if (busy) {
          if (current.end == t)
            current.end = cell.end;  // merge with the running block
          else {
            if (current.end > current.start) p.busy.push_back(current);
            current = cell;
          }
        }
      }
      if (current.end > current.start) p.busy.push_back(current);
    }
    spec.participants.push_back(std::move(p));
  }

  // optional preferences consistent with the hidden slot
  if (n_participants > 0 && rng.chance(0.5)) {
    CalendarPreference pref;
    pref.participant = spec.participants[rng.index(spec.participants.size())].name;
    if (rng.chance(0.5)) {
      pref.kind = CalendarPreference::Kind::NotBefore;
      pref.minute = kWorkStartMin + 30 * rng.range(0, (hidden.start - kWorkStartMin) / 30);
    } else {
      pref.kind = CalendarPreference::Kind::NotAfter;
      pref.minute = hidden.end + 30 * rng.range(0, (kWorkEndMin - hidden.end) / 30);
    }
    spec.preferences.push_back(pref);
  }
  return spec;
}

}  // namespace planmodulo::gen

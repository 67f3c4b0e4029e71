#pragma once

// Calendar answer parsing, verification and the exhaustive slot oracle.
// Intervals are half-open: a meeting may start exactly when a busy block
// ends.

#include <optional>
#include <regex>
#include <string>
#include <vector>

#include "planmodulo/gen/calendar.hpp"
#include "planmodulo/util/strings.hpp"

namespace planmodulo::csp {

using gen::CalendarPreference;
using gen::CalendarSpec;
using gen::format_clock;
using gen::MinuteInterval;
using gen::kWorkEndMin;
using gen::kWorkStartMin;

struct TimeSlot {
  std::string day = "Monday";
  int start_min = 0;
  int end_min = 0;

  std::string text() const {
    return day + ", " + format_clock(start_min) + " - " + format_clock(end_min);
  }
  friend bool operator==(const TimeSlot& a, const TimeSlot& b) {
    return a.day == b.day && a.start_min == b.start_min && a.end_min == b.end_min;
  }
};

// Extracts the day name and H:MM - H:MM range from the LAST line matching
// the solution pattern; no match means the answer is unparseable and counts
// as incorrect upstream.
inline std::optional<TimeSlot> parse_calendar(const std::string& text) {
  static const std::regex slot_re(
      R"((Monday|Tuesday|Wednesday|Thursday|Friday|Saturday|Sunday)\s*,\s*(\d{1,2}):(\d{2})\s*-\s*(\d{1,2}):(\d{2}))");
  std::optional<TimeSlot> slot;
  for (const std::string& line : split_lines(text)) {
    std::smatch m;
    if (std::regex_search(line, m, slot_re)) {
      TimeSlot s;
      s.day = m[1].str();
      s.start_min = std::stoi(m[2].str()) * 60 + std::stoi(m[3].str());
      s.end_min = std::stoi(m[4].str()) * 60 + std::stoi(m[5].str());
      slot = s;
    }
  }
  return slot;
}

enum class CalendarViolationKind { OutsideHours, BusyOverlap, WrongDuration, Preference };

struct CalendarViolation {
  CalendarViolationKind kind;
  std::string message;
};

struct CalendarReport {
  std::vector<CalendarViolation> violations;
  bool valid = false;
};

inline CalendarReport verify_calendar(const CalendarSpec& spec, const TimeSlot& slot) {
  CalendarReport report;
  auto add = [&](CalendarViolationKind kind, std::string message) {
    report.violations.push_back({kind, std::move(message)});
  };

  if (slot.day != spec.day)
    add(CalendarViolationKind::OutsideHours,
        "The proposed day is " + slot.day + ", expected " + spec.day);
  if (slot.start_min < kWorkStartMin || slot.end_min > kWorkEndMin ||
      slot.start_min >= slot.end_min)
    add(CalendarViolationKind::OutsideHours,
        "The proposed time " + format_clock(slot.start_min) + " - " +
            format_clock(slot.end_min) + " is outside the work hours of 9:00 to 17:00");
  if (slot.end_min - slot.start_min != spec.duration_minutes)
    add(CalendarViolationKind::WrongDuration,
        "The proposed meeting lasts " + std::to_string(slot.end_min - slot.start_min) +
            " minutes, expected " + std::to_string(spec.duration_minutes) + " minutes");

  MinuteInterval proposed{slot.start_min, slot.end_min};
  for (const auto& participant : spec.participants)
    for (const MinuteInterval& busy : participant.busy)
      if (busy.overlaps(proposed))
        add(CalendarViolationKind::BusyOverlap,
            participant.name + " is busy during " + format_clock(busy.start) + " to " +
                format_clock(busy.end) + ", which overlaps the proposed time");

  for (const CalendarPreference& pref : spec.preferences) {
    if (pref.kind == CalendarPreference::Kind::NotBefore && slot.start_min < pref.minute)
      add(CalendarViolationKind::Preference, pref.participant + " can not meet on " + spec.day +
                                                 " before " + format_clock(pref.minute));
    if (pref.kind == CalendarPreference::Kind::NotAfter && slot.end_min > pref.minute)
      add(CalendarViolationKind::Preference, pref.participant + " can not meet on " + spec.day +
                                                 " after " + format_clock(pref.minute));
  }

  report.valid = report.violations.empty();
  return report;
}

// Earliest valid slot scanning half-hour-aligned starts in time order.
inline std::optional<TimeSlot> solve_calendar(const CalendarSpec& spec) {
  for (int start = kWorkStartMin; start + spec.duration_minutes <= kWorkEndMin; start += 30) {
    TimeSlot slot{spec.day, start, start + spec.duration_minutes};
    if (verify_calendar(spec, slot).valid) return slot;
  }
  return std::nullopt;
}

inline std::string calendar_feedback(const CalendarReport& report) {
  std::string out = "This is incorrect. Feedback:\n";
  for (const CalendarViolation& v : report.violations) out += v.message + "\n";
  out += "\nUsing this feedback, please try again.\n";
  out += "Produce only one meeting time, strictly adhering to the format shown in the examples "
         "above, without providing any extra information.";
  return out;
}

}  // namespace planmodulo::csp

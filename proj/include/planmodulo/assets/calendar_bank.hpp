#pragma once

// Few-shot example bank and header for the calendar-scheduling prompt.

#include <array>
#include <string_view>

namespace planmodulo::assets {

inline constexpr std::string_view kCalendarPromptHeader = R"PM(You are an expert at scheduling meetings. You are given a few constraints on the existing schedule of each participant, the meeting duration, and possibly some preferences on the meeting time. Note there exists a solution that works with existing schedule of every participant. Produce only one meeting time, strictly adhering to the format shown in the examples below, without providing any extra information. Here are a few example tasks and solutions:)PM";

inline constexpr std::string_view kCalendarExample0 = R"PM(TASK: You need to schedule a meeting for George, Steven, Aaron, Patrick and Cynthia for half an hour between the work hours of 9:00 to 17:00 on Monday. 

Here are the existing schedules for everyone during the day: 
Georgehas no meetings the whole day.
Steven is free the entire day.
Aaron has blocked their calendar on Monday during 9:00 to 10:00, 11:30 to 12:00, 15:30 to 17:00; 
Patrick has blocked their calendar on Monday during 9:00 to 9:30, 10:00 to 11:00, 11:30 to 12:00, 12:30 to 14:00, 15:00 to 15:30; 
Cynthia is busy on Monday during 9:00 to 9:30, 10:30 to 11:30, 12:30 to 14:30, 15:00 to 16:30; 

Aaron can not meet on Monday after 12:30. Find a time that works for everyone's schedule and constraints. 
SOLUTION: Here is the proposed time: Monday, 12:00 - 12:30 )PM";

inline constexpr std::string_view kCalendarExample1 = R"PM(TASK: You need to schedule a meeting for Elizabeth, Eugene, Nancy, Justin and Roy for half an hour between the work hours of 9:00 to 17:00 on Monday. 

Here are the existing schedules for everyone during the day: 
Elizabeth's calendar is wide open the entire day.
Eugene has blocked their calendar on Monday during 12:00 to 12:30, 13:30 to 14:00, 15:00 to 16:00; 
Nancy has meetings on Monday during 10:30 to 11:00, 12:00 to 13:00, 14:00 to 14:30, 15:00 to 16:00; 
Justin has meetings on Monday during 9:30 to 10:00, 10:30 to 11:30, 12:00 to 12:30, 13:00 to 13:30, 14:30 to 17:00; 
Roy is busy on Monday during 10:00 to 11:00, 11:30 to 12:30, 13:30 to 14:00, 14:30 to 16:00; 

Find a time that works for everyone's schedule and constraints. 
SOLUTION: Here is the proposed time: Monday, 9:00 - 9:30 )PM";

inline constexpr std::string_view kCalendarExample2 = R"PM(TASK: You need to schedule a meeting for Mason, Linda, Barbara, Roger and Lisa for half an hour between the work hours of 9:00 to 17:00 on Monday. 

Here are the existing schedules for everyone during the day: 
Masonhas no meetings the whole day.
Linda is busy on Monday during 9:30 to 11:00, 12:00 to 12:30, 13:00 to 13:30, 16:30 to 17:00; 
Barbara has blocked their calendar on Monday during 9:00 to 9:30, 12:00 to 13:00, 15:30 to 16:00; 
Roger has meetings on Monday during 9:00 to 9:30, 13:00 to 14:30, 15:00 to 17:00; 
Lisa has blocked their calendar on Monday during 9:00 to 10:00, 10:30 to 11:30, 12:00 to 12:30, 13:00 to 14:30, 15:00 to 17:00; 

Mason would rather not meet on Monday after 13:30. Find a time that works for everyone's schedule and constraints. 
SOLUTION: Here is the proposed time: Monday, 11:30 - 12:00 )PM";

inline constexpr std::string_view kCalendarExample3 = R"PM(TASK: You need to schedule a meeting for Thomas, Olivia, Doris, Amber and Ronald for half an hour between the work hours of 9:00 to 17:00 on Monday. 

Here are the existing schedules for everyone during the day: 
Thomas has meetings on Monday during 12:00 to 12:30, 16:30 to 17:00; 
Olivia has blocked their calendar on Monday during 10:30 to 11:30, 13:00 to 14:00, 16:00 to 17:00; 
Doris is busy on Monday during 13:30 to 14:00, 16:30 to 17:00; 
Amber is busy on Monday during 10:00 to 10:30, 12:00 to 13:00, 14:00 to 15:00, 15:30 to 17:00; 
Ronald has meetings on Monday during 9:30 to 11:30, 12:00 to 13:00, 13:30 to 14:00, 15:00 to 15:30; 

Ronald would rather not meet on Monday before 11:30. Find a time that works for everyone's schedule and constraints. 
SOLUTION: Here is the proposed time: Monday, 11:30 - 12:00 )PM";

inline constexpr std::string_view kCalendarExample4 = R"PM(TASK: You need to schedule a meeting for Patrick, Kathleen, Frank, Patricia and Carolyn for half an hour between the work hours of 9:00 to 17:00 on Monday. 

Here are the existing schedules for everyone during the day: 
Patrick is free the entire day.
Kathleen has meetings on Monday during 9:30 to 10:00, 15:00 to 15:30; 
Frank has blocked their calendar on Monday during 11:00 to 11:30, 15:30 to 17:00; 
Patricia is busy on Monday during 9:00 to 12:00, 14:30 to 15:00, 16:00 to 16:30; 
Carolyn has meetings on Monday during 9:00 to 9:30, 11:00 to 12:30, 13:00 to 17:00; 

Find a time that works for everyone's schedule and constraints. 
SOLUTION: Here is the proposed time: Monday, 12:30 - 13:00 )PM";

inline constexpr std::array<std::string_view, 5> kCalendarExamples = {
    kCalendarExample0, kCalendarExample1, kCalendarExample2, kCalendarExample3,
    kCalendarExample4};

}  // namespace planmodulo::assets

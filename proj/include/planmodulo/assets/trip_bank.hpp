#pragma once

// Few-shot example bank and fixed header texts for the trip-planning
// prompt family.

#include <array>
#include <string_view>

namespace planmodulo::assets {

inline constexpr std::string_view kTripPromptHeader = R"PM(You are an expert at planning trips. You are given a few constraints regarding the cities to visit and the durations of staying at each city. You are also given the flight information between the cities('and' suggests flights are possible both ways and 'from - to -' suggests one way flights). You can travel to any city only once.
Produce only one plan, strictly adhering to the format shown in the examples below, without any extra information. Your answer shold start with 'SOLUTION:'.
Here are a few example tasks and solutions:)PM";

inline constexpr std::string_view kTripFixHeader = R"PM(You are an expert at planning trips. Fix the below given trip schedule such that it meets as many specified constraints as possible. You are given a few constraints regarding the cities to visit and the durations of staying at each city. You are also given the flight information between the cities.
Produce only one plan, strictly adhering to the format shown in the examples below, without any extra information.

The produced plan will be parsed using the following python code:

```python
def parse_response(response: str):
  """Parse the response.

  Returns a parsed plan in a list of (city, stay_days) tuples.

  Args:
    response: Raw response from the model.

  Returns:
    Structured plan after parsing.
  """
  pattern_visit = r'\d+-\d+'
  pattern_flight = r'.*Day (\d+).*from (\w+) to (\w+)'
  pattern_days = r'European cities for (\d+) days'

  days, flights, flight_days = [], [], []
  total_days = None
  for piece in response.split('\n'):
    days_match = re.findall(pattern_days, piece)
    if days_match:
      total_days = int(days_match[0])

    visit_match = re.findall(pattern_visit, piece)
    if visit_match:
      days.append(visit_match[0])
      end_day = int(visit_match[0].split('-')[1])
      # Reach the end of the plan, stop to avoid parsing alternative plans.
      if end_day == total_days:
        break
    flight_match = re.findall(pattern_flight, piece)
    if flight_match:
      flights.append(flight_match[0])

  visit_cities, parsed_plan = [], []
  for flight_day, begin_city, end_city in flights:
    flight_days.append(int(flight_day))
    if not visit_cities:
      visit_cities.append(begin_city)
      visit_cities.append(end_city)
    else:
      visit_cities.append(end_city)

  if not days or not flights or not visit_cities:
    return []
  last_day = int(days[-1].split('-')[1])
  flight_days = [1] + flight_days + [last_day]
  for i, visit_city in enumerate(visit_cities):
    city_stay = flight_days[i + 1] - flight_days[i] + 1
    parsed_plan.append((visit_city, city_stay))

  return parsed_plan
```

Here are a few example tasks and solutions:)PM";

inline constexpr std::string_view kTripExample0 = R"PM(TASK: You plan to visit 10 European cities for 21 days in total. You only take direct flights to commute between cities. You plan to stay in Vienna for 3 days. You want to spend 5 days in Frankfurt. You want to spend 2 days in Oslo. You are going to attend a wedding in Oslo between day 20 and day 21. You want to spend 3 days in Prague. You would like to visit Valencia for 2 days. You want to meet a friend in Valencia between day 17 and day 18. You plan to stay in Dubrovnik for 2 days. You would like to visit Edinburgh for 5 days. From day 1 to day 5, there is a annual show you want to attend in Edinburgh. You plan to stay in London for 2 days. You plan to visit relatives in London between day 12 and day 13. You would like to visit Munich for 3 days. You would like to meet your friends at Munich between day 18 and day 20 to tour together. You would like to visit Budapest for 3 days.

Here are the cities that have direct flights:
Valencia and Munich, Vienna and Munich, Vienna and Valencia, London and Budapest, London and Oslo, Edinburgh and Budapest, Frankfurt and Budapest, Frankfurt and London, Prague and Oslo, Edinburgh and Oslo, Edinburgh and Munich, Prague and Munich, London and Prague, Edinburgh and London, Edinburgh and Frankfurt, Dubrovnik and Munich, Dubrovnik and Vienna, Munich and Oslo, Dubrovnik and Oslo, Budapest and Munich, Frankfurt and Prague, Vienna and London, Frankfurt and Vienna, Frankfurt and Oslo, Frankfurt and Munich, Vienna and Oslo, Vienna and Prague, Budapest and Oslo, Budapest and Prague, London and Valencia, London and Munich, Frankfurt and Dubrovnik, Prague and Valencia, Frankfurt and Valencia, Edinburgh and Prague, Vienna and Budapest.

Find a trip plan of visiting the cities for 21 days by taking direct flights to commute between them.
SOLUTION: Here is the trip plan for visiting the 10 European cities for 21 days:

**Day 1-5:** Arriving in Edinburgh and visit Edinburgh for 5 days.
**Day 5:** Fly from Edinburgh to Frankfurt.
**Day 5-9:** Visit Frankfurt for 5 days.
**Day 9:** Fly from Frankfurt to Dubrovnik.
**Day 9-10:** Visit Dubrovnik for 2 days.
**Day 10:** Fly from Dubrovnik to Vienna.
**Day 10-12:** Visit Vienna for 3 days.
**Day 12:** Fly from Vienna to London.
**Day 12-13:** Visit London for 2 days.
**Day 13:** Fly from London to Budapest.
**Day 13-15:** Visit Budapest for 3 days.
**Day 15:** Fly from Budapest to Prague.
**Day 15-17:** Visit Prague for 3 days.
**Day 17:** Fly from Prague to Valencia.
**Day 17-18:** Visit Valencia for 2 days.
**Day 18:** Fly from Valencia to Munich.
**Day 18-20:** Visit Munich for 3 days.
**Day 20:** Fly from Munich to Oslo.
**Day 20-21:** Visit Oslo for 2 days.)PM";

inline constexpr std::string_view kTripExample1 = R"PM(TASK: You plan to visit 10 European cities for 22 days in total. You only take direct flights to commute between cities. You want to spend 4 days in Helsinki. You plan to stay in Vilnius for 2 days. You plan to stay in Istanbul for 5 days. From day 17 to day 21, there is a annual show you want to attend in Istanbul. You want to spend 2 days in Hamburg. You plan to stay in Porto for 2 days. During day 11 and day 12, you have to attend a conference in Porto. You want to spend 4 days in Athens. You would like to visit Prague for 2 days. You plan to visit relatives in Prague between day 13 and day 14. You want to spend 2 days in Frankfurt. You want to spend 3 days in Krakow. You want to spend 5 days in Munich. You would like to meet your friends at Munich between day 1 and day 5 to tour together.

Here are the cities that have direct flights:
from Krakow to Vilnius, Helsinki and Hamburg, Hamburg and Athens, Munich and Frankfurt, Hamburg and Porto, Munich and Istanbul, Prague and Athens, Frankfurt and Athens, Munich and Athens, Munich and Prague, from Vilnius to Munich, Hamburg and Istanbul, Frankfurt and Istanbul, Munich and Krakow, Munich and Hamburg, Munich and Helsinki, Prague and Istanbul, Frankfurt and Vilnius, Helsinki and Istanbul, Athens and Vilnius, Krakow and Frankfurt, Helsinki and Frankfurt, Porto and Frankfurt, Frankfurt and Prague, Istanbul and Vilnius, Krakow and Istanbul, Krakow and Prague, Munich and Porto, Helsinki and Vilnius, Helsinki and Prague, Porto and Istanbul, Hamburg and Frankfurt, Krakow and Helsinki, Athens and Istanbul.

Find a trip plan of visiting the cities for 22 days by taking direct flights to commute between them.
SOLUTION: Here is the trip plan for visiting the 10 European cities for 22 days:

**Day 1-5:** Arriving in Munich and visit Munich for 5 days.
**Day 5:** Fly from Munich to Krakow.
**Day 5-7:** Visit Krakow for 3 days.
**Day 7:** Fly from Krakow to Helsinki.
**Day 7-10:** Visit Helsinki for 4 days.
**Day 10:** Fly from Helsinki to Hamburg.
**Day 10-11:** Visit Hamburg for 2 days.
**Day 11:** Fly from Hamburg to Porto.
**Day 11-12:** Visit Porto for 2 days.
**Day 12:** Fly from Porto to Frankfurt.
**Day 12-13:** Visit Frankfurt for 2 days.
**Day 13:** Fly from Frankfurt to Prague.
**Day 13-14:** Visit Prague for 2 days.
**Day 14:** Fly from Prague to Athens.
**Day 14-17:** Visit Athens for 4 days.
**Day 17:** Fly from Athens to Istanbul.
**Day 17-21:** Visit Istanbul for 5 days.
**Day 21:** Fly from Istanbul to Vilnius.
**Day 21-22:** Visit Vilnius for 2 days.)PM";

inline constexpr std::string_view kTripExample2 = R"PM(TASK: You plan to visit 10 European cities for 23 days in total. You only take direct flights to commute between cities. You would like to visit Stuttgart for 2 days. You would like to visit Split for 2 days. You are going to attend a wedding in Split between day 22 and day 23. You would like to visit Vienna for 5 days. You want to spend 4 days in Madrid. You plan to stay in Athens for 2 days. You would like to visit London for 3 days. During day 8 and day 10, you have to attend a conference in London. You plan to stay in Paris for 3 days. You want to meet a friend in Paris between day 10 and day 12. You plan to stay in Reykjavik for 2 days. You have to attend a workshop in Reykjavik between day 16 and day 17. You want to spend 4 days in Seville. You want to spend 5 days in Milan. You would like to meet your friends at Milan between day 17 and day 21 to tour together.

Here are the cities that have direct flights:
Athens and Paris, Athens and Vienna, Madrid and Vienna, Madrid and Split, Vienna and Stuttgart, Paris and Milan, London and Vienna, London and Milan, Paris and Reykjavik, Athens and London, from Reykjavik to Stuttgart, Seville and Milan, from Reykjavik to Madrid, London and Stuttgart, Milan and Stuttgart, Vienna and Reykjavik, Athens and Split, Athens and Milan, Madrid and Athens, Madrid and London, Paris and Split, London and Paris, Seville and Vienna, Vienna and Milan, Athens and Stuttgart, Madrid and Paris, Seville and Madrid, from Reykjavik to Athens, Vienna and Split, London and Split, Stuttgart and Split, Seville and Paris, Paris and Stuttgart, Reykjavik and Milan, London and Reykjavik, Madrid and Milan, Paris and Vienna, Milan and Split.

Find a trip plan of visiting the cities for 23 days by taking direct flights to commute between them.
SOLUTION: Here is the trip plan for visiting the 10 European cities for 23 days:

**Day 1-4:** Arriving in Seville and visit Seville for 4 days.
**Day 4:** Fly from Seville to Madrid.
**Day 4-7:** Visit Madrid for 4 days.
**Day 7:** Fly from Madrid to Athens.
**Day 7-8:** Visit Athens for 2 days.
**Day 8:** Fly from Athens to London.
**Day 8-10:** Visit London for 3 days.
**Day 10:** Fly from London to Paris.
**Day 10-12:** Visit Paris for 3 days.
**Day 12:** Fly from Paris to Vienna.
**Day 12-16:** Visit Vienna for 5 days.
**Day 16:** Fly from Vienna to Reykjavik.
**Day 16-17:** Visit Reykjavik for 2 days.
**Day 17:** Fly from Reykjavik to Milan.
**Day 17-21:** Visit Milan for 5 days.
**Day 21:** Fly from Milan to Stuttgart.
**Day 21-22:** Visit Stuttgart for 2 days.
**Day 22:** Fly from Stuttgart to Split.
**Day 22-23:** Visit Split for 2 days.)PM";

inline constexpr std::string_view kTripExample3 = R"PM(TASK: You plan to visit 10 European cities for 25 days in total. You only take direct flights to commute between cities. You would like to visit Berlin for 2 days. You would like to visit Riga for 2 days. During day 5 and day 6, you have to attend a conference in Riga. You want to spend 3 days in Barcelona. You would like to visit Lyon for 4 days. You would like to meet your friends at Lyon between day 8 and day 11 to tour together. You plan to stay in Naples for 2 days. You plan to stay in Venice for 5 days. You want to spend 5 days in Helsinki. You plan to visit relatives in Helsinki between day 21 and day 25. You plan to stay in Rome for 5 days. You want to spend 3 days in Vilnius. You want to spend 3 days in Amsterdam. You are going to attend a wedding in Amsterdam between day 19 and day 21.

Here are the cities that have direct flights:
Berlin and Amsterdam, Rome and Helsinki, Rome and Lyon, Naples and Amsterdam, Riga and Barcelona, Rome and Venice, Riga and Amsterdam, from Riga to Vilnius, Barcelona and Berlin, Rome and Barcelona, Rome and Amsterdam, Barcelona and Venice, Berlin and Helsinki, Amsterdam and Helsinki, Vilnius and Helsinki, Rome and Berlin, from Rome to Riga, Barcelona and Amsterdam, Venice and Naples, Barcelona and Lyon, Naples and Berlin, Barcelona and Helsinki, Venice and Helsinki, Barcelona and Naples, Vilnius and Amsterdam, Venice and Amsterdam, Lyon and Venice, Naples and Helsinki, Riga and Berlin, Rome and Naples, Venice and Berlin, Riga and Helsinki, Berlin and Vilnius, Lyon and Amsterdam.

Find a trip plan of visiting the cities for 25 days by taking direct flights to commute between them.
SOLUTION: Here is the trip plan for visiting the 10 European cities for 25 days:

**Day 1-5:** Arriving in Rome and visit Rome for 5 days.
**Day 5:** Fly from Rome to Riga.
**Day 5-6:** Visit Riga for 2 days.
**Day 6:** Fly from Riga to Barcelona.
**Day 6-8:** Visit Barcelona for 3 days.
**Day 8:** Fly from Barcelona to Lyon.
**Day 8-11:** Visit Lyon for 4 days.
**Day 11:** Fly from Lyon to Venice.
**Day 11-15:** Visit Venice for 5 days.
**Day 15:** Fly from Venice to Naples.
**Day 15-16:** Visit Naples for 2 days.
**Day 16:** Fly from Naples to Berlin.
**Day 16-17:** Visit Berlin for 2 days.
**Day 17:** Fly from Berlin to Vilnius.
**Day 17-19:** Visit Vilnius for 3 days.
**Day 19:** Fly from Vilnius to Amsterdam.
**Day 19-21:** Visit Amsterdam for 3 days.
**Day 21:** Fly from Amsterdam to Helsinki.
**Day 21-25:** Visit Helsinki for 5 days.)PM";

inline constexpr std::string_view kTripExample4 = R"PM(TASK: You plan to visit 10 European cities for 27 days in total. You only take direct flights to commute between cities. You would like to visit Prague for 5 days. You have to attend a workshop in Prague between day 7 and day 11. You would like to visit Helsinki for 3 days. You are going to attend a wedding in Helsinki between day 15 and day 17. You plan to stay in Tallinn for 2 days. You want to meet a friend in Tallinn between day 6 and day 7. You want to spend 4 days in Edinburgh. You want to spend 5 days in Paris. You want to spend 4 days in Vienna. You plan to stay in Lisbon for 5 days. From day 11 to day 15, there is a annual show you want to attend in Lisbon. You want to spend 4 days in Budapest. You plan to stay in Lyon for 2 days. You plan to stay in Brussels for 2 days. You would like to meet your friends at Brussels between day 1 and day 2 to tour together.

Here are the cities that have direct flights:
Prague and Lyon, Brussels and Lisbon, Helsinki and Budapest, Vienna and Lyon, Paris and Tallinn, Brussels and Prague, Brussels and Helsinki, Prague and Helsinki, Brussels and Vienna, Brussels and Budapest, Lisbon and Budapest, Tallinn and Helsinki, Brussels and Paris, Brussels and Tallinn, Lisbon and Lyon, Prague and Lisbon, Paris and Prague, Helsinki and Edinburgh, Prague and Edinburgh, Tallinn and Prague, Brussels and Lyon, Paris and Lisbon, Helsinki and Vienna, Paris and Helsinki, Paris and Budapest, Edinburgh and Budapest, Brussels and Edinburgh, Lisbon and Vienna, Paris and Lyon, Lisbon and Helsinki, Prague and Vienna, Paris and Vienna, Prague and Budapest, Paris and Edinburgh, Budapest and Vienna.

Find a trip plan of visiting the cities for 27 days by taking direct flights to commute between them.
SOLUTION: Here is the trip plan for visiting the 10 European cities for 27 days:

**Day 1-2:** Arriving in Brussels and visit Brussels for 2 days.
**Day 2:** Fly from Brussels to Paris.
**Day 2-6:** Visit Paris for 5 days.
**Day 6:** Fly from Paris to Tallinn.
**Day 6-7:** Visit Tallinn for 2 days.
**Day 7:** Fly from Tallinn to Prague.
**Day 7-11:** Visit Prague for 5 days.
**Day 11:** Fly from Prague to Lisbon.
**Day 11-15:** Visit Lisbon for 5 days.
**Day 15:** Fly from Lisbon to Helsinki.
**Day 15-17:** Visit Helsinki for 3 days.
**Day 17:** Fly from Helsinki to Edinburgh.
**Day 17-20:** Visit Edinburgh for 4 days.
**Day 20:** Fly from Edinburgh to Budapest.
**Day 20-23:** Visit Budapest for 4 days.
**Day 23:** Fly from Budapest to Vienna.
**Day 23-26:** Visit Vienna for 4 days.
**Day 26:** Fly from Vienna to Lyon.
**Day 26-27:** Visit Lyon for 2 days.)PM";

inline constexpr std::array<std::string_view, 5> kTripExamples = {
    kTripExample0, kTripExample1, kTripExample2, kTripExample3, kTripExample4};

}  // namespace planmodulo::assets

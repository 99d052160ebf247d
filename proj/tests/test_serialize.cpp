#include <doctest.h>

#include <json.hpp>

#include <filesystem>
#include <fstream>
#include <sstream>

#include "meetup/errors.hpp"
#include "meetup/serialize.hpp"
#include "support/fixtures.hpp"

using namespace meetup;
using namespace meetup::testing;

TEST_CASE("query JSON: node ids, lonlat snapping, defaults") {
  const RoadGraph g = make_square();
  const MeetupQuery q = parse_query(R"({
    "mode": "intermediate",
    "metric": "distance",
    "objects": [
      {"id": "A", "origin": {"node": 1}, "destination": {"node": 3},
       "w_out": 2.0},
      {"origin": {"lonlat": [0.9, 0.05]}, "destination": {"lonlat": [0.1, 0.9]}}
    ]})",
                                    g);
  REQUIRE(q.objects.size() == 2);
  CHECK(q.objects[0].origin == 1);
  CHECK(q.objects[0].w_out == 2.0);
  CHECK(q.objects[0].w_back == 1.0);
  CHECK(q.objects[1].id == "obj2");
  CHECK(q.objects[1].origin == 2);       // snapped
  CHECK(*q.objects[1].destination == 4); // snapped

  CHECK_THROWS_AS(parse_query("{ not json", g), ParseError);
  CHECK_THROWS_AS(parse_query(R"({"objects": []})", g), ValidationError);
  CHECK_THROWS_AS(
      parse_query(
          R"({"objects": [{"origin": {"node": 9}},
                          {"origin": {"node": 1}}]})",
          g),
      ValidationError);
  CHECK_THROWS_AS(
      parse_query(R"({"mode": "warp", "objects": []})", g), ParseError);
}

TEST_CASE("solution JSON round-trips through a parser") {
  const RoadGraph g = make_square();
  const WeightView w = WeightView::distance_weights(g);
  const MeetupQuery q = square_query();
  const MeetupSolution sol = solve_exact(g, w, q);

  const auto doc = nlohmann::json::parse(solution_to_json(sol, g, q));
  CHECK(doc.at("method") == "exact");
  CHECK(doc.at("node") == 1);
  CHECK(doc.at("objective") == 4.0);
  CHECK(doc.at("per_object").size() == 2);
  CHECK(doc.at("per_object")[0].at("id") == "A");
}

TEST_CASE("scenario JSON round-trip") {
  TrafficScenario s;
  s.kind = ScenarioKind::manual;
  s.levels[3] = TrafficLevel::jam;
  s.levels[5] = TrafficLevel::moderate;
  s.extra_delay_s[5] = 120.0;

  const auto dir =
      std::filesystem::temp_directory_path() / "meetup_serialize_tests";
  std::filesystem::create_directories(dir);
  const auto path = (dir / "scenario.json").string();
  {
    std::ofstream f(path);
    save_scenario(s, f);
  }
  const TrafficScenario back = load_scenario(path);
  CHECK(back.kind == ScenarioKind::manual);
  CHECK(back.levels.at(3) == TrafficLevel::jam);
  CHECK(back.levels.at(5) == TrafficLevel::moderate);
  CHECK(back.extra_delay_s.at(5) == 120.0);

  {
    std::ofstream f(path);
    f << R"({"kind": "manual", "levels": [[1, 9]]})";
  }
  CHECK_THROWS_AS(load_scenario(path), ValidationError);
}

TEST_CASE("surface CSV format") {
  std::vector<SurfaceRow> rows = {{1, -77.02, 38.9, 1234.5}};
  std::ostringstream out;
  write_surface_csv(rows, out);
  CHECK(out.str() ==
        "node_id,lon,lat,objective\n"
        "1,-77.020000000,38.900000000,1234.5\n");
}

#include "support/fixtures.hpp"

#include <cmath>
#include <cstdio>
#include <fstream>

#include "meetup/errors.hpp"

namespace meetup::testing {

void add_two_way(std::vector<Edge>& edges, NodeId u, NodeId v,
                 double length_m, RoadClass cls) {
  Edge e;
  e.from = u;
  e.to = v;
  e.length_m = length_m;
  e.road_class = cls;
  edges.push_back(e);
  std::swap(e.from, e.to);
  edges.push_back(e);
}

RoadGraph make_square() {
  std::vector<LonLat> pos(5);
  pos[1] = {0.0, 0.0};
  pos[2] = {1.0, 0.0};
  pos[3] = {1.0, 1.0};
  pos[4] = {0.0, 1.0};
  std::vector<Edge> edges;
  add_two_way(edges, 1, 2, 1.0);
  add_two_way(edges, 2, 3, 1.0);
  add_two_way(edges, 3, 4, 1.0);
  add_two_way(edges, 4, 1, 1.0);
  add_two_way(edges, 1, 3, 5.0);
  return RoadGraph::from_parts(std::move(pos), std::move(edges));
}

MeetupQuery square_query() {
  MeetupQuery q;
  q.mode = MeetupMode::intermediate;
  q.metric = Metric::distance;
  q.objects.push_back(MovingObject{"A", 1, 3, 1.0, 1.0});
  q.objects.push_back(MovingObject{"B", 2, 4, 1.0, 1.0});
  return q;
}

RoadGraph make_clusters(bool bridged) {
  // West cluster: 1-4 around (0,0); east cluster: 5-8 around (0.2,0).
  std::vector<LonLat> pos;
  pos.resize(bridged ? 11 : 9);
  pos[1] = {0.000, 0.000};
  pos[2] = {0.002, 0.000};
  pos[3] = {0.002, 0.002};
  pos[4] = {0.000, 0.002};
  pos[5] = {0.200, 0.000};
  pos[6] = {0.202, 0.000};
  pos[7] = {0.202, 0.002};
  pos[8] = {0.200, 0.002};

  std::vector<Edge> edges;
  add_two_way(edges, 1, 2, 220.0);
  add_two_way(edges, 2, 3, 220.0);
  add_two_way(edges, 3, 4, 220.0);
  add_two_way(edges, 4, 1, 220.0);
  add_two_way(edges, 5, 6, 220.0);
  add_two_way(edges, 6, 7, 220.0);
  add_two_way(edges, 7, 8, 220.0);
  add_two_way(edges, 8, 5, 220.0);

  if (bridged) {
    pos[9] = {0.070, 0.001};
    pos[10] = {0.140, 0.001};
    add_two_way(edges, 2, 9, 8000.0);
    add_two_way(edges, 9, 10, 8000.0);
    add_two_way(edges, 10, 5, 8000.0);
  }
  return RoadGraph::from_parts(std::move(pos), std::move(edges));
}

MeetupQuery cluster_query() {
  MeetupQuery q;
  q.mode = MeetupMode::intermediate;
  q.metric = Metric::distance;
  q.objects.push_back(MovingObject{"west", 1, 3, 1.0, 1.0});
  q.objects.push_back(MovingObject{"east", 5, 7, 1.0, 1.0});
  return q;
}

RoadGraph make_corridors() {
  std::vector<LonLat> pos(7);
  pos[1] = {-0.004, 0.003};  // top west
  pos[2] = {0.000, 0.003};   // top mid
  pos[3] = {0.004, 0.003};   // top east
  pos[4] = {-0.004, 0.000};  // bottom west
  pos[5] = {0.000, 0.000};   // bottom mid
  pos[6] = {0.004, 0.000};   // bottom east

  std::vector<Edge> edges;
  add_two_way(edges, 1, 2, 410.0, RoadClass::residential);
  add_two_way(edges, 2, 3, 390.0, RoadClass::residential);
  add_two_way(edges, 4, 5, 355.0, RoadClass::residential);
  add_two_way(edges, 5, 6, 340.0, RoadClass::residential);
  add_two_way(edges, 1, 4, 470.0, RoadClass::residential);
  add_two_way(edges, 2, 5, 330.0, RoadClass::residential);
  add_two_way(edges, 3, 6, 520.0, RoadClass::residential);
  return RoadGraph::from_parts(std::move(pos), std::move(edges));
}

MeetupQuery corridor_query() {
  MeetupQuery q;
  q.mode = MeetupMode::intermediate;
  q.metric = Metric::time;
  q.objects.push_back(MovingObject{"top", 1, 3, 2.0, 2.0});
  q.objects.push_back(MovingObject{"bottom", 4, 6, 1.0, 1.0});
  return q;
}

RoadGraph make_relocation_instance() {
  std::vector<LonLat> pos(7);
  pos[1] = {-0.002, 0.001};   // A origin
  pos[2] = {0.000, 0.001};    // crossing
  pos[3] = {0.002, 0.001};    // A destination
  pos[4] = {-0.002, -0.001};  // B origin
  pos[5] = {0.000, -0.001};   // bypass node
  pos[6] = {0.002, -0.001};   // B destination

  std::vector<Edge> edges;
  add_two_way(edges, 1, 2, 100.0, RoadClass::residential);  // ids 0, 1
  add_two_way(edges, 2, 3, 110.0, RoadClass::residential);  // ids 2, 3
  add_two_way(edges, 4, 2, 90.0, RoadClass::residential);   // ids 4, 5
  add_two_way(edges, 2, 6, 95.0, RoadClass::residential);   // ids 6, 7
  add_two_way(edges, 4, 5, 100.0, RoadClass::residential);  // ids 8, 9
  add_two_way(edges, 5, 6, 105.0, RoadClass::residential);  // ids 10, 11
  add_two_way(edges, 1, 5, 120.0, RoadClass::residential);  // ids 12, 13
  add_two_way(edges, 5, 3, 130.0, RoadClass::residential);  // ids 14, 15
  return RoadGraph::from_parts(std::move(pos), std::move(edges));
}

MeetupQuery relocation_query() {
  MeetupQuery q;
  q.mode = MeetupMode::intermediate;
  q.metric = Metric::time;
  q.objects.push_back(MovingObject{"A", 1, 3, 2.0, 2.0});
  q.objects.push_back(MovingObject{"B", 4, 6, 1.0, 1.0});
  return q;
}

std::vector<EdgeId> relocation_jam_edges() { return {4, 5}; }

void write_dimacs(const RoadGraph& g, const std::string& gr_path,
                  const std::string& co_path) {
  std::ofstream gr(gr_path);
  if (!gr) throw ParseError("cannot write " + gr_path);
  gr << "c synthetic benchmark graph\n";
  gr << "p sp " << g.node_count() << " " << g.edge_count() << "\n";
  for (const Edge& e : g.edges())
    gr << "a " << e.from << " " << e.to << " "
       << static_cast<long long>(e.length_m) << "\n";

  std::ofstream co(co_path);
  if (!co) throw ParseError("cannot write " + co_path);
  co << "p aux sp co " << g.node_count() << "\n";
  char buf[96];
  for (NodeId v = 1; v <= g.node_count(); ++v) {
    const LonLat p = g.node_pos(v);
    std::snprintf(buf, sizeof(buf), "v %u %lld %lld\n", v,
                  std::llround(p.lon * 1e6), std::llround(p.lat * 1e6));
    co << buf;
  }
}

}  // namespace meetup::testing

#pragma once

#include <string>

#include "meetup/meetup.hpp"
#include "meetup/road_graph.hpp"

namespace meetup::testing {

/// Unit square: n1(0,0) n2(1,0) n3(1,1) n4(0,1), paired directed edges of
/// length 1 along the sides plus a length-5 diagonal n1<->n3.
RoadGraph make_square();

/// Two objects on the square: A n1->n3, B n2->n4, unit weights.
MeetupQuery square_query();

/// Two 4-node clusters ~0.2 degrees apart. With `bridged` a two-way
/// corridor of chained nodes connects them; otherwise the components are
/// disjoint.
RoadGraph make_clusters(bool bridged);

/// Query with one object inside each cluster (origins/destinations local),
/// so the per-object search spaces never overlap.
MeetupQuery cluster_query();

/// Two east-west corridors (top fast, bottom short) joined by three
/// verticals; residential classes, irregular lengths. Node ids:
///   1 2 3   top row (west->east)
///   4 5 6   bottom row
RoadGraph make_corridors();

/// A: top corridor commuter with doubled weights; B: bottom corridor.
MeetupQuery corridor_query();

/// Relocation instance: A travels 1 -> 3 through the crossing node 2; B
/// travels 4 -> 6 with a rail through 2 and a slightly longer bypass
/// through 5. Free flow puts the unique optimum at node 2; a 300 s jam on
/// B's rail edge into node 2 moves it to node 5.
RoadGraph make_relocation_instance();
MeetupQuery relocation_query();

/// Directed ids of the B1 -> X rail segment (both directions) in
/// make_relocation_instance.
std::vector<EdgeId> relocation_jam_edges();

void write_dimacs(const RoadGraph& g, const std::string& gr_path,
                  const std::string& co_path);

/// Adds both directions of a segment.
void add_two_way(std::vector<Edge>& edges, NodeId u, NodeId v,
                 double length_m, RoadClass cls = RoadClass::unknown);

}  // namespace meetup::testing

#include "meetup/road_graph.hpp"

#include <algorithm>
#include <array>
#include <charconv>
#include <cmath>
#include <fstream>
#include <sstream>
#include <string>
#include <unordered_map>

#include "meetup/errors.hpp"

namespace meetup {

namespace {

constexpr std::array<std::string_view, kRoadClassCount> kClassNames = {
    "motorway",  "motorway_link",  "trunk",       "trunk_link",
    "primary",   "primary_link",   "secondary",   "secondary_link",
    "tertiary",  "tertiary_link",  "residential", "living_street",
    "service",   "unknown",
};

[[noreturn]] void parse_fail(const std::string& path, std::size_t line_no,
                             const std::string& what) {
  throw ParseError(path + ":" + std::to_string(line_no) + ": " + what);
}

}  // namespace

RoadClass road_class_from_string(std::string_view s) {
  for (int i = 0; i < kRoadClassCount; ++i)
    if (kClassNames[i] == s) return static_cast<RoadClass>(i);
  return RoadClass::unknown;
}

std::string_view to_string(RoadClass c) {
  return kClassNames[static_cast<int>(c)];
}

RoadGraph RoadGraph::from_parts(std::vector<LonLat> positions,
                                std::vector<Edge> edges) {
  if (positions.size() < 2)
    throw ValidationError("graph needs at least one node");

  RoadGraph g;
  g.positions_ = std::move(positions);
  g.edges_ = std::move(edges);
  const std::size_t n = g.positions_.size() - 1;

  for (std::size_t i = 0; i < g.edges_.size(); ++i) {
    Edge& e = g.edges_[i];
    e.id = static_cast<EdgeId>(i);
    if (e.from < 1 || e.from > n || e.to < 1 || e.to > n)
      throw ValidationError("edge " + std::to_string(i) +
                            " references a node outside the graph");
    if (!(e.length_m > 0.0) || !std::isfinite(e.length_m))
      throw ValidationError("edge " + std::to_string(i) +
                            " has non-positive length");
    if (e.max_speed_kmh < 0.0 || e.base_time_s < 0.0)
      throw ValidationError("edge " + std::to_string(i) +
                            " has a negative speed or time");
  }

  // Counting-sort CSR keeps edge-id order within each bucket, so adjacency
  // order is a pure function of the input order.
  auto build_csr = [&](auto key, std::vector<std::uint32_t>& offsets,
                       std::vector<Edge>& sorted) {
    offsets.assign(n + 2, 0);
    for (const Edge& e : g.edges_) ++offsets[key(e) + 1];
    for (std::size_t v = 1; v <= n + 1; ++v) offsets[v] += offsets[v - 1];
    sorted.resize(g.edges_.size());
    std::vector<std::uint32_t> cursor(offsets.begin(), offsets.end());
    for (const Edge& e : g.edges_) sorted[cursor[key(e)]++] = e;
  };
  build_csr([](const Edge& e) { return e.from; }, g.out_offsets_,
            g.out_sorted_);
  build_csr([](const Edge& e) { return e.to; }, g.in_offsets_, g.in_sorted_);

  std::vector<std::pair<NodeId, LonLat>> items;
  items.reserve(n);
  for (std::size_t v = 1; v <= n; ++v)
    items.emplace_back(static_cast<NodeId>(v), g.positions_[v]);
  g.index_ = KdTree(std::move(items));

  g.extent_ = Rect::bounding(std::span(g.positions_).subspan(1));
  return g;
}

std::span<const Edge> RoadGraph::out_edges(NodeId v) const {
  return {out_sorted_.data() + out_offsets_[v],
          out_offsets_[v + 1] - out_offsets_[v]};
}

std::span<const Edge> RoadGraph::in_edges(NodeId v) const {
  return {in_sorted_.data() + in_offsets_[v],
          in_offsets_[v + 1] - in_offsets_[v]};
}

NodeId RoadGraph::snap_to_node(const LonLat& p) const {
  return index_.nearest(p, 1).front();
}

std::vector<NodeId> RoadGraph::knn_nodes(const LonLat& p,
                                         std::size_t k) const {
  if (k < 1 || k > node_count())
    throw ValidationError("knn k out of range [1, " +
                          std::to_string(node_count()) + "]");
  return index_.nearest(p, k);
}

std::vector<NodeId> RoadGraph::nodes_in_rect(const Rect& rect) const {
  if (!rect.valid()) throw ValidationError("rect has min > max");
  return index_.in_rect(rect);
}

namespace {

// Splits on commas; no quoting (the schemas carry none).
std::vector<std::string> split_csv_row(const std::string& line) {
  std::vector<std::string> out;
  std::string cur;
  for (char c : line) {
    if (c == ',') {
      out.push_back(cur);
      cur.clear();
    } else if (c != '\r') {
      cur += c;
    }
  }
  out.push_back(cur);
  return out;
}

double parse_double(const std::string& path, std::size_t line_no,
                    const std::string& field, const std::string& what) {
  try {
    std::size_t used = 0;
    const double v = std::stod(field, &used);
    if (used != field.size()) throw std::invalid_argument(field);
    return v;
  } catch (const std::exception&) {
    parse_fail(path, line_no, "bad " + what + " value '" + field + "'");
  }
}

long long parse_int(const std::string& path, std::size_t line_no,
                    std::string_view field, const std::string& what) {
  long long v = 0;
  const auto* first = field.data();
  const auto* last = field.data() + field.size();
  const auto res = std::from_chars(first, last, v);
  if (res.ec != std::errc{} || res.ptr != last)
    parse_fail(path, line_no,
               "bad " + what + " value '" + std::string(field) + "'");
  return v;
}

}  // namespace

RoadGraph load_dimacs(const std::string& gr_path, const std::string& co_path,
                      DimacsWeight kind) {
  std::ifstream gr(gr_path);
  if (!gr) throw ParseError("cannot open " + gr_path);
  std::ifstream co(co_path);
  if (!co) throw ParseError("cannot open " + co_path);

  std::size_t n_nodes = 0, n_arcs = 0;
  std::vector<Edge> edges;
  std::string line;
  std::size_t line_no = 0;
  bool saw_problem = false;

  while (std::getline(gr, line)) {
    ++line_no;
    if (line.empty() || line[0] == 'c') continue;
    std::istringstream ss(line);
    char tag;
    ss >> tag;
    if (tag == 'p') {
      std::string sp;
      ss >> sp >> n_nodes >> n_arcs;
      if (!ss || sp != "sp")
        parse_fail(gr_path, line_no, "expected 'p sp <n> <m>'");
      saw_problem = true;
      edges.reserve(n_arcs);
    } else if (tag == 'a') {
      if (!saw_problem)
        parse_fail(gr_path, line_no, "arc before the problem line");
      long long u, v;
      double w;
      ss >> u >> v >> w;
      if (!ss) parse_fail(gr_path, line_no, "expected 'a <u> <v> <w>'");
      if (w <= 0) parse_fail(gr_path, line_no, "non-positive arc weight");
      Edge e;
      e.from = static_cast<NodeId>(u);
      e.to = static_cast<NodeId>(v);
      if (kind == DimacsWeight::length) {
        e.length_m = w;
      } else {
        e.base_time_s = w;
        e.length_m = w;  // keep a positive length; times dominate anyway
      }
      edges.push_back(e);
    } else {
      parse_fail(gr_path, line_no, std::string("unknown line tag '") + tag +
                                       "'");
    }
  }
  if (!saw_problem) throw ParseError(gr_path + ": missing problem line");
  if (edges.size() != n_arcs)
    throw ValidationError(gr_path + ": header claims " +
                          std::to_string(n_arcs) + " arcs, file has " +
                          std::to_string(edges.size()));

  std::vector<LonLat> positions(n_nodes + 1);
  std::vector<bool> seen(n_nodes + 1, false);
  line_no = 0;
  std::size_t n_coords = 0;
  while (std::getline(co, line)) {
    ++line_no;
    if (line.empty() || line[0] == 'c') continue;
    std::istringstream ss(line);
    char tag;
    ss >> tag;
    if (tag == 'p') {
      std::string aux, sp2, co_tag;
      std::size_t n = 0;
      ss >> aux >> sp2 >> co_tag >> n;
      if (!ss || aux != "aux" || sp2 != "sp" || co_tag != "co")
        parse_fail(co_path, line_no, "expected 'p aux sp co <n>'");
      if (n != n_nodes)
        throw ValidationError(co_path + ": node count " + std::to_string(n) +
                              " disagrees with " + gr_path + " (" +
                              std::to_string(n_nodes) + ")");
    } else if (tag == 'v') {
      long long id, x, y;
      ss >> id >> x >> y;
      if (!ss) parse_fail(co_path, line_no, "expected 'v <id> <x> <y>'");
      if (id < 1 || static_cast<std::size_t>(id) > n_nodes)
        throw ValidationError(co_path + ":" + std::to_string(line_no) +
                              ": node id out of range");
      if (seen[id])
        throw ValidationError(co_path + ":" + std::to_string(line_no) +
                              ": duplicate node id " + std::to_string(id));
      seen[id] = true;
      ++n_coords;
      positions[id] = LonLat{static_cast<double>(x) * 1e-6,
                             static_cast<double>(y) * 1e-6};
    } else {
      parse_fail(co_path, line_no, std::string("unknown line tag '") + tag +
                                       "'");
    }
  }
  if (n_coords != n_nodes)
    throw ValidationError(co_path + ": " + std::to_string(n_coords) +
                          " coordinates for " + std::to_string(n_nodes) +
                          " nodes");

  return RoadGraph::from_parts(std::move(positions), std::move(edges));
}

RoadGraph load_csv(const std::string& nodes_path,
                   const std::string& edges_path) {
  std::ifstream nf(nodes_path);
  if (!nf) throw ParseError("cannot open " + nodes_path);
  std::ifstream ef(edges_path);
  if (!ef) throw ParseError("cannot open " + edges_path);

  auto read_header = [](std::ifstream& f, const std::string& path,
                        const std::vector<std::string>& required) {
    std::string line;
    if (!std::getline(f, line)) throw ParseError(path + ": empty file");
    const auto cols = split_csv_row(line);
    std::unordered_map<std::string, std::size_t> index;
    for (std::size_t i = 0; i < cols.size(); ++i) index[cols[i]] = i;
    for (const auto& col : required)
      if (!index.count(col))
        throw ParseError(path + ": missing required column '" + col + "'");
    return index;
  };

  const auto ncols =
      read_header(nf, nodes_path, {"node_id", "lon", "lat"});
  std::string line;
  std::size_t line_no = 1;

  // node_id values may be sparse; remap them onto dense 1-based ids in
  // file order.
  std::unordered_map<long long, NodeId> remap;
  std::vector<LonLat> positions(1);
  while (std::getline(nf, line)) {
    ++line_no;
    if (line.empty()) continue;
    const auto row = split_csv_row(line);
    if (row.size() < ncols.size())
      parse_fail(nodes_path, line_no, "too few fields");
    const long long raw_id =
        parse_int(nodes_path, line_no, row[ncols.at("node_id")], "node_id");
    if (remap.count(raw_id))
      throw ValidationError(nodes_path + ":" + std::to_string(line_no) +
                            ": duplicate node id " + std::to_string(raw_id));
    const double lon =
        parse_double(nodes_path, line_no, row[ncols.at("lon")], "lon");
    const double lat =
        parse_double(nodes_path, line_no, row[ncols.at("lat")], "lat");
    remap[raw_id] = static_cast<NodeId>(positions.size());
    positions.push_back(LonLat{lon, lat});
  }

  const auto ecols = read_header(
      ef, edges_path,
      {"edge_id", "u", "v", "length_m", "road_class", "max_speed_kmh",
       "oneway"});
  std::vector<Edge> edges;
  line_no = 1;
  while (std::getline(ef, line)) {
    ++line_no;
    if (line.empty()) continue;
    const auto row = split_csv_row(line);
    if (row.size() < ecols.size())
      parse_fail(edges_path, line_no, "too few fields");

    const long long u_raw =
        parse_int(edges_path, line_no, row[ecols.at("u")], "u");
    const long long v_raw =
        parse_int(edges_path, line_no, row[ecols.at("v")], "v");
    const auto u_it = remap.find(u_raw);
    const auto v_it = remap.find(v_raw);
    if (u_it == remap.end() || v_it == remap.end())
      throw ValidationError(edges_path + ":" + std::to_string(line_no) +
                            ": edge endpoint not in the node table");

    Edge e;
    e.from = u_it->second;
    e.to = v_it->second;
    e.length_m =
        parse_double(edges_path, line_no, row[ecols.at("length_m")], "length");
    if (e.length_m <= 0)
      throw ValidationError(edges_path + ":" + std::to_string(line_no) +
                            ": non-positive length");
    e.road_class = road_class_from_string(row[ecols.at("road_class")]);
    const std::string& speed = row[ecols.at("max_speed_kmh")];
    e.max_speed_kmh =
        speed.empty() ? 0.0
                      : parse_double(edges_path, line_no, speed, "max speed");

    const long long oneway =
        parse_int(edges_path, line_no, row[ecols.at("oneway")], "oneway");
    if (oneway != 0 && oneway != 1)
      parse_fail(edges_path, line_no, "oneway must be 0 or 1");
    edges.push_back(e);
    if (oneway == 0) {
      std::swap(e.from, e.to);
      edges.push_back(e);
    }
  }

  return RoadGraph::from_parts(std::move(positions), std::move(edges));
}

}  // namespace meetup

#include "meetup/poi.hpp"

#include <algorithm>
#include <cstdlib>
#include <fstream>
#include <sstream>
#include <unordered_set>

#include <httplib.h>
#include <json.hpp>

#include "meetup/errors.hpp"

namespace meetup {

namespace {

std::vector<std::string> split_row(const std::string& line) {
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

}  // namespace

std::vector<Venue> load_venues(const std::string& path) {
  std::ifstream f(path);
  if (!f) throw ParseError("cannot open " + path);

  std::string line;
  if (!std::getline(f, line)) throw ParseError(path + ": empty file");
  if (split_row(line) !=
      std::vector<std::string>{"id", "name", "lon", "lat", "category",
                               "popularity"})
    throw ParseError(path + ":1: expected header "
                            "'id,name,lon,lat,category,popularity'");

  std::vector<Venue> venues;
  std::unordered_set<std::string> seen;
  std::size_t line_no = 1;
  while (std::getline(f, line)) {
    ++line_no;
    if (line.empty()) continue;
    const auto row = split_row(line);
    if (row.size() != 6)
      throw ParseError(path + ":" + std::to_string(line_no) +
                       ": expected 6 fields, got " +
                       std::to_string(row.size()));
    Venue v;
    v.id = row[0];
    v.name = row[1];
    try {
      v.lon = std::stod(row[2]);
      v.lat = std::stod(row[3]);
      v.popularity = row[5].empty() ? 0.0 : std::stod(row[5]);
    } catch (const std::exception&) {
      throw ParseError(path + ":" + std::to_string(line_no) +
                       ": bad numeric field");
    }
    v.category = row[4];
    if (v.popularity < 0.0)
      throw ParseError(path + ":" + std::to_string(line_no) +
                       ": negative popularity");
    if (!seen.insert(v.id).second)
      throw ValidationError(path + ":" + std::to_string(line_no) +
                            ": duplicate venue id '" + v.id + "'");
    venues.push_back(std::move(v));
  }
  return venues;
}

std::vector<RankedVenue> rank_nearby(std::span<const Venue> venues,
                                     const LonLat& point, std::size_t k,
                                     double weight_popularity) {
  if (k < 1) throw ValidationError("rank_nearby: k must be >= 1");
  if (weight_popularity < 0.0 || weight_popularity > 1.0)
    throw ValidationError("rank_nearby: popularity weight must be in [0,1]");
  if (venues.empty()) return {};

  struct Entry {
    const Venue* venue;
    double dist;
  };
  std::vector<Entry> entries;
  entries.reserve(venues.size());
  double max_pop = 0.0;
  for (const Venue& v : venues) {
    entries.push_back(Entry{&v, haversine_m(point, LonLat{v.lon, v.lat})});
    max_pop = std::max(max_pop, v.popularity);
  }
  std::sort(entries.begin(), entries.end(), [](const Entry& a, const Entry& b) {
    return a.dist < b.dist || (a.dist == b.dist && a.venue->id < b.venue->id);
  });

  // Distance enters as a normalized rank so the blend is scale-free.
  const double n = static_cast<double>(entries.size());
  std::vector<RankedVenue> ranked;
  ranked.reserve(entries.size());
  for (std::size_t i = 0; i < entries.size(); ++i) {
    const double dist_rank = n > 1 ? static_cast<double>(i) / (n - 1) : 0.0;
    const double pop =
        max_pop > 0.0 ? entries[i].venue->popularity / max_pop : 0.0;
    const double score = (1.0 - weight_popularity) * dist_rank +
                         weight_popularity * (1.0 - pop);
    ranked.push_back(RankedVenue{*entries[i].venue, entries[i].dist, score});
  }
  std::stable_sort(ranked.begin(), ranked.end(),
                   [](const RankedVenue& a, const RankedVenue& b) {
                     return a.score < b.score ||
                            (a.score == b.score && a.venue.id < b.venue.id);
                   });
  if (ranked.size() > k) ranked.resize(k);
  return ranked;
}

namespace {

struct ParsedEndpoint {
  std::string host_port;  // scheme://host:port
  std::string path;       // leading slash
};

ParsedEndpoint parse_endpoint(const std::string& endpoint) {
  const auto scheme_end = endpoint.find("://");
  if (scheme_end == std::string::npos)
    throw ConfigError("venue endpoint must start with http:// or https://");
  const auto path_start = endpoint.find('/', scheme_end + 3);
  if (path_start == std::string::npos)
    return ParsedEndpoint{endpoint, "/"};
  return ParsedEndpoint{endpoint.substr(0, path_start),
                        endpoint.substr(path_start)};
}

}  // namespace

std::vector<Venue> fetch_remote(const VenueSource& source, const LonLat& point,
                                std::size_t k) {
  if (source.kind != VenueSourceKind::remote_service)
    throw ConfigError("fetch_remote needs a remote_service source");

  const char* key = std::getenv("VENUE_API_KEY");
  if (key == nullptr || *key == '\0')
    throw ConfigError("VENUE_API_KEY is not set");

  const ParsedEndpoint ep = parse_endpoint(source.config);
  httplib::Client client(ep.host_port);
  client.set_connection_timeout(10, 0);
  client.set_read_timeout(10, 0);

  httplib::Params params{
      {"latitude", std::to_string(point.lat)},
      {"longitude", std::to_string(point.lon)},
      {"limit", std::to_string(k)},
  };
  httplib::Headers headers{{"Authorization", std::string("Bearer ") + key}};

  const auto res = client.Get(ep.path, params, headers);
  if (!res)
    throw RemoteError("venue service unreachable: " +
                      httplib::to_string(res.error()));
  if (res->status == 429)
    throw RemoteError("venue service rate limit (HTTP 429): " + res->body);
  if (res->status != 200)
    throw RemoteError("venue service returned HTTP " +
                      std::to_string(res->status));

  std::vector<Venue> venues;
  try {
    const auto doc = nlohmann::json::parse(res->body);
    for (const auto& item : doc.at("venues")) {
      Venue v;
      v.id = item.at("id").get<std::string>();
      v.name = item.at("name").get<std::string>();
      v.lon = item.at("lon").get<double>();
      v.lat = item.at("lat").get<double>();
      v.category = item.value("category", std::string{});
      v.popularity = item.value("popularity", 0.0);
      venues.push_back(std::move(v));
    }
  } catch (const nlohmann::json::exception& e) {
    throw RemoteError(std::string("bad venue payload: ") + e.what());
  }
  return venues;
}

}  // namespace meetup

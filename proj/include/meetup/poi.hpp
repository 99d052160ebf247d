#pragma once

#include <span>
#include <string>
#include <vector>

#include "meetup/geo.hpp"

namespace meetup {

struct Venue {
  std::string id;
  std::string name;
  double lon = 0.0;
  double lat = 0.0;
  std::string category;
  double popularity = 0.0;
};

enum class VenueSourceKind { local_file, remote_service };

/// `config` is a CSV path or an HTTP endpoint; the remote credential comes
/// from the VENUE_API_KEY environment variable, never from files.
struct VenueSource {
  VenueSourceKind kind = VenueSourceKind::local_file;
  std::string config;
};

/// Venue CSV: `id,name,lon,lat,category,popularity`. Duplicate ids are
/// rejected; malformed rows report their line number.
std::vector<Venue> load_venues(const std::string& path);

struct RankedVenue {
  Venue venue;
  double distance_m = 0.0;
  double score = 0.0;
};

/// Ranks venues around `point`. score = (1-w) * normalized distance rank +
/// w * (1 - normalized popularity); w = 0 is a pure distance ranking.
/// Returns min(k, |venues|) entries; ties resolve by id.
std::vector<RankedVenue> rank_nearby(std::span<const Venue> venues,
                                     const LonLat& point, std::size_t k,
                                     double weight_popularity = 0.0);

/// Venue-search request against `source.config` with (lat, lon, limit=k).
/// Missing credential -> ConfigError before any network activity; HTTP,
/// payload, and rate-limit failures -> RemoteError.
std::vector<Venue> fetch_remote(const VenueSource& source, const LonLat& point,
                                std::size_t k);

}  // namespace meetup

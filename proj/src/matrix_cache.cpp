#include "meetup/matrix_cache.hpp"

#include <algorithm>
#include <cmath>
#include <cstring>
#include <fstream>

#include "meetup/errors.hpp"

namespace meetup {

namespace {

constexpr char kMagic[8] = {'M', 'U', 'P', 'D', 'M', 'A', 'T', '1'};

double checksum(const WeightView& w) {
  double sum = 0.0;
  for (double v : w.raw()) sum += v;
  return sum;
}

}  // namespace

DistanceMatrix DistanceMatrix::build(const RoadGraph& g, const WeightView& w) {
  if (g.node_count() > kMaxNodes)
    throw ValidationError("all-pairs cache limited to graphs with at most " +
                          std::to_string(kMaxNodes) + " nodes");
  DistanceMatrix m;
  m.n_ = g.node_count();
  m.metric_ = w.metric();
  m.weight_checksum_ = checksum(w);
  m.data_.assign(m.n_ * m.n_, kInf);
  for (NodeId s = 1; s <= m.n_; ++s) {
    const SearchResult r = dijkstra(g, w, s);
    double* row = m.data_.data() + static_cast<std::size_t>(s - 1) * m.n_;
    for (NodeId v = 1; v <= m.n_; ++v) row[v - 1] = r.dist[v];
  }
  return m;
}

bool DistanceMatrix::matches(const RoadGraph& g, const WeightView& w) const {
  if (n_ != g.node_count() || metric_ != w.metric()) return false;
  const double sum = checksum(w);
  return std::abs(sum - weight_checksum_) <= 1e-6 * std::max(1.0, sum);
}

void DistanceMatrix::save(const std::string& path) const {
  std::ofstream f(path, std::ios::binary);
  if (!f) throw ParseError("cannot open " + path + " for writing");
  f.write(kMagic, sizeof(kMagic));
  const std::uint64_t n = n_;
  const std::uint8_t metric = metric_ == Metric::distance ? 0 : 1;
  f.write(reinterpret_cast<const char*>(&n), sizeof(n));
  f.write(reinterpret_cast<const char*>(&metric), sizeof(metric));
  f.write(reinterpret_cast<const char*>(&weight_checksum_),
          sizeof(weight_checksum_));
  f.write(reinterpret_cast<const char*>(data_.data()),
          static_cast<std::streamsize>(data_.size() * sizeof(double)));
  if (!f) throw ParseError("failed writing " + path);
}

DistanceMatrix DistanceMatrix::load(const std::string& path) {
  std::ifstream f(path, std::ios::binary);
  if (!f) throw ParseError("cannot open " + path);
  char magic[8];
  f.read(magic, sizeof(magic));
  if (!f || std::memcmp(magic, kMagic, sizeof(kMagic)) != 0)
    throw ParseError(path + ": not a distance-matrix cache");

  DistanceMatrix m;
  std::uint64_t n = 0;
  std::uint8_t metric = 0;
  f.read(reinterpret_cast<char*>(&n), sizeof(n));
  f.read(reinterpret_cast<char*>(&metric), sizeof(metric));
  f.read(reinterpret_cast<char*>(&m.weight_checksum_),
         sizeof(m.weight_checksum_));
  if (!f || n == 0 || n > kMaxNodes)
    throw ParseError(path + ": corrupt cache header");
  m.n_ = n;
  m.metric_ = metric == 0 ? Metric::distance : Metric::time;
  m.data_.resize(m.n_ * m.n_);
  f.read(reinterpret_cast<char*>(m.data_.data()),
         static_cast<std::streamsize>(m.data_.size() * sizeof(double)));
  if (!f) throw ParseError(path + ": truncated cache data");
  return m;
}

}  // namespace meetup

#include "lattice_spectra/region.hpp"

#include <algorithm>
#include <fstream>
#include <limits>
#include <queue>
#include <set>
#include <sstream>
#include <stdexcept>

#include "json.hpp"

namespace lspec {

Region::Region(int n, std::vector<Point> points) : n_(n) {
  if (n < 1) throw std::invalid_argument("region dimension must be positive");
  if (points.empty()) throw std::invalid_argument("region must be nonempty");
  for (const Point& p : points) {
    if (static_cast<int>(p.size()) != n)
      throw std::invalid_argument("point arity does not match region dimension");
  }
  std::sort(points.begin(), points.end());
  points.erase(std::unique(points.begin(), points.end()), points.end());
  points_ = std::move(points);
  for (std::size_t i = 0; i < points_.size(); ++i)
    index_.emplace(points_[i], static_cast<int>(i));
}

int Region::index_of(const Point& p) const {
  auto it = index_.find(p);
  return it == index_.end() ? -1 : it->second;
}

Region new_region(int n, std::vector<Point> points) {
  return Region(n, std::move(points));
}

std::vector<Point> lattice_neighbors(const Point& p) {
  std::vector<Point> out;
  out.reserve(2 * p.size());
  for (std::size_t a = 0; a < p.size(); ++a) {
    for (int step : {-1, +1}) {
      if ((step < 0 && p[a] == std::numeric_limits<Coord>::min()) ||
          (step > 0 && p[a] == std::numeric_limits<Coord>::max()))
        throw std::overflow_error("lattice coordinate out of 32-bit range");
      Point q = p;
      q[a] = static_cast<Coord>(q[a] + step);
      out.push_back(std::move(q));
    }
  }
  std::sort(out.begin(), out.end());
  return out;
}

Region box_region(const std::vector<int>& dims) {
  if (dims.empty()) throw std::domain_error("box needs at least one dimension");
  for (int m : dims)
    if (m < 1) throw std::domain_error("box dimensions must be >= 1");
  const int n = static_cast<int>(dims.size());
  std::vector<Point> pts;
  Point cur(n, 1);
  for (;;) {
    pts.push_back(cur);
    int a = 0;
    while (a < n) {
      if (cur[a] < dims[a]) {
        ++cur[a];
        break;
      }
      cur[a] = 1;
      ++a;
    }
    if (a == n) break;
  }
  return Region(n, std::move(pts));
}

Region ball_region(int n, int radius, const Point& center, BallMetric metric) {
  if (radius < 0) throw std::domain_error("ball radius must be >= 0");
  if (static_cast<int>(center.size()) != n)
    throw std::invalid_argument("center arity does not match dimension");
  std::vector<Point> pts;
  Point offset(n, -radius);
  for (;;) {
    long l1 = 0;
    long linf = 0;
    for (int a = 0; a < n; ++a) {
      l1 += std::abs(static_cast<long>(offset[a]));
      linf = std::max(linf, std::abs(static_cast<long>(offset[a])));
    }
    const long dist = metric == BallMetric::l1 ? l1 : linf;
    if (dist <= radius) {
      Point p(center);
      for (int a = 0; a < n; ++a) p[a] = static_cast<Coord>(p[a] + offset[a]);
      pts.push_back(std::move(p));
    }
    int a = 0;
    while (a < n) {
      if (offset[a] < radius) {
        ++offset[a];
        break;
      }
      offset[a] = -radius;
      ++a;
    }
    if (a == n) break;
  }
  return Region(n, std::move(pts));
}

Region path_region(int n, std::size_t size) {
  if (size < 1) throw std::domain_error("path size must be >= 1");
  std::vector<Point> pts;
  for (std::size_t i = 0; i < size; ++i) {
    Point p(n, 0);
    p[0] = static_cast<Coord>(i + 1);
    pts.push_back(std::move(p));
  }
  return Region(n, std::move(pts));
}

Region random_connected_region(int n, std::size_t size, std::uint64_t seed) {
  if (size < 1) throw std::domain_error("region size must be >= 1");
  SplitMix64 rng(seed);
  std::set<Point> members;
  std::set<Point> frontier;
  Point origin(n, 0);
  members.insert(origin);
  for (const Point& q : lattice_neighbors(origin)) frontier.insert(q);
  while (members.size() < size) {
    const std::uint64_t idx = rng.next_below(frontier.size());
    auto it = frontier.begin();
    std::advance(it, static_cast<long>(idx));
    Point chosen = *it;
    frontier.erase(it);
    members.insert(chosen);
    for (const Point& q : lattice_neighbors(chosen))
      if (!members.count(q)) frontier.insert(q);
  }
  return Region(n, std::vector<Point>(members.begin(), members.end()));
}

Boundary boundary(const Region& region) {
  std::set<Point> out;
  for (const Point& p : region.points())
    for (const Point& q : lattice_neighbors(p))
      if (!region.contains(q)) out.insert(q);
  return Boundary{std::vector<Point>(out.begin(), out.end())};
}

bool is_connected(const Region& region) {
  const std::size_t N = region.size();
  std::vector<char> seen(N, 0);
  std::queue<int> todo;
  todo.push(0);
  seen[0] = 1;
  std::size_t count = 1;
  while (!todo.empty()) {
    const int i = todo.front();
    todo.pop();
    for (const Point& q : lattice_neighbors(region.point(i))) {
      const int j = region.index_of(q);
      if (j >= 0 && !seen[j]) {
        seen[j] = 1;
        ++count;
        todo.push(j);
      }
    }
  }
  return count == N;
}

std::vector<Point> neighbors_in(const Region& region, const Point& p) {
  if (!region.contains(p))
    throw std::out_of_range("point is not a member of the region");
  std::vector<Point> out;
  for (const Point& q : lattice_neighbors(p))
    if (region.contains(q)) out.push_back(q);
  return out;
}

Region region_from_json(const std::string& text) {
  nlohmann::json j = nlohmann::json::parse(text);
  const int n = j.at("n").get<int>();
  std::vector<Point> pts;
  for (const auto& jp : j.at("points")) {
    Point p;
    for (const auto& c : jp) p.push_back(c.get<Coord>());
    pts.push_back(std::move(p));
  }
  return Region(n, std::move(pts));
}

Region read_region_json(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open region file: " + path);
  std::stringstream ss;
  ss << in.rdbuf();
  return region_from_json(ss.str());
}

std::string region_to_json(const Region& region, const std::string& manifest_ref) {
  nlohmann::json j;
  j["n"] = region.dim();
  auto& pts = j["points"] = nlohmann::json::array();
  for (const Point& p : region.points()) pts.push_back(p);
  if (!manifest_ref.empty()) j["manifest"] = manifest_ref;
  return j.dump(2) + "\n";
}

void write_region_json(const Region& region, const std::string& path,
                       const std::string& manifest_ref) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw std::runtime_error("cannot write region file: " + path);
  out << region_to_json(region, manifest_ref);
}

}  // namespace lspec

#pragma once

#include <cstdint>
#include <map>
#include <string>
#include <vector>

namespace lspec {

using Coord = std::int32_t;

/// A lattice point in Z^n: an n-tuple of signed 32-bit coordinates.
/// Comparison is lexicographic, which fixes the canonical vertex order.
using Point = std::vector<Coord>;

/// splitmix64. Every source of randomness in the project goes through this
/// generator so that regions and search traces are reproducible bit-for-bit
/// across platforms (and across language bindings).
///
/// Update rule: state += 0x9E3779B97F4A7C15; output is the finalizer
///   z ^= z>>30; z *= 0xBF58476D1CE4E5B9; z ^= z>>27; z *= 0x94D049BB133111EB;
///   z ^= z>>31.
/// Bounded draws use next() % bound.
class SplitMix64 {
 public:
  explicit SplitMix64(std::uint64_t seed) : state_(seed) {}

  std::uint64_t next() {
    state_ += 0x9E3779B97F4A7C15ull;
    std::uint64_t z = state_;
    z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ull;
    z = (z ^ (z >> 27)) * 0x94D049BB133111EBull;
    return z ^ (z >> 31);
  }

  std::uint64_t next_below(std::uint64_t bound) { return next() % bound; }

  /// Uniform in [0, 1).
  double next_double() { return static_cast<double>(next() >> 11) * 0x1.0p-53; }

 private:
  std::uint64_t state_;
};

/// A finite subset of Z^n. Points are stored lexicographically sorted and
/// deduplicated; the position in that order is the matrix index used by every
/// downstream module. Immutable after construction.
class Region {
 public:
  /// Deduplicates and canonically orders `points`. Throws std::invalid_argument
  /// on an empty list or on any point whose arity differs from n.
  Region(int n, std::vector<Point> points);

  int dim() const { return n_; }
  std::size_t size() const { return points_.size(); }
  const std::vector<Point>& points() const { return points_; }
  const Point& point(std::size_t i) const { return points_[i]; }

  /// Index in canonical order, or -1 if the point is not in the region.
  int index_of(const Point& p) const;
  bool contains(const Point& p) const { return index_of(p) >= 0; }

  /// Ambient degree on Z^n (2n for every vertex, not the induced degree).
  int degree() const { return 2 * n_; }

  bool operator==(const Region& other) const {
    return n_ == other.n_ && points_ == other.points_;
  }

 private:
  int n_;
  std::vector<Point> points_;
  std::map<Point, int> index_;
};

/// The vertex boundary: lattice points outside the region adjacent to it.
struct Boundary {
  std::vector<Point> points;  // canonical order
};

enum class BallMetric { l1, linf };

Region new_region(int n, std::vector<Point> points);

/// The box {1..dims[0]} x ... x {1..dims[n-1]}.
Region box_region(const std::vector<int>& dims);

Region ball_region(int n, int radius, const Point& center,
                   BallMetric metric = BallMetric::l1);

/// Straight path of `size` vertices along the first axis, starting at (1,0,..).
Region path_region(int n, std::size_t size);

/// Connected region of exactly `size` vertices grown from the origin by
/// frontier-uniform BFS: at each step one vertex is drawn uniformly from the
/// sorted set of outside neighbors of the current region (splitmix64 draw,
/// next() % frontier_size) and added. Deterministic in (n, size, seed).
Region random_connected_region(int n, std::size_t size, std::uint64_t seed);

Boundary boundary(const Region& region);

bool is_connected(const Region& region);

/// Lattice neighbors of p inside the region, canonical order. Throws
/// std::out_of_range if p is not a member.
std::vector<Point> neighbors_in(const Region& region, const Point& p);

/// All 2n lattice neighbors of p. Throws std::overflow_error if a coordinate
/// would leave the signed 32-bit range.
std::vector<Point> lattice_neighbors(const Point& p);

// Region file format: {"n": int, "points": [[int,...],...]}. The writer emits
// canonical order; the reader accepts any order and canonicalizes.
Region region_from_json(const std::string& text);
Region read_region_json(const std::string& path);
std::string region_to_json(const Region& region,
                           const std::string& manifest_ref = "");
void write_region_json(const Region& region, const std::string& path,
                       const std::string& manifest_ref = "");

}  // namespace lspec

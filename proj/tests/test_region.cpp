#include <limits>
#include <set>
#include <stdexcept>

#include "doctest.h"
#include "lattice_spectra/region.hpp"

using namespace lspec;

TEST_CASE("new_region deduplicates and orders canonically") {
  Region r = new_region(1, {{0}, {1}, {0}});
  CHECK(r.size() == 2);
  CHECK(r.point(0) == Point{0});
  CHECK(r.point(1) == Point{1});
  CHECK(r.index_of({1}) == 1);
  CHECK(r.index_of({5}) == -1);
}

TEST_CASE("new_region rejects bad input") {
  CHECK_NOTHROW(new_region(2, {{0, 0}}));
  CHECK_THROWS_AS(new_region(2, {{0, 0}, {5}}), std::invalid_argument);
  CHECK_THROWS_AS(new_region(2, {}), std::invalid_argument);
  CHECK_THROWS_AS(new_region(0, {{}}), std::invalid_argument);
}

TEST_CASE("box_region") {
  CHECK(box_region({2}).size() == 2);
  CHECK(box_region({2}).points() == std::vector<Point>{{1}, {2}});
  CHECK(box_region({2, 2}).size() == 4);
  Region path = box_region({3, 1});
  CHECK(path.size() == 3);
  CHECK(path.dim() == 2);
  CHECK_THROWS_AS(box_region({0}), std::domain_error);
}

TEST_CASE("ball_region point counts") {
  CHECK(ball_region(2, 0, {0, 0}).size() == 1);
  CHECK(ball_region(2, 1, {0, 0}, BallMetric::l1).size() == 5);
  CHECK(ball_region(2, 1, {0, 0}, BallMetric::linf).size() == 9);
  CHECK(ball_region(2, 2, {3, -1}, BallMetric::l1).size() == 13);
  CHECK_THROWS_AS(ball_region(2, -1, {0, 0}), std::domain_error);
}

TEST_CASE("boundary of small regions") {
  CHECK(boundary(new_region(1, {{0}})).points ==
        std::vector<Point>{{-1}, {1}});
  CHECK(boundary(new_region(2, {{0, 0}})).points.size() == 4);
  CHECK(boundary(box_region({2, 2})).points.size() == 8);
}

TEST_CASE("boundary is disjoint from the region") {
  Region r = random_connected_region(2, 40, 11);
  for (const Point& p : boundary(r).points) {
    CHECK(!r.contains(p));
    // and every boundary vertex really touches the region
    bool touches = false;
    for (const Point& q : lattice_neighbors(p))
      if (r.contains(q)) touches = true;
    CHECK(touches);
  }
}

TEST_CASE("is_connected") {
  CHECK(is_connected(new_region(1, {{0}, {1}})));
  CHECK(!is_connected(new_region(1, {{0}, {2}})));
  CHECK(is_connected(box_region({3, 3})));
}

TEST_CASE("neighbors_in") {
  Region r = new_region(1, {{0}, {1}});
  CHECK(neighbors_in(r, {0}) == std::vector<Point>{{1}});
  CHECK(neighbors_in(new_region(2, {{0, 0}}), {0, 0}).empty());
  Region ball = ball_region(2, 1, {0, 0});
  CHECK(neighbors_in(ball, {0, 0}).size() == 4);
  CHECK_THROWS_AS(neighbors_in(r, {7}), std::out_of_range);
}

TEST_CASE("neighbors_in never exceeds 2n") {
  Region r = random_connected_region(3, 30, 5);
  for (const Point& p : r.points())
    CHECK(neighbors_in(r, p).size() <= 6);
}

TEST_CASE("random_connected_region is deterministic and connected") {
  Region a = random_connected_region(2, 50, 7);
  Region b = random_connected_region(2, 50, 7);
  CHECK(a == b);
  CHECK(a.size() == 50);
  CHECK(is_connected(a));
  CHECK(random_connected_region(2, 1, 0).size() == 1);
  for (std::uint64_t seed = 0; seed < 10; ++seed)
    CHECK(is_connected(random_connected_region(2, 25, seed)));
}

TEST_CASE("box boundary size matches brute-force neighbor scan") {
  for (int m1 = 1; m1 <= 4; ++m1)
    for (int m2 = 1; m2 <= 4; ++m2) {
      Region box = box_region({m1, m2});
      std::set<Point> scan;
      for (const Point& p : box.points())
        for (const Point& q : lattice_neighbors(p))
          if (!box.contains(q)) scan.insert(q);
      CHECK(boundary(box).points.size() == scan.size());
    }
}

TEST_CASE("region JSON round-trip canonicalizes") {
  Region r = ball_region(2, 1, {0, 0});
  Region back = region_from_json(region_to_json(r));
  CHECK(back == r);
  // reader accepts any order
  Region scrambled = region_from_json(
      R"({"n": 1, "points": [[2], [0], [1]]})");
  CHECK(scrambled.points() == std::vector<Point>{{0}, {1}, {2}});
}

TEST_CASE("overflow on neighbor computation is an error") {
  Point edge{std::numeric_limits<Coord>::max()};
  CHECK_THROWS_AS(lattice_neighbors(edge), std::overflow_error);
}

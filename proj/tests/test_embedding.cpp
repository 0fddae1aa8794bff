#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>
#include <set>

#include "tww/embedding.hpp"

using namespace tww;

namespace {

using walk = std::vector<vertex_t>;

std::vector<walk> icosa_faces() {
  return {{0, 1, 2}, {0, 2, 3}, {0, 3, 4},  {0, 4, 5},  {0, 5, 1},
          {1, 6, 2}, {2, 6, 7}, {2, 7, 3},  {3, 7, 8},  {3, 8, 4},
          {4, 8, 9}, {4, 9, 5}, {5, 9, 10}, {5, 10, 1}, {1, 10, 6},
          {6, 11, 7}, {7, 11, 8}, {8, 11, 9}, {9, 11, 10}, {10, 11, 6}};
}

plane_multigraph icosa() {
  return plane_multigraph::from_oriented_faces(12, icosa_faces());
}

// both pyramid apices see the whole triangle 0,1,2, which itself is not a face
plane_multigraph bipyramid() {
  return plane_multigraph::from_oriented_faces(
      5, {{0, 1, 3}, {1, 2, 3}, {2, 0, 3}, {1, 0, 4}, {2, 1, 4}, {0, 2, 4}});
}

plane_multigraph octahedron() {
  return plane_multigraph::from_oriented_faces(
      6, {{0, 1, 2}, {0, 2, 3}, {0, 3, 4}, {0, 4, 1},
          {5, 2, 1}, {5, 3, 2}, {5, 4, 3}, {5, 1, 4}});
}

}  // namespace

TEST_CASE("single edge embeds with one doubled face walk") {
  auto g = plane_multigraph::from_oriented_faces(2, {{0, 1}});
  CHECK(g.vertex_count() == 2);
  CHECK(g.edge_count() == 1);
  CHECK(g.face_count() == 1);
  CHECK(g.faces()[0].length() == 2);
  CHECK(g.degree(0) == 1);
  CHECK(g.degree(1) == 1);
  CHECK(g.euler_ok());
  g.check_consistent();
}

TEST_CASE("triangle embeds with two faces") {
  auto g = plane_multigraph::from_oriented_faces(3, {{0, 1, 2}, {2, 1, 0}});
  CHECK(g.vertex_count() == 3);
  CHECK(g.edge_count() == 3);
  CHECK(g.face_count() == 2);
  CHECK(g.min_face_length() == 3);
  CHECK(g.euler_ok());
  CHECK(g.neighbours(0) == walk{1, 2});
}

TEST_CASE("malformed face lists are rejected") {
  CHECK_THROWS_AS(plane_multigraph::from_oriented_faces(
                      3, {{0, 1, 2}, {0, 1, 2}}),
                  std::invalid_argument);  // repeated direction
  CHECK_THROWS_AS(plane_multigraph::from_oriented_faces(3, {{0, 1, 2}}),
                  std::invalid_argument);  // one direction missing
  CHECK_THROWS_AS(plane_multigraph::from_oriented_faces(2, {{0, 1, 2}}),
                  std::invalid_argument);  // vertex out of range
  CHECK_THROWS_AS(plane_multigraph::from_oriented_faces(2, {{0, 0}}),
                  std::invalid_argument);  // loop in input
  CHECK_THROWS_AS(plane_multigraph::from_oriented_faces(1, {{0}}),
                  std::invalid_argument);  // too short
}

TEST_CASE("icosahedron counts, darts and light edge") {
  auto g = icosa();
  CHECK(g.vertex_count() == 12);
  CHECK(g.edge_count() == 30);
  CHECK(g.face_count() == 20);
  CHECK(g.min_degree() == 5);
  CHECK(g.max_degree() == 5);
  CHECK(g.min_face_length() == 3);
  CHECK(g.euler_ok());
  g.check_consistent();

  std::size_t total_len = 0;
  for (const auto& f : g.faces()) total_len += f.length();
  CHECK(total_len == 2 * g.edge_count());

  dart_t d = g.find_dart(0, 1);
  REQUIRE(d != no_dart);
  CHECK(g.origin(d) == 0);
  CHECK(g.origin(plane_multigraph::twin(d)) == 1);
  CHECK_FALSE(g.is_loop(d));
  // face orbit of any dart has length three here
  dart_t x = g.face_next(g.face_next(g.face_next(d)));
  CHECK(x == d);
  CHECK(g.find_dart(0, 6) == no_dart);

  // every endpoint sum is ten, so the tie break picks the pair 0,1
  dart_t light = g.find_light_edge();
  CHECK(g.origin(light) == 0);
  CHECK(g.origin(plane_multigraph::twin(light)) == 1);
}

TEST_CASE("removing an edge merges its two faces") {
  auto g = plane_multigraph::from_oriented_faces(3, {{0, 1, 2}, {2, 1, 0}});
  g.remove_edge(g.find_dart(0, 1));
  CHECK(g.edge_count() == 2);
  CHECK(g.face_count() == 1);
  CHECK(g.faces()[0].length() == 4);
  CHECK(g.euler_ok());
  g.check_consistent();
}

TEST_CASE("contracting a triangle edge cleans the doubled side") {
  auto g = plane_multigraph::from_oriented_faces(3, {{0, 1, 2}, {2, 1, 0}});
  auto rep = g.contract_edge(g.find_dart(0, 1));
  CHECK(rep.keep == 0);
  CHECK(rep.removed == 1);
  CHECK(rep.cleaned.size() == 1);
  CHECK(g.vertex_count() == 2);
  CHECK(g.edge_count() == 1);
  CHECK_FALSE(g.vertex_alive(1));
  CHECK(g.degree(0) == 1);
  CHECK(g.degree(2) == 1);
  CHECK(g.euler_ok());
  g.check_consistent();
}

TEST_CASE("contracting the shared edge of two triangles keeps a path") {
  auto g = plane_multigraph::from_oriented_faces(
      4, {{0, 1, 2}, {0, 2, 3}, {0, 3, 2, 1}});
  REQUIRE(g.edge_count() == 5);
  auto rep = g.contract_edge(g.find_dart(0, 2));
  CHECK(rep.keep == 0);
  CHECK(rep.removed == 2);
  CHECK(rep.cleaned.size() == 2);
  CHECK(g.vertex_count() == 3);
  CHECK(g.edge_count() == 2);
  CHECK(g.face_count() == 1);
  CHECK(g.neighbours(0) == walk{1, 3});
  CHECK(g.euler_ok());
  g.check_consistent();
}

TEST_CASE("contracting an icosahedron edge yields max degree six") {
  auto g = icosa();
  auto rep = g.contract_edge(g.find_dart(0, 1));
  CHECK(rep.keep == 0);
  CHECK(rep.removed == 1);
  CHECK(rep.cleaned.size() == 2);
  CHECK(g.vertex_count() == 11);
  CHECK(g.edge_count() == 27);
  CHECK(g.face_count() == 18);
  CHECK(g.degree(0) == 6);
  CHECK(g.max_degree() == 6);
  CHECK(g.min_face_length() == 3);
  CHECK(g.euler_ok());
  g.check_consistent();
}

TEST_CASE("parallel edges survive a contraction when their disc holds a vertex") {
  auto g = bipyramid();
  REQUIRE(g.edge_count() == 9);
  REQUIRE(g.euler_ok());

  auto rep = g.contract_edge(g.find_dart(0, 1));
  CHECK(rep.keep == 0);
  CHECK(rep.removed == 1);
  using pairs = std::vector<std::pair<vertex_t, vertex_t>>;
  CHECK(rep.cleaned == pairs{{0, 3}, {0, 4}});
  CHECK(g.vertex_count() == 4);
  CHECK(g.edge_count() == 6);
  CHECK(g.face_count() == 4);
  CHECK(g.degree(0) == 4);
  CHECK(g.neighbours(0) == walk{2, 3, 4});
  CHECK(g.euler_ok());
  g.check_consistent();

  // two distinct darts from 0 to 2 witness the surviving parallel pair
  dart_t d1 = g.find_dart(0, 2);
  dart_t d2 = no_dart;
  for (dart_t d = d1; (d = g.rot_next(d)) != d1;)
    if (g.origin(plane_multigraph::twin(d)) == 2) d2 = d;
  REQUIRE(d1 != no_dart);
  REQUIRE(d2 != no_dart);
  CHECK(d1 / 2 != d2 / 2);

  // contracting one of the pair turns the other into a loop
  auto rep2 = g.contract_edge(d1);
  CHECK(rep2.keep == 0);
  CHECK(rep2.removed == 2);
  CHECK(rep2.cleaned == pairs{{3, 0}, {4, 0}});
  CHECK(g.vertex_count() == 3);
  CHECK(g.edge_count() == 3);
  CHECK(g.face_count() == 2);
  CHECK(g.degree(0) == 4);
  CHECK(g.euler_ok());
  g.check_consistent();

  dart_t loop = no_dart;
  dart_t e = g.some_dart(0);
  dart_t d = e;
  do {
    if (g.is_loop(d)) loop = d;
    d = g.rot_next(d);
  } while (d != e);
  REQUIRE(loop != no_dart);
  CHECK_THROWS_AS(g.contract_edge(loop), std::invalid_argument);
}

TEST_CASE("light edge preconditions are enforced") {
  // hub degree eight breaks the degree cap
  std::vector<walk> wheel;
  for (vertex_t i = 1; i <= 8; ++i)
    wheel.push_back({0, i, vertex_t(i % 8 + 1)});
  wheel.push_back({8, 7, 6, 5, 4, 3, 2, 1});
  auto w = plane_multigraph::from_oriented_faces(9, wheel);
  REQUIRE(w.max_degree() == 8);
  CHECK_THROWS_AS(w.find_light_edge(), std::invalid_argument);

  auto k2 = plane_multigraph::from_oriented_faces(2, {{0, 1}});
  CHECK_THROWS_AS(k2.find_light_edge(), std::invalid_argument);
}

TEST_CASE("facial cycles are recognised up to rotation and reflection") {
  auto g = icosa();
  CHECK(is_facial_cycle(g, {0, 1, 2}));
  CHECK(is_facial_cycle(g, {2, 0, 1}));
  CHECK(is_facial_cycle(g, {2, 1, 0}));
  CHECK(is_facial_cycle(g, {11, 6, 7}));
  CHECK_FALSE(is_facial_cycle(g, {0, 1, 6}));
  CHECK_FALSE(is_facial_cycle(g, {0, 1, 2, 3}));
}

TEST_CASE("octahedron short cycles and separating cycles") {
  auto g = octahedron();
  REQUIRE(g.euler_ok());
  CHECK(short_cycles(g, 3).size() == 8);
  CHECK(short_cycles(g, 4).size() == 8 + 15);
  CHECK_THROWS_AS(short_cycles(g, 5), std::invalid_argument);

  CHECK(separating_cycles_up_to(g, 3).empty());
  // the three induced quadrilaterals split the two remaining vertices apart
  std::vector<walk> expect = {{0, 1, 5, 3}, {0, 2, 5, 4}, {1, 2, 3, 4}};
  CHECK(separating_cycles_up_to(g, 4) == expect);

  CHECK_FALSE(cycle_separates(g, {0, 1, 2}));
  CHECK(cycle_separates(g, {0, 1, 5, 3}));
  CHECK_FALSE(cycle_separates(g, {0, 1, 2, 3}));  // one side holds only a chord
  CHECK_THROWS_AS(cycle_separates(g, {0, 1, 3}), std::invalid_argument);
  CHECK_THROWS_AS(cycle_separates(g, {0, 1}), std::invalid_argument);
}

TEST_CASE("subdividing a face makes its old boundary separating") {
  auto g = plane_multigraph::from_oriented_faces(
      7, {{0, 1, 2}, {0, 2, 3}, {0, 3, 4}, {0, 4, 1},
          {5, 2, 6}, {2, 1, 6}, {1, 5, 6},
          {5, 3, 2}, {5, 4, 3}, {5, 1, 4}});
  REQUIRE(g.euler_ok());
  CHECK_FALSE(is_facial_cycle(g, {1, 2, 5}));
  CHECK(is_facial_cycle(g, {5, 2, 6}));
  std::vector<walk> expect = {{1, 2, 5}};
  CHECK(separating_cycles_up_to(g, 3) == expect);
}

TEST_CASE("icosahedron has no short separating cycle") {
  auto g = icosa();
  CHECK(short_cycles(g, 3).size() == 20);
  CHECK(separating_cycles_up_to(g, 3).empty());
  for (const auto& c : short_cycles(g, 3)) CHECK(is_facial_cycle(g, c));
}

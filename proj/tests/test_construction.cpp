#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>
#include <queue>

#include "tww/construction.hpp"

using namespace tww;

namespace {

std::map<unsigned, std::size_t> expected_histogram(unsigned k) {
  std::size_t s = (k + 1) * std::size_t(k + 1);
  std::map<unsigned, std::size_t> h{{4, 60 * s}, {5, 60 * s}, {20, 12}};
  if (k > 0) h[24] = 10 * std::size_t(k) * (k + 2);
  return h;
}

std::vector<unsigned> bfs_distances(const trigraph& g, vertex_t src) {
  std::vector<unsigned> dist(g.capacity(), ~0u);
  std::queue<vertex_t> q;
  dist[src] = 0;
  q.push(src);
  while (!q.empty()) {
    vertex_t v = q.front();
    q.pop();
    for_each_bit(g.neighbour_row(v), [&](vertex_t w) {
      if (dist[w] == ~0u) {
        dist[w] = dist[v] + 1;
        q.push(w);
      }
    });
  }
  return dist;
}

std::vector<vertex_t> sorted_neighbours(const trigraph& g, vertex_t v) {
  std::vector<vertex_t> out;
  for_each_bit(g.neighbour_row(v), [&](vertex_t w) { out.push_back(w); });
  return out;
}

}  // namespace

TEST_CASE("icosahedron is the 5-regular triangulation on 12 vertices") {
  auto [g, emb] = icosahedron();
  CHECK(g.live_count() == 12);
  CHECK(g.edge_count() == 30);
  CHECK(emb.face_count() == 20);
  CHECK(emb.min_face_length() == 3);
  CHECK(emb.euler_ok());
  std::map<unsigned, std::size_t> expect{{5, 12}};
  CHECK(degree_histogram(g) == expect);
}

TEST_CASE("vertex counts and degree histograms match the closed forms") {
  for (unsigned k = 0; k <= 4; ++k) {
    CAPTURE(k);
    auto g = build_gk(k);
    CHECK(g.graph.live_count() == gk_vertex_count(k));
    CHECK(g.skeleton_n == gk_skeleton_count(k));
    CHECK(degree_histogram(g.graph) == expected_histogram(k));
    CHECK(g.embedding.face_count() == gk_face_count(k));
    CHECK(g.embedding.min_face_length() == 3);
    CHECK(g.embedding.euler_ok());
    // triangulation edge count twice over
    CHECK(g.graph.edge_count() == 3 * g.graph.live_count() - 6);
    CHECK(g.graph.edge_count() == g.embedding.edge_count());
  }
}

TEST_CASE("example sizes") {
  CHECK(gk_vertex_count(0) == 132);
  CHECK(gk_vertex_count(1) == 522);
  CHECK(gk_skeleton_count(2) == 92);
  CHECK(build_gk(0).graph.live_count() == 132);
}

TEST_CASE("roles partition the id space with the right counts") {
  for (unsigned k = 0; k <= 3; ++k) {
    CAPTURE(k);
    auto g = build_gk(k);
    std::map<vertex_role, std::size_t> cnt;
    for (auto r : g.role) ++cnt[r];
    std::size_t s = (k + 1) * std::size_t(k + 1);
    CHECK(cnt[vertex_role::corner] == 12);
    CHECK(cnt[vertex_role::subdivision] == 30 * std::size_t(k));
    CHECK(cnt[vertex_role::lattice_interior] ==
          20 * (std::size_t(k) * (k > 0 ? k - 1 : 0) / 2));
    CHECK(cnt[vertex_role::face_triangle] == 60 * s);
    CHECK(cnt[vertex_role::quad_center] == 60 * s);
    for (vertex_t v = 0; v < g.skeleton_n; ++v)
      CHECK(g.role[v] <= vertex_role::lattice_interior);
    for (std::size_t v = g.skeleton_n; v < g.role.size(); ++v)
      CHECK(g.role[v] >= vertex_role::face_triangle);
  }
}

TEST_CASE("skeleton is a triangulation with degrees five and six") {
  auto g0 = build_gk(0);
  auto [sk0, se0] = skeleton_subgraph(g0);
  auto [ico, ie] = icosahedron();
  CHECK(sk0 == ico);
  CHECK(se0.face_count() == 20);

  auto g1 = build_gk(1);
  auto [sk1, se1] = skeleton_subgraph(g1);
  CHECK(sk1.live_count() == 42);
  std::map<unsigned, std::size_t> expect{{5, 12}, {6, 30}};
  CHECK(degree_histogram(sk1) == expect);
  CHECK(se1.face_count() == 80);
  CHECK(se1.euler_ok());
  CHECK(sk1.edge_count() == 3 * sk1.live_count() - 6);

  auto g2 = build_gk(2);
  auto [sk2, se2] = skeleton_subgraph(g2);
  CHECK(sk2.live_count() == 92);
  CHECK(se2.face_count() == 180);
  CHECK(se2.euler_ok());
}

TEST_CASE("corners spread out by the subdivision depth") {
  for (unsigned k = 1; k <= 2; ++k) {
    CAPTURE(k);
    auto [sk, se] = skeleton_subgraph(build_gk(k));
    unsigned closest = ~0u;
    for (vertex_t u = 0; u < 12; ++u) {
      auto dist = bfs_distances(sk, u);
      for (vertex_t v = 0; v < 12; ++v)
        if (v != u) closest = std::min(closest, dist[v]);
    }
    CHECK(closest == k + 1);  // in particular no two corners are adjacent
  }
}

TEST_CASE("every face registry entry induces the inserted pattern") {
  for (unsigned k = 0; k <= 2; ++k) {
    CAPTURE(k);
    auto g = build_gk(k);
    CHECK(g.registry.size() == 20 * std::size_t(k + 1) * (k + 1));
    for (const auto& e : g.registry) {
      for (int i = 0; i < 3; ++i) {
        CHECK(g.is_skeleton(e.corner[i]));
        CHECK(g.role[e.tri[i]] == vertex_role::face_triangle);
        CHECK(g.role[e.center[i]] == vertex_role::quad_center);

        int j = (i + 1) % 3, l = (i + 2) % 3;
        std::vector<vertex_t> tri_nbrs{e.tri[j], e.tri[l], e.corner[i],
                                       e.center[i], e.center[l]};
        std::sort(tri_nbrs.begin(), tri_nbrs.end());
        CHECK(sorted_neighbours(g.graph, e.tri[i]) == tri_nbrs);

        std::vector<vertex_t> q_nbrs{e.corner[i], e.corner[j], e.tri[i],
                                     e.tri[j]};
        std::sort(q_nbrs.begin(), q_nbrs.end());
        CHECK(sorted_neighbours(g.graph, e.center[i]) == q_nbrs);
      }
    }
  }
}

TEST_CASE("embedding and trigraph agree edge for edge") {
  auto g = build_gk(1);
  for (const auto& f : g.embedding.faces()) {
    CHECK(f.length() == 3);
    for (std::size_t i = 0; i < 3; ++i)
      CHECK(g.graph.black_edge(f.vertices[i], f.vertices[(i + 1) % 3]));
  }
}

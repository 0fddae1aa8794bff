#include "tww/construction.hpp"

#include <algorithm>
#include <set>
#include <stdexcept>

namespace tww {

namespace {

constexpr std::array<std::array<vertex_t, 3>, 20> icosa_faces = {{
    {0, 1, 2},  {0, 2, 3},  {0, 3, 4},   {0, 4, 5},   {0, 5, 1},
    {1, 6, 2},  {2, 6, 7},  {2, 7, 3},   {3, 7, 8},   {3, 8, 4},
    {4, 8, 9},  {4, 9, 5},  {5, 9, 10},  {5, 10, 1},  {1, 10, 6},
    {6, 11, 7}, {7, 11, 8}, {8, 11, 9},  {9, 11, 10}, {10, 11, 6},
}};

// id layout: corners 0..11, then k points per icosahedron edge in sorted
// edge order, then interior lattice points face by face
struct skeleton_ids {
  unsigned k;
  std::map<std::pair<vertex_t, vertex_t>, std::size_t> edge_index;
  std::size_t interior_base;
  std::size_t per_face;  // interior points per icosahedron face

  explicit skeleton_ids(unsigned kk) : k(kk) {
    std::set<std::pair<vertex_t, vertex_t>> es;
    for (const auto& f : icosa_faces)
      for (int i = 0; i < 3; ++i)
        es.insert(std::minmax(f[i], f[(i + 1) % 3]));
    std::size_t idx = 0;
    for (const auto& e : es) edge_index[e] = idx++;
    interior_base = 12 + 30 * std::size_t(k);
    per_face = k < 2 ? 0 : std::size_t(k) * (k - 1) / 2;
  }

  // the point i steps from u along the subdivided edge u-v, i in 1..k
  vertex_t edge_point(vertex_t u, vertex_t v, unsigned i) const {
    std::size_t e = edge_index.at(std::minmax(u, v));
    unsigned from_low = u < v ? i : k + 1 - i;
    return vertex_t(12 + e * k + (from_low - 1));
  }

  // barycentric (a, b, c) with a+b+c = k+1 relative to face f's corners
  vertex_t point(std::size_t f, unsigned a, unsigned b, unsigned c) const {
    const auto& F = icosa_faces[f];
    if (a == k + 1) return F[0];
    if (b == k + 1) return F[1];
    if (c == k + 1) return F[2];
    if (c == 0) return edge_point(F[0], F[1], b);  // b steps from corner 0
    if (b == 0) return edge_point(F[0], F[2], c);
    if (a == 0) return edge_point(F[1], F[2], c);
    // interior, row-major over ascending (a, b)
    std::size_t idx =
        std::size_t(a - 1) * k - std::size_t(a - 1) * a / 2 + (b - 1);
    return vertex_t(interior_base + f * per_face + idx);
  }
};

// small lattice triangles tiling icosahedron face f, oriented like f
template <class Emit>
void small_faces(const skeleton_ids& L, std::size_t f, Emit&& emit) {
  const unsigned k = L.k;
  for (unsigned a = 0; a <= k; ++a)
    for (unsigned b = 0; a + b <= k; ++b) {
      unsigned c = k - a - b;
      emit(L.point(f, a + 1, b, c), L.point(f, a, b + 1, c),
           L.point(f, a, b, c + 1));
    }
  if (k == 0) return;
  for (unsigned a = 0; a <= k - 1; ++a)
    for (unsigned b = 0; a + b <= k - 1; ++b) {
      unsigned c = k - 1 - a - b;
      emit(L.point(f, a, b + 1, c + 1), L.point(f, a + 1, b, c + 1),
           L.point(f, a + 1, b + 1, c));
    }
}

std::vector<std::pair<vertex_t, vertex_t>> undirected_edges(
    const std::vector<std::vector<vertex_t>>& faces) {
  std::set<std::pair<vertex_t, vertex_t>> es;
  for (const auto& fw : faces)
    for (std::size_t i = 0; i < fw.size(); ++i)
      es.insert(std::minmax(fw[i], fw[(i + 1) % fw.size()]));
  return {es.begin(), es.end()};
}

}  // namespace

std::size_t gk_vertex_count(unsigned k) {
  std::size_t K = k;
  return 130 * K * K + 260 * K + 132;
}

std::size_t gk_skeleton_count(unsigned k) {
  std::size_t K = k;
  return 10 * K * K + 20 * K + 12;
}

std::size_t gk_face_count(unsigned k) {
  std::size_t s = k + 1;
  return 260 * s * s;
}

std::pair<trigraph, plane_multigraph> icosahedron() {
  std::vector<std::vector<vertex_t>> faces;
  for (const auto& f : icosa_faces) faces.push_back({f[0], f[1], f[2]});
  return {trigraph::from_black_edges(12, undirected_edges(faces)),
          plane_multigraph::from_oriented_faces(12, faces)};
}

gk_graph build_gk(unsigned k) {
  const skeleton_ids L(k);
  gk_graph out;
  out.k = k;
  out.skeleton_n = gk_skeleton_count(k);
  const std::size_t total = gk_vertex_count(k);

  out.role.assign(total, vertex_role::corner);
  for (std::size_t v = 12; v < L.interior_base; ++v)
    out.role[v] = vertex_role::subdivision;
  for (std::size_t v = L.interior_base; v < out.skeleton_n; ++v)
    out.role[v] = vertex_role::lattice_interior;

  std::vector<std::vector<vertex_t>> faces;
  faces.reserve(gk_face_count(k));
  out.registry.reserve(20 * std::size_t(k + 1) * (k + 1));
  std::size_t next = out.skeleton_n;
  for (std::size_t f = 0; f < icosa_faces.size(); ++f)
    small_faces(L, f, [&](vertex_t x, vertex_t y, vertex_t z) {
      skeleton_face e;
      e.corner = {x, y, z};
      e.tri = {vertex_t(next), vertex_t(next + 1), vertex_t(next + 2)};
      e.center = {vertex_t(next + 3), vertex_t(next + 4), vertex_t(next + 5)};
      next += 6;
      faces.push_back({e.tri[0], e.tri[1], e.tri[2]});
      for (int i = 0; i < 3; ++i) {
        vertex_t cx = e.corner[i], cy = e.corner[(i + 1) % 3];
        vertex_t tx = e.tri[i], ty = e.tri[(i + 1) % 3], q = e.center[i];
        faces.push_back({cx, cy, q});
        faces.push_back({cy, ty, q});
        faces.push_back({ty, tx, q});
        faces.push_back({tx, cx, q});
        out.role[e.tri[i]] = vertex_role::face_triangle;
        out.role[e.center[i]] = vertex_role::quad_center;
      }
      out.registry.push_back(e);
    });
  if (next != total) throw std::logic_error("vertex count formula broken");

  out.embedding = plane_multigraph::from_oriented_faces(total, faces);
  out.graph = trigraph::from_black_edges(total, undirected_edges(faces));
  return out;
}

std::map<unsigned, std::size_t> degree_histogram(const trigraph& g) {
  std::map<unsigned, std::size_t> h;
  for (vertex_t v : g.live_vertices()) ++h[g.degree(v)];
  return h;
}

std::pair<trigraph, plane_multigraph> skeleton_subgraph(const gk_graph& g) {
  std::vector<std::pair<vertex_t, vertex_t>> es;
  for (vertex_t u = 0; u < g.skeleton_n; ++u)
    for_each_bit(g.graph.black_row(u), [&](vertex_t v) {
      if (v > u && v < g.skeleton_n) es.emplace_back(u, v);
    });
  std::vector<std::vector<vertex_t>> faces;
  faces.reserve(g.registry.size());
  for (const auto& e : g.registry)
    faces.push_back({e.corner[0], e.corner[1], e.corner[2]});
  return {trigraph::from_black_edges(g.skeleton_n, es),
          plane_multigraph::from_oriented_faces(g.skeleton_n, faces)};
}

}  // namespace tww

#pragma once

#include <array>
#include <cstddef>
#include <map>
#include <utility>
#include <vector>

#include "tww/embedding.hpp"
#include "tww/trigraph.hpp"

namespace tww {

enum class vertex_role : unsigned char {
  corner,            // original icosahedron vertex
  subdivision,       // placed on an icosahedron edge
  lattice_interior,  // lattice point strictly inside an icosahedron face
  face_triangle,     // vertex of a triangle inserted into a skeleton face
  quad_center,       // vertex inserted into one of the three quads per face
};

// One skeleton face together with the six vertices inserted into it.
// tri[i] is joined to corner[i]; center[i] sits in the quad bounded by
// corner[i], corner[i+1], tri[i+1], tri[i] (indices mod 3).
struct skeleton_face {
  std::array<vertex_t, 3> corner;
  std::array<vertex_t, 3> tri;
  std::array<vertex_t, 3> center;
};

// The k-th member of the family: the icosahedron with every edge subdivided
// k times and every face tiled by the triangular lattice (the skeleton,
// which occupies ids 0..skeleton_n-1), then a triangle inserted into each
// of the 20(k+1)^2 skeleton faces and a vertex into each of the resulting
// quads.  All edges start black.
struct gk_graph {
  unsigned k = 0;
  std::size_t skeleton_n = 0;
  trigraph graph{0};
  plane_multigraph embedding;
  std::vector<vertex_role> role;
  std::vector<skeleton_face> registry;  // one entry per skeleton face

  bool is_skeleton(vertex_t v) const { return v < skeleton_n; }
};

// closed forms; build_gk verifies them
std::size_t gk_vertex_count(unsigned k);    // 130k^2 + 260k + 132
std::size_t gk_skeleton_count(unsigned k);  // 10k^2 + 20k + 12
std::size_t gk_face_count(unsigned k);      // 260(k+1)^2

std::pair<trigraph, plane_multigraph> icosahedron();

gk_graph build_gk(unsigned k);

std::map<unsigned, std::size_t> degree_histogram(const trigraph& g);

// induced subgraph on the skeleton ids with its inherited embedding
std::pair<trigraph, plane_multigraph> skeleton_subgraph(const gk_graph& g);

}  // namespace tww

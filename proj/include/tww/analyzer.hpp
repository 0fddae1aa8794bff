#pragma once

#include <utility>
#include <vector>

#include "tww/construction.hpp"
#include "tww/embedding.hpp"
#include "tww/trigraph.hpp"

namespace tww {

// Smallest family index whose members are expected to need the whole witness
// bound, so the staged upper bound is tight from here on.  The toolkit
// certifies the bound from above for every k and checks the structural
// hypotheses behind the expectation; a direct width search at this size is
// far out of reach.
inline constexpr unsigned exact_width_threshold_k = 7;

// Tracks which original skeleton vertices have been merged into each current
// vertex.  A vertex counts as skeleton when it holds at least one original.
struct skeleton_tracker {
  trigraph base{0};  // the skeleton at build time, ids 0..skeleton_n-1
  std::vector<std::vector<vertex_t>> members;  // indexed by current id

  bool is_skeleton(vertex_t v) const {
    return v < members.size() && !members[v].empty();
  }
  void apply(contraction_step s);
};

skeleton_tracker make_tracker(const gk_graph& g);

// The skeleton of h: its skeleton-flagged live vertices, adjacent whenever
// some pair of their original members was adjacent in the base skeleton.
// Keeps h's id space; non-skeleton ids are dead in the result.
trigraph skeleton_of(const trigraph& h, const skeleton_tracker& t);

struct analyzer_report {
  unsigned skeleton_min_degree = 0;
  // adjacent pairs of degree-5 vertices
  std::vector<std::pair<vertex_t, vertex_t>> adjacent_5_pairs;
  // degree-5 pairs with two or more common neighbours, with the count
  std::vector<std::pair<std::pair<vertex_t, vertex_t>, unsigned>>
      five_common_violations;
  std::vector<std::vector<vertex_t>> separating_3_cycles;
  std::vector<std::vector<vertex_t>> separating_4_cycles;
  // edges lying on no separating 3-cycle
  std::vector<std::pair<vertex_t, vertex_t>> semiplanar_ok_edges;
};

// Embedded form: separating tests walk the rotation system.  sk and emb must
// describe the same graph.  threads > 1 parallelizes the cycle scans without
// changing the report.
analyzer_report analyze_skeleton(const trigraph& sk, const plane_multigraph& emb,
                                 unsigned threads = 1);

// Abstract form: a short cycle counts as separating when deleting its
// vertices disconnects the graph.  Agrees with the embedded form on
// 3-connected planar inputs.
analyzer_report analyze_graph(const trigraph& g, unsigned threads = 1);

// True when the step touches a non-skeleton vertex, or contracts a skeleton
// edge lying on no separating 3-cycle of the current skeleton.
bool is_semiplanar(const trigraph& h, const skeleton_tracker& t,
                   contraction_step s);

// red degree the merged vertex would have
unsigned trial_merge_red_degree(const trigraph& h, vertex_t u, vertex_t v);

std::vector<unsigned> bfs_distances(const trigraph& g, vertex_t src);

// live vertices other than v within the given distance, ascending
std::vector<vertex_t> within_distance(const trigraph& g, vertex_t v,
                                      unsigned radius);

}  // namespace tww

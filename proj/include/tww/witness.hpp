#pragma once

#include <functional>

#include "tww/construction.hpp"
#include "tww/embedding.hpp"
#include "tww/trigraph.hpp"

namespace tww {

inline constexpr unsigned witness_width_bound = 7;

struct witness_plan {
  contraction_sequence phase1;
  contraction_sequence phase2;
  contraction_sequence phase3;
  width_trace trace;  // of the concatenation, from the fresh graph
  contraction_sequence full() const;
};

// One representative per skeleton face (its lowest inserted id) absorbs the
// other five inserted vertices in ascending id order.  Afterwards every face
// holds a single vertex red-tied to exactly its three corners.
contraction_sequence phase1_collapse_faces(const gk_graph& g);

// For each skeleton vertex, following `order`: the representatives of the
// faces whose other two corners both come later are folded together in
// ascending id order, and the fold is merged into that skeleton vertex.
// Afterwards exactly the skeleton remains.  The width bound is indifferent
// to the order; the one-argument form fixes ascending ids for determinism.
contraction_sequence phase2_absorb(const gk_graph& g);
contraction_sequence phase2_absorb(const gk_graph& g,
                                   const std::vector<vertex_t>& order);

using phase3_callback =
    std::function<void(const plane_multigraph&, const contraction_step&)>;

// Reduces a plane triangulation to a single vertex.  While a vertex of
// multigraph degree at most two exists, the lowest such is folded into its
// lowest neighbour; otherwise a light edge is contracted.  Every multigraph
// step is mirrored on the trigraph under the shared ids, the smaller
// endpoint surviving.  on_step sees each post-contraction multigraph state.
contraction_sequence phase3_reduce_triangulation(
    trigraph& tg, plane_multigraph& mg, const phase3_callback& on_step = {});

// Full reduction of build_gk(k), replay-verified to stay within
// witness_width_bound; throws logic_error naming the offending step if any
// internal bound is violated.
witness_plan synthesize_witness(unsigned k);

}  // namespace tww

#pragma once

#include <boost/dynamic_bitset.hpp>

#include <cstddef>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace tww {

using vertex_t = unsigned;
using bits = boost::dynamic_bitset<>;

// Visits the set bits of b in increasing order.  find_first/find_next return
// the bitset's own size type; keeping the comparison in that type here avoids
// a truncation trap at every call site.
template <class F>
inline void for_each_bit(const bits& b, F&& f) {
  for (auto v = b.find_first(); v != bits::npos; v = b.find_next(v))
    f(static_cast<vertex_t>(v));
}

// One contraction: `remove` is merged into `keep`, which stays alive under
// its old id.  Steps therefore stay meaningful as a flat list of id pairs.
struct contraction_step {
  vertex_t keep;
  vertex_t remove;
};

inline bool operator==(contraction_step a, contraction_step b) {
  return a.keep == b.keep && a.remove == b.remove;
}

using contraction_sequence = std::vector<contraction_step>;

// Raised when a sequence cannot be applied at all (dead or unknown vertex,
// keep == remove).  Width violations are not errors; they are verdicts.
struct replay_error : std::runtime_error {
  std::size_t step_index;
  replay_error(std::size_t idx, const std::string& msg)
      : std::runtime_error("step " + std::to_string(idx) + ": " + msg),
        step_index(idx) {}
};

// Graph whose edges are coloured black or red, over a fixed id space.
// Vertices are only ever removed (by contraction), never added, so every
// adjacency row is a bitset of the construction-time capacity.
class trigraph {
 public:
  explicit trigraph(std::size_t n);

  // All-black simple graph.  Duplicate edges are idempotent; loops and
  // out-of-range endpoints throw.
  static trigraph from_black_edges(
      std::size_t n, const std::vector<std::pair<vertex_t, vertex_t>>& edges);

  std::size_t capacity() const { return black_.size(); }
  std::size_t live_count() const { return live_; }
  bool alive(vertex_t v) const {
    return v < capacity() && alive_.test(v);
  }

  void add_black_edge(vertex_t u, vertex_t v);
  void add_red_edge(vertex_t u, vertex_t v);

  bool black_edge(vertex_t u, vertex_t v) const;
  bool red_edge(vertex_t u, vertex_t v) const;
  bool adjacent(vertex_t u, vertex_t v) const;

  const bits& black_row(vertex_t v) const;
  const bits& red_row(vertex_t v) const;
  bits neighbour_row(vertex_t v) const;  // black | red
  const bits& alive_row() const { return alive_; }

  unsigned degree(vertex_t v) const;
  unsigned red_degree(vertex_t v) const;
  unsigned max_red_degree() const;
  std::size_t edge_count() const;

  std::vector<vertex_t> live_vertices() const;
  std::vector<std::pair<vertex_t, vertex_t>> edges() const;

  // Merges s.remove into s.keep.  The merged vertex keeps a black edge to u
  // only if both endpoints had a black edge to u; every other retained
  // adjacency turns red.
  void apply(contraction_step s);
  trigraph contracted(contraction_step s) const;

  // Same id space; alive exactly where both this and keep are, with edges
  // restricted accordingly.
  trigraph induced_subgraph(const bits& keep) const;

  bool operator==(const trigraph& o) const;

  // Structural invariants: symmetry, irreflexivity, colour disjointness,
  // dead rows empty, cached red degrees correct.
  void check_consistent() const;

 private:
  std::vector<bits> black_;
  std::vector<bits> red_;
  std::vector<unsigned> red_deg_;
  bits alive_;
  std::size_t live_ = 0;

  void require_vertex(vertex_t v) const;
  void require_pair(vertex_t u, vertex_t v) const;
};

struct width_trace {
  std::vector<unsigned> per_step;  // max red degree after each step
  unsigned overall = 0;            // includes the starting state's red degree
};

// Applies the whole sequence to a copy of g.  Throws replay_error on a
// structurally invalid step.
width_trace replay(trigraph g, const contraction_sequence& seq);

struct verify_result {
  bool accepted = false;
  unsigned width = 0;       // overall width of the replayed prefix
  std::string reason;       // empty iff accepted
  long failing_step = -1;   // -1 when not tied to a single step
};

// Checks that seq is a full reduction of g (down to one vertex) whose every
// intermediate state, including the start, has max red degree <= bound.
// Stops at the first violation; never throws on malformed sequences.
verify_result verify_certificate(const trigraph& g,
                                 const contraction_sequence& seq,
                                 unsigned bound);

}  // namespace tww

#pragma once

#include <cstddef>
#include <vector>

#include "tww/trigraph.hpp"

namespace tww {

using dart_t = unsigned;
inline constexpr dart_t no_dart = ~0u;

struct face_record {
  std::vector<dart_t> darts;       // in face order
  std::vector<vertex_t> vertices;  // origins of those darts
  std::size_t length() const { return darts.size(); }
};

// Connected plane multigraph held as a rotation system.  Edge e owns the twin
// darts 2e and 2e+1; the cyclic order of darts around each origin encodes the
// embedding, and faces are the orbits of "rotation successor of the twin".
// Parallel edges and loops are legal states (they appear while a
// triangulation is being contracted); the initial build is from a simple
// face list.
class plane_multigraph {
 public:
  // faces are cyclic vertex walks with a consistent global orientation: every
  // directed pair (a, b) must occur exactly once over all faces.
  static plane_multigraph from_oriented_faces(
      std::size_t n, const std::vector<std::vector<vertex_t>>& faces);

  std::size_t capacity() const { return entry_.size(); }
  std::size_t vertex_count() const { return nv_; }
  std::size_t edge_count() const { return ne_; }

  bool vertex_alive(vertex_t v) const;
  bool dart_alive(dart_t d) const;
  vertex_t origin(dart_t d) const;
  static dart_t twin(dart_t d) { return d ^ 1u; }
  dart_t rot_next(dart_t d) const;
  dart_t rot_prev(dart_t d) const;
  dart_t face_next(dart_t d) const { return rot_next(twin(d)); }
  bool is_loop(dart_t d) const;

  dart_t some_dart(vertex_t v) const;  // no_dart when isolated
  // first dart from u whose head is v, walking u's rotation; no_dart if none
  dart_t find_dart(vertex_t u, vertex_t v) const;

  unsigned degree(vertex_t v) const;  // a loop contributes two
  unsigned max_degree() const;
  unsigned min_degree() const;
  std::vector<vertex_t> live_vertices() const;
  std::vector<vertex_t> neighbours(vertex_t v) const;  // deduplicated, sorted

  std::vector<face_record> faces() const;  // discovered by ascending dart id
  std::size_t face_count() const;
  std::size_t min_face_length() const;

  // connected and V - E + F == 2 (an edgeless single vertex counts one face)
  bool euler_ok() const;

  void remove_edge(dart_t d);

  struct contraction_report {
    vertex_t keep = 0;
    vertex_t removed = 0;
    // endpoint pairs of edges deleted by the 2-face cleanup, in order
    std::vector<std::pair<vertex_t, vertex_t>> cleaned;
  };

  // Contracts the edge of d into origin(d), which keeps its id.  The two
  // rotations are spliced where the edge was; any other edge between the two
  // endpoints becomes a loop.  Afterwards every face of length two formed by
  // two distinct edges is cleaned by deleting one of the two, repeating until
  // none is left.  The doubled walk around a lone edge is not such a face.
  contraction_report contract_edge(dart_t d);

  // Non-loop edge with minimum endpoint degree sum, ties broken towards the
  // lexicographically smallest endpoint pair, then lowest edge id.  Requires
  // max degree <= 7, min degree >= 3 and min face length >= 3; under those a
  // sum of at most 11 always exists, otherwise this throws.
  dart_t find_light_edge() const;

  void check_consistent() const;

 private:
  struct dart_rec {
    vertex_t origin = 0;
    dart_t next = no_dart;
    dart_t prev = no_dart;
  };
  std::vector<dart_rec> darts_;
  std::vector<char> dart_live_;
  std::vector<char> vertex_live_;
  std::vector<dart_t> entry_;
  std::vector<unsigned> degree_;
  std::size_t nv_ = 0;
  std::size_t ne_ = 0;

  void unlink(dart_t d);  // removes d from its rotation cycle
  void require_dart(dart_t d) const;
  void require_vertex(vertex_t v) const;
  std::size_t clean_two_faces(contraction_report& rep);
};

// ---- cycle analysis on a simple embedded graph ----

// lexicographically smallest among all rotations of c and of its reversal
std::vector<vertex_t> normalize_cycle(const std::vector<vertex_t>& c);

// true when some face walk visits exactly this vertex cycle
bool is_facial_cycle(const plane_multigraph& g,
                     const std::vector<vertex_t>& cycle);

// true when both sides of the cycle contain at least one off-cycle vertex;
// sides that hold only chords do not count
bool cycle_separates(const plane_multigraph& g,
                     const std::vector<vertex_t>& cycle);

// all cycles of length 3 up to max_len (3 or 4 only), in a normalized
// vertex-list form, sorted
std::vector<std::vector<vertex_t>> short_cycles(const plane_multigraph& g,
                                                unsigned max_len);

// the separating ones among short_cycles
std::vector<std::vector<vertex_t>> separating_cycles_up_to(
    const plane_multigraph& g, unsigned max_len);

}  // namespace tww

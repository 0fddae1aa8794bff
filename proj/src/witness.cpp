#include "tww/witness.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>
#include <string>

namespace tww {

contraction_sequence witness_plan::full() const {
  contraction_sequence out;
  out.reserve(phase1.size() + phase2.size() + phase3.size());
  out.insert(out.end(), phase1.begin(), phase1.end());
  out.insert(out.end(), phase2.begin(), phase2.end());
  out.insert(out.end(), phase3.begin(), phase3.end());
  return out;
}

contraction_sequence phase1_collapse_faces(const gk_graph& g) {
  contraction_sequence out;
  out.reserve(5 * g.registry.size());
  for (const auto& e : g.registry) {
    // the six inserted ids are consecutive, tri[0] lowest
    const vertex_t rep = e.tri[0];
    for (vertex_t v = rep + 1; v < rep + 6; ++v) out.push_back({rep, v});
  }
  return out;
}

contraction_sequence phase2_absorb(const gk_graph& g,
                                   const std::vector<vertex_t>& order) {
  if (order.size() != g.skeleton_n)
    throw std::invalid_argument("order must list every skeleton vertex once");
  std::vector<std::size_t> rank(g.skeleton_n, ~std::size_t(0));
  for (std::size_t i = 0; i < order.size(); ++i) {
    vertex_t v = order[i];
    if (v >= g.skeleton_n || rank[v] != ~std::size_t(0))
      throw std::invalid_argument("order must list every skeleton vertex once");
    rank[v] = i;
  }
  // each face is absorbed by whichever of its corners comes first
  std::vector<std::vector<vertex_t>> group(g.skeleton_n);
  for (const auto& e : g.registry) {
    vertex_t first = e.corner[0];
    for (vertex_t c : {e.corner[1], e.corner[2]})
      if (rank[c] < rank[first]) first = c;
    group[first].push_back(e.tri[0]);
  }
  contraction_sequence out;
  out.reserve(g.registry.size());
  for (vertex_t v : order) {
    auto& reps = group[v];
    if (reps.empty()) continue;
    std::sort(reps.begin(), reps.end());
    for (std::size_t j = 1; j < reps.size(); ++j)
      out.push_back({reps[0], reps[j]});
    out.push_back({v, reps[0]});
  }
  return out;
}

contraction_sequence phase2_absorb(const gk_graph& g) {
  std::vector<vertex_t> order(g.skeleton_n);
  std::iota(order.begin(), order.end(), vertex_t(0));
  return phase2_absorb(g, order);
}

contraction_sequence phase3_reduce_triangulation(trigraph& tg,
                                                 plane_multigraph& mg,
                                                 const phase3_callback& on_step) {
  contraction_sequence out;
  while (mg.vertex_count() > 1) {
    dart_t d = no_dart;
    for (vertex_t v : mg.live_vertices())
      if (mg.degree(v) <= 2) {
        auto nb = mg.neighbours(v);
        if (nb.empty())
          throw std::logic_error("reduction reached an isolated vertex");
        vertex_t keep = std::min(v, nb.front());
        d = mg.find_dart(keep, std::max(v, nb.front()));
        break;
      }
    if (d == no_dart) d = mg.find_light_edge();

    contraction_step s{mg.origin(d), mg.origin(plane_multigraph::twin(d))};
    mg.contract_edge(d);
    tg.apply(s);
    out.push_back(s);
    if (on_step) on_step(mg, s);
  }
  return out;
}

witness_plan synthesize_witness(unsigned k) {
  const auto g = build_gk(k);
  witness_plan plan;
  plan.phase1 = phase1_collapse_faces(g);
  plan.phase2 = phase2_absorb(g);

  trigraph state = g.graph;
  auto run = [&](const contraction_sequence& seq, const char* tag) {
    for (std::size_t i = 0; i < seq.size(); ++i) {
      state.apply(seq[i]);
      if (state.max_red_degree() > witness_width_bound)
        throw std::logic_error(std::string(tag) + " step " +
                               std::to_string(i) + " exceeds red degree " +
                               std::to_string(witness_width_bound));
    }
  };

  run(plan.phase1, "face collapse");
  for (const auto& e : g.registry) {
    bits want(state.capacity());
    for (auto c : e.corner) want.set(c);
    if (state.neighbour_row(e.tri[0]) != want ||
        state.red_row(e.tri[0]) != want)
      throw std::logic_error("face collapse left a wrong neighbourhood");
  }

  run(plan.phase2, "face absorption");
  auto [sk, se] = skeleton_subgraph(g);
  if (state.live_count() != g.skeleton_n)
    throw std::logic_error("absorption did not leave the skeleton vertices");
  for (vertex_t v = 0; v < g.skeleton_n; ++v) {
    bits want = sk.neighbour_row(v);
    want.resize(state.capacity());
    if (!state.alive(v) || state.neighbour_row(v) != want)
      throw std::logic_error("absorption did not leave the skeleton adjacency");
  }

  plan.phase3 = phase3_reduce_triangulation(state, se);

  plan.trace = replay(g.graph, plan.full());
  if (plan.trace.overall > witness_width_bound)
    throw std::logic_error("full replay exceeds the width bound");
  if (plan.trace.per_step.size() + 1 != gk_vertex_count(k))
    throw std::logic_error("witness is not a full reduction");
  return plan;
}

}  // namespace tww

#include "tww/analyzer.hpp"

#include <algorithm>
#include <queue>
#include <set>
#include <stdexcept>

namespace tww {

namespace {

bool cut_disconnects(const trigraph& g, const std::vector<vertex_t>& cut) {
  bits rest = g.alive_row();
  for (vertex_t v : cut) rest.reset(v);
  auto first = rest.find_first();
  if (first == bits::npos) return false;
  bits seen(g.capacity());
  std::queue<vertex_t> q;
  seen.set(vertex_t(first));
  q.push(vertex_t(first));
  std::size_t reached = 1;
  while (!q.empty()) {
    vertex_t v = q.front();
    q.pop();
    for_each_bit(g.neighbour_row(v) & rest, [&](vertex_t w) {
      if (!seen.test(w)) {
        seen.set(w);
        ++reached;
        q.push(w);
      }
    });
  }
  return reached != rest.count();
}

void fill_degree_reports(const trigraph& g, analyzer_report& rep) {
  auto live = g.live_vertices();
  unsigned mind = ~0u;
  std::vector<vertex_t> fives;
  for (vertex_t v : live) {
    mind = std::min(mind, g.degree(v));
    if (g.degree(v) == 5) fives.push_back(v);
  }
  rep.skeleton_min_degree = live.empty() ? 0 : mind;
  for (std::size_t i = 0; i < fives.size(); ++i)
    for (std::size_t j = i + 1; j < fives.size(); ++j) {
      vertex_t u = fives[i], v = fives[j];
      if (g.adjacent(u, v)) rep.adjacent_5_pairs.emplace_back(u, v);
      unsigned common =
          unsigned((g.neighbour_row(u) & g.neighbour_row(v)).count());
      if (common >= 2) rep.five_common_violations.push_back({{u, v}, common});
    }
}

template <class Sep>
void split_separating(const std::vector<std::vector<vertex_t>>& cycles,
                      unsigned threads, Sep&& sep, analyzer_report& rep) {
  std::vector<char> is_sep(cycles.size(), 0);
  const long n = long(cycles.size());
#pragma omp parallel for schedule(dynamic, 8) \
    num_threads(int(threads ? threads : 1)) if (threads > 1)
  for (long i = 0; i < n; ++i)
    is_sep[std::size_t(i)] = sep(cycles[std::size_t(i)]) ? 1 : 0;
  for (std::size_t i = 0; i < cycles.size(); ++i) {
    if (!is_sep[i]) continue;
    (cycles[i].size() == 3 ? rep.separating_3_cycles
                           : rep.separating_4_cycles)
        .push_back(cycles[i]);
  }
}

void fill_semiplanar_edges(const trigraph& g, analyzer_report& rep) {
  for (auto [u, v] : g.edges()) {
    bool on_sep = false;
    for (const auto& c : rep.separating_3_cycles)
      if (std::find(c.begin(), c.end(), u) != c.end() &&
          std::find(c.begin(), c.end(), v) != c.end()) {
        on_sep = true;
        break;
      }
    if (!on_sep) rep.semiplanar_ok_edges.emplace_back(u, v);
  }
}

// same normal form and order as the embedded enumeration
std::vector<std::vector<vertex_t>> short_cycles_abstract(const trigraph& g,
                                                         unsigned max_len) {
  std::set<std::vector<vertex_t>> out;
  auto live = g.live_vertices();
  for (vertex_t u : live)
    for_each_bit(g.neighbour_row(u), [&](vertex_t v) {
      if (v <= u) return;
      for_each_bit(g.neighbour_row(u) & g.neighbour_row(v), [&](vertex_t w) {
        if (w > v) out.insert(normalize_cycle({u, v, w}));
      });
    });
  if (max_len == 4) {
    for (std::size_t i = 0; i < live.size(); ++i)
      for (std::size_t j = i + 1; j < live.size(); ++j) {
        vertex_t a = live[i], c = live[j];
        std::vector<vertex_t> ws;
        for_each_bit(g.neighbour_row(a) & g.neighbour_row(c),
                     [&](vertex_t w) { ws.push_back(w); });
        for (std::size_t x = 0; x < ws.size(); ++x)
          for (std::size_t y = x + 1; y < ws.size(); ++y)
            out.insert(normalize_cycle({a, ws[x], c, ws[y]}));
      }
  }
  return {out.begin(), out.end()};
}

}  // namespace

void skeleton_tracker::apply(contraction_step s) {
  if (s.keep >= members.size() || s.remove >= members.size() ||
      s.keep == s.remove)
    throw std::invalid_argument("step does not fit the tracker");
  auto& dst = members[s.keep];
  auto& src = members[s.remove];
  dst.insert(dst.end(), src.begin(), src.end());
  std::sort(dst.begin(), dst.end());
  src.clear();
}

skeleton_tracker make_tracker(const gk_graph& g) {
  skeleton_tracker t;
  t.base = skeleton_subgraph(g).first;
  t.members.resize(g.graph.capacity());
  for (vertex_t v = 0; v < g.skeleton_n; ++v) t.members[v] = {v};
  return t;
}

trigraph skeleton_of(const trigraph& h, const skeleton_tracker& t) {
  if (t.members.size() != h.capacity())
    throw std::invalid_argument("tracker does not match the graph");
  bits keep(h.capacity());
  std::vector<char> used(t.base.capacity(), 0);
  for (vertex_t v = 0; v < h.capacity(); ++v) {
    if (t.members[v].empty()) continue;
    if (!h.alive(v))
      throw std::invalid_argument("tracker names a dead vertex");
    for (vertex_t o : t.members[v]) {
      if (o >= t.base.capacity() || used[o])
        throw std::invalid_argument("tracker misuses an original vertex");
      used[o] = 1;
    }
    keep.set(v);
  }
  trigraph out = trigraph(h.capacity()).induced_subgraph(keep);
  std::vector<bits> orig(h.capacity());
  for_each_bit(keep, [&](vertex_t v) {
    bits m(t.base.capacity());
    for (vertex_t o : t.members[v]) m.set(o);
    orig[v] = std::move(m);
  });
  for_each_bit(keep, [&](vertex_t u) {
    bits ru(t.base.capacity());
    for (vertex_t o : t.members[u]) ru |= t.base.neighbour_row(o);
    for_each_bit(keep, [&](vertex_t v) {
      if (v > u && ru.intersects(orig[v])) out.add_black_edge(u, v);
    });
  });
  return out;
}

analyzer_report analyze_skeleton(const trigraph& sk,
                                 const plane_multigraph& emb,
                                 unsigned threads) {
  if (sk.live_count() != emb.vertex_count() ||
      sk.edge_count() != emb.edge_count())
    throw std::invalid_argument("graph and embedding disagree");
  for (vertex_t v : sk.live_vertices()) {
    if (!emb.vertex_alive(v))
      throw std::invalid_argument("graph and embedding disagree");
    bits row(sk.capacity());
    for (vertex_t w : emb.neighbours(v)) {
      if (w >= row.size())
        throw std::invalid_argument("graph and embedding disagree");
      row.set(w);
    }
    if (row != sk.neighbour_row(v))
      throw std::invalid_argument("graph and embedding disagree");
  }

  analyzer_report rep;
  fill_degree_reports(sk, rep);
  auto cycles = short_cycles(emb, 4);
  split_separating(
      cycles, threads,
      [&](const std::vector<vertex_t>& c) { return cycle_separates(emb, c); },
      rep);
  fill_semiplanar_edges(sk, rep);
  return rep;
}

analyzer_report analyze_graph(const trigraph& g, unsigned threads) {
  analyzer_report rep;
  fill_degree_reports(g, rep);
  auto cycles = short_cycles_abstract(g, 4);
  split_separating(
      cycles, threads,
      [&](const std::vector<vertex_t>& c) { return cut_disconnects(g, c); },
      rep);
  fill_semiplanar_edges(g, rep);
  return rep;
}

bool is_semiplanar(const trigraph& h, const skeleton_tracker& t,
                   contraction_step s) {
  if (!h.alive(s.keep) || !h.alive(s.remove) || s.keep == s.remove)
    throw std::invalid_argument("step does not name two live vertices");
  if (!t.is_skeleton(s.keep) || !t.is_skeleton(s.remove)) return true;
  trigraph d = skeleton_of(h, t);
  if (!d.adjacent(s.keep, s.remove)) return false;
  bool blocked = false;
  for_each_bit(d.neighbour_row(s.keep) & d.neighbour_row(s.remove),
               [&](vertex_t w) {
                 if (!blocked && cut_disconnects(d, {s.keep, s.remove, w}))
                   blocked = true;
               });
  return !blocked;
}

unsigned trial_merge_red_degree(const trigraph& h, vertex_t u, vertex_t v) {
  return h.contracted({u, v}).red_degree(u);
}

std::vector<unsigned> bfs_distances(const trigraph& g, vertex_t src) {
  if (!g.alive(src))
    throw std::invalid_argument("distance source is not alive");
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

std::vector<vertex_t> within_distance(const trigraph& g, vertex_t v,
                                      unsigned radius) {
  auto dist = bfs_distances(g, v);
  std::vector<vertex_t> out;
  for (vertex_t w = 0; w < g.capacity(); ++w)
    if (w != v && dist[w] <= radius) out.push_back(w);
  return out;
}

}  // namespace tww

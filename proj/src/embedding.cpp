#include "tww/embedding.hpp"

#include <algorithm>
#include <map>
#include <queue>
#include <set>
#include <stdexcept>
#include <string>

namespace tww {

namespace {

[[noreturn]] void bad(const std::string& what) {
  throw std::invalid_argument(what);
}

}  // namespace

std::vector<vertex_t> normalize_cycle(const std::vector<vertex_t>& c) {
  const std::size_t m = c.size();
  std::vector<vertex_t> best;
  for (int rev = 0; rev < 2; ++rev) {
    std::vector<vertex_t> cur(c);
    if (rev) std::reverse(cur.begin(), cur.end());
    for (std::size_t r = 0; r < m; ++r) {
      std::vector<vertex_t> rot(m);
      for (std::size_t i = 0; i < m; ++i) rot[i] = cur[(r + i) % m];
      if (best.empty() || rot < best) best = rot;
    }
  }
  return best;
}

plane_multigraph plane_multigraph::from_oriented_faces(
    std::size_t n, const std::vector<std::vector<vertex_t>>& faces) {
  plane_multigraph g;
  g.entry_.assign(n, no_dart);
  g.vertex_live_.assign(n, 1);
  g.degree_.assign(n, 0);
  g.nv_ = n;

  std::map<std::pair<vertex_t, vertex_t>, std::size_t> edge_of;
  std::map<std::pair<vertex_t, vertex_t>, dart_t> dart_of;

  for (const auto& f : faces) {
    if (f.size() < 2) bad("face walk shorter than 2");
    const std::size_t m = f.size();
    for (std::size_t i = 0; i < m; ++i) {
      vertex_t a = f[i], b = f[(i + 1) % m];
      if (a >= n || b >= n) bad("face vertex out of range");
      if (a == b) bad("face input may not contain loops");
      if (dart_of.count({a, b}))
        bad("directed edge repeated; face orientations are inconsistent");
      auto key = std::minmax(a, b);
      auto it = edge_of.find(key);
      std::size_t e;
      if (it == edge_of.end()) {
        e = g.ne_++;
        edge_of.emplace(key, e);
        g.darts_.push_back({a, no_dart, no_dart});
        g.darts_.push_back({b, no_dart, no_dart});
      } else {
        e = it->second;
      }
      dart_of[{a, b}] = g.darts_[2 * e].origin == a ? dart_t(2 * e)
                                                    : dart_t(2 * e + 1);
    }
  }
  if (dart_of.size() != 2 * g.ne_)
    bad("some edge is traversed in only one direction");

  // the face successor of the reversed edge fixes each rotation: if a face
  // visits a, w, b in this order then w->b follows w->a around w
  for (const auto& f : faces) {
    const std::size_t m = f.size();
    for (std::size_t i = 0; i < m; ++i) {
      vertex_t a = f[i], w = f[(i + 1) % m], b = f[(i + 2) % m];
      dart_t in = dart_of[{w, a}], out = dart_of[{w, b}];
      if (g.darts_[in].next != no_dart) bad("rotation conflict");
      g.darts_[in].next = out;
    }
  }
  for (dart_t d = 0; d < g.darts_.size(); ++d) {
    if (g.darts_[d].next == no_dart) bad("incomplete rotation");
    g.darts_[g.darts_[d].next].prev = d;
  }
  g.dart_live_.assign(g.darts_.size(), 1);
  for (dart_t d = 0; d < g.darts_.size(); ++d) {
    vertex_t o = g.darts_[d].origin;
    ++g.degree_[o];
    if (g.entry_[o] == no_dart) g.entry_[o] = d;
  }
  g.check_consistent();
  if (g.face_count() != faces.size())
    bad("face walks do not close up into an embedding");
  return g;
}

bool plane_multigraph::vertex_alive(vertex_t v) const {
  return v < entry_.size() && vertex_live_[v];
}

bool plane_multigraph::dart_alive(dart_t d) const {
  return d < darts_.size() && dart_live_[d];
}

void plane_multigraph::require_dart(dart_t d) const {
  if (!dart_alive(d))
    bad("dart " + std::to_string(d) + " is not alive");
}

void plane_multigraph::require_vertex(vertex_t v) const {
  if (!vertex_alive(v))
    bad("vertex " + std::to_string(v) + " is not alive");
}

vertex_t plane_multigraph::origin(dart_t d) const {
  require_dart(d);
  return darts_[d].origin;
}

dart_t plane_multigraph::rot_next(dart_t d) const {
  require_dart(d);
  return darts_[d].next;
}

dart_t plane_multigraph::rot_prev(dart_t d) const {
  require_dart(d);
  return darts_[d].prev;
}

bool plane_multigraph::is_loop(dart_t d) const {
  require_dart(d);
  return darts_[d].origin == darts_[twin(d)].origin;
}

dart_t plane_multigraph::some_dart(vertex_t v) const {
  require_vertex(v);
  return entry_[v];
}

dart_t plane_multigraph::find_dart(vertex_t u, vertex_t v) const {
  require_vertex(u);
  dart_t e = entry_[u];
  if (e == no_dart) return no_dart;
  dart_t d = e;
  do {
    if (darts_[twin(d)].origin == v) return d;
    d = darts_[d].next;
  } while (d != e);
  return no_dart;
}

unsigned plane_multigraph::degree(vertex_t v) const {
  require_vertex(v);
  return degree_[v];
}

unsigned plane_multigraph::max_degree() const {
  unsigned m = 0;
  for (vertex_t v = 0; v < entry_.size(); ++v)
    if (vertex_live_[v]) m = std::max(m, degree_[v]);
  return m;
}

unsigned plane_multigraph::min_degree() const {
  unsigned m = ~0u;
  for (vertex_t v = 0; v < entry_.size(); ++v)
    if (vertex_live_[v]) m = std::min(m, degree_[v]);
  return m == ~0u ? 0 : m;
}

std::vector<vertex_t> plane_multigraph::live_vertices() const {
  std::vector<vertex_t> out;
  out.reserve(nv_);
  for (vertex_t v = 0; v < entry_.size(); ++v)
    if (vertex_live_[v]) out.push_back(v);
  return out;
}

std::vector<vertex_t> plane_multigraph::neighbours(vertex_t v) const {
  require_vertex(v);
  std::vector<vertex_t> out;
  dart_t e = entry_[v];
  if (e == no_dart) return out;
  dart_t d = e;
  do {
    vertex_t w = darts_[twin(d)].origin;
    if (w != v) out.push_back(w);
    d = darts_[d].next;
  } while (d != e);
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

std::vector<face_record> plane_multigraph::faces() const {
  std::vector<face_record> out;
  std::vector<char> seen(darts_.size(), 0);
  for (dart_t d0 = 0; d0 < darts_.size(); ++d0) {
    if (!dart_live_[d0] || seen[d0]) continue;
    face_record f;
    dart_t x = d0;
    do {
      seen[x] = 1;
      f.darts.push_back(x);
      f.vertices.push_back(darts_[x].origin);
      x = face_next(x);
    } while (x != d0);
    out.push_back(std::move(f));
  }
  return out;
}

std::size_t plane_multigraph::face_count() const { return faces().size(); }

std::size_t plane_multigraph::min_face_length() const {
  std::size_t m = ~std::size_t(0);
  for (const auto& f : faces()) m = std::min(m, f.length());
  return m == ~std::size_t(0) ? 0 : m;
}

bool plane_multigraph::euler_ok() const {
  if (nv_ == 0) return false;
  // connectivity over live vertices
  vertex_t start = ~0u;
  for (vertex_t v = 0; v < entry_.size(); ++v)
    if (vertex_live_[v]) {
      start = v;
      break;
    }
  std::vector<char> vis(entry_.size(), 0);
  std::queue<vertex_t> q;
  q.push(start);
  vis[start] = 1;
  std::size_t reached = 1;
  while (!q.empty()) {
    vertex_t v = q.front();
    q.pop();
    for (vertex_t w : neighbours(v))
      if (!vis[w]) {
        vis[w] = 1;
        ++reached;
        q.push(w);
      }
  }
  if (reached != nv_) return false;
  const long f = ne_ == 0 ? 1 : long(face_count());
  return long(nv_) - long(ne_) + f == 2;
}

void plane_multigraph::unlink(dart_t d) {
  vertex_t v = darts_[d].origin;
  if (darts_[d].next == d) {
    entry_[v] = no_dart;
  } else {
    dart_t p = darts_[d].prev, nx = darts_[d].next;
    darts_[p].next = nx;
    darts_[nx].prev = p;
    if (entry_[v] == d) entry_[v] = nx;
  }
  --degree_[v];
  dart_live_[d] = 0;
}

void plane_multigraph::remove_edge(dart_t d) {
  require_dart(d);
  unlink(d);
  unlink(twin(d));
  --ne_;
}

std::size_t plane_multigraph::clean_two_faces(contraction_report& rep) {
  std::size_t removed = 0;
  for (;;) {
    bool found = false;
    std::vector<char> seen(darts_.size(), 0);
    for (dart_t d0 = 0; d0 < darts_.size() && !found; ++d0) {
      if (!dart_live_[d0] || seen[d0]) continue;
      std::vector<dart_t> fd;
      dart_t x = d0;
      do {
        seen[x] = 1;
        fd.push_back(x);
        x = face_next(x);
      } while (x != d0);
      // a doubled walk around a lone edge is the one admissible 2-face
      if (fd.size() == 2 && fd[0] / 2 != fd[1] / 2) {
        dart_t kill = 2 * std::min(fd[0] / 2, fd[1] / 2);
        rep.cleaned.emplace_back(darts_[kill].origin,
                                 darts_[twin(kill)].origin);
        remove_edge(kill);
        ++removed;
        found = true;
      }
    }
    if (!found) return removed;
  }
}

plane_multigraph::contraction_report plane_multigraph::contract_edge(dart_t d) {
  require_dart(d);
  const vertex_t u = darts_[d].origin;
  const vertex_t v = darts_[twin(d)].origin;
  if (u == v) bad("cannot contract a loop");
  contraction_report rep;
  rep.keep = u;
  rep.removed = v;

  const dart_t pd = darts_[d].prev;
  const dart_t tn0 = darts_[twin(d)].next;
  const bool b_empty = tn0 == twin(d);

  unlink(d);
  unlink(twin(d));
  --ne_;

  if (!b_empty) {
    // hand v's remaining darts to u...
    dart_t x = tn0;
    do {
      darts_[x].origin = u;
      --degree_[v];
      ++degree_[u];
      x = darts_[x].next;
    } while (x != tn0);
    // ...and splice their cycle where d used to sit
    if (entry_[u] == no_dart) {
      entry_[u] = tn0;
    } else {
      dart_t na = darts_[pd].next;
      dart_t pb = darts_[tn0].prev;
      darts_[pd].next = tn0;
      darts_[tn0].prev = pd;
      darts_[pb].next = na;
      darts_[na].prev = pb;
    }
  }

  vertex_live_[v] = 0;
  entry_[v] = no_dart;
  --nv_;
  clean_two_faces(rep);
  return rep;
}

dart_t plane_multigraph::find_light_edge() const {
  if (max_degree() > 7)
    bad("light edge search requires max degree <= 7");
  if (min_degree() < 3)
    bad("light edge search requires min degree >= 3");
  if (min_face_length() < 3)
    bad("light edge search requires min face length >= 3");

  unsigned best_sum = ~0u;
  vertex_t bu = 0, bv = 0;
  std::size_t be = 0;
  bool have = false;
  for (std::size_t e = 0; 2 * e < darts_.size(); ++e) {
    dart_t d = dart_t(2 * e);
    if (!dart_live_[d]) continue;
    vertex_t a = darts_[d].origin, b = darts_[twin(d)].origin;
    if (a == b) continue;
    vertex_t u = std::min(a, b), v = std::max(a, b);
    unsigned sum = degree_[u] + degree_[v];
    if (!have || std::tie(sum, u, v, e) < std::tie(best_sum, bu, bv, be)) {
      have = true;
      best_sum = sum;
      bu = u;
      bv = v;
      be = e;
    }
  }
  if (!have || best_sum > 11)
    throw std::logic_error("no light edge despite the degree preconditions");
  dart_t d = dart_t(2 * be);
  return darts_[d].origin == bu ? d : twin(d);
}

void plane_multigraph::check_consistent() const {
  auto fail = [](const std::string& what) {
    throw std::logic_error("embedding invariant broken: " + what);
  };
  std::size_t live_darts = 0;
  for (dart_t d = 0; d < darts_.size(); ++d) {
    if (!dart_live_[d]) continue;
    ++live_darts;
    if (!dart_live_[twin(d)]) fail("half-dead edge");
    if (!vertex_live_[darts_[d].origin]) fail("dart at a dead vertex");
    if (!dart_live_[darts_[d].next] || !dart_live_[darts_[d].prev])
      fail("rotation link to a dead dart");
    if (darts_[darts_[d].next].prev != d) fail("rotation links disagree");
  }
  if (live_darts != 2 * ne_) fail("edge count out of sync");
  std::size_t live_vertices = 0, degree_total = 0;
  for (vertex_t v = 0; v < entry_.size(); ++v) {
    if (!vertex_live_[v]) {
      if (entry_[v] != no_dart) fail("dead vertex with an entry dart");
      continue;
    }
    ++live_vertices;
    degree_total += degree_[v];
    if (entry_[v] == no_dart) {
      if (degree_[v] != 0) fail("isolated vertex with nonzero degree");
      continue;
    }
    if (darts_[entry_[v]].origin != v) fail("entry dart origin mismatch");
    std::size_t cnt = 0;
    dart_t d = entry_[v];
    do {
      if (darts_[d].origin != v) fail("rotation crosses vertices");
      ++cnt;
      if (cnt > darts_.size()) fail("rotation does not close");
      d = darts_[d].next;
    } while (d != entry_[v]);
    if (cnt != degree_[v]) fail("degree cache out of sync");
  }
  if (live_vertices != nv_) fail("vertex count out of sync");
  if (degree_total != 2 * ne_) fail("degree sum is not twice the edge count");
}

// ---- cycle analysis ----

bool is_facial_cycle(const plane_multigraph& g,
                     const std::vector<vertex_t>& cycle) {
  const auto want = normalize_cycle(cycle);
  for (const auto& f : g.faces()) {
    if (f.length() != cycle.size()) continue;
    std::set<vertex_t> distinct(f.vertices.begin(), f.vertices.end());
    if (distinct.size() != f.length()) continue;
    if (normalize_cycle(f.vertices) == want) return true;
  }
  return false;
}

bool cycle_separates(const plane_multigraph& g,
                     const std::vector<vertex_t>& cycle) {
  const std::size_t m = cycle.size();
  if (m < 3) bad("cycle shorter than 3");
  std::vector<long> pos(g.capacity(), -1);
  for (std::size_t i = 0; i < m; ++i) {
    if (!g.vertex_alive(cycle[i]) || pos[cycle[i]] != -1)
      bad("not a simple cycle of live vertices");
    pos[cycle[i]] = long(i);
  }
  std::vector<dart_t> to_next(m), to_prev(m);
  for (std::size_t i = 0; i < m; ++i) {
    to_next[i] = g.find_dart(cycle[i], cycle[(i + 1) % m]);
    to_prev[i] = g.find_dart(cycle[i], cycle[(i + m - 1) % m]);
    if (to_next[i] == no_dart || to_prev[i] == no_dart)
      bad("vertex list is not a cycle of the graph");
  }

  // Walking the rotation at cycle vertex i from the outgoing cycle dart to
  // the incoming one sweeps exactly the darts on one geometric side; the
  // orientation of the embedding makes that side the same for every i.
  auto on_first_side = [&](std::size_t i, dart_t attach) {
    for (dart_t x = g.rot_next(to_next[i]); x != to_prev[i]; x = g.rot_next(x))
      if (x == attach) return true;
    return false;
  };

  bool side_a = false, side_b = false;
  std::vector<char> vis(g.capacity(), 0);
  for (vertex_t s : g.live_vertices()) {
    if (pos[s] != -1 || vis[s]) continue;
    // component of the cycle-free graph, plus one attachment into the cycle
    std::vector<vertex_t> comp{s};
    vis[s] = 1;
    dart_t attach = no_dart;
    std::size_t attach_at = 0;
    for (std::size_t head = 0; head < comp.size(); ++head) {
      vertex_t v = comp[head];
      dart_t e = g.some_dart(v);
      if (e == no_dart) continue;
      dart_t dd = e;
      do {
        vertex_t w = g.origin(plane_multigraph::twin(dd));
        if (pos[w] != -1) {
          if (attach == no_dart) {
            attach = plane_multigraph::twin(dd);  // w -> v
            attach_at = std::size_t(pos[w]);
          }
        } else if (!vis[w]) {
          vis[w] = 1;
          comp.push_back(w);
        }
        dd = g.rot_next(dd);
      } while (dd != e);
    }
    if (attach == no_dart) continue;  // disconnected piece, no side info
    (on_first_side(attach_at, attach) ? side_a : side_b) = true;
    if (side_a && side_b) return true;
  }
  return side_a && side_b;
}

std::vector<std::vector<vertex_t>> short_cycles(const plane_multigraph& g,
                                                unsigned max_len) {
  if (max_len != 3 && max_len != 4)
    bad("supported cycle length bounds are 3 and 4");
  const auto live = g.live_vertices();
  std::vector<std::vector<vertex_t>> adj(g.capacity());
  for (vertex_t v : live) adj[v] = g.neighbours(v);

  std::set<std::vector<vertex_t>> out;
  auto adjacent = [&](vertex_t a, vertex_t b) {
    return std::binary_search(adj[a].begin(), adj[a].end(), b);
  };
  for (vertex_t u : live)
    for (vertex_t v : adj[u]) {
      if (v <= u) continue;
      for (vertex_t w : adj[u])
        if (w > v && adjacent(v, w)) out.insert(normalize_cycle({u, v, w}));
    }
  if (max_len == 4) {
    for (std::size_t ia = 0; ia < live.size(); ++ia)
      for (std::size_t ic = ia + 1; ic < live.size(); ++ic) {
        vertex_t a = live[ia], c = live[ic];
        std::vector<vertex_t> common;
        std::set_intersection(adj[a].begin(), adj[a].end(), adj[c].begin(),
                              adj[c].end(), std::back_inserter(common));
        for (std::size_t i = 0; i < common.size(); ++i)
          for (std::size_t j = i + 1; j < common.size(); ++j)
            out.insert(normalize_cycle({a, common[i], c, common[j]}));
      }
  }
  return {out.begin(), out.end()};
}

std::vector<std::vector<vertex_t>> separating_cycles_up_to(
    const plane_multigraph& g, unsigned max_len) {
  std::vector<std::vector<vertex_t>> out;
  for (const auto& c : short_cycles(g, max_len))
    if (cycle_separates(g, c)) out.push_back(c);
  return out;
}

}  // namespace tww

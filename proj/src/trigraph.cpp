#include "tww/trigraph.hpp"

#include <algorithm>


namespace tww {

trigraph::trigraph(std::size_t n)
    : black_(n, bits(n)), red_(n, bits(n)), red_deg_(n, 0), alive_(n), live_(n) {
  alive_.set();
}

trigraph trigraph::from_black_edges(
    std::size_t n, const std::vector<std::pair<vertex_t, vertex_t>>& edges) {
  trigraph g(n);
  for (auto [u, v] : edges) g.add_black_edge(u, v);
  return g;
}

void trigraph::require_vertex(vertex_t v) const {
  if (v >= capacity())
    throw std::out_of_range("vertex " + std::to_string(v) + " out of range");
  if (!alive_.test(v))
    throw std::invalid_argument("vertex " + std::to_string(v) + " is dead");
}

void trigraph::require_pair(vertex_t u, vertex_t v) const {
  require_vertex(u);
  require_vertex(v);
  if (u == v)
    throw std::invalid_argument("self-loop at vertex " + std::to_string(u));
}

void trigraph::add_black_edge(vertex_t u, vertex_t v) {
  require_pair(u, v);
  if (red_[u].test(v))
    throw std::invalid_argument("edge already present in red");
  black_[u].set(v);
  black_[v].set(u);
}

void trigraph::add_red_edge(vertex_t u, vertex_t v) {
  require_pair(u, v);
  if (black_[u].test(v))
    throw std::invalid_argument("edge already present in black");
  if (!red_[u].test(v)) {
    red_[u].set(v);
    red_[v].set(u);
    ++red_deg_[u];
    ++red_deg_[v];
  }
}

bool trigraph::black_edge(vertex_t u, vertex_t v) const {
  require_vertex(u);
  require_vertex(v);
  return black_[u].test(v);
}

bool trigraph::red_edge(vertex_t u, vertex_t v) const {
  require_vertex(u);
  require_vertex(v);
  return red_[u].test(v);
}

bool trigraph::adjacent(vertex_t u, vertex_t v) const {
  require_vertex(u);
  require_vertex(v);
  return black_[u].test(v) || red_[u].test(v);
}

const bits& trigraph::black_row(vertex_t v) const {
  require_vertex(v);
  return black_[v];
}

const bits& trigraph::red_row(vertex_t v) const {
  require_vertex(v);
  return red_[v];
}

bits trigraph::neighbour_row(vertex_t v) const {
  require_vertex(v);
  return black_[v] | red_[v];
}

unsigned trigraph::degree(vertex_t v) const {
  require_vertex(v);
  return static_cast<unsigned>(black_[v].count() + red_[v].count());
}

unsigned trigraph::red_degree(vertex_t v) const {
  require_vertex(v);
  return red_deg_[v];
}

unsigned trigraph::max_red_degree() const {
  unsigned m = 0;
  for_each_bit(alive_, [&](vertex_t v) { m = std::max(m, red_deg_[v]); });
  return m;
}

std::size_t trigraph::edge_count() const {
  std::size_t twice = 0;
  for_each_bit(alive_, [&](vertex_t v) {
    twice += black_[v].count() + red_[v].count();
  });
  return twice / 2;
}

std::vector<vertex_t> trigraph::live_vertices() const {
  std::vector<vertex_t> out;
  out.reserve(live_);
  for_each_bit(alive_, [&](vertex_t v) { out.push_back(v); });
  return out;
}

std::vector<std::pair<vertex_t, vertex_t>> trigraph::edges() const {
  std::vector<std::pair<vertex_t, vertex_t>> out;
  for_each_bit(alive_, [&](vertex_t v) {
    bits nb = black_[v] | red_[v];
    for (auto u = nb.find_next(v); u != bits::npos; u = nb.find_next(u))
      out.emplace_back(v, static_cast<vertex_t>(u));
  });
  return out;
}

void trigraph::apply(contraction_step s) {
  require_pair(s.keep, s.remove);
  const vertex_t a = s.keep, b = s.remove;

  bits both = black_[a] & black_[b];
  bits all = black_[a] | black_[b] | red_[a] | red_[b];
  both.reset(a);
  both.reset(b);
  all.reset(a);
  all.reset(b);
  bits red_new = all - both;

  for (auto vv = all.find_first(); vv != bits::npos; vv = all.find_next(vv)) {
    const vertex_t v = static_cast<vertex_t>(vv);
    int lost = int(red_[v].test(a)) + int(red_[v].test(b));
    black_[v].reset(a);
    black_[v].reset(b);
    red_[v].reset(a);
    red_[v].reset(b);
    if (both.test(v)) {
      black_[v].set(a);
    } else {
      red_[v].set(a);
      ++red_deg_[v];
    }
    red_deg_[v] -= lost;
  }

  black_[a] = std::move(both);
  red_deg_[a] = static_cast<unsigned>(red_new.count());
  red_[a] = std::move(red_new);
  black_[b].reset();
  red_[b].reset();
  red_deg_[b] = 0;
  alive_.reset(b);
  --live_;
}

trigraph trigraph::contracted(contraction_step s) const {
  trigraph g(*this);
  g.apply(s);
  return g;
}

trigraph trigraph::induced_subgraph(const bits& keep) const {
  if (keep.size() != capacity())
    throw std::invalid_argument("mask size does not match capacity");
  trigraph g(capacity());
  g.alive_ = alive_ & keep;
  g.live_ = g.alive_.count();
  for_each_bit(g.alive_, [&](vertex_t v) {
    g.black_[v] = black_[v] & g.alive_;
    g.red_[v] = red_[v] & g.alive_;
    g.red_deg_[v] = unsigned(g.red_[v].count());
  });
  return g;
}

bool trigraph::operator==(const trigraph& o) const {
  return alive_ == o.alive_ && black_ == o.black_ && red_ == o.red_;
}

void trigraph::check_consistent() const {
  auto fail = [](const std::string& what) {
    throw std::logic_error("trigraph invariant broken: " + what);
  };
  std::size_t alive_seen = 0;
  for (vertex_t v = 0; v < capacity(); ++v) {
    if (!alive_.test(v)) {
      if (black_[v].any() || red_[v].any() || red_deg_[v] != 0)
        fail("dead vertex with incident edges");
      continue;
    }
    ++alive_seen;
    if (black_[v].test(v) || red_[v].test(v)) fail("self-loop");
    if ((black_[v] & red_[v]).any()) fail("edge in both colours");
    if (red_deg_[v] != red_[v].count()) fail("stale red degree");
    if (!black_[v].is_subset_of(alive_) || !red_[v].is_subset_of(alive_))
      fail("edge to a dead vertex");
    for_each_bit(black_[v], [&](vertex_t u) {
      if (!black_[u].test(v)) fail("asymmetric black edge");
    });
    for_each_bit(red_[v], [&](vertex_t u) {
      if (!red_[u].test(v)) fail("asymmetric red edge");
    });
  }
  if (alive_seen != live_) fail("live count mismatch");
}

width_trace replay(trigraph g, const contraction_sequence& seq) {
  width_trace t;
  t.per_step.reserve(seq.size());
  t.overall = g.max_red_degree();
  for (std::size_t i = 0; i < seq.size(); ++i) {
    const auto s = seq[i];
    if (s.keep >= g.capacity() || s.remove >= g.capacity())
      throw replay_error(i, "vertex id out of range");
    if (!g.alive(s.keep))
      throw replay_error(i, "keep vertex " + std::to_string(s.keep) + " is dead");
    if (!g.alive(s.remove))
      throw replay_error(i,
                         "remove vertex " + std::to_string(s.remove) + " is dead");
    if (s.keep == s.remove)
      throw replay_error(i, "keep and remove coincide");
    g.apply(s);
    unsigned m = g.max_red_degree();
    t.per_step.push_back(m);
    t.overall = std::max(t.overall, m);
  }
  return t;
}

verify_result verify_certificate(const trigraph& g,
                                 const contraction_sequence& seq,
                                 unsigned bound) {
  verify_result r;
  trigraph h(g);
  r.width = h.max_red_degree();
  if (r.width > bound) {
    r.reason = "initial max red degree " + std::to_string(r.width) +
               " exceeds bound " + std::to_string(bound);
    return r;
  }
  for (std::size_t i = 0; i < seq.size(); ++i) {
    const auto s = seq[i];
    if (s.keep >= h.capacity() || s.remove >= h.capacity() ||
        !h.alive(s.keep) || !h.alive(s.remove) || s.keep == s.remove) {
      r.reason = "structurally invalid step";
      r.failing_step = static_cast<long>(i);
      return r;
    }
    h.apply(s);
    unsigned m = h.max_red_degree();
    r.width = std::max(r.width, m);
    if (m > bound) {
      r.reason = "max red degree " + std::to_string(m) + " after step " +
                 std::to_string(i) + " exceeds bound " + std::to_string(bound);
      r.failing_step = static_cast<long>(i);
      return r;
    }
  }
  if (h.live_count() != 1) {
    r.reason = "sequence leaves " + std::to_string(h.live_count()) +
               " vertices, not 1";
    return r;
  }
  r.accepted = true;
  return r;
}

}  // namespace tww

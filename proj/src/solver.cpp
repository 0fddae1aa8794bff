#include "tww/solver.hpp"

#include <algorithm>
#include <climits>
#include <string>
#include <unordered_set>
#include <utility>
#include <vector>

namespace tww {

namespace {

void naive_rec(const trigraph& g, unsigned so_far, contraction_sequence& cur,
               unsigned& best, contraction_sequence& best_seq) {
  if (g.live_count() == 1) {
    if (so_far < best) {
      best = so_far;
      best_seq = cur;
    }
    return;
  }
  auto live = g.live_vertices();
  for (std::size_t i = 0; i < live.size(); ++i)
    for (std::size_t j = i + 1; j < live.size(); ++j) {
      trigraph child = g.contracted({live[i], live[j]});
      cur.push_back({live[i], live[j]});
      naive_rec(child, std::max(so_far, child.max_red_degree()), cur, best,
                best_seq);
      cur.pop_back();
    }
}

}  // namespace

naive_result naive_twinwidth(const trigraph& g) {
  if (g.live_count() > 8)
    throw std::invalid_argument(
        "naive enumeration is limited to 8 live vertices");
  naive_result r;
  if (g.live_count() <= 1) {
    r.width = g.max_red_degree();
    return r;
  }
  unsigned best = UINT_MAX;
  contraction_sequence cur, best_seq;
  naive_rec(g, g.max_red_degree(), cur, best, best_seq);
  r.width = best;
  r.seq = std::move(best_seq);
  return r;
}

std::string canonical_key(const trigraph& g) {
  const auto live = g.live_vertices();
  const std::size_t n = live.size();
  auto ecode = [&](std::size_t i, std::size_t j) -> char {
    vertex_t u = live[i], v = live[j];
    if (g.black_row(u).test(v)) return 1;
    if (g.red_row(u).test(v)) return 2;
    return 0;
  };

  // start from (degree, red degree) classes
  std::vector<unsigned> colour(n);
  {
    std::vector<std::pair<std::pair<unsigned, unsigned>, std::size_t>> sig(n);
    for (std::size_t i = 0; i < n; ++i)
      sig[i] = {{g.degree(live[i]), g.red_degree(live[i])}, i};
    std::sort(sig.begin(), sig.end());
    unsigned c = 0;
    for (std::size_t i = 0; i < n; ++i) {
      if (i > 0 && sig[i].first != sig[i - 1].first) ++c;
      colour[sig[i].second] = c;
    }
  }

  // refine by the multiset of (neighbour colour, edge colour) until stable
  for (std::size_t round = 0; round < n; ++round) {
    std::vector<std::pair<std::vector<unsigned>, std::size_t>> sig(n);
    for (std::size_t i = 0; i < n; ++i) {
      std::vector<unsigned> s;
      s.reserve(n);
      s.push_back(colour[i]);
      std::vector<unsigned> nb;
      nb.reserve(n - 1);
      for (std::size_t j = 0; j < n; ++j)
        if (j != i) nb.push_back(colour[j] * 4u + unsigned(ecode(i, j)));
      std::sort(nb.begin(), nb.end());
      s.insert(s.end(), nb.begin(), nb.end());
      sig[i] = {std::move(s), i};
    }
    std::sort(sig.begin(), sig.end());
    std::vector<unsigned> next(n);
    unsigned c = 0;
    for (std::size_t i = 0; i < n; ++i) {
      if (i > 0 && sig[i].first != sig[i - 1].first) ++c;
      next[sig[i].second] = c;
    }
    if (next == colour) break;
    colour = std::move(next);
  }

  // fix an order: by colour class, and inside a class take the vertex whose
  // edge row against the already ordered prefix compares smallest
  std::vector<std::size_t> order;
  order.reserve(n);
  std::vector<char> used(n, 0);
  std::vector<char> best_row, row;
  for (std::size_t pos = 0; pos < n; ++pos) {
    std::size_t best = n;
    best_row.clear();
    for (std::size_t i = 0; i < n; ++i) {
      if (used[i]) continue;
      if (best != n && colour[i] != colour[best]) {
        if (colour[i] > colour[best]) continue;
        best = n;  // strictly smaller class wins outright
      }
      row.clear();
      for (std::size_t q = 0; q < pos; ++q) row.push_back(ecode(i, order[q]));
      if (best == n || row < best_row) {
        best = i;
        best_row = row;
      }
    }
    used[best] = 1;
    order.push_back(best);
  }

  std::string key;
  key.reserve(2 + n * (n + 1) / 2);
  key.push_back(char(n & 0xff));
  key.push_back(char((n >> 8) & 0xff));
  for (std::size_t p = 0; p < n; ++p)
    for (std::size_t q = 0; q < p; ++q)
      key.push_back(ecode(order[p], order[q]));
  return key;
}

namespace {

struct budget_out {};

std::uint64_t mix64(std::uint64_t x) {
  x += 0x9e3779b97f4a7c15ULL;
  x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
  x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
  return x ^ (x >> 31);
}

// Exact maximum red degree of the state that contracting (a, b) would
// produce.  Vertices outside the closed neighbourhood of the pair keep their
// current red degree.
unsigned merge_score(const trigraph& g, const std::vector<vertex_t>& live,
                     vertex_t a, vertex_t b) {
  bits both = g.black_row(a) & g.black_row(b);
  bits all = g.black_row(a) | g.black_row(b) | g.red_row(a) | g.red_row(b);
  both.reset(a);
  both.reset(b);
  all.reset(a);
  all.reset(b);
  bits red_new = all - both;
  unsigned m = static_cast<unsigned>(red_new.count());
  for (vertex_t w : live) {
    if (w == a || w == b) continue;
    if (all.test(w)) {
      int rd = int(g.red_degree(w)) - int(g.red_row(w).test(a)) -
               int(g.red_row(w).test(b)) + int(red_new.test(w));
      m = std::max(m, unsigned(rd));
    } else {
      m = std::max(m, g.red_degree(w));
    }
  }
  return m;
}

struct bb_ctx {
  unsigned d = 0;
  std::uint64_t budget = 0;
  std::uint64_t seed = 0;
  std::uint64_t evals = 0;
  std::unordered_set<std::string> failed;
  contraction_sequence path;
};

struct candidate {
  unsigned score;
  std::uint64_t tie;
  vertex_t u, v;
};

bool bb_dfs(const trigraph& g, bb_ctx& c) {
  if (g.live_count() == 1) return true;
  const auto live = g.live_vertices();
  const std::size_t n = live.size();

  std::vector<candidate> cands;
  cands.reserve(n * (n - 1) / 2);
  std::vector<unsigned> scores(n * (n - 1) / 2, 0);
  std::vector<std::pair<vertex_t, vertex_t>> pairs;
  pairs.reserve(scores.size());
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j) pairs.emplace_back(live[i], live[j]);

  c.evals += pairs.size();
  if (c.evals > c.budget) throw budget_out{};

  // data parallel scoring; ordering below resolves any thread interleaving
#pragma omp parallel for schedule(static) if (n >= 64)
  for (long k = 0; k < long(pairs.size()); ++k)
    scores[k] = merge_score(g, live, pairs[k].first, pairs[k].second);

  for (std::size_t k = 0; k < pairs.size(); ++k) {
    if (scores[k] > c.d) continue;
    auto [u, v] = pairs[k];
    std::uint64_t tie =
        c.seed ? mix64(c.seed ^ (std::uint64_t(u) << 32 | v)) : 0;
    cands.push_back({scores[k], tie, u, v});
  }
  std::sort(cands.begin(), cands.end(), [](const candidate& x, const candidate& y) {
    return std::tie(x.score, x.tie, x.u, x.v) <
           std::tie(y.score, y.tie, y.u, y.v);
  });

  for (const auto& cd : cands) {
    trigraph child = g.contracted({cd.u, cd.v});
    std::string key = canonical_key(child);
    if (c.failed.contains(key)) continue;
    c.path.push_back({cd.u, cd.v});
    if (bb_dfs(child, c)) return true;
    c.path.pop_back();
    c.failed.insert(std::move(key));
  }
  return false;
}

}  // namespace

at_most_result twinwidth_at_most(const trigraph& g, unsigned d,
                                 std::uint64_t budget, std::uint64_t seed) {
  at_most_result r;
  if (g.max_red_degree() > d) {
    r.status = feasibility::infeasible;
    return r;
  }
  if (g.live_count() <= 1) {
    r.status = feasibility::feasible;
    return r;
  }
  bb_ctx c;
  c.d = d;
  c.budget = budget;
  c.seed = seed;
  try {
    if (bb_dfs(g, c)) {
      r.status = feasibility::feasible;
      r.cert = c.path;
    } else {
      r.status = feasibility::infeasible;
    }
  } catch (const budget_out&) {
    r.status = feasibility::budget_exhausted;
  }
  r.evaluations = c.evals;
  return r;
}

solve_result twinwidth_exact(const trigraph& g, const solver_options& opt) {
  solve_result res;
  const std::size_t n = g.live_count();
  if (n <= 1) {
    res.status = solve_status::exact;
    res.has_bound = true;
    res.width = g.max_red_degree();
    return res;
  }

  const unsigned d0 = g.max_red_degree();
  // any full sequence stays below the live vertex count, so the scan is finite
  const unsigned dmax = std::max(d0, unsigned(n) - 2);
  const unsigned T = unsigned(std::max(1, opt.threads));

  std::vector<at_most_result> block(T);
  bool exhausted_below = false;
  for (unsigned base = d0; base <= dmax; base += T) {
    const unsigned hi = std::min(dmax, base + T - 1);
    const int width_of_block = int(hi - base + 1);
#pragma omp parallel for schedule(dynamic, 1) num_threads(int(T)) if (T > 1)
    for (int off = 0; off < width_of_block; ++off)
      block[off] = twinwidth_at_most(g, base + off, opt.budget, opt.seed);

    for (int off = 0; off < width_of_block; ++off) {
      const auto& r = block[off];
      res.evaluations += r.evaluations;
      if (r.status == feasibility::feasible) {
        res.cert = r.cert;
        res.width = replay(g, r.cert).overall;
        res.has_bound = true;
        res.status =
            exhausted_below ? solve_status::upper_bound : solve_status::exact;
        if (res.status == solve_status::upper_bound && opt.known &&
            opt.known->first < res.width) {
          res.width = opt.known->first;
          res.cert = opt.known->second;
        }
        return res;
      }
      if (r.status == feasibility::budget_exhausted) exhausted_below = true;
    }
  }

  res.status = solve_status::unknown;
  if (opt.known) {
    res.has_bound = true;
    res.width = opt.known->first;
    res.cert = opt.known->second;
  }
  return res;
}

}  // namespace tww

#include "tww/io.hpp"

#include <json.hpp>

#include <istream>
#include <ostream>
#include <stdexcept>
#include <string>
#include <utility>

namespace tww {

using ordered_json = nlohmann::ordered_json;

void write_edge_list(std::ostream& os, const trigraph& g) {
  if (g.live_count() != g.capacity())
    throw std::invalid_argument("edge lists describe fully live graphs");
  for (vertex_t v : g.live_vertices())
    if (g.red_degree(v) != 0)
      throw std::invalid_argument("edge lists cannot carry red edges");
  auto edges = g.edges();
  os << g.capacity() << ' ' << edges.size() << '\n';
  for (auto [u, v] : edges) os << u << ' ' << v << '\n';
}

trigraph read_edge_list(std::istream& is) {
  std::size_t n = 0, m = 0;
  if (!(is >> n >> m)) throw std::runtime_error("edge list: bad header");
  std::vector<std::pair<vertex_t, vertex_t>> edges;
  edges.reserve(m);
  for (std::size_t i = 0; i < m; ++i) {
    unsigned long long u = 0, v = 0;
    if (!(is >> u >> v)) throw std::runtime_error("edge list: truncated");
    if (u >= n || v >= n || u == v)
      throw std::runtime_error("edge list: bad edge");
    edges.emplace_back(vertex_t(u), vertex_t(v));
  }
  return trigraph::from_black_edges(n, edges);
}

void write_certificate(std::ostream& os, const certificate& c) {
  ordered_json j;
  j["format"] = "tww-cert/1";
  j["n"] = c.n;
  j["width"] = c.width;
  auto steps = ordered_json::array();
  for (auto s : c.steps) steps.push_back({s.keep, s.remove});
  j["steps"] = std::move(steps);
  os << j.dump() << '\n';
}

certificate read_certificate(std::istream& is) {
  ordered_json j = ordered_json::parse(is);
  if (!j.is_object() || j.value("format", "") != "tww-cert/1")
    throw std::runtime_error("certificate: unsupported format tag");
  certificate c;
  c.n = j.at("n").get<std::size_t>();
  c.width = j.at("width").get<unsigned>();
  for (const auto& e : j.at("steps")) {
    if (!e.is_array() || e.size() != 2)
      throw std::runtime_error("certificate: steps must be [keep, remove]");
    c.steps.push_back({e[0].get<vertex_t>(), e[1].get<vertex_t>()});
  }
  return c;
}

void write_embedding(std::ostream& os, const plane_multigraph& g) {
  for (vertex_t v : g.live_vertices()) {
    os << v << ':';
    dart_t d0 = g.some_dart(v);
    if (d0 != no_dart) {
      dart_t d = d0;
      do {
        os << ' ' << g.origin(plane_multigraph::twin(d));
        d = g.rot_next(d);
      } while (d != d0);
    }
    os << '\n';
  }
}

void write_dot(std::ostream& os, const trigraph& g) {
  os << "graph tww {\n";
  for (vertex_t v : g.live_vertices())
    if (g.degree(v) == 0) os << "  " << v << ";\n";
  for (auto [u, v] : g.edges()) {
    os << "  " << u << " -- " << v;
    if (g.red_edge(u, v)) os << " [color=red]";
    os << ";\n";
  }
  os << "}\n";
}

void write_metadata(std::ostream& os, const gk_graph& g) {
  ordered_json j;
  j["k"] = g.k;
  j["n"] = g.graph.live_count();
  j["m"] = g.graph.edge_count();
  j["skeleton_n"] = g.skeleton_n;
  ordered_json h = ordered_json::object();
  for (auto [deg, count] : degree_histogram(g.graph))
    h[std::to_string(deg)] = count;
  j["histogram"] = std::move(h);
  os << j.dump(2) << '\n';
}

void write_trace_csv(std::ostream& os, const contraction_sequence& seq,
                     const width_trace& trace) {
  if (seq.size() != trace.per_step.size())
    throw std::invalid_argument("trace does not match the sequence");
  os << "step,keep,remove,max_red_degree\n";
  for (std::size_t i = 0; i < seq.size(); ++i)
    os << i + 1 << ',' << seq[i].keep << ',' << seq[i].remove << ','
       << trace.per_step[i] << '\n';
}

namespace {

ordered_json pair_array(const std::vector<std::pair<vertex_t, vertex_t>>& ps) {
  auto a = ordered_json::array();
  for (auto [u, v] : ps) a.push_back({u, v});
  return a;
}

}  // namespace

void write_report(std::ostream& os, const analyzer_report& rep) {
  ordered_json j;
  j["skeleton_min_degree"] = rep.skeleton_min_degree;
  j["adjacent_5_pairs"] = pair_array(rep.adjacent_5_pairs);
  auto viol = ordered_json::array();
  for (const auto& [pair, common] : rep.five_common_violations)
    viol.push_back({{"pair", {pair.first, pair.second}}, {"common", common}});
  j["five_common_violations"] = std::move(viol);
  j["separating_3_cycles"] = rep.separating_3_cycles;
  j["separating_4_cycles"] = rep.separating_4_cycles;
  j["semiplanar_ok_edges"] = pair_array(rep.semiplanar_ok_edges);
  os << j.dump(2) << '\n';
}

}  // namespace tww

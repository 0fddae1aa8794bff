#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <json.hpp>

#include <sstream>

#include "tww/io.hpp"

using namespace tww;

TEST_CASE("edge list round trip") {
  auto g = icosahedron().first;
  std::stringstream ss;
  write_edge_list(ss, g);
  std::string text = ss.str();
  CHECK(text.substr(0, 10) == "12 30\n0 1\n");
  CHECK(std::count(text.begin(), text.end(), '\n') == 31);

  auto back = read_edge_list(ss);
  CHECK(back == g);
}

TEST_CASE("edge lists reject what they cannot express") {
  auto g = icosahedron().first;
  std::stringstream ss;
  CHECK_THROWS_AS(write_edge_list(ss, g.contracted({0, 1})),
                  std::invalid_argument);

  trigraph red(2);
  red.add_red_edge(0, 1);
  CHECK_THROWS_AS(write_edge_list(ss, red), std::invalid_argument);

  auto reject = [](const std::string& text) {
    std::stringstream in(text);
    CHECK_THROWS_AS(read_edge_list(in), std::runtime_error);
  };
  reject("nonsense");
  reject("3 2\n0 1");
  reject("2 1\n0 0");
  reject("2 1\n0 5");
}

TEST_CASE("certificate serialization is pinned") {
  certificate c;
  c.n = 5;
  c.width = 2;
  c.steps = {{0, 1}, {0, 2}};
  std::stringstream ss;
  write_certificate(ss, c);
  CHECK(ss.str() ==
        "{\"format\":\"tww-cert/1\",\"n\":5,\"width\":2,"
        "\"steps\":[[0,1],[0,2]]}\n");

  auto back = read_certificate(ss);
  CHECK(back.n == c.n);
  CHECK(back.width == c.width);
  CHECK(back.steps == c.steps);
}

TEST_CASE("certificate reader rejects other shapes") {
  auto reject = [](const std::string& text) {
    std::stringstream in(text);
    CHECK_THROWS_AS(read_certificate(in), std::exception);
  };
  reject("{\"format\":\"tww-cert/2\",\"n\":1,\"width\":0,\"steps\":[]}");
  reject("{\"n\":1,\"width\":0,\"steps\":[]}");
  reject("{\"format\":\"tww-cert/1\",\"n\":1,\"width\":0,\"steps\":[[1]]}");
  reject("[1,2]");
  reject("not json");
}

TEST_CASE("embedding text lists neighbours in rotation order") {
  auto single = plane_multigraph::from_oriented_faces(2, {{0, 1}});
  std::stringstream ss;
  write_embedding(ss, single);
  CHECK(ss.str() == "0: 1\n1: 0\n");

  auto tri = plane_multigraph::from_oriented_faces(3, {{0, 1, 2}, {0, 2, 1}});
  std::stringstream ts;
  write_embedding(ts, tri);
  std::string line;
  unsigned lines = 0;
  while (std::getline(ts, line)) {
    CHECK(line.size() == 6);  // "v: a b"
    ++lines;
  }
  CHECK(lines == 3);
}

TEST_CASE("dot output marks red edges and isolated vertices") {
  trigraph g(3);
  g.add_black_edge(0, 1);
  g.add_red_edge(1, 2);
  std::stringstream ss;
  write_dot(ss, g);
  CHECK(ss.str() ==
        "graph tww {\n  0 -- 1;\n  1 -- 2 [color=red];\n}\n");

  trigraph iso(2);
  std::stringstream is;
  write_dot(is, iso);
  CHECK(is.str() == "graph tww {\n  0;\n  1;\n}\n");
}

TEST_CASE("metadata summarizes a family member") {
  auto g = build_gk(0);
  std::stringstream ss;
  write_metadata(ss, g);
  auto j = nlohmann::json::parse(ss.str());
  auto expect = nlohmann::json::parse(
      "{\"k\":0,\"n\":132,\"m\":390,\"skeleton_n\":12,"
      "\"histogram\":{\"4\":60,\"5\":60,\"20\":12}}");
  CHECK(j == expect);
}

TEST_CASE("trace csv is pinned") {
  contraction_sequence seq = {{0, 1}, {0, 2}};
  width_trace trace;
  trace.per_step = {1, 2};
  trace.overall = 2;
  std::stringstream ss;
  write_trace_csv(ss, seq, trace);
  CHECK(ss.str() == "step,keep,remove,max_red_degree\n1,0,1,1\n2,0,2,2\n");

  width_trace off;
  off.per_step = {1};
  CHECK_THROWS_AS(write_trace_csv(ss, seq, off), std::invalid_argument);
}

TEST_CASE("report serialization carries every field") {
  auto faces = std::vector<std::vector<vertex_t>>{
      {0, 1, 2}, {0, 2, 3}, {0, 3, 4}, {0, 4, 1},
      {5, 2, 1}, {5, 3, 2}, {5, 4, 3}, {5, 1, 4}};
  std::vector<std::pair<vertex_t, vertex_t>> edges;
  for (const auto& f : faces)
    for (std::size_t i = 0; i < 3; ++i) {
      vertex_t u = f[i], v = f[(i + 1) % 3];
      if (u < v) edges.emplace_back(u, v);
    }
  auto rep = analyze_graph(trigraph::from_black_edges(6, edges));

  std::stringstream ss;
  write_report(ss, rep);
  auto j = nlohmann::json::parse(ss.str());
  CHECK(j["skeleton_min_degree"] == 4);
  CHECK(j["adjacent_5_pairs"].empty());
  CHECK(j["five_common_violations"].empty());
  CHECK(j["separating_3_cycles"].empty());
  CHECK(j["separating_4_cycles"] ==
        nlohmann::json::parse("[[0,1,5,3],[0,2,5,4],[1,2,3,4]]"));
  CHECK(j["semiplanar_ok_edges"].size() == 12);
}

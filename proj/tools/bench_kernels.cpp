#include <chrono>
#include <cstdio>
#include <cstdlib>
#include <string>

#ifdef _OPENMP
#include <omp.h>
#endif

#include "tww/analyzer.hpp"
#include "tww/construction.hpp"
#include "tww/solver.hpp"

namespace {

template <class F>
double run_ms(F&& f) {
  auto t0 = std::chrono::steady_clock::now();
  f();
  auto t1 = std::chrono::steady_clock::now();
  return std::chrono::duration<double, std::milli>(t1 - t0).count();
}

bool reports_equal(const tww::analyzer_report& a,
                   const tww::analyzer_report& b) {
  return a.skeleton_min_degree == b.skeleton_min_degree &&
         a.adjacent_5_pairs == b.adjacent_5_pairs &&
         a.five_common_violations == b.five_common_violations &&
         a.separating_3_cycles == b.separating_3_cycles &&
         a.separating_4_cycles == b.separating_4_cycles &&
         a.semiplanar_ok_edges == b.semiplanar_ok_edges;
}

void row(const std::string& name, double serial, double par, bool agree) {
  std::printf("%-34s %10.1f %10.1f %7.2fx %s\n", name.c_str(), serial, par,
              serial / par, agree ? "yes" : "NO");
}

}  // namespace

int main(int argc, char** argv) {
  unsigned k = argc > 1 ? unsigned(std::atoi(argv[1])) : 6;
#ifdef _OPENMP
  unsigned threads = unsigned(omp_get_max_threads());
#else
  unsigned threads = 1;
#endif
  if (threads < 2) threads = 2;  // still exercises the parallel path

  std::printf("%-34s %10s %10s %8s %s\n", "kernel", "serial ms", "par ms",
              "speedup", "agree");

  {
    auto g = tww::build_gk(k);
    auto [sk, emb] = tww::skeleton_subgraph(g);
    tww::analyzer_report r1, rt;
    double serial = run_ms([&] { r1 = tww::analyze_skeleton(sk, emb, 1); });
    double par = run_ms([&] { rt = tww::analyze_skeleton(sk, emb, threads); });
    row("skeleton separator scan, k=" + std::to_string(k), serial, par,
        reports_equal(r1, rt));
  }

  {
    auto sk = tww::skeleton_subgraph(tww::build_gk(k)).first;
    tww::analyzer_report r1, rt;
    double serial = run_ms([&] { r1 = tww::analyze_graph(sk, 1); });
    double par = run_ms([&] { rt = tww::analyze_graph(sk, threads); });
    row("abstract separator scan, k=" + std::to_string(k), serial, par,
        reports_equal(r1, rt));
  }

  {
    auto g = tww::icosahedron().first;
    tww::solver_options s1, st;
    s1.threads = 1;
    st.threads = int(threads);
    tww::solve_result a, b;
    double serial = run_ms([&] { a = tww::twinwidth_exact(g, s1); });
    double par = run_ms([&] { b = tww::twinwidth_exact(g, st); });
    row("exact width, icosahedron", serial, par,
        a.width == b.width && a.status == b.status);
  }
  return 0;
}

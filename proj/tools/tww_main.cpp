#include <CLI11.hpp>

#include <cstdint>
#include <fstream>
#include <functional>
#include <iostream>
#include <string>

#include "tww/analyzer.hpp"
#include "tww/construction.hpp"
#include "tww/io.hpp"
#include "tww/solver.hpp"
#include "tww/witness.hpp"

namespace {

std::ifstream open_input(const std::string& path) {
  std::ifstream is(path);
  if (!is) throw std::runtime_error("cannot open " + path);
  return is;
}

void with_output(const std::string& path,
                 const std::function<void(std::ostream&)>& fill) {
  if (path.empty()) {
    fill(std::cout);
    return;
  }
  std::ofstream os(path);
  if (!os) throw std::runtime_error("cannot open " + path);
  fill(os);
}

tww::trigraph load_graph(const std::string& path) {
  auto is = open_input(path);
  return tww::read_edge_list(is);
}

const char* status_name(tww::solve_status s) {
  switch (s) {
    case tww::solve_status::exact: return "exact";
    case tww::solve_status::upper_bound: return "upper-bound";
    default: return "unknown";
  }
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"twin-width toolkit for an iterated planar family"};
  app.require_subcommand(1);

  unsigned gen_k = 0;
  std::string gen_out;
  auto* gen = app.add_subcommand("generate",
                                 "write a family member as an edge list");
  gen->add_option("--k", gen_k, "family index")->required();
  gen->add_option("--out", gen_out, "output file (default stdout)");

  unsigned wit_k = 0;
  std::string wit_out;
  auto* wit = app.add_subcommand("witness",
                                 "emit the staged width-7 certificate");
  wit->add_option("--k", wit_k, "family index")->required();
  wit->add_option("--out", wit_out, "certificate file (default stdout)");

  std::string ver_graph, ver_cert;
  unsigned ver_bound = 0;
  auto* ver = app.add_subcommand("verify",
                                 "replay a certificate against a graph");
  ver->add_option("--graph", ver_graph, "edge list file")->required();
  ver->add_option("--cert", ver_cert, "certificate file")->required();
  ver->add_option("--bound", ver_bound,
                  "width bound (default: the certificate's claim)");

  std::string sol_graph, sol_mode = "exact", sol_out;
  unsigned sol_bound = 0;
  std::uint64_t sol_budget = tww::default_budget, sol_seed = 0;
  int sol_threads = 1;
  auto* sol = app.add_subcommand("solve", "search for the twin-width");
  sol->add_option("--graph", sol_graph, "edge list file")->required();
  sol->add_option("--mode", sol_mode, "exact or at-most")
      ->check(CLI::IsMember({"exact", "at-most"}));
  sol->add_option("--bound", sol_bound, "bound for at-most mode");
  sol->add_option("--budget", sol_budget, "candidate evaluation budget");
  sol->add_option("--threads", sol_threads, "speculative bound probes");
  sol->add_option("--seed", sol_seed, "tie-breaking seed, 0 keeps id order");
  sol->add_option("--out", sol_out, "write the found certificate here");

  unsigned ana_k = 0;
  std::string ana_graph, ana_out;
  unsigned ana_threads = 1;
  auto* ana = app.add_subcommand("analyze",
                                 "report degree and separator structure");
  auto* ana_k_opt = ana->add_option("--k", ana_k, "analyze this member's skeleton");
  auto* ana_g_opt = ana->add_option("--graph", ana_graph, "edge list file");
  ana_k_opt->excludes(ana_g_opt);
  ana->add_option("--threads", ana_threads, "parallel cycle scans");
  ana->add_option("--out", ana_out, "output file (default stdout)");

  unsigned exp_k = 0;
  std::string exp_format, exp_out;
  auto* exp = app.add_subcommand("export", "serialize a family member");
  exp->add_option("--k", exp_k, "family index")->required();
  exp->add_option("--format", exp_format, "edges, dot, embedding or metadata")
      ->required()
      ->check(CLI::IsMember({"edges", "dot", "embedding", "metadata"}));
  exp->add_option("--out", exp_out, "output file (default stdout)");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? 0 : 2;
  }

  try {
    if (*gen) {
      auto g = tww::build_gk(gen_k);
      with_output(gen_out,
                  [&](std::ostream& os) { tww::write_edge_list(os, g.graph); });
      return 0;
    }

    if (*wit) {
      auto plan = tww::synthesize_witness(wit_k);
      tww::certificate c;
      c.n = tww::gk_vertex_count(wit_k);
      c.width = plan.trace.overall;
      c.steps = plan.full();
      with_output(wit_out,
                  [&](std::ostream& os) { tww::write_certificate(os, c); });
      auto& summary = wit_out.empty() ? std::cerr : std::cout;
      summary << "width=" << c.width << " steps=" << c.steps.size() << '\n';
      return 0;
    }

    if (*ver) {
      auto g = load_graph(ver_graph);
      auto is = open_input(ver_cert);
      auto cert = tww::read_certificate(is);
      if (cert.n != g.capacity()) {
        std::cout << "REJECT certificate names " << cert.n
                  << " vertices, graph has " << g.capacity() << '\n';
        return 1;
      }
      unsigned bound = ver->count("--bound") ? ver_bound : cert.width;
      auto res = tww::verify_certificate(g, cert.steps, bound);
      if (res.accepted) {
        std::cout << "ACCEPT width=" << res.width << " bound=" << bound
                  << '\n';
        return 0;
      }
      std::cout << "REJECT " << res.reason << '\n';
      return 1;
    }

    if (*sol) {
      auto g = load_graph(sol_graph);
      if (sol_mode == "at-most") {
        if (!sol->count("--bound"))
          throw std::runtime_error("at-most mode needs --bound");
        auto res = tww::twinwidth_at_most(g, sol_bound, sol_budget, sol_seed);
        const char* verdict =
            res.status == tww::feasibility::feasible     ? "feasible"
            : res.status == tww::feasibility::infeasible ? "infeasible"
                                                         : "unknown";
        std::cout << "bound=" << sol_bound << " result=" << verdict << '\n';
        if (res.status == tww::feasibility::feasible && !sol_out.empty()) {
          tww::certificate c;
          c.n = g.capacity();
          c.width = tww::replay(g, res.cert).overall;
          c.steps = res.cert;
          with_output(sol_out,
                      [&](std::ostream& os) { tww::write_certificate(os, c); });
        }
        return res.status == tww::feasibility::infeasible ? 1 : 0;
      }
      tww::solver_options opt;
      opt.budget = sol_budget;
      opt.threads = sol_threads;
      opt.seed = sol_seed;
      auto res = tww::twinwidth_exact(g, opt);
      if (res.has_bound)
        std::cout << "width=" << res.width
                  << " status=" << status_name(res.status) << '\n';
      else
        std::cout << "width=? status=" << status_name(res.status) << '\n';
      if (res.has_bound && !sol_out.empty()) {
        tww::certificate c;
        c.n = g.capacity();
        c.width = res.width;
        c.steps = res.cert;
        with_output(sol_out,
                    [&](std::ostream& os) { tww::write_certificate(os, c); });
      }
      return 0;
    }

    if (*ana) {
      tww::analyzer_report rep;
      if (ana->count("--k")) {
        auto g = tww::build_gk(ana_k);
        auto [sk, semb] = tww::skeleton_subgraph(g);
        rep = tww::analyze_skeleton(sk, semb, ana_threads);
      } else if (ana->count("--graph")) {
        rep = tww::analyze_graph(load_graph(ana_graph), ana_threads);
      } else {
        throw std::runtime_error("analyze needs --k or --graph");
      }
      with_output(ana_out,
                  [&](std::ostream& os) { tww::write_report(os, rep); });
      return 0;
    }

    if (*exp) {
      auto g = tww::build_gk(exp_k);
      with_output(exp_out, [&](std::ostream& os) {
        if (exp_format == "edges")
          tww::write_edge_list(os, g.graph);
        else if (exp_format == "dot")
          tww::write_dot(os, g.graph);
        else if (exp_format == "embedding")
          tww::write_embedding(os, g.embedding);
        else
          tww::write_metadata(os, g);
      });
      return 0;
    }
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 2;
  }
  return 0;
}

#pragma once

#include <iosfwd>

#include "tww/analyzer.hpp"
#include "tww/construction.hpp"
#include "tww/embedding.hpp"
#include "tww/trigraph.hpp"

namespace tww {

// Edge list: a "n m" header line, then one "u v" line per edge.  Only
// all-black graphs have this form; red edges make the writer throw.
void write_edge_list(std::ostream& os, const trigraph& g);
trigraph read_edge_list(std::istream& is);

struct certificate {
  std::size_t n = 0;
  unsigned width = 0;
  contraction_sequence steps;
};

// One-line JSON object: format tag, vertex count, claimed width, steps as
// [keep, remove] pairs.  The reader rejects unknown format tags.
void write_certificate(std::ostream& os, const certificate& c);
certificate read_certificate(std::istream& is);

// One line per live vertex: "v: a b c ..." lists neighbours in rotation
// order, so faces can be reconstructed.  Loops list the vertex twice.
void write_embedding(std::ostream& os, const plane_multigraph& g);

// Undirected DOT; red edges carry color=red, isolated vertices get a line.
void write_dot(std::ostream& os, const trigraph& g);

// Family member summary: k, sizes, degree histogram.
void write_metadata(std::ostream& os, const gk_graph& g);

// CSV with one row per contraction, columns step,keep,remove,max_red_degree.
void write_trace_csv(std::ostream& os, const contraction_sequence& seq,
                     const width_trace& trace);

void write_report(std::ostream& os, const analyzer_report& rep);

}  // namespace tww

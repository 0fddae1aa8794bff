#pragma once

#include <cstdint>
#include <optional>

#include "tww/trigraph.hpp"

namespace tww {

inline constexpr std::uint64_t default_budget = 10'000'000;

struct naive_result {
  unsigned width = 0;
  contraction_sequence seq;
};

// Exhaustive minimax over every contraction order, no pruning.  Serves as the
// trusted reference; refuses anything above 8 live vertices.
naive_result naive_twinwidth(const trigraph& g);

enum class feasibility { feasible, infeasible, budget_exhausted };

struct at_most_result {
  feasibility status = feasibility::infeasible;
  contraction_sequence cert;      // filled when feasible
  std::uint64_t evaluations = 0;  // candidate contractions scored
};

// Searches for a full reduction whose every state keeps max red degree <= d.
// Branches are ordered by the red degree they would create; states that have
// been fully explored and failed are remembered under a canonical
// relabelling, so permuted duplicates are pruned.  The budget counts scored
// candidate contractions; exceeding it yields budget_exhausted, which is
// distinct from a proven infeasible.
at_most_result twinwidth_at_most(const trigraph& g, unsigned d,
                                 std::uint64_t budget = default_budget,
                                 std::uint64_t seed = 0);

enum class solve_status { exact, upper_bound, unknown };

struct solve_result {
  solve_status status = solve_status::unknown;
  bool has_bound = false;  // width/cert are meaningful
  unsigned width = 0;
  contraction_sequence cert;
  std::uint64_t evaluations = 0;
};

struct solver_options {
  std::uint64_t budget = default_budget;
  int threads = 1;
  std::uint64_t seed = 0;  // nonzero randomises tie-breaking among equal scores
  // Externally known upper bound (for example an imported certificate); used
  // as the reported bound when the search itself cannot finish in budget.
  std::optional<std::pair<unsigned, contraction_sequence>> known;
};

// Scans d upward; each bound query is independent, so extra threads only
// evaluate speculative bounds and the outcome does not depend on the thread
// count.  Status is exact when every smaller bound was proven infeasible,
// upper_bound when a certificate was found but a smaller bound ran out of
// budget, and unknown otherwise.
solve_result twinwidth_exact(const trigraph& g, const solver_options& opt = {});

// Canonical cache key: adjacency encoding under an iterated (degree, red
// degree) refinement, lexicographically minimised within refinement classes.
// Equal keys imply isomorphic trigraphs; the converse need not hold.
std::string canonical_key(const trigraph& g);

}  // namespace tww

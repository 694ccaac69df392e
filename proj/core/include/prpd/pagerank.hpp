#pragma once

#include <cstddef>
#include <vector>

#include "prpd/graph.hpp"

namespace prpd {

struct PageRankConfig {
  double damping = 0.85;
  // Stop once the L1 distance between successive iterates drops below this.
  double tolerance = 1e-10;
  std::size_t max_iterations = 1000;

  // Throws DomainError unless 0 < damping < 1, tolerance > 0 and
  // max_iterations >= 1.
  void validate() const;
};

struct PageRankResult {
  ScalarField scores;
  bool converged = false;
  std::size_t iterations = 0;
  // L1 change of the last iteration.
  double residual = 0.0;
};

// Undirected PageRank by power iteration from the uniform vector:
//
//   PR(v) = (1 - d)/n + d * sum_{u in N(v)} PR(u)/deg(u)
//
// Mass sitting on degree-0 vertices is spread uniformly over all vertices on
// every step, so the scores always sum to 1. Neighbor sums run in ascending
// neighbor order, making the result bit-reproducible.
//
// Throws DomainError on an empty graph or invalid config. Hitting
// max_iterations is not an error; check `converged`.
PageRankResult compute_pagerank(const Graph& g, const PageRankConfig& cfg = {});

// Per-edge value max(f(u), f(v)), indexed like g.edges().
std::vector<double> extend_to_edges(const Graph& g, const ScalarField& field);

}  // namespace prpd

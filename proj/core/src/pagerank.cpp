#include "prpd/pagerank.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "prpd/error.hpp"

namespace prpd {

void PageRankConfig::validate() const {
  if (!(damping > 0.0 && damping < 1.0)) {
    throw DomainError("damping must lie in (0, 1), got " + std::to_string(damping));
  }
  if (!(tolerance > 0.0)) throw DomainError("tolerance must be positive");
  if (max_iterations < 1) throw DomainError("max_iterations must be at least 1");
}

PageRankResult compute_pagerank(const Graph& g, const PageRankConfig& cfg) {
  cfg.validate();
  const std::size_t n = g.num_vertices();
  if (n == 0) throw DomainError("PageRank is undefined on an empty graph");

  const double inv_n = 1.0 / static_cast<double>(n);
  const double d = cfg.damping;

  std::vector<double> inv_degree(n, 0.0);
  std::vector<VertexId> dangling;
  for (VertexId v = 0; v < n; ++v) {
    const auto deg = g.degree(v);
    if (deg == 0) {
      dangling.push_back(v);
    } else {
      inv_degree[v] = 1.0 / static_cast<double>(deg);
    }
  }

  std::vector<double> rank(n, inv_n);
  std::vector<double> next(n);
  std::vector<double> share(n);

  PageRankResult result;
  for (std::size_t it = 0; it < cfg.max_iterations; ++it) {
    double dangling_mass = 0.0;
    for (VertexId v : dangling) dangling_mass += rank[v];
    for (std::size_t v = 0; v < n; ++v) share[v] = rank[v] * inv_degree[v];

    const double base = (1.0 - d) * inv_n + d * dangling_mass * inv_n;
    double change = 0.0;
    for (VertexId v = 0; v < n; ++v) {
      double sum = 0.0;
      for (VertexId u : g.neighbors(v)) sum += share[u];
      next[v] = base + d * sum;
      change += std::abs(next[v] - rank[v]);
    }
    rank.swap(next);
    result.iterations = it + 1;
    result.residual = change;
    if (change < cfg.tolerance) {
      result.converged = true;
      break;
    }
  }
  result.scores = ScalarField(std::move(rank));
  return result;
}

std::vector<double> extend_to_edges(const Graph& g, const ScalarField& field) {
  require_matching(g, field);
  std::vector<double> values;
  values.reserve(g.num_edges());
  for (const Edge& e : g.edges()) values.push_back(std::max(field[e.u], field[e.v]));
  return values;
}

}  // namespace prpd

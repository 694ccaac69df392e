#include "prpd/persistence.hpp"

#include <algorithm>
#include <cmath>

#include "prpd/error.hpp"

namespace prpd {

PersistenceDiagram::PersistenceDiagram(std::vector<PersistencePair> finite, std::vector<double> essential)
    : essential_(std::move(essential)) {
  finite_.reserve(finite.size());
  for (const auto& p : finite) {
    if (std::isnan(p.birth) || std::isnan(p.death)) throw InputError("persistence pair contains NaN");
    if (p.birth > p.death) throw InputError("persistence pair has birth > death");
    if (p.birth < p.death) finite_.push_back(p);
  }
  for (double b : essential_) {
    if (std::isnan(b)) throw InputError("essential birth is NaN");
  }
  std::sort(finite_.begin(), finite_.end());
  std::sort(essential_.begin(), essential_.end());
}

UnionFindForest::UnionFindForest(std::span<const std::uint32_t> position)
    : position_(position), parent_(position.size()) {
  for (VertexId v = 0; v < parent_.size(); ++v) parent_[v] = v;
}

VertexId UnionFindForest::find(VertexId v) {
  VertexId root = v;
  while (parent_[root] != root) root = parent_[root];
  while (parent_[v] != root) {
    const VertexId next = parent_[v];
    parent_[v] = root;
    v = next;
  }
  return root;
}

VertexId UnionFindForest::merge(VertexId a, VertexId b) {
  if (position_[a] < position_[b]) {
    parent_[b] = a;
    return b;
  }
  parent_[a] = b;
  return a;
}

LowerStarFiltration lower_star_filtration(const Graph& g, const ScalarField& field) {
  LowerStarFiltration filtration;
  filtration.order = vertex_order(g, field);
  filtration.position.resize(filtration.order.size());
  for (std::uint32_t i = 0; i < filtration.order.size(); ++i) filtration.position[filtration.order[i]] = i;

  const auto& pos = filtration.position;
  filtration.edge_keys.reserve(g.num_edges());
  for (const Edge& e : g.edges()) {
    const std::uint64_t hi = std::max(pos[e.u], pos[e.v]);
    const std::uint64_t lo = std::min(pos[e.u], pos[e.v]);
    filtration.edge_keys.push_back(hi << 32 | lo);
  }
  std::sort(filtration.edge_keys.begin(), filtration.edge_keys.end());
  return filtration;
}

PersistenceDiagram compute_pd0(const LowerStarFiltration& filtration, const ScalarField& field) {
  const auto& order = filtration.order;
  UnionFindForest forest(filtration.position);
  std::vector<PersistencePair> bars;
  for (const std::uint64_t key : filtration.edge_keys) {
    const VertexId u = order[key >> 32];
    const VertexId v = order[key & 0xffffffffu];
    const VertexId c = forest.find(u);
    const VertexId d = forest.find(v);
    if (c == d) continue;
    forest.merge(c, d);
    const double birth = std::max(field[c], field[d]);
    const double death = field[u];  // u is the later endpoint, so f(e) = f(u)
    if (birth < death) bars.push_back({birth, death});
  }

  std::vector<double> essential;
  for (VertexId v = 0; v < forest.size(); ++v) {
    if (forest.find(v) == v) essential.push_back(field[v]);
  }
  return PersistenceDiagram(std::move(bars), std::move(essential));
}

PersistenceDiagram compute_pd0(const Graph& g, const ScalarField& field) {
  return compute_pd0(lower_star_filtration(g, field), field);
}

PersistenceDiagram descriptor(const Graph& g, const PageRankConfig& cfg) {
  return compute_pd0(g, compute_pagerank(g, cfg).scores);
}

std::size_t count_local_minima(const Graph& g, const ScalarField& field) {
  require_matching(g, field);
  std::size_t count = 0;
  for (VertexId v = 0; v < g.num_vertices(); ++v) {
    const auto nbrs = g.neighbors(v);
    const bool minimum =
        std::none_of(nbrs.begin(), nbrs.end(), [&](VertexId w) { return field.precedes(w, v); });
    if (minimum) ++count;
  }
  return count;
}

}  // namespace prpd

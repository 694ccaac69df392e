#pragma once

#include <compare>
#include <cstddef>
#include <cstdint>
#include <span>
#include <vector>

#include "prpd/graph.hpp"
#include "prpd/pagerank.hpp"

namespace prpd {

struct PersistencePair {
  double birth = 0.0;
  double death = 0.0;

  double persistence() const noexcept { return death - birth; }

  friend bool operator==(const PersistencePair&, const PersistencePair&) = default;
  friend auto operator<=>(const PersistencePair&, const PersistencePair&) = default;
};

// 0-dimensional persistence diagram: finite (birth, death) pairs plus the
// births of classes that never die, one per connected component.
//
// Stored canonically: pairs with birth == death are dropped, and both
// multisets are sorted, so operator== is multiset equality.
class PersistenceDiagram {
 public:
  PersistenceDiagram() = default;

  // Throws InputError on a NaN value or a pair with birth > death.
  PersistenceDiagram(std::vector<PersistencePair> finite, std::vector<double> essential);

  std::span<const PersistencePair> finite_pairs() const noexcept { return finite_; }
  std::span<const double> essential_births() const noexcept { return essential_; }

  friend bool operator==(const PersistenceDiagram&, const PersistenceDiagram&) = default;

 private:
  std::vector<PersistencePair> finite_;
  std::vector<double> essential_;
};

// Disjoint-set forest whose root is always the member that comes first in the
// filtration (the elder). Elders are compared by their position in the vertex
// order, so union-by-rank is not available; finds use path compression.
class UnionFindForest {
 public:
  // position[v] is v's index in the ascending (value, id) vertex order.
  explicit UnionFindForest(std::span<const std::uint32_t> position);

  VertexId find(VertexId v);

  // Links two distinct roots; the elder becomes the parent. Returns the
  // younger root, i.e. the class that dies.
  VertexId merge(VertexId a, VertexId b);

  std::size_t size() const noexcept { return parent_.size(); }

 private:
  std::span<const std::uint32_t> position_;
  std::vector<VertexId> parent_;
};

// Vertex and edge order of the lower-star filtration. Each edge enters with
// its later endpoint; edges are ordered by (later endpoint, earlier endpoint)
// positions, which equals sorting by (max value, max endpoint key, min
// endpoint key).
struct LowerStarFiltration {
  std::vector<VertexId> order;          // vertices, ascending (value, id)
  std::vector<std::uint32_t> position;  // inverse of order
  // Edges packed as (position of later endpoint << 32) | position of earlier
  // endpoint, ascending.
  std::vector<std::uint64_t> edge_keys;
};

LowerStarFiltration lower_star_filtration(const Graph& g, const ScalarField& field);

// Union-find sweep over a prepared filtration. Every successful merge of
// roots c, d along edge e records (max(f(c), f(d)), f(e)); surviving roots
// become essential births.
PersistenceDiagram compute_pd0(const LowerStarFiltration& filtration, const ScalarField& field);

// Throws InputError if the field does not match the graph.
PersistenceDiagram compute_pd0(const Graph& g, const ScalarField& field);

// PageRank followed by compute_pd0. Throws DomainError on an empty graph.
// Non-convergence of PageRank is not reported here; call compute_pagerank
// directly when the flag matters.
PersistenceDiagram descriptor(const Graph& g, const PageRankConfig& cfg = {});

// Vertices with no neighbor strictly earlier in the (value, id) order.
std::size_t count_local_minima(const Graph& g, const ScalarField& field);

}  // namespace prpd

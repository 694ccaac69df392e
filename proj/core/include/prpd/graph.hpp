#pragma once

#include <cstddef>
#include <cstdint>
#include <span>
#include <utility>
#include <vector>

namespace prpd {

using VertexId = std::uint32_t;

// Unordered edge, stored with u < v.
struct Edge {
  VertexId u = 0;
  VertexId v = 0;

  friend bool operator==(const Edge&, const Edge&) = default;
  friend auto operator<=>(const Edge&, const Edge&) = default;
};

// Immutable simple undirected graph on dense vertex ids 0..n-1.
//
// Edges are kept sorted lexicographically with u < v; adjacency is stored in
// CSR form with every neighbor list sorted ascending, which fixes the
// summation order of anything that walks neighbors.
class Graph {
 public:
  Graph() = default;

  std::size_t num_vertices() const noexcept { return offsets_.empty() ? 0 : offsets_.size() - 1; }
  std::size_t num_edges() const noexcept { return edges_.size(); }

  std::span<const Edge> edges() const noexcept { return edges_; }

  std::span<const VertexId> neighbors(VertexId v) const noexcept {
    return {neighbors_.data() + offsets_[v], neighbors_.data() + offsets_[v + 1]};
  }

  std::size_t degree(VertexId v) const noexcept { return offsets_[v + 1] - offsets_[v]; }

  bool has_edge(VertexId a, VertexId b) const noexcept;

 private:
  friend Graph build_graph(std::size_t, std::span<const std::pair<VertexId, VertexId>>);

  std::vector<Edge> edges_;
  std::vector<std::size_t> offsets_;
  std::vector<VertexId> neighbors_;
};

// Builds a simple graph. Duplicate edges (in either orientation) collapse to
// one. Throws InputError naming the pair on a self-loop or an endpoint that
// is not < num_vertices.
Graph build_graph(std::size_t num_vertices, std::span<const std::pair<VertexId, VertexId>> edge_list);

// One real value per vertex. Vertices are totally ordered by the key
// (value, id), so ties in value are broken by the smaller id.
class ScalarField {
 public:
  ScalarField() = default;
  explicit ScalarField(std::vector<double> values) : values_(std::move(values)) {}

  std::size_t size() const noexcept { return values_.size(); }
  double operator[](VertexId v) const noexcept { return values_[v]; }
  std::span<const double> values() const noexcept { return values_; }

  // Strict (value, id) order.
  bool precedes(VertexId a, VertexId b) const noexcept {
    return values_[a] < values_[b] || (values_[a] == values_[b] && a < b);
  }

 private:
  std::vector<double> values_;
};

// Throws InputError unless field.size() == g.num_vertices().
void require_matching(const Graph& g, const ScalarField& field);

// Vertices sorted ascending by (value, id).
std::vector<VertexId> vertex_order(const ScalarField& field);
std::vector<VertexId> vertex_order(const Graph& g, const ScalarField& field);

// Component label per vertex. Labels are 0..k-1, assigned in order of the
// smallest vertex id in each component.
std::vector<std::uint32_t> connected_components(const Graph& g);

std::size_t count_components(const Graph& g);

}  // namespace prpd

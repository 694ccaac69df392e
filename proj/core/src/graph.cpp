#include "prpd/graph.hpp"

#include <algorithm>
#include <numeric>
#include <string>

#include "prpd/error.hpp"

namespace prpd {

namespace {

std::string describe_pair(VertexId a, VertexId b) {
  return "(" + std::to_string(a) + ", " + std::to_string(b) + ")";
}

}  // namespace

bool Graph::has_edge(VertexId a, VertexId b) const noexcept {
  if (a >= num_vertices() || b >= num_vertices()) return false;
  const auto nbrs = neighbors(a);
  return std::binary_search(nbrs.begin(), nbrs.end(), b);
}

Graph build_graph(std::size_t num_vertices, std::span<const std::pair<VertexId, VertexId>> edge_list) {
  Graph g;
  g.edges_.reserve(edge_list.size());
  for (const auto& [a, b] : edge_list) {
    if (a >= num_vertices || b >= num_vertices) {
      throw InputError("edge " + describe_pair(a, b) + ": endpoint " +
                       std::to_string(a >= num_vertices ? a : b) + " out of range for " +
                       std::to_string(num_vertices) + " vertices");
    }
    if (a == b) {
      throw InputError("edge " + describe_pair(a, b) + ": self-loops are not allowed");
    }
    g.edges_.push_back(a < b ? Edge{a, b} : Edge{b, a});
  }
  std::sort(g.edges_.begin(), g.edges_.end());
  g.edges_.erase(std::unique(g.edges_.begin(), g.edges_.end()), g.edges_.end());

  g.offsets_.assign(num_vertices + 1, 0);
  for (const Edge& e : g.edges_) {
    ++g.offsets_[e.u + 1];
    ++g.offsets_[e.v + 1];
  }
  std::partial_sum(g.offsets_.begin(), g.offsets_.end(), g.offsets_.begin());

  // Filling from the lexicographically sorted edge list leaves each neighbor
  // list sorted: lower neighbors arrive (as e.u) before higher ones (as e.v).
  g.neighbors_.resize(2 * g.edges_.size());
  std::vector<std::size_t> cursor(g.offsets_.begin(), g.offsets_.end() - 1);
  for (const Edge& e : g.edges_) g.neighbors_[cursor[e.v]++] = e.u;
  for (const Edge& e : g.edges_) g.neighbors_[cursor[e.u]++] = e.v;
  return g;
}

void require_matching(const Graph& g, const ScalarField& field) {
  if (field.size() != g.num_vertices()) {
    throw InputError("scalar field has " + std::to_string(field.size()) + " values but graph has " +
                     std::to_string(g.num_vertices()) + " vertices");
  }
}

std::vector<VertexId> vertex_order(const ScalarField& field) {
  std::vector<VertexId> order(field.size());
  std::iota(order.begin(), order.end(), VertexId{0});
  std::sort(order.begin(), order.end(),
            [&field](VertexId a, VertexId b) { return field.precedes(a, b); });
  return order;
}

std::vector<VertexId> vertex_order(const Graph& g, const ScalarField& field) {
  require_matching(g, field);
  return vertex_order(field);
}

std::vector<std::uint32_t> connected_components(const Graph& g) {
  constexpr auto kUnset = static_cast<std::uint32_t>(-1);
  const auto n = static_cast<VertexId>(g.num_vertices());
  std::vector<std::uint32_t> label(n, kUnset);
  std::vector<VertexId> stack;
  std::uint32_t next = 0;
  for (VertexId s = 0; s < n; ++s) {
    if (label[s] != kUnset) continue;
    label[s] = next;
    stack.push_back(s);
    while (!stack.empty()) {
      const VertexId v = stack.back();
      stack.pop_back();
      for (VertexId w : g.neighbors(v)) {
        if (label[w] == kUnset) {
          label[w] = next;
          stack.push_back(w);
        }
      }
    }
    ++next;
  }
  return label;
}

std::size_t count_components(const Graph& g) {
  const auto labels = connected_components(g);
  return labels.empty() ? 0 : *std::max_element(labels.begin(), labels.end()) + 1;
}

}  // namespace prpd

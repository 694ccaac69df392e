#include "prpd/oracles.hpp"

#include <algorithm>
#include <limits>
#include <map>
#include <numeric>
#include <vector>

#include "prpd/bottleneck.hpp"
#include "prpd/error.hpp"

namespace prpd::oracle {

namespace {

// Component labels of the subgraph induced by `present`; absent vertices get
// label -1.
std::vector<int> sublevel_components(const Graph& g, const std::vector<bool>& present) {
  const auto n = g.num_vertices();
  std::vector<int> label(n, -1);
  int next = 0;
  for (VertexId s = 0; s < n; ++s) {
    if (!present[s] || label[s] >= 0) continue;
    std::vector<VertexId> frontier{s};
    label[s] = next;
    while (!frontier.empty()) {
      const VertexId v = frontier.back();
      frontier.pop_back();
      for (VertexId w : g.neighbors(v)) {
        if (present[w] && label[w] < 0) {
          label[w] = next;
          frontier.push_back(w);
        }
      }
    }
    ++next;
  }
  return label;
}

// Earliest member (in the field's total order) of every component.
std::map<int, VertexId> component_minima(const std::vector<int>& label, const ScalarField& field) {
  std::map<int, VertexId> minima;
  for (VertexId v = 0; v < label.size(); ++v) {
    if (label[v] < 0) continue;
    auto [it, inserted] = minima.try_emplace(label[v], v);
    if (!inserted && field.precedes(v, it->second)) it->second = v;
  }
  return minima;
}

}  // namespace

PersistenceDiagram pd0(const Graph& g, const ScalarField& field) {
  require_matching(g, field);
  const auto n = g.num_vertices();

  std::vector<VertexId> order(n);
  std::iota(order.begin(), order.end(), VertexId{0});
  std::sort(order.begin(), order.end(), [&](VertexId a, VertexId b) { return field.precedes(a, b); });

  std::vector<PersistencePair> pairs;
  std::vector<bool> present(n, false);
  std::vector<int> previous(n, -1);
  for (VertexId current : order) {
    present[current] = true;
    const auto label = sublevel_components(g, present);

    // Group the previous step's components by the component they now lie in.
    const auto old_minima = component_minima(previous, field);
    std::map<int, std::vector<VertexId>> fused;
    for (const auto& [old_label, minimum] : old_minima) fused[label[minimum]].push_back(minimum);

    for (auto& [new_label, minima] : fused) {
      if (minima.size() < 2) continue;
      const auto elder = *std::min_element(
          minima.begin(), minima.end(), [&](VertexId a, VertexId b) { return field.precedes(a, b); });
      for (VertexId m : minima) {
        if (m != elder) pairs.push_back({field[m], field[current]});
      }
    }
    previous = label;
  }

  std::vector<double> essential;
  for (const auto& [lbl, minimum] : component_minima(previous, field)) essential.push_back(field[minimum]);
  return PersistenceDiagram(std::move(pairs), std::move(essential));
}

double bottleneck(const PersistenceDiagram& x, const PersistenceDiagram& y) {
  const auto px = x.finite_pairs();
  const auto py = y.finite_pairs();
  if (px.size() + py.size() > 6) throw DomainError("bottleneck oracle supports at most 6 points in total");

  const auto instance = make_matching_instance(px, py);
  std::vector<std::size_t> perm(instance.size);
  std::iota(perm.begin(), perm.end(), std::size_t{0});
  double best = std::numeric_limits<double>::infinity();
  do {
    double worst = 0.0;
    for (std::size_t row = 0; row < instance.size; ++row) worst = std::max(worst, instance.cost(row, perm[row]));
    best = std::min(best, worst);
  } while (std::next_permutation(perm.begin(), perm.end()));
  return instance.size == 0 ? 0.0 : best;
}

}  // namespace prpd::oracle

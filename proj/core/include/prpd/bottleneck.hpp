#pragma once

#include <cstddef>
#include <span>
#include <vector>

#include "prpd/persistence.hpp"

namespace prpd {

// L-infinity cost between two off-diagonal points.
inline double linf_cost(const PersistencePair& a, const PersistencePair& b) noexcept {
  const double db = a.birth > b.birth ? a.birth - b.birth : b.birth - a.birth;
  const double dd = a.death > b.death ? a.death - b.death : b.death - a.death;
  return db > dd ? db : dd;
}

// L-infinity cost of sending a point to its nearest diagonal point.
inline double diagonal_cost(const PersistencePair& a) noexcept { return (a.death - a.birth) / 2.0; }

// Square diagonal-augmented assignment problem between diagrams X and Y.
// Rows are X's points followed by one diagonal slot per point of Y; columns
// are Y's points followed by one diagonal slot per point of X. A point costs
// its diagonal cost against any diagonal slot, and two diagonal slots cost 0.
struct MatchingInstance {
  std::size_t size = 0;       // |X| + |Y|
  std::vector<double> costs;  // row-major size x size

  double cost(std::size_t row, std::size_t col) const { return costs[row * size + col]; }
};

MatchingInstance make_matching_instance(std::span<const PersistencePair> x,
                                        std::span<const PersistencePair> y);

// Maximum-cardinality bipartite matching (Hopcroft-Karp) on an adjacency-list
// graph with `left_size` left and `right_size` right vertices.
class BipartiteMatcher {
 public:
  BipartiteMatcher(std::size_t left_size, std::size_t right_size);

  void add_edge(std::size_t left, std::size_t right);

  // Runs to completion and returns the matching size.
  std::size_t solve();

  // Right partner of a left vertex, or npos.
  std::size_t match_of_left(std::size_t left) const { return match_left_[left]; }

  static constexpr std::size_t npos = static_cast<std::size_t>(-1);

 private:
  bool bfs();
  bool dfs(std::size_t left);

  std::size_t right_size_;
  std::vector<std::vector<std::size_t>> adj_;
  std::vector<std::size_t> match_left_;
  std::vector<std::size_t> match_right_;
  std::vector<std::size_t> layer_;
  std::vector<std::size_t> cursor_;
};

// Sorted, de-duplicated set of thresholds at which the bottleneck decision
// can change: 0, every pairwise L-infinity cost, and every diagonal cost.
std::vector<double> bottleneck_candidates(std::span<const PersistencePair> x,
                                          std::span<const PersistencePair> y);

// True iff a bijection between the diagonal-augmented diagrams exists whose
// every matched cost is <= threshold.
bool bottleneck_feasible(std::span<const PersistencePair> x, std::span<const PersistencePair> y,
                         double threshold);

// Exact bottleneck distance between point multisets (points on the diagonal
// are allowed and cost nothing). The result is always one of
// bottleneck_candidates(x, y).
double bottleneck(std::span<const PersistencePair> x, std::span<const PersistencePair> y);

// Bottleneck distance on diagrams. Finite pairs are always compared. With
// include_essential, essential births are matched in sorted order and the
// larger of the two parts is returned; differing essential counts give
// +infinity.
double bottleneck(const PersistenceDiagram& x, const PersistenceDiagram& y, bool include_essential = false);

}  // namespace prpd

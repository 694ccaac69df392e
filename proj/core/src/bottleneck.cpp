#include "prpd/bottleneck.hpp"

#include <algorithm>
#include <limits>
#include <queue>

namespace prpd {

MatchingInstance make_matching_instance(std::span<const PersistencePair> x,
                                        std::span<const PersistencePair> y) {
  MatchingInstance inst;
  inst.size = x.size() + y.size();
  inst.costs.assign(inst.size * inst.size, 0.0);
  for (std::size_t row = 0; row < inst.size; ++row) {
    for (std::size_t col = 0; col < inst.size; ++col) {
      const bool row_point = row < x.size();
      const bool col_point = col < y.size();
      double c = 0.0;
      if (row_point && col_point) {
        c = linf_cost(x[row], y[col]);
      } else if (row_point) {
        c = diagonal_cost(x[row]);
      } else if (col_point) {
        c = diagonal_cost(y[col]);
      }
      inst.costs[row * inst.size + col] = c;
    }
  }
  return inst;
}

BipartiteMatcher::BipartiteMatcher(std::size_t left_size, std::size_t right_size)
    : right_size_(right_size),
      adj_(left_size),
      match_left_(left_size, npos),
      match_right_(right_size, npos),
      layer_(left_size),
      cursor_(left_size) {}

void BipartiteMatcher::add_edge(std::size_t left, std::size_t right) { adj_[left].push_back(right); }

bool BipartiteMatcher::bfs() {
  constexpr auto kInf = std::numeric_limits<std::size_t>::max();
  std::queue<std::size_t> queue;
  for (std::size_t l = 0; l < adj_.size(); ++l) {
    if (match_left_[l] == npos) {
      layer_[l] = 0;
      queue.push(l);
    } else {
      layer_[l] = kInf;
    }
  }
  bool reachable_free = false;
  while (!queue.empty()) {
    const std::size_t l = queue.front();
    queue.pop();
    for (std::size_t r : adj_[l]) {
      const std::size_t next = match_right_[r];
      if (next == npos) {
        reachable_free = true;
      } else if (layer_[next] == kInf) {
        layer_[next] = layer_[l] + 1;
        queue.push(next);
      }
    }
  }
  return reachable_free;
}

bool BipartiteMatcher::dfs(std::size_t l) {
  for (auto& i = cursor_[l]; i < adj_[l].size(); ++i) {
    const std::size_t r = adj_[l][i];
    const std::size_t next = match_right_[r];
    if (next == npos || (layer_[next] == layer_[l] + 1 && dfs(next))) {
      match_left_[l] = r;
      match_right_[r] = l;
      ++i;
      return true;
    }
  }
  layer_[l] = std::numeric_limits<std::size_t>::max();
  return false;
}

std::size_t BipartiteMatcher::solve() {
  std::size_t size = static_cast<std::size_t>(
      std::count_if(match_left_.begin(), match_left_.end(), [](std::size_t r) { return r != npos; }));
  while (bfs()) {
    std::fill(cursor_.begin(), cursor_.end(), 0);
    for (std::size_t l = 0; l < adj_.size(); ++l) {
      if (match_left_[l] == npos && dfs(l)) ++size;
    }
  }
  return size;
}

std::vector<double> bottleneck_candidates(std::span<const PersistencePair> x,
                                          std::span<const PersistencePair> y) {
  std::vector<double> candidates;
  candidates.reserve(x.size() * y.size() + x.size() + y.size() + 1);
  candidates.push_back(0.0);
  for (const auto& p : x) candidates.push_back(diagonal_cost(p));
  for (const auto& q : y) candidates.push_back(diagonal_cost(q));
  for (const auto& p : x) {
    for (const auto& q : y) candidates.push_back(linf_cost(p, q));
  }
  std::sort(candidates.begin(), candidates.end());
  candidates.erase(std::unique(candidates.begin(), candidates.end()), candidates.end());
  return candidates;
}

namespace {

// Points of `side` that cannot be sent to the diagonal within `threshold`
// must be matched to a point of `other`; checks that all of them can be at
// once.
bool covers_forced(std::span<const PersistencePair> side, std::span<const PersistencePair> other,
                   double threshold) {
  std::vector<std::size_t> forced;
  for (std::size_t i = 0; i < side.size(); ++i) {
    if (diagonal_cost(side[i]) > threshold) forced.push_back(i);
  }
  if (forced.empty()) return true;
  if (forced.size() > other.size()) return false;
  BipartiteMatcher matcher(forced.size(), other.size());
  for (std::size_t k = 0; k < forced.size(); ++k) {
    for (std::size_t j = 0; j < other.size(); ++j) {
      if (linf_cost(side[forced[k]], other[j]) <= threshold) matcher.add_edge(k, j);
    }
  }
  return matcher.solve() == forced.size();
}

}  // namespace

// In the augmented instance every point may go to the diagonal at its
// diagonal cost and diagonal slots match each other for free, so a perfect
// matching exists iff some matching of the point-to-point threshold graph
// covers every forced point of X and every forced point of Y. By the
// Mendelsohn-Dulmage theorem that holds iff the forced points of each side
// can be covered separately.
bool bottleneck_feasible(std::span<const PersistencePair> x, std::span<const PersistencePair> y,
                         double threshold) {
  return covers_forced(x, y, threshold) && covers_forced(y, x, threshold);
}

double bottleneck(std::span<const PersistencePair> x, std::span<const PersistencePair> y) {
  const auto candidates = bottleneck_candidates(x, y);
  // The largest candidate is always feasible: it bounds every diagonal cost.
  std::size_t lo = 0;
  std::size_t hi = candidates.size() - 1;
  while (lo < hi) {
    const std::size_t mid = lo + (hi - lo) / 2;
    if (bottleneck_feasible(x, y, candidates[mid])) {
      hi = mid;
    } else {
      lo = mid + 1;
    }
  }
  return candidates[lo];
}

double bottleneck(const PersistenceDiagram& x, const PersistenceDiagram& y, bool include_essential) {
  double distance = bottleneck(x.finite_pairs(), y.finite_pairs());
  if (!include_essential) return distance;

  const auto ex = x.essential_births();
  const auto ey = y.essential_births();
  if (ex.size() != ey.size()) return std::numeric_limits<double>::infinity();
  // Both are kept sorted, and sorted order is optimal for 1-D bottleneck.
  for (std::size_t i = 0; i < ex.size(); ++i) {
    distance = std::max(distance, ex[i] > ey[i] ? ex[i] - ey[i] : ey[i] - ex[i]);
  }
  return distance;
}

}  // namespace prpd

#pragma once

#include <cstddef>
#include <functional>
#include <map>
#include <ostream>
#include <span>
#include <string>
#include <vector>

#include "prpd/pagerank.hpp"
#include "prpd/persistence.hpp"

namespace prpd {

// Symmetric matrix of pairwise distances with a zero diagonal.
class DistanceMatrix {
 public:
  DistanceMatrix() = default;
  explicit DistanceMatrix(std::vector<std::string> names);

  std::size_t size() const noexcept { return names_.size(); }
  const std::vector<std::string>& names() const noexcept { return names_; }

  double at(std::size_t i, std::size_t j) const { return values_[i * size() + j]; }
  // Writes both (i, j) and (j, i).
  void set(std::size_t i, std::size_t j, double value);

 private:
  std::vector<std::string> names_;
  std::vector<double> values_;
};

// Runs body(0..count-1) on up to `jobs` threads (0 means hardware
// concurrency). Indices are statically partitioned; exceptions are rethrown
// on the calling thread.
void parallel_for(std::size_t count, std::size_t jobs, const std::function<void(std::size_t)>& body);

// All n(n-1)/2 bottleneck distances between the diagrams. Output is
// identical for every value of `jobs`.
DistanceMatrix compute_distance_matrix(std::span<const PersistenceDiagram> diagrams,
                                       std::vector<std::string> names, bool include_essential = false,
                                       std::size_t jobs = 1);

// CSV: a header row with the item names, then one row of values per item.
void write_distance_matrix_csv(std::ostream& out, const DistanceMatrix& matrix);

struct NeighborResult {
  std::string name;
  std::string label;
  std::string neighbor;
  std::string neighbor_label;
  double distance = 0.0;
};

struct EvalReport {
  // Mean distance over unordered pairs inside each class.
  std::map<std::string, double> intra_class_mean;
  // Mean over all same-label pairs, pooled across classes.
  double intra_mean = 0.0;
  // Mean distance over all pairs with different labels.
  double inter_mean = 0.0;
  // Leave-one-out 1-nearest-neighbor accuracy.
  double accuracy = 0.0;
  std::vector<NeighborResult> neighbors;
};

// Requires at least 2 distinct labels and at least 2 items per label; throws
// DomainError otherwise. Nearest-neighbor ties go to the earlier item.
EvalReport evaluate(const DistanceMatrix& matrix, std::span<const std::string> labels);

// Wall-clock seconds spent in each stage of one descriptor computation.
struct StageTimings {
  double pagerank = 0.0;
  double sort = 0.0;        // vertex order and edge order
  double union_find = 0.0;  // persistence sweep
  double total() const noexcept { return pagerank + sort + union_find; }
};

StageTimings time_descriptor(const Graph& g, const PageRankConfig& cfg, PersistenceDiagram* result = nullptr);

}  // namespace prpd

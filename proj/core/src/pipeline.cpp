#include "prpd/pipeline.hpp"

#include <algorithm>
#include <chrono>
#include <exception>
#include <mutex>
#include <thread>
#include <utility>

#include "prpd/bottleneck.hpp"
#include "prpd/diagram_io.hpp"
#include "prpd/error.hpp"

namespace prpd {

DistanceMatrix::DistanceMatrix(std::vector<std::string> names)
    : names_(std::move(names)), values_(names_.size() * names_.size(), 0.0) {}

void DistanceMatrix::set(std::size_t i, std::size_t j, double value) {
  values_[i * size() + j] = value;
  values_[j * size() + i] = value;
}

void parallel_for(std::size_t count, std::size_t jobs, const std::function<void(std::size_t)>& body) {
  if (jobs == 0) jobs = std::max(1u, std::thread::hardware_concurrency());
  jobs = std::min(jobs, count);
  if (jobs <= 1) {
    for (std::size_t i = 0; i < count; ++i) body(i);
    return;
  }

  std::exception_ptr failure;
  std::mutex failure_mutex;
  std::vector<std::thread> workers;
  workers.reserve(jobs);
  for (std::size_t w = 0; w < jobs; ++w) {
    workers.emplace_back([&, w] {
      try {
        for (std::size_t i = w; i < count; i += jobs) body(i);
      } catch (...) {
        const std::lock_guard lock(failure_mutex);
        if (!failure) failure = std::current_exception();
      }
    });
  }
  for (auto& t : workers) t.join();
  if (failure) std::rethrow_exception(failure);
}

DistanceMatrix compute_distance_matrix(std::span<const PersistenceDiagram> diagrams,
                                       std::vector<std::string> names, bool include_essential,
                                       std::size_t jobs) {
  if (names.size() != diagrams.size()) throw InputError("one name per diagram is required");
  DistanceMatrix matrix(std::move(names));
  const std::size_t n = diagrams.size();

  std::vector<std::pair<std::size_t, std::size_t>> pairs;
  pairs.reserve(n * (n - (n > 0)) / 2);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = i + 1; j < n; ++j) pairs.emplace_back(i, j);
  }
  // Each pair writes its own two cells, so workers never collide.
  parallel_for(pairs.size(), jobs, [&](std::size_t k) {
    const auto [i, j] = pairs[k];
    matrix.set(i, j, bottleneck(diagrams[i], diagrams[j], include_essential));
  });
  return matrix;
}

void write_distance_matrix_csv(std::ostream& out, const DistanceMatrix& matrix) {
  const auto& names = matrix.names();
  for (std::size_t i = 0; i < names.size(); ++i) out << (i ? "," : "") << names[i];
  out << '\n';
  for (std::size_t i = 0; i < matrix.size(); ++i) {
    for (std::size_t j = 0; j < matrix.size(); ++j) out << (j ? "," : "") << format_real(matrix.at(i, j));
    out << '\n';
  }
}

EvalReport evaluate(const DistanceMatrix& matrix, std::span<const std::string> labels) {
  const std::size_t n = matrix.size();
  if (labels.size() != n) throw InputError("one label per matrix row is required");

  std::map<std::string, std::size_t> class_sizes;
  for (const auto& label : labels) ++class_sizes[label];
  if (class_sizes.size() < 2) throw DomainError("evaluation needs >= 2 classes");
  for (const auto& [label, count] : class_sizes) {
    if (count < 2) throw DomainError("evaluation needs >= 2 items per class; '" + label + "' has 1");
  }

  EvalReport report;
  std::map<std::string, std::pair<double, std::size_t>> intra;
  double intra_sum = 0.0;
  double inter_sum = 0.0;
  std::size_t intra_count = 0;
  std::size_t inter_count = 0;
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = i + 1; j < n; ++j) {
      const double d = matrix.at(i, j);
      if (labels[i] == labels[j]) {
        auto& [sum, count] = intra[labels[i]];
        sum += d;
        ++count;
        intra_sum += d;
        ++intra_count;
      } else {
        inter_sum += d;
        ++inter_count;
      }
    }
  }
  for (const auto& [label, acc] : intra) report.intra_class_mean[label] = acc.first / static_cast<double>(acc.second);
  report.intra_mean = intra_sum / static_cast<double>(intra_count);
  report.inter_mean = inter_sum / static_cast<double>(inter_count);

  std::size_t correct = 0;
  for (std::size_t i = 0; i < n; ++i) {
    std::size_t best = n;
    for (std::size_t j = 0; j < n; ++j) {
      if (j == i) continue;
      if (best == n || matrix.at(i, j) < matrix.at(i, best)) best = j;
    }
    const auto& names = matrix.names();
    report.neighbors.push_back({names[i], labels[i], names[best], labels[best], matrix.at(i, best)});
    if (labels[best] == labels[i]) ++correct;
  }
  report.accuracy = static_cast<double>(correct) / static_cast<double>(n);
  return report;
}

StageTimings time_descriptor(const Graph& g, const PageRankConfig& cfg, PersistenceDiagram* result) {
  using Clock = std::chrono::steady_clock;
  auto seconds_since = [](Clock::time_point start) {
    return std::chrono::duration<double>(Clock::now() - start).count();
  };
  StageTimings timings;
  auto start = Clock::now();
  const auto pr = compute_pagerank(g, cfg);
  timings.pagerank = seconds_since(start);

  start = Clock::now();
  const auto filtration = lower_star_filtration(g, pr.scores);
  timings.sort = seconds_since(start);

  start = Clock::now();
  auto diagram = compute_pd0(filtration, pr.scores);
  timings.union_find = seconds_since(start);
  if (result) *result = std::move(diagram);
  return timings;
}

}  // namespace prpd

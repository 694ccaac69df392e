#pragma once

#include <array>
#include <cstddef>
#include <cstdint>
#include <ostream>
#include <random>
#include <string>
#include <vector>

#include "prpd/graph.hpp"

namespace prpd::synthetic {

// Uniform double in [0, 1) from the top 53 bits of a 64-bit draw. Unlike
// std::uniform_real_distribution this is identical on every standard library.
inline double uniform01(std::mt19937_64& rng) { return static_cast<double>(rng() >> 11) * 0x1.0p-53; }

// n points uniform in the unit square, joined when closer than `radius`.
Graph random_geometric_graph(std::size_t num_vertices, double radius, std::uint64_t seed);

// Random geometric graph on 2 * target_edges / mean_degree vertices with the
// radius chosen so that the expected edge count is `target_edges`. Throws
// DomainError if target_edges == 0.
Graph random_geometric_graph_with_edges(std::size_t target_edges, std::uint64_t seed,
                                        double mean_degree = 10.0);

struct Mesh {
  std::vector<std::array<double, 3>> vertices;
  std::vector<std::array<VertexId, 3>> faces;
};

// rows x cols vertices on the unit square, each cell split into 2 triangles.
Mesh grid_mesh(std::size_t rows, std::size_t cols);

// Octahedron refined `levels` times by 1-to-4 subdivision, projected to the
// unit sphere.
Mesh sphere_mesh(std::size_t levels);

// Splits each face with probability `split_probability` by inserting its
// centroid, then jitters every vertex by up to `jitter`.
Mesh perturb_mesh(const Mesh& mesh, double split_probability, double jitter, std::uint64_t seed);

Graph mesh_graph(const Mesh& mesh);

void write_off(std::ostream& out, const Mesh& mesh);

struct CorpusItem {
  std::string name;
  std::string label;
  Mesh mesh;
};

// Two-class corpus: perturbed copies of a 17x17 grid ("grid") and of a
// 3-level sphere ("sphere"), `per_class` each, interleaved by class.
std::vector<CorpusItem> two_class_corpus(std::size_t per_class, std::uint64_t seed);

}  // namespace prpd::synthetic

#include "prpd/synthetic.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <map>
#include <numbers>
#include <utility>

#include "prpd/diagram_io.hpp"
#include "prpd/error.hpp"

namespace prpd::synthetic {

Graph random_geometric_graph(std::size_t num_vertices, double radius, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  std::vector<std::array<double, 2>> points(num_vertices);
  for (auto& p : points) {
    p[0] = uniform01(rng);
    p[1] = uniform01(rng);
  }

  // Bucket points into cells of side >= radius; only neighboring cells can
  // hold points within range.
  const auto cells = static_cast<std::size_t>(std::max(1.0, std::floor(1.0 / radius)));
  auto cell_of = [cells](double c) { return std::min(cells - 1, static_cast<std::size_t>(c * static_cast<double>(cells))); };
  auto cell_index = [&](const std::array<double, 2>& p) { return cell_of(p[1]) * cells + cell_of(p[0]); };

  // Number vertices in row-major cell order, the way mesh exporters tend to
  // keep nearby vertices close in memory.
  std::stable_sort(points.begin(), points.end(),
                   [&](const auto& a, const auto& b) { return cell_index(a) < cell_index(b); });
  std::vector<std::vector<VertexId>> grid(cells * cells);
  for (VertexId v = 0; v < num_vertices; ++v) grid[cell_index(points[v])].push_back(v);

  const double r2 = radius * radius;
  std::vector<std::pair<VertexId, VertexId>> edges;
  for (VertexId v = 0; v < num_vertices; ++v) {
    const auto cx = cell_of(points[v][0]);
    const auto cy = cell_of(points[v][1]);
    for (std::size_t y = cy > 0 ? cy - 1 : 0; y <= std::min(cells - 1, cy + 1); ++y) {
      for (std::size_t x = cx > 0 ? cx - 1 : 0; x <= std::min(cells - 1, cx + 1); ++x) {
        for (VertexId w : grid[y * cells + x]) {
          if (w <= v) continue;
          const double dx = points[v][0] - points[w][0];
          const double dy = points[v][1] - points[w][1];
          if (dx * dx + dy * dy < r2) edges.emplace_back(v, w);
        }
      }
    }
  }
  return build_graph(num_vertices, edges);
}

Graph random_geometric_graph_with_edges(std::size_t target_edges, std::uint64_t seed, double mean_degree) {
  if (target_edges == 0) throw DomainError("graph size must be positive");
  const auto n = std::max<std::size_t>(2, static_cast<std::size_t>(2.0 * static_cast<double>(target_edges) / mean_degree));
  // Probability that two uniform points in the unit square lie within r
  // (boundary-corrected, valid for r <= 1).
  auto within = [](double r) { return std::numbers::pi * r * r - 8.0 / 3.0 * r * r * r + r * r * r * r / 2.0; };
  const double pairs = static_cast<double>(n) * static_cast<double>(n - 1) / 2.0;
  const double wanted = std::min(1.0, static_cast<double>(target_edges) / pairs);
  double lo = 0.0;
  double hi = 1.0;
  for (int i = 0; i < 100; ++i) {
    const double mid = (lo + hi) / 2.0;
    (within(mid) < wanted ? lo : hi) = mid;
  }
  return random_geometric_graph(n, hi, seed);
}

Mesh grid_mesh(std::size_t rows, std::size_t cols) {
  Mesh mesh;
  for (std::size_t r = 0; r < rows; ++r) {
    for (std::size_t c = 0; c < cols; ++c) {
      mesh.vertices.push_back({static_cast<double>(c) / static_cast<double>(cols - 1),
                               static_cast<double>(r) / static_cast<double>(rows - 1), 0.0});
    }
  }
  auto id = [cols](std::size_t r, std::size_t c) { return static_cast<VertexId>(r * cols + c); };
  for (std::size_t r = 0; r + 1 < rows; ++r) {
    for (std::size_t c = 0; c + 1 < cols; ++c) {
      mesh.faces.push_back({id(r, c), id(r, c + 1), id(r + 1, c + 1)});
      mesh.faces.push_back({id(r, c), id(r + 1, c + 1), id(r + 1, c)});
    }
  }
  return mesh;
}

Mesh sphere_mesh(std::size_t levels) {
  Mesh mesh;
  mesh.vertices = {{1, 0, 0}, {-1, 0, 0}, {0, 1, 0}, {0, -1, 0}, {0, 0, 1}, {0, 0, -1}};
  mesh.faces = {{0, 2, 4}, {2, 1, 4}, {1, 3, 4}, {3, 0, 4}, {2, 0, 5}, {1, 2, 5}, {3, 1, 5}, {0, 3, 5}};
  for (std::size_t level = 0; level < levels; ++level) {
    std::map<std::pair<VertexId, VertexId>, VertexId> midpoints;
    auto midpoint = [&](VertexId a, VertexId b) {
      const auto key = std::minmax(a, b);
      if (auto it = midpoints.find(key); it != midpoints.end()) return it->second;
      std::array<double, 3> m{};
      double norm = 0.0;
      for (int k = 0; k < 3; ++k) {
        m[k] = (mesh.vertices[a][k] + mesh.vertices[b][k]) / 2.0;
        norm += m[k] * m[k];
      }
      for (auto& c : m) c /= std::sqrt(norm);
      const auto id = static_cast<VertexId>(mesh.vertices.size());
      mesh.vertices.push_back(m);
      midpoints.emplace(key, id);
      return id;
    };
    std::vector<std::array<VertexId, 3>> refined;
    refined.reserve(4 * mesh.faces.size());
    for (const auto& [a, b, c] : mesh.faces) {
      const VertexId ab = midpoint(a, b);
      const VertexId bc = midpoint(b, c);
      const VertexId ca = midpoint(c, a);
      refined.push_back({a, ab, ca});
      refined.push_back({ab, b, bc});
      refined.push_back({ca, bc, c});
      refined.push_back({ab, bc, ca});
    }
    mesh.faces = std::move(refined);
  }
  return mesh;
}

Mesh perturb_mesh(const Mesh& mesh, double split_probability, double jitter, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  Mesh out;
  out.vertices = mesh.vertices;
  for (const auto& face : mesh.faces) {
    if (uniform01(rng) >= split_probability) {
      out.faces.push_back(face);
      continue;
    }
    std::array<double, 3> centroid{};
    for (VertexId v : face) {
      for (int k = 0; k < 3; ++k) centroid[k] += out.vertices[v][k] / 3.0;
    }
    const auto c = static_cast<VertexId>(out.vertices.size());
    out.vertices.push_back(centroid);
    out.faces.push_back({face[0], face[1], c});
    out.faces.push_back({face[1], face[2], c});
    out.faces.push_back({face[2], face[0], c});
  }
  for (auto& p : out.vertices) {
    for (auto& coord : p) coord += jitter * (2.0 * uniform01(rng) - 1.0);
  }
  return out;
}

Graph mesh_graph(const Mesh& mesh) {
  std::vector<std::pair<VertexId, VertexId>> edges;
  edges.reserve(3 * mesh.faces.size());
  for (const auto& [a, b, c] : mesh.faces) {
    edges.emplace_back(a, b);
    edges.emplace_back(b, c);
    edges.emplace_back(c, a);
  }
  return build_graph(mesh.vertices.size(), edges);
}

void write_off(std::ostream& out, const Mesh& mesh) {
  out << "OFF\n" << mesh.vertices.size() << ' ' << mesh.faces.size() << " 0\n";
  for (const auto& [x, y, z] : mesh.vertices) {
    out << format_real(x) << ' ' << format_real(y) << ' ' << format_real(z) << '\n';
  }
  for (const auto& [a, b, c] : mesh.faces) out << "3 " << a << ' ' << b << ' ' << c << '\n';
}

std::vector<CorpusItem> two_class_corpus(std::size_t per_class, std::uint64_t seed) {
  const Mesh grid = grid_mesh(17, 17);
  const Mesh sphere = sphere_mesh(3);
  std::mt19937_64 seeder(seed);
  std::vector<CorpusItem> corpus;
  corpus.reserve(2 * per_class);
  char name[64];
  for (std::size_t i = 0; i < per_class; ++i) {
    std::snprintf(name, sizeof name, "grid_%03zu.off", i);
    corpus.push_back({name, "grid", perturb_mesh(grid, 0.05, 0.01, seeder())});
    std::snprintf(name, sizeof name, "sphere_%03zu.off", i);
    corpus.push_back({name, "sphere", perturb_mesh(sphere, 0.05, 0.01, seeder())});
  }
  return corpus;
}

}  // namespace prpd::synthetic

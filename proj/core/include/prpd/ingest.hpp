#pragma once

#include <filesystem>
#include <istream>
#include <string>
#include <string_view>
#include <vector>

#include "prpd/graph.hpp"

namespace prpd {

enum class GraphFormat { kEdgeList, kOff };

// "edgelist" / "off"; throws InputError otherwise.
GraphFormat parse_graph_format(std::string_view name);

// Format implied by a file extension: ".off" (any case) is OFF, anything else
// is an edge list.
GraphFormat infer_graph_format(const std::filesystem::path& path);

// One edge per line as two whitespace-separated tokens. Tokens are arbitrary
// strings remapped to dense ids in order of first appearance. Blank lines and
// lines whose first non-space character is '#' are skipped.
Graph parse_edge_list(std::istream& in);

// ASCII OFF mesh reduced to its 1-skeleton. Coordinates are validated and
// discarded; each face contributes the cycle of its consecutive vertices.
// Per-vertex or per-face extras (colors, normals) are rejected.
Graph parse_off(std::istream& in);

// Reads a graph file, throwing InputError (with the path in the message) if
// it cannot be opened or parsed.
Graph load_graph(const std::filesystem::path& path, GraphFormat format);

struct ManifestEntry {
  std::string path;
  std::string label;
};

struct CorpusManifest {
  std::vector<ManifestEntry> entries;
  // Directory that relative entry paths are resolved against.
  std::filesystem::path base_dir;

  std::filesystem::path resolve(const ManifestEntry& entry) const;
};

// CSV rows "path,label". A first row that reads exactly "path,label" is a
// header. Paths must be distinct and labels non-empty.
CorpusManifest parse_manifest(std::istream& in);

// Reads a manifest file; base_dir is set to the manifest's directory.
CorpusManifest load_manifest(const std::filesystem::path& path);

}  // namespace prpd

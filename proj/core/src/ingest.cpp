#include "prpd/ingest.hpp"

#include <algorithm>
#include <cctype>
#include <charconv>
#include <fstream>
#include <optional>
#include <sstream>
#include <unordered_map>
#include <unordered_set>
#include <utility>

#include "prpd/error.hpp"

namespace prpd {

namespace {

std::vector<std::string_view> split_ws(std::string_view line) {
  std::vector<std::string_view> tokens;
  std::size_t i = 0;
  while (i < line.size()) {
    while (i < line.size() && std::isspace(static_cast<unsigned char>(line[i]))) ++i;
    const std::size_t start = i;
    while (i < line.size() && !std::isspace(static_cast<unsigned char>(line[i]))) ++i;
    if (i > start) tokens.push_back(line.substr(start, i - start));
  }
  return tokens;
}

std::string_view trim(std::string_view s) {
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
  return s;
}

bool is_skippable(std::string_view line) {
  const auto t = trim(line);
  return t.empty() || t.front() == '#';
}

std::optional<std::size_t> to_count(std::string_view token) {
  std::size_t value = 0;
  const auto [ptr, ec] = std::from_chars(token.data(), token.data() + token.size(), value);
  if (ec != std::errc{} || ptr != token.data() + token.size()) return std::nullopt;
  return value;
}

bool is_number(std::string_view token) {
  double value = 0;
  const auto [ptr, ec] = std::from_chars(token.data(), token.data() + token.size(), value);
  return ec == std::errc{} && ptr == token.data() + token.size();
}

// Line reader for OFF: strips trailing '#' comments and skips blank lines,
// keeping track of the physical line number.
class OffLines {
 public:
  explicit OffLines(std::istream& in) : in_(in) {}

  // Next non-empty logical line as tokens, or nullopt at end of input.
  std::optional<std::vector<std::string_view>> next() {
    while (std::getline(in_, buffer_)) {
      ++line_;
      if (const auto hash = buffer_.find('#'); hash != std::string::npos) buffer_.resize(hash);
      auto tokens = split_ws(buffer_);
      if (!tokens.empty()) return tokens;
    }
    return std::nullopt;
  }

  std::size_t line() const { return line_; }

 private:
  std::istream& in_;
  std::string buffer_;
  std::size_t line_ = 0;
};

}  // namespace

GraphFormat parse_graph_format(std::string_view name) {
  if (name == "edgelist") return GraphFormat::kEdgeList;
  if (name == "off") return GraphFormat::kOff;
  throw InputError("unknown graph format '" + std::string(name) + "' (expected edgelist or off)");
}

GraphFormat infer_graph_format(const std::filesystem::path& path) {
  auto ext = path.extension().string();
  std::transform(ext.begin(), ext.end(), ext.begin(),
                 [](unsigned char c) { return static_cast<char>(std::tolower(c)); });
  return ext == ".off" ? GraphFormat::kOff : GraphFormat::kEdgeList;
}

Graph parse_edge_list(std::istream& in) {
  std::unordered_map<std::string, VertexId> ids;
  std::vector<std::pair<VertexId, VertexId>> edges;
  auto intern = [&ids](std::string_view token) {
    const auto [it, inserted] = ids.try_emplace(std::string(token), static_cast<VertexId>(ids.size()));
    return it->second;
  };

  std::string line;
  std::size_t line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    if (is_skippable(line)) continue;
    const auto tokens = split_ws(line);
    if (tokens.size() != 2) {
      throw ParseError(line_no, "expected 2 vertex tokens, found " + std::to_string(tokens.size()));
    }
    if (tokens[0] == tokens[1]) {
      throw ParseError(line_no, "self-loop on vertex '" + std::string(tokens[0]) + "'");
    }
    const VertexId a = intern(tokens[0]);
    const VertexId b = intern(tokens[1]);
    edges.emplace_back(a, b);
  }
  return build_graph(ids.size(), edges);
}

Graph parse_off(std::istream& in) {
  OffLines lines(in);

  auto header = lines.next();
  if (!header || header->front() != "OFF") {
    throw ParseError(lines.line(), "bad header: expected 'OFF', found '" +
                                       (header ? std::string(header->front()) : std::string()) + "'");
  }
  // Counts may share the header line or follow on the next one.
  std::vector<std::string_view> counts(header->begin() + 1, header->end());
  std::string counts_storage;
  if (counts.empty()) {
    auto next = lines.next();
    if (!next) throw ParseError(0, "missing vertex/face/edge counts");
    counts_storage.clear();
    for (auto t : *next) (counts_storage += t) += ' ';
    counts = split_ws(counts_storage);
  }
  if (counts.size() != 3) {
    throw ParseError(lines.line(), "expected 3 counts (vertices faces edges), found " +
                                       std::to_string(counts.size()));
  }
  const auto nv = to_count(counts[0]);
  const auto nf = to_count(counts[1]);
  if (!nv || !nf || !to_count(counts[2])) {
    throw ParseError(lines.line(), "counts must be non-negative integers");
  }

  for (std::size_t i = 0; i < *nv; ++i) {
    auto tokens = lines.next();
    if (!tokens) {
      throw ParseError(0, "unexpected end of input: read " + std::to_string(i) + " of " +
                              std::to_string(*nv) + " vertices");
    }
    for (std::size_t k = 0; k < tokens->size(); ++k) {
      if (k >= 3) {
        throw ParseError(lines.line(), "unexpected token '" + std::string((*tokens)[k]) +
                                           "' after vertex coordinates");
      }
      if (!is_number((*tokens)[k])) {
        throw ParseError(lines.line(), "invalid coordinate '" + std::string((*tokens)[k]) + "'");
      }
    }
    if (tokens->size() < 3) throw ParseError(lines.line(), "vertex needs 3 coordinates");
  }

  std::vector<std::pair<VertexId, VertexId>> edges;
  std::vector<VertexId> face;
  for (std::size_t f = 0; f < *nf; ++f) {
    auto tokens = lines.next();
    if (!tokens) {
      throw ParseError(0, "unexpected end of input: read " + std::to_string(f) + " of " +
                              std::to_string(*nf) + " faces");
    }
    const auto arity = to_count(tokens->front());
    if (!arity) throw ParseError(lines.line(), "invalid face size '" + std::string(tokens->front()) + "'");
    if (*arity < 3) throw ParseError(lines.line(), "face must have at least 3 vertices");
    if (tokens->size() < *arity + 1) {
      throw ParseError(lines.line(), "face declares " + std::to_string(*arity) + " vertices but lists " +
                                         std::to_string(tokens->size() - 1));
    }
    if (tokens->size() > *arity + 1) {
      throw ParseError(lines.line(), "unexpected token '" + std::string((*tokens)[*arity + 1]) +
                                         "' after face indices");
    }
    face.clear();
    for (std::size_t k = 1; k <= *arity; ++k) {
      const auto idx = to_count((*tokens)[k]);
      if (!idx) throw ParseError(lines.line(), "invalid vertex index '" + std::string((*tokens)[k]) + "'");
      if (*idx >= *nv) {
        throw ParseError(lines.line(), "face index " + std::to_string(*idx) + " out of range for " +
                                           std::to_string(*nv) + " vertices");
      }
      face.push_back(static_cast<VertexId>(*idx));
    }
    for (std::size_t k = 0; k < face.size(); ++k) {
      const VertexId a = face[k];
      const VertexId b = face[(k + 1) % face.size()];
      if (a == b) throw ParseError(lines.line(), "degenerate face repeats vertex " + std::to_string(a));
      edges.emplace_back(a, b);
    }
  }

  if (auto extra = lines.next()) {
    throw ParseError(lines.line(), "unexpected content after " + std::to_string(*nf) +
                                       " faces (count mismatch with header)");
  }
  return build_graph(*nv, edges);
}

Graph load_graph(const std::filesystem::path& path, GraphFormat format) {
  std::ifstream in(path);
  if (!in) throw InputError(path.string() + ": cannot open file");
  try {
    return format == GraphFormat::kOff ? parse_off(in) : parse_edge_list(in);
  } catch (const InputError& e) {
    throw InputError(path.string() + ": " + e.what());
  }
}

CorpusManifest parse_manifest(std::istream& in) {
  CorpusManifest manifest;
  std::unordered_set<std::string> seen;
  std::string line;
  std::size_t row = 0;
  bool first = true;
  while (std::getline(in, line)) {
    ++row;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (trim(line).empty()) continue;
    if (first && trim(line) == "path,label") {
      first = false;
      continue;
    }
    first = false;
    const std::string_view view(line);
    const auto comma = view.find(',');
    if (comma == std::string_view::npos || view.find(',', comma + 1) != std::string_view::npos) {
      throw ParseError(row, "expected 2 columns 'path,label'");
    }
    const auto path = trim(view.substr(0, comma));
    const auto label = trim(view.substr(comma + 1));
    if (path.empty()) throw ParseError(row, "empty path");
    if (label.empty()) throw ParseError(row, "empty label");
    if (!seen.emplace(path).second) throw ParseError(row, "duplicate path '" + std::string(path) + "'");
    manifest.entries.push_back({std::string(path), std::string(label)});
  }
  return manifest;
}

CorpusManifest load_manifest(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw InputError(path.string() + ": cannot open manifest");
  CorpusManifest manifest;
  try {
    manifest = parse_manifest(in);
  } catch (const InputError& e) {
    throw InputError(path.string() + ": " + e.what());
  }
  manifest.base_dir = path.parent_path();
  return manifest;
}

std::filesystem::path CorpusManifest::resolve(const ManifestEntry& entry) const {
  const std::filesystem::path p(entry.path);
  return p.is_relative() ? (base_dir / p).lexically_normal() : p;
}

}  // namespace prpd

#include <gtest/gtest.h>

#include <algorithm>
#include <filesystem>
#include <fstream>
#include <functional>
#include <map>
#include <set>
#include <random>
#include <sstream>

#include "prpd/error.hpp"
#include "prpd/ingest.hpp"
#include "prpd/synthetic.hpp"

namespace prpd {
namespace {

Graph edge_list(const std::string& text) {
  std::istringstream in(text);
  return parse_edge_list(in);
}

Graph off(const std::string& text) {
  std::istringstream in(text);
  return parse_off(in);
}

std::size_t parse_error_line(const std::function<void()>& fn) {
  try {
    fn();
  } catch (const ParseError& e) {
    return e.line();
  }
  ADD_FAILURE() << "expected ParseError";
  return 0;
}

TEST(EdgeList, PathGraph) {
  const Graph g = edge_list("0 1\n1 2\n");
  EXPECT_EQ(g.num_vertices(), 3u);
  EXPECT_EQ(g.num_edges(), 2u);
  EXPECT_TRUE(g.has_edge(0, 1));
  EXPECT_TRUE(g.has_edge(1, 2));
}

TEST(EdgeList, RemapsStringTokensInFirstAppearanceOrder) {
  const Graph g = edge_list("a b\n# note\nb c\n");
  EXPECT_EQ(g.num_vertices(), 3u);
  EXPECT_TRUE(g.has_edge(0, 1));  // a-b
  EXPECT_TRUE(g.has_edge(1, 2));  // b-c
  EXPECT_FALSE(g.has_edge(0, 2));
}

TEST(EdgeList, NumericTokensAreLabelsToo) {
  const Graph g = edge_list("10 7\n\n   \n7 3\r\n");
  EXPECT_EQ(g.num_vertices(), 3u);
  EXPECT_TRUE(g.has_edge(0, 1));
  EXPECT_TRUE(g.has_edge(1, 2));
}

TEST(EdgeList, WrongTokenCountIsParseError) {
  EXPECT_EQ(parse_error_line([] { edge_list("0 1 2\n"); }), 1u);
  EXPECT_EQ(parse_error_line([] { edge_list("0 1\n# c\nlonely\n"); }), 3u);
}

TEST(EdgeList, SelfLoopIsParseError) { EXPECT_EQ(parse_error_line([] { edge_list("0 1\nx x\n"); }), 2u); }

TEST(EdgeList, EmptyInputIsEmptyGraph) {
  EXPECT_EQ(edge_list("").num_vertices(), 0u);
  EXPECT_EQ(edge_list("# only a comment\n").num_vertices(), 0u);
}

TEST(EdgeList, LineOrderDoesNotChangeTheGraphUpToRelabeling) {
  std::mt19937_64 rng(3);
  std::vector<std::string> lines;
  for (int i = 0; i < 40; ++i) {
    const auto a = rng() % 15;
    auto b = rng() % 15;
    if (a == b) b = (b + 1) % 15;
    lines.push_back("v" + std::to_string(a) + " v" + std::to_string(b));
  }
  auto canonical = [](const std::vector<std::string>& ls) {
    std::string text;
    std::vector<std::string> first_seen;
    for (const auto& l : ls) {
      text += l + "\n";
      std::istringstream tok(l);
      std::string t;
      while (tok >> t) {
        if (std::find(first_seen.begin(), first_seen.end(), t) == first_seen.end()) first_seen.push_back(t);
      }
    }
    const Graph g = edge_list(text);
    // Edge set expressed in original token names.
    std::set<std::pair<std::string, std::string>> named;
    for (const Edge& e : g.edges()) named.insert(std::minmax(first_seen[e.u], first_seen[e.v]));
    return named;
  };
  const auto reference = canonical(lines);
  for (int trial = 0; trial < 10; ++trial) {
    std::shuffle(lines.begin(), lines.end(), rng);
    EXPECT_EQ(canonical(lines), reference);
  }
}

TEST(Off, Triangle) {
  const Graph g = off("OFF\n3 1 0\n0 0 0\n1 0 0\n0 1 0\n3 0 1 2\n");
  EXPECT_EQ(g.num_vertices(), 3u);
  EXPECT_EQ(g.num_edges(), 3u);
}

TEST(Off, TwoTrianglesShareAnEdge) {
  // Boundary edges {0,1},{1,2},{0,2} and {0,2},{2,3},{0,3}; {0,2} counted once.
  const Graph g = off("OFF\n4 2 0\n0 0 0\n1 0 0\n1 1 0\n0 1 0\n3 0 1 2\n3 0 2 3\n");
  EXPECT_EQ(g.num_vertices(), 4u);
  EXPECT_EQ(g.num_edges(), 5u);
  EXPECT_TRUE(g.has_edge(0, 2));
  EXPECT_FALSE(g.has_edge(1, 3));
}

TEST(Off, PolygonFacesAddTheirBoundaryCycle) {
  const Graph g = off("OFF\n4 1 0\n0 0 0\n1 0 0\n1 1 0\n0 1 0\n4 0 1 2 3\n");
  EXPECT_EQ(g.num_edges(), 4u);
  EXPECT_TRUE(g.has_edge(3, 0));
  EXPECT_FALSE(g.has_edge(0, 2));
}

TEST(Off, CountsOnHeaderLineAndCommentsAreAccepted) {
  const Graph g = off("OFF 3 1 0\n# comment\n0 0 0\n1 0 0 # trailing\n0 1 0\n\n3 0 1 2\n");
  EXPECT_EQ(g.num_edges(), 3u);
}

TEST(Off, IsolatedVerticesSurvive) {
  const Graph g = off("OFF\n5 1 0\n0 0 0\n1 0 0\n0 1 0\n2 2 2\n3 3 3\n3 0 1 2\n");
  EXPECT_EQ(g.num_vertices(), 5u);
  EXPECT_EQ(g.degree(4), 0u);
}

TEST(Off, BadHeader) {
  try {
    off("OFA\n3 1 0\n0 0 0\n1 0 0\n0 1 0\n3 0 1 2\n");
    FAIL();
  } catch (const ParseError& e) {
    EXPECT_EQ(e.line(), 1u);
    EXPECT_NE(std::string(e.what()).find("bad header"), std::string::npos);
  }
  EXPECT_THROW(off(""), ParseError);
  EXPECT_THROW(off("COFF\n3 1 0\n"), ParseError);
}

TEST(Off, CountMismatch) {
  // Too few faces.
  EXPECT_THROW(off("OFF\n3 2 0\n0 0 0\n1 0 0\n0 1 0\n3 0 1 2\n"), ParseError);
  // Too few vertices.
  EXPECT_THROW(off("OFF\n4 1 0\n0 0 0\n1 0 0\n0 1 0\n"), ParseError);
  // Trailing content beyond the declared faces.
  EXPECT_EQ(parse_error_line([] { off("OFF\n3 1 0\n0 0 0\n1 0 0\n0 1 0\n3 0 1 2\n3 0 1 2\n"); }), 7u);
  // Face declares more indices than it lists.
  EXPECT_THROW(off("OFF\n3 1 0\n0 0 0\n1 0 0\n0 1 0\n4 0 1 2\n"), ParseError);
}

TEST(Off, FaceIndexOutOfRange) {
  EXPECT_EQ(parse_error_line([] { off("OFF\n3 1 0\n0 0 0\n1 0 0\n0 1 0\n3 0 1 3\n"); }), 6u);
}

TEST(Off, ColorsAndNormalsAreRejectedByToken) {
  try {
    off("OFF\n3 1 0\n0 0 0 255\n1 0 0\n0 1 0\n3 0 1 2\n");
    FAIL();
  } catch (const ParseError& e) {
    EXPECT_EQ(e.line(), 3u);
    EXPECT_NE(std::string(e.what()).find("'255'"), std::string::npos) << e.what();
  }
  try {
    off("OFF\n3 1 0\n0 0 0\n1 0 0\n0 1 0\n3 0 1 2 0.5 0.5 0.5\n");
    FAIL();
  } catch (const ParseError& e) {
    EXPECT_NE(std::string(e.what()).find("'0.5'"), std::string::npos) << e.what();
  }
}

TEST(Off, DegenerateFaceIsRejected) {
  EXPECT_THROW(off("OFF\n3 1 0\n0 0 0\n1 0 0\n0 1 0\n3 0 1 1\n"), ParseError);
}

TEST(Off, SyntheticMeshesKeepVertexCountAndEdgeBound) {
  for (std::uint64_t seed = 0; seed < 5; ++seed) {
    const auto mesh = synthetic::perturb_mesh(synthetic::sphere_mesh(2), 0.2, 0.01, seed);
    std::stringstream text;
    synthetic::write_off(text, mesh);
    const Graph g = parse_off(text);
    EXPECT_EQ(g.num_vertices(), mesh.vertices.size());
    EXPECT_LE(g.num_edges(), 3 * mesh.faces.size());
    const Graph direct = synthetic::mesh_graph(mesh);
    EXPECT_TRUE(std::equal(g.edges().begin(), g.edges().end(), direct.edges().begin(), direct.edges().end()));
  }
}

TEST(Manifest, TwoEntries) {
  std::istringstream in("a.off,cat\nb.off,dog\n");
  const auto m = parse_manifest(in);
  ASSERT_EQ(m.entries.size(), 2u);
  EXPECT_EQ(m.entries[0].path, "a.off");
  EXPECT_EQ(m.entries[1].label, "dog");
}

TEST(Manifest, HeaderSkipped) {
  std::istringstream in("path,label\na.off,cat\n");
  const auto m = parse_manifest(in);
  ASSERT_EQ(m.entries.size(), 1u);
  EXPECT_EQ(m.entries[0].label, "cat");
}

TEST(Manifest, DuplicatePath) {
  std::istringstream in("a.off,cat\na.off,dog\n");
  try {
    parse_manifest(in);
    FAIL();
  } catch (const ParseError& e) {
    EXPECT_EQ(e.line(), 2u);
    EXPECT_NE(std::string(e.what()).find("duplicate"), std::string::npos);
  }
}

TEST(Manifest, EmptyLabel) {
  std::istringstream in("a.off,cat\nb.off,\n");
  try {
    parse_manifest(in);
    FAIL();
  } catch (const ParseError& e) {
    EXPECT_EQ(e.line(), 2u);
  }
}

TEST(Manifest, WrongColumnCount) {
  std::istringstream in("a.off\n");
  EXPECT_THROW(parse_manifest(in), ParseError);
  std::istringstream three("a.off,cat,extra\n");
  EXPECT_THROW(parse_manifest(three), ParseError);
}

TEST(Manifest, RelativePathsResolveAgainstManifestDirectory) {
  const auto dir = std::filesystem::temp_directory_path() / "prpd_ingest_test";
  std::filesystem::create_directories(dir);
  {
    std::ofstream(dir / "m.csv") << "path,label\nsub/a.off,x\n/abs/b.off,y\n";
  }
  const auto m = load_manifest(dir / "m.csv");
  EXPECT_EQ(m.resolve(m.entries[0]), dir / "sub/a.off");
  EXPECT_EQ(m.resolve(m.entries[1]), std::filesystem::path("/abs/b.off"));
  std::filesystem::remove_all(dir);
}

TEST(LoadGraph, MissingFileNamesThePath) {
  try {
    load_graph("/nonexistent/x.off", GraphFormat::kOff);
    FAIL();
  } catch (const InputError& e) {
    EXPECT_NE(std::string(e.what()).find("/nonexistent/x.off"), std::string::npos);
  }
}

TEST(GraphFormat, Parsing) {
  EXPECT_EQ(parse_graph_format("off"), GraphFormat::kOff);
  EXPECT_EQ(parse_graph_format("edgelist"), GraphFormat::kEdgeList);
  EXPECT_THROW(parse_graph_format("ply"), InputError);
  EXPECT_EQ(infer_graph_format("mesh.OFF"), GraphFormat::kOff);
  EXPECT_EQ(infer_graph_format("graph.txt"), GraphFormat::kEdgeList);
}

}  // namespace
}  // namespace prpd

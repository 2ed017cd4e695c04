#include <gtest/gtest.h>

#include <filesystem>
#include <fstream>
#include <random>

#include "graphlie/catalog.hpp"
#include "graphlie/errors.hpp"
#include "graphlie/graph.hpp"
#include "graphlie/lg_format.hpp"
#include "support.hpp"

using namespace graphlie;

namespace {

LabeledDigraph single_label_k4() {
  return LabeledDigraph({"x1", "x2", "x3", "x4"}, {{"x1", "x2", "c1"},
                                                   {"x1", "x3", "c1"},
                                                   {"x1", "x4", "c1"},
                                                   {"x2", "x3", "c1"},
                                                   {"x2", "x4", "c1"},
                                                   {"x3", "x4", "c1"}});
}

std::size_t parse_error_line(const std::string& text) {
  try {
    parse_lg(text);
  } catch (const ParseError& e) {
    return e.line();
  }
  return 0;
}

}  // namespace

TEST(LgFormat, MinimalGraph) {
  const LabeledDigraph g = parse_lg("vertices: a b\nedge a -> b : u");
  EXPECT_EQ(g.vertex_count(), 2u);
  EXPECT_EQ(g.edge_count(), 1u);
  EXPECT_EQ(g.label_count(), 1u);
  EXPECT_EQ(g.signed_label(0, 1), (SignedLabel{1, 0}));
  EXPECT_EQ(g.signed_label(1, 0), (SignedLabel{-1, 0}));
}

TEST(LgFormat, CommentsBlankLinesAndRepeatedVertexLines) {
  const LabeledDigraph g = parse_lg("# heading\nvertices: a\n\nvertices: b c   # more\nedge a->b:u\nedge c -> b : w\n");
  EXPECT_EQ(g.vertices(), (std::vector<std::string>{"a", "b", "c"}));
  EXPECT_EQ(g.labels(), (std::vector<std::string>{"u", "w"}));
}

TEST(LgFormat, ErrorsCarryLineNumbers) {
  EXPECT_EQ(parse_error_line("vertices: a b\nedge a -> a : u"), 2u);
  EXPECT_EQ(parse_error_line("vertices: a b\nedge a -> b : u\nedge b -> a : w"), 3u);
  EXPECT_EQ(parse_error_line("vertices: a b\nedge a -> b : u\nedge a -> b : u"), 3u);
  EXPECT_EQ(parse_error_line("vertices: a b a"), 1u);
  EXPECT_EQ(parse_error_line("vertices: a b\n\nedge a -> z : u"), 3u);
  EXPECT_EQ(parse_error_line("vertices: a b\nedge a => b : u"), 2u);
  EXPECT_EQ(parse_error_line("vertices: a b\nedge a -> b : a"), 2u);
  EXPECT_EQ(parse_error_line("bogus line"), 1u);
}

TEST(LgFormat, LoopAndMultiEdgeMessages) {
  EXPECT_THROW(parse_lg("vertices: a\nedge a -> a : u"), ParseError);
  try {
    parse_lg("vertices: a b\nedge a -> b : u\nedge b -> a : u");
    FAIL();
  } catch (const ParseError& e) {
    EXPECT_NE(std::string(e.what()).find("line 3"), std::string::npos);
  }
}

TEST(LgFormat, FileErrorsNamePathAndLine) {
  const auto path = std::filesystem::temp_directory_path() / "graphlie_bad.lg";
  std::ofstream(path) << "vertices: a b\nedge a -> a : u\n";
  try {
    read_lg_file(path.string());
    FAIL();
  } catch (const ParseError& e) {
    EXPECT_EQ(std::string(e.what()).rfind(path.string() + ":2:", 0), 0u) << e.what();
    EXPECT_EQ(e.line(), 2u);
  }
  std::filesystem::remove(path);
}

TEST(LgFormat, LabelsLinePreservesOrder) {
  const LabeledDigraph g({"a", "b", "c"}, {"w", "u"}, {{"a", "b", "u"}, {"b", "c", "w"}});
  EXPECT_FALSE(g.labels_in_first_use_order());
  const std::string text = serialize_lg(g);
  EXPECT_NE(text.find("labels: w u"), std::string::npos);
  EXPECT_EQ(parse_lg(text), g);
}

TEST(LgFormat, RoundTripProperty) {
  std::mt19937 rng(11);
  for (int trial = 0; trial < 200; ++trial) {
    const LabeledDigraph g = fixtures::random_graph(rng, {1, 8, 0.4, 5});
    EXPECT_EQ(parse_lg(serialize_lg(g)), g);
  }
  for (const auto& name : catalog::names()) {
    const LabeledDigraph g = catalog::get(name).graph;
    EXPECT_EQ(parse_lg(serialize_lg(g)), g) << name;
  }
}

TEST(Graph, ConstructorRejectsInvalidGraphs) {
  EXPECT_THROW(LabeledDigraph({"a", "a"}, {}), GraphError);
  EXPECT_THROW(LabeledDigraph({"a", "b"}, {{"a", "a", "u"}}), GraphError);
  EXPECT_THROW(LabeledDigraph({"a", "b"}, {{"a", "b", "u"}, {"b", "a", "w"}}), GraphError);
  EXPECT_THROW(LabeledDigraph({"a", "b"}, {{"a", "c", "u"}}), GraphError);
  EXPECT_THROW(LabeledDigraph({"a", "b"}, {"u", "w"}, {{"a", "b", "u"}}), GraphError);
  EXPECT_THROW(LabeledDigraph({"a", "b"}, {{"a", "b", "a"}}), GraphError);
  EXPECT_THROW(LabeledDigraph({"a b"}, {}), GraphError);
}

TEST(Graph, AdjacencyValencyLaplacian) {
  const LabeledDigraph edge({"a", "b"}, {{"a", "b", "u"}});
  IntMatrix a2(2);
  a2(0, 1) = a2(1, 0) = 1;
  EXPECT_EQ(adjacency(edge), a2);
  IntMatrix d2(2);
  d2(0, 0) = d2(1, 1) = 1;
  EXPECT_EQ(valency(edge), d2);
  IntMatrix l2(2);
  l2(0, 0) = l2(1, 1) = -1;
  l2(0, 1) = l2(1, 0) = 1;
  EXPECT_EQ(laplacian(edge), l2);

  const LabeledDigraph empty3({"a", "b", "c"}, {});
  EXPECT_EQ(adjacency(empty3), IntMatrix(3));
  EXPECT_EQ(laplacian(empty3), IntMatrix(3));
  EXPECT_EQ(valency(LabeledDigraph({"a"}, {})), IntMatrix(1));

  const LabeledDigraph k4 = single_label_k4();
  IntMatrix ones(4);
  IntMatrix three(4);
  for (std::size_t i = 0; i < 4; ++i)
    for (std::size_t j = 0; j < 4; ++j) {
      ones(i, j) = i == j ? 0 : 1;
      three(i, j) = i == j ? 3 : 0;
    }
  EXPECT_EQ(adjacency(k4), ones);
  EXPECT_EQ(valency(k4), three);

  const LabeledDigraph two_edges({"a", "b", "c", "d"}, {{"a", "b", "u"}, {"c", "d", "w"}});
  const IntMatrix l = laplacian(two_edges);
  for (std::size_t i = 0; i < 4; ++i)
    for (std::size_t j = 0; j < 4; ++j)
      if (i / 2 != j / 2) EXPECT_EQ(l(i, j), 0);
  EXPECT_EQ(l(2, 3), 1);
  EXPECT_EQ(l(3, 3), -1);
}

TEST(Graph, ComponentCounts) {
  EXPECT_EQ(component_count_spectral(single_label_k4()), 1u);
  const LabeledDigraph two_edges({"a", "b", "c", "d"}, {{"a", "b", "u"}, {"c", "d", "w"}});
  EXPECT_EQ(component_count_spectral(two_edges), 2u);
  EXPECT_EQ(components(two_edges), (std::vector<std::vector<std::size_t>>{{0, 1}, {2, 3}}));
  const LabeledDigraph isolated({"a", "b", "c", "d", "e"}, {});
  EXPECT_EQ(component_count_spectral(isolated), 5u);
  EXPECT_EQ(components(isolated).size(), 5u);
  EXPECT_TRUE(is_connected(single_label_k4()));
  EXPECT_FALSE(is_connected(two_edges));
}

TEST(Graph, ComponentsAreOrderedByLeastVertex) {
  const LabeledDigraph g({"a", "b", "c", "d", "e"}, {{"e", "a", "u"}, {"d", "b", "u"}});
  EXPECT_EQ(components(g), (std::vector<std::vector<std::size_t>>{{0, 4}, {1, 3}, {2}}));
}

TEST(GraphProperty, SpectralCountMatchesSearch) {
  std::mt19937 rng(3);
  for (int trial = 0; trial < 300; ++trial) {
    const LabeledDigraph g = fixtures::random_graph(rng, {1, 10, 0.2, 3});
    const std::size_t expected = fixtures::bfs_component_count(g);
    EXPECT_EQ(component_count_spectral(g), expected);
    EXPECT_EQ(components(g).size(), expected);
  }
}

TEST(Graph, InducedSubgraph) {
  const LabeledDigraph k4 = single_label_k4();
  const std::vector<std::size_t> all{0, 1, 2, 3};
  EXPECT_EQ(induced_subgraph(k4, all), k4);
  const LabeledDigraph none = induced_subgraph(k4, std::vector<std::size_t>{});
  EXPECT_EQ(none.vertex_count(), 0u);
  EXPECT_EQ(none.label_count(), 0u);
  const LabeledDigraph pair = induced_subgraph(k4, std::vector<std::string>{"x3", "x1"});
  EXPECT_EQ(pair.vertices(), (std::vector<std::string>{"x1", "x3"}));
  ASSERT_EQ(pair.edge_count(), 1u);
  EXPECT_EQ(pair.named_edges()[0].label, "c1");

  const LabeledDigraph g({"a", "b", "c"}, {{"a", "b", "u"}, {"b", "c", "w"}});
  EXPECT_EQ(induced_subgraph(g, std::vector<std::string>{"b", "c"}).labels(), (std::vector<std::string>{"w"}));
}

TEST(Graph, ReverseEdge) {
  const LabeledDigraph g({"a", "b"}, {{"a", "b", "u"}});
  const LabeledDigraph r = reverse_edge(g, "a", "b");
  EXPECT_EQ(r.named_edges()[0].tail, "b");
  EXPECT_EQ(r.named_edges()[0].head, "a");
  EXPECT_EQ(reverse_edge(r, "b", "a"), g);
  EXPECT_THROW(reverse_edge(g, "b", "a"), PreconditionError);

  const LabeledDigraph k4 = single_label_k4();
  const LabeledDigraph k4r = reverse_edge(k4, "x2", "x3");
  std::size_t unchanged = 0;
  for (std::size_t k = 0; k < 6; ++k) unchanged += k4r.edges()[k] == k4.edges()[k];
  EXPECT_EQ(unchanged, 5u);
}

TEST(GraphProperty, ReversalKeepsComponentsAndLaplacian) {
  std::mt19937 rng(5);
  for (int trial = 0; trial < 100; ++trial) {
    const LabeledDigraph g = fixtures::random_graph(rng, {2, 8, 0.4, 3});
    if (g.edge_count() == 0) continue;
    const unsigned long long mask = rng() & ((1ULL << std::min<std::size_t>(g.edge_count(), 60)) - 1);
    const LabeledDigraph r = reorient(g, mask);
    EXPECT_EQ(laplacian(r), laplacian(g));
    EXPECT_EQ(components(r), components(g));
    EXPECT_EQ(reorient(r, mask), g);
  }
}

TEST(Graph, Neighborhood) {
  const LabeledDigraph star({"c", "l1", "l2", "l3", "z"}, {{"c", "l1", "u"}, {"l2", "c", "u"}, {"c", "l3", "u"}});
  EXPECT_EQ(neighborhood(star, 0), (std::vector<std::size_t>{1, 2, 3}));
  EXPECT_TRUE(neighborhood(star, 4).empty());
  EXPECT_EQ(neighborhood(star, 2), (std::vector<std::size_t>{0}));
}

#include "graphlie/catalog.hpp"

#include <algorithm>
#include <functional>
#include <set>

#include "graphlie/errors.hpp"

namespace graphlie::catalog {

namespace {

using Spans = std::vector<std::vector<std::string>>;

struct Registration {
  std::string name;
  std::function<CatalogEntry()> make;
};

CatalogEntry entry(std::string name, std::string title, LabeledDigraph g, Spans subalgebras, Spans ideals,
                   std::string source) {
  return {std::move(name), std::move(title), std::move(g), std::move(subalgebras), std::move(ideals),
          std::move(source)};
}

// Magnin's low-dimensional 2-step algebras. Basis x1..xd; the labels are the
// basis elements that arise as brackets.
CatalogEntry heis_x_g1() {
  return entry("heis_x_g1", "h x g1", LabeledDigraph({"x1", "x2", "x4"}, {{"x1", "x2", "x3"}}),
               {{"x1", "x2", "x3"}}, {{"x1", "x2", "x3"}}, "Magnin list, dimension 4");
}

CatalogEntry g5_1() {
  return entry("g5_1", "g5,1", LabeledDigraph({"x1", "x2", "x3", "x4"}, {{"x1", "x2", "x5"}, {"x3", "x4", "x5"}}),
               {{"x1", "x2", "x5"}, {"x3", "x4", "x5"}}, {{"x1", "x2", "x5"}, {"x3", "x4", "x5"}},
               "Magnin list, dimension 5");
}

CatalogEntry g5_2() {
  return entry("g5_2", "g5,2", LabeledDigraph({"x1", "x2", "x3"}, {{"x1", "x2", "x4"}, {"x1", "x3", "x5"}}),
               {{"x1", "x3", "x5"}, {"x1", "x2", "x4"}}, {}, "Magnin list, dimension 5");
}

CatalogEntry heis_x_g1_2() {
  return entry("heis_x_g1_2", "h x g1^2", LabeledDigraph({"x1", "x2", "x4", "x5"}, {{"x1", "x2", "x3"}}),
               {{"x1", "x2", "x3"}}, {{"x1", "x2", "x3"}}, "Magnin list, dimension 5");
}

CatalogEntry g6_1() {
  return entry("g6_1", "g6,1",
               LabeledDigraph({"x1", "x2", "x3"}, {{"x1", "x2", "x6"}, {"x1", "x3", "x4"}, {"x2", "x3", "x5"}}),
               {{"x1", "x3", "x4"}, {"x1", "x2", "x6"}, {"x2", "x3", "x5"}}, {}, "Magnin list, dimension 6");
}

// Path x3 - x1 - x2 - x4 whose outer edges share x6: the pencil of the two
// bracket forms has a double Pfaffian root, which separates it from h x h.
// The row's third listed pair is read as <x1,x3,x6>; no 2-vertex span can
// carry both x5 and x6.
CatalogEntry g6_2() {
  return entry("g6_2", "g6,2",
               LabeledDigraph({"x1", "x2", "x3", "x4"}, {{"x1", "x2", "x5"}, {"x1", "x3", "x6"}, {"x2", "x4", "x6"}}),
               {{"x1", "x3", "x6"},
                {"x1", "x2", "x5"},
                {"x2", "x4", "x6"},
                {"x1", "x2", "x3", "x5", "x6"},
                {"x1", "x2", "x4", "x5", "x6"}},
               {{"x1", "x2", "x3", "x5", "x6"}, {"x1", "x2", "x4", "x5", "x6"}}, "Magnin list, dimension 6");
}

CatalogEntry heis_x_heis() {
  return entry("heis_x_heis", "h x h",
               LabeledDigraph({"x1", "x2", "x4", "x5"}, {{"x1", "x2", "x3"}, {"x4", "x5", "x6"}}),
               {{"x1", "x2", "x3"}, {"x4", "x5", "x6"}}, {{"x1", "x2", "x3"}, {"x4", "x5", "x6"}},
               "Magnin list, dimension 6");
}

CatalogEntry heis_x_g1_3() {
  return entry("heis_x_g1_3", "h x g1^3", LabeledDigraph({"x1", "x2", "x4", "x5", "x6"}, {{"x1", "x2", "x3"}}),
               {{"x1", "x2", "x3"}}, {{"x1", "x2", "x3"}}, "Magnin list, dimension 6");
}

CatalogEntry g5_1_x_g1() {
  return entry("g5_1_x_g1", "g5,1 x g1",
               LabeledDigraph({"x1", "x2", "x3", "x4", "x6"}, {{"x1", "x2", "x5"}, {"x3", "x4", "x5"}}),
               {{"x1", "x2", "x5"}, {"x3", "x4", "x5"}, {"x1", "x2", "x3", "x4", "x5"}},
               {{"x1", "x2", "x5"}, {"x3", "x4", "x5"}, {"x1", "x2", "x3", "x4", "x5"}}, "Magnin list, dimension 6");
}

CatalogEntry g5_2_x_g1() {
  return entry("g5_2_x_g1", "g5,2 x g1",
               LabeledDigraph({"x1", "x2", "x3", "x6"}, {{"x1", "x2", "x4"}, {"x1", "x3", "x5"}}),
               {{"x1", "x3", "x5"}, {"x1", "x2", "x4"}, {"x1", "x2", "x3", "x4", "x5"}},
               {{"x1", "x2", "x3", "x4", "x5"}}, "Magnin list, dimension 6");
}

// Single-label K4, oriented so that example1_map() is a graded isomorphism
// (recovered by orientation search; see the catalog tests).
CatalogEntry example1_k4() {
  return entry("example1_K4", "K4, one label",
               LabeledDigraph({"x1", "x2", "x3", "x4"}, {{"x1", "x2", "c1"},
                                                         {"x3", "x1", "c1"},
                                                         {"x1", "x4", "c1"},
                                                         {"x2", "x3", "c1"},
                                                         {"x4", "x2", "c1"},
                                                         {"x3", "x4", "c1"}}),
               {}, {}, "K4 with a single label, isomorphic to g5,1");
}

// g5,1 numbered so that the pairs are {y1, y4} and {y2, y3}.
CatalogEntry example1_g5_1() {
  return entry("example1_g5_1", "g5,1 (y basis)",
               LabeledDigraph({"y1", "y2", "y3", "y4"}, {{"y1", "y4", "k"}, {"y2", "y3", "k"}}),
               {{"y1", "y4", "k"}, {"y2", "y3", "k"}}, {{"y1", "y4", "k"}, {"y2", "y3", "k"}},
               "g5,1 in the basis y1..y4, k");
}

CatalogEntry complete_free(std::size_t p) {
  const LabeledDigraph g = complete_free_graph(p);
  Spans pairs;
  for (const auto& e : g.named_edges()) pairs.push_back({e.tail, e.head, e.label});
  if (p <= 2) pairs.clear();  // K2 is the whole Heisenberg algebra
  return entry("K" + std::to_string(p) + "_free", "free 2-step on " + std::to_string(p) + " generators", g,
               pairs, {}, "complete graph with distinct labels");
}

const std::vector<Registration>& registry() {
  static const std::vector<Registration> entries = {
      {"heis_x_g1", heis_x_g1},
      {"g5_1", g5_1},
      {"g5_2", g5_2},
      {"heis_x_g1_2", heis_x_g1_2},
      {"g6_1", g6_1},
      {"g6_2", g6_2},
      {"heis_x_heis", heis_x_heis},
      {"heis_x_g1_3", heis_x_g1_3},
      {"g5_1_x_g1", g5_1_x_g1},
      {"g5_2_x_g1", g5_2_x_g1},
      {"example1_K4", example1_k4},
      {"example1_g5_1", example1_g5_1},
      {"K2_free", [] { return complete_free(2); }},
      {"K3_free", [] { return complete_free(3); }},
      {"K4_free", [] { return complete_free(4); }},
  };
  return entries;
}

bool same_span(std::vector<std::string> a, std::vector<std::string> b) {
  std::sort(a.begin(), a.end());
  std::sort(b.begin(), b.end());
  return a == b;
}

std::string join(const std::vector<std::string>& names) {
  std::string out = "<";
  for (std::size_t k = 0; k < names.size(); ++k) out += (k ? "," : "") + names[k];
  return out + ">";
}

}  // namespace

std::vector<std::string> names() {
  std::vector<std::string> out;
  for (const auto& r : registry()) out.push_back(r.name);
  return out;
}

CatalogEntry get(std::string_view name) {
  if (name == "g6_3")
    throw PreconditionError("g6_3: out of scope: parametric family (its constants depend on a parameter)");
  for (const auto& r : registry())
    if (r.name == name) return r.make();
  std::string available;
  for (const auto& r : registry()) available += (available.empty() ? "" : ", ") + r.name;
  throw PreconditionError("unknown catalog entry '" + std::string(name) + "'; available: " + available);
}

LabeledDigraph complete_free_graph(std::size_t p) {
  if (p == 0) throw PreconditionError("K_p needs p >= 1");
  std::vector<std::string> vertices;
  for (std::size_t i = 1; i <= p; ++i) vertices.push_back("x" + std::to_string(i));
  std::vector<NamedEdge> edges;
  for (std::size_t i = 1; i <= p; ++i)
    for (std::size_t j = i + 1; j <= p; ++j)
      edges.push_back({"x" + std::to_string(i), "x" + std::to_string(j),
                       "c" + std::to_string(i) + "_" + std::to_string(j)});
  return LabeledDigraph(std::move(vertices), edges);
}

EntryReport verify_entry(const CatalogEntry& entry) {
  EntryReport report;
  report.name = entry.name;
  report.reports = enumerate_substructures(entry.graph);

  const auto is_expected_ideal = [&](const std::vector<std::string>& span) {
    return std::any_of(entry.expected_graph_ideals.begin(), entry.expected_graph_ideals.end(),
                       [&](const auto& s) { return same_span(s, span); });
  };

  // An expected graph-ideal that is not also listed as a subalgebra is still checked.
  Spans expected = entry.expected_subalgebras;
  for (const auto& ideal : entry.expected_graph_ideals)
    if (std::none_of(expected.begin(), expected.end(), [&](const auto& s) { return same_span(s, ideal); }))
      expected.push_back(ideal);

  for (const auto& span : expected) {
    SpanFinding finding{span, is_expected_ideal(span), {}};
    const auto it = std::find_if(report.reports.begin(), report.reports.end(), [&](const SubstructureReport& r) {
      return same_span(r.span_names(entry.graph), span);
    });
    if (it == report.reports.end())
      finding.problem = "no vertex subset spans " + join(span);
    else if (!it->is_subalgebra)
      finding.problem = join(span) + " is not a subalgebra";
    else if (it->is_trivial())
      finding.problem = join(span) + " is trivial (" + to_string(it->triviality) + ")";
    else if (it->is_graph_ideal() != finding.expected_graph_ideal)
      finding.problem = join(span) + (finding.expected_graph_ideal ? " is not a graph-ideal" : " is a graph-ideal");
    if (!finding.problem.empty()) report.misses.push_back(span);
    report.findings.push_back(std::move(finding));
  }

  for (const auto& r : report.reports) {
    if (r.is_trivial() || !r.is_subalgebra) continue;
    const auto names = r.span_names(entry.graph);
    if (std::none_of(expected.begin(), expected.end(), [&](const auto& s) { return same_span(s, names); }))
      report.extras.push_back(names);
  }
  return report;
}

CandidateMap example1_map() {
  // Columns: images of y1, y2, y3, y4 in the basis x1..x4.
  CandidateMap map{RationalMatrix(4, 4), RationalMatrix{{1}}};
  const int images[4][4] = {{1, 0, 0, 0}, {1, 1, 0, -1}, {1, 1, 1, 0}, {0, 1, 0, 0}};
  for (std::size_t col = 0; col < 4; ++col)
    for (std::size_t row = 0; row < 4; ++row) map.minus_one(row, col) = images[col][row];
  return map;
}

}  // namespace graphlie::catalog

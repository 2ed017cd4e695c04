#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "graphlie/graph.hpp"
#include "graphlie/morphisms.hpp"
#include "graphlie/substructures.hpp"

namespace graphlie::catalog {

/// A named graph with the non-trivial subalgebras and graph-ideals it is
/// expected to have. Each expected span is a set of basis names (vertices
/// and labels).
struct CatalogEntry {
  std::string name;
  std::string title;  // e.g. "g_{5,1}", "h x g_1"
  LabeledDigraph graph;
  std::vector<std::vector<std::string>> expected_subalgebras;
  std::vector<std::vector<std::string>> expected_graph_ideals;
  std::string source;
};

/// Registered names in registration order.
std::vector<std::string> names();

/// Throws PreconditionError for an unknown name (the message lists the
/// available ones) and for "g6_3", which is a parametric family.
CatalogEntry get(std::string_view name);

/// K_p with a distinct label "c<i>_<j>" on each edge x_i -> x_j, i < j.
LabeledDigraph complete_free_graph(std::size_t p);

struct SpanFinding {
  std::vector<std::string> span;
  bool expected_graph_ideal = false;
  std::string problem;  // empty when found with matching flags
};

struct EntryReport {
  std::string name;
  std::vector<SpanFinding> findings;          // one per expected subalgebra
  std::vector<std::vector<std::string>> misses;  // expected spans not matched
  std::vector<std::vector<std::string>> extras;  // nontrivial subalgebras not listed
  std::vector<SubstructureReport> reports;

  bool passed() const { return misses.empty(); }
};

/// Enumerates every vertex subset and checks that each expected span is a
/// nontrivial subalgebra whose graph-ideal flag matches the expectation.
EntryReport verify_entry(const CatalogEntry& entry);

/// The explicit graded isomorphism from g_{5,1} onto the single-label K_4
/// algebra: y1 -> x1, y2 -> x1 + x2 - x4, y3 -> x1 + x2 + x3, y4 -> x2,
/// k -> c1. Blocks use the bases of "example1_g5_1" and "example1_K4".
CandidateMap example1_map();

}  // namespace graphlie::catalog

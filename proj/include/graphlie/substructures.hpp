#pragma once

#include <cstddef>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "graphlie/graph.hpp"

namespace graphlie {

enum class Triviality {
  None,
  WholeAlgebra,     // the vertex subset is all of V
  InsideMinusTwo,   // no vertices: the span lies in g_{-2} (includes {0})
  AbelianFactor,    // vertices pairwise non-adjacent: an abelian span of g_{-1}
};

std::string to_string(Triviality t);

/// Subspace of Lie(G) spanned by a vertex subset and the labels of its
/// induced subgraph.
struct SubstructureReport {
  std::vector<std::size_t> vertices;  // sorted indices into g.vertices()
  std::vector<std::size_t> labels;    // sorted indices into g.labels()

  bool is_subalgebra = false;      // bracket closure, checked by brute force
  bool graph_ideal_criterion = false;  // every edge leaving the subset carries an induced label
  bool ideal_by_closure = false;   // [b, s] in the span for every basis b and member s
  Triviality triviality = Triviality::None;

  bool is_trivial() const { return triviality != Triviality::None; }
  bool is_graph_ideal() const { return graph_ideal_criterion && ideal_by_closure; }
  /// The span is an ideal but the combinatorial criterion does not see it.
  bool non_graph_ideal() const { return ideal_by_closure && !graph_ideal_criterion; }

  /// Vertex names then label names.
  std::vector<std::string> span_names(const LabeledDigraph& g) const;
};

/// Throw PreconditionError for an out-of-range vertex.
SubstructureReport check_subalgebra(const LabeledDigraph& g, std::span<const std::size_t> subset);
SubstructureReport check_graph_ideal(const LabeledDigraph& g, std::span<const std::size_t> subset);

/// One report per connected component.
std::vector<SubstructureReport> component_ideals(const LabeledDigraph& g);

/// Reports for every vertex subset of size <= max_subset_size (default |V|).
/// Order: nontrivial first, then by size, then lexicographically by vertex
/// indices. The number of subsets is exponential in |V|.
std::vector<SubstructureReport> enumerate_substructures(const LabeledDigraph& g,
                                                        std::optional<std::size_t> max_subset_size = {});

}  // namespace graphlie

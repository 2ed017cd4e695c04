#pragma once

#include <cstddef>
#include <map>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace graphlie {

/// Directed edge tail -> head, referring to vertex and label positions.
struct Edge {
  std::size_t tail = 0;
  std::size_t head = 0;
  std::size_t label = 0;

  friend bool operator==(const Edge&, const Edge&) = default;
};

/// Edge given by names, used to build graphs.
struct NamedEdge {
  std::string tail;
  std::string head;
  std::string label;
};

/// Value of the signed label function C(x, y): +label for an edge x -> y,
/// -label for an edge y -> x, and sign 0 when x and y are not adjacent.
struct SignedLabel {
  int sign = 0;
  std::size_t label = 0;

  explicit operator bool() const noexcept { return sign != 0; }
  friend bool operator==(const SignedLabel&, const SignedLabel&) = default;
};

/// Square integer matrix (adjacency, valency, Laplacian).
struct IntMatrix {
  std::size_t size = 0;
  std::vector<long> data;

  explicit IntMatrix(std::size_t n = 0) : size(n), data(n * n, 0) {}
  long& operator()(std::size_t r, std::size_t c) { return data[r * size + c]; }
  long operator()(std::size_t r, std::size_t c) const { return data[r * size + c]; }
  friend bool operator==(const IntMatrix&, const IntMatrix&) = default;
};

/// Finite simple directed graph with a surjective edge labeling.
///
/// Invariants, checked on construction (GraphError on violation):
///  - no loops, at most one edge per unordered vertex pair;
///  - every label is carried by at least one edge;
///  - vertex names and label names are duplicate-free, disjoint identifiers.
///
/// Vertices, edges and labels keep their construction order, and every matrix
/// or enumeration follows it.
class LabeledDigraph {
 public:
  LabeledDigraph() = default;

  /// Labels are ordered by first use in `edges`.
  LabeledDigraph(std::vector<std::string> vertices, const std::vector<NamedEdge>& edges);

  /// Labels are ordered as given; each must be used by some edge.
  LabeledDigraph(std::vector<std::string> vertices, std::vector<std::string> labels,
                 const std::vector<NamedEdge>& edges);

  const std::vector<std::string>& vertices() const noexcept { return vertices_; }
  const std::vector<std::string>& labels() const noexcept { return labels_; }
  const std::vector<Edge>& edges() const noexcept { return edges_; }

  std::size_t vertex_count() const noexcept { return vertices_.size(); }
  std::size_t label_count() const noexcept { return labels_.size(); }
  std::size_t edge_count() const noexcept { return edges_.size(); }

  std::optional<std::size_t> find_vertex(std::string_view name) const;
  std::optional<std::size_t> find_label(std::string_view name) const;
  /// Throws PreconditionError for an unknown name.
  std::size_t vertex_index(std::string_view name) const;
  std::size_t label_index(std::string_view name) const;

  /// Index of the edge joining x and y in either direction.
  std::optional<std::size_t> edge_between(std::size_t x, std::size_t y) const;
  /// Index of the edge tail -> head (direction matters).
  std::optional<std::size_t> find_edge(std::size_t tail, std::size_t head) const;

  SignedLabel signed_label(std::size_t x, std::size_t y) const;

  /// Number of edges carrying the label.
  std::size_t label_multiplicity(std::size_t label) const;

  std::vector<NamedEdge> named_edges() const;

  /// True when label order equals order of first use along the edge list.
  bool labels_in_first_use_order() const;

  friend bool operator==(const LabeledDigraph& a, const LabeledDigraph& b) {
    return a.vertices_ == b.vertices_ && a.labels_ == b.labels_ && a.edges_ == b.edges_;
  }

 private:
  void index_and_validate(const std::vector<NamedEdge>& edges);

  std::vector<std::string> vertices_;
  std::vector<std::string> labels_;
  std::vector<Edge> edges_;
  std::map<std::string, std::size_t, std::less<>> vertex_index_;
  std::map<std::string, std::size_t, std::less<>> label_index_;
  std::map<std::pair<std::size_t, std::size_t>, std::size_t> pair_index_;  // (min, max) -> edge
};

/// Name accepted for vertices and labels: nonempty [A-Za-z0-9_]+.
bool is_identifier(std::string_view name);

IntMatrix adjacency(const LabeledDigraph& g);
IntMatrix valency(const LabeledDigraph& g);
/// Adjacency minus valency. This is the negative of the usual graph
/// Laplacian; the kernel is the same.
IntMatrix laplacian(const LabeledDigraph& g);

/// Nullity of the Laplacian, computed exactly over Q.
std::size_t component_count_spectral(const LabeledDigraph& g);

/// Connected components of the underlying undirected graph. Each component
/// is sorted; components are ordered by their smallest vertex.
std::vector<std::vector<std::size_t>> components(const LabeledDigraph& g);

bool is_connected(const LabeledDigraph& g);

/// Subgraph on the given vertices (any order, duplicates ignored) with every
/// edge of g joining two of them. Vertex, edge and label order follow g; the
/// label set shrinks to the labels still in use.
LabeledDigraph induced_subgraph(const LabeledDigraph& g, std::span<const std::size_t> subset);
LabeledDigraph induced_subgraph(const LabeledDigraph& g, const std::vector<std::string>& subset);

/// Same graph with the edge tail -> head pointing the other way. Throws
/// PreconditionError when there is no such edge.
LabeledDigraph reverse_edge(const LabeledDigraph& g, std::size_t tail, std::size_t head);
LabeledDigraph reverse_edge(const LabeledDigraph& g, std::string_view tail, std::string_view head);

/// Reverses every edge whose bit is set in `mask` (bit i = edge i).
LabeledDigraph reorient(const LabeledDigraph& g, unsigned long long mask);

/// Sorted vertices joined to v by an edge in either direction.
std::vector<std::size_t> neighborhood(const LabeledDigraph& g, std::size_t v);

}  // namespace graphlie

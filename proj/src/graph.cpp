#include "graphlie/graph.hpp"

#include <algorithm>
#include <numeric>
#include <set>

#include "graphlie/errors.hpp"
#include "graphlie/matrix.hpp"

namespace graphlie {

namespace {

std::vector<std::string> labels_by_first_use(const std::vector<NamedEdge>& edges) {
  std::vector<std::string> labels;
  std::set<std::string, std::less<>> seen;
  for (const auto& e : edges)
    if (seen.insert(e.label).second) labels.push_back(e.label);
  return labels;
}

class DisjointSets {
 public:
  explicit DisjointSets(std::size_t n) : parent_(n), rank_(n, 0) {
    std::iota(parent_.begin(), parent_.end(), std::size_t{0});
  }

  std::size_t find(std::size_t x) {
    while (parent_[x] != x) {
      parent_[x] = parent_[parent_[x]];
      x = parent_[x];
    }
    return x;
  }

  void unite(std::size_t a, std::size_t b) {
    a = find(a);
    b = find(b);
    if (a == b) return;
    if (rank_[a] < rank_[b]) std::swap(a, b);
    parent_[b] = a;
    if (rank_[a] == rank_[b]) ++rank_[a];
  }

 private:
  std::vector<std::size_t> parent_;
  std::vector<std::size_t> rank_;
};

}  // namespace

bool is_identifier(std::string_view name) {
  if (name.empty()) return false;
  return std::all_of(name.begin(), name.end(), [](char ch) {
    return (ch >= 'a' && ch <= 'z') || (ch >= 'A' && ch <= 'Z') || (ch >= '0' && ch <= '9') || ch == '_';
  });
}

LabeledDigraph::LabeledDigraph(std::vector<std::string> vertices, const std::vector<NamedEdge>& edges)
    : LabeledDigraph(std::move(vertices), labels_by_first_use(edges), edges) {}

LabeledDigraph::LabeledDigraph(std::vector<std::string> vertices, std::vector<std::string> labels,
                               const std::vector<NamedEdge>& edges)
    : vertices_(std::move(vertices)), labels_(std::move(labels)) {
  index_and_validate(edges);
}

void LabeledDigraph::index_and_validate(const std::vector<NamedEdge>& edges) {
  for (std::size_t i = 0; i < vertices_.size(); ++i) {
    if (!is_identifier(vertices_[i])) throw GraphError("invalid vertex name '" + vertices_[i] + "'");
    if (!vertex_index_.emplace(vertices_[i], i).second) throw GraphError("duplicate vertex '" + vertices_[i] + "'");
  }
  for (std::size_t l = 0; l < labels_.size(); ++l) {
    if (!is_identifier(labels_[l])) throw GraphError("invalid label name '" + labels_[l] + "'");
    if (vertex_index_.count(labels_[l]))
      throw GraphError("name '" + labels_[l] + "' is used both as a vertex and as a label");
    if (!label_index_.emplace(labels_[l], l).second) throw GraphError("duplicate label '" + labels_[l] + "'");
  }

  std::vector<bool> used(labels_.size(), false);
  edges_.reserve(edges.size());
  for (const auto& e : edges) {
    const auto tail = find_vertex(e.tail);
    const auto head = find_vertex(e.head);
    if (!tail) throw GraphError("edge uses undeclared vertex '" + e.tail + "'");
    if (!head) throw GraphError("edge uses undeclared vertex '" + e.head + "'");
    const auto label = find_label(e.label);
    if (!label) throw GraphError("edge label '" + e.label + "' is not in the label set");
    if (*tail == *head) throw GraphError("loop edge at '" + e.tail + "'");
    const auto key = std::minmax(*tail, *head);
    if (const auto it = pair_index_.find(key); it != pair_index_.end()) {
      const Edge& other = edges_[it->second];
      if (other.tail == *tail)
        throw GraphError("duplicate edge " + e.tail + " -> " + e.head);
      throw GraphError("multi-edge between '" + e.tail + "' and '" + e.head + "'");
    }
    pair_index_.emplace(key, edges_.size());
    edges_.push_back({*tail, *head, *label});
    used[*label] = true;
  }
  for (std::size_t l = 0; l < labels_.size(); ++l)
    if (!used[l]) throw GraphError("label '" + labels_[l] + "' is not carried by any edge");
}

std::optional<std::size_t> LabeledDigraph::find_vertex(std::string_view name) const {
  if (const auto it = vertex_index_.find(name); it != vertex_index_.end()) return it->second;
  return std::nullopt;
}

std::optional<std::size_t> LabeledDigraph::find_label(std::string_view name) const {
  if (const auto it = label_index_.find(name); it != label_index_.end()) return it->second;
  return std::nullopt;
}

std::size_t LabeledDigraph::vertex_index(std::string_view name) const {
  if (auto v = find_vertex(name)) return *v;
  throw PreconditionError("unknown vertex '" + std::string(name) + "'");
}

std::size_t LabeledDigraph::label_index(std::string_view name) const {
  if (auto l = find_label(name)) return *l;
  throw PreconditionError("unknown label '" + std::string(name) + "'");
}

std::optional<std::size_t> LabeledDigraph::edge_between(std::size_t x, std::size_t y) const {
  if (const auto it = pair_index_.find(std::minmax(x, y)); it != pair_index_.end()) return it->second;
  return std::nullopt;
}

std::optional<std::size_t> LabeledDigraph::find_edge(std::size_t tail, std::size_t head) const {
  auto e = edge_between(tail, head);
  if (e && edges_[*e].tail == tail) return e;
  return std::nullopt;
}

SignedLabel LabeledDigraph::signed_label(std::size_t x, std::size_t y) const {
  const auto e = edge_between(x, y);
  if (!e || x == y) return {};
  const Edge& edge = edges_[*e];
  return {edge.tail == x ? 1 : -1, edge.label};
}

std::size_t LabeledDigraph::label_multiplicity(std::size_t label) const {
  return static_cast<std::size_t>(
      std::count_if(edges_.begin(), edges_.end(), [label](const Edge& e) { return e.label == label; }));
}

std::vector<NamedEdge> LabeledDigraph::named_edges() const {
  std::vector<NamedEdge> out;
  out.reserve(edges_.size());
  for (const auto& e : edges_) out.push_back({vertices_[e.tail], vertices_[e.head], labels_[e.label]});
  return out;
}

bool LabeledDigraph::labels_in_first_use_order() const { return labels_by_first_use(named_edges()) == labels_; }

IntMatrix adjacency(const LabeledDigraph& g) {
  IntMatrix a(g.vertex_count());
  for (const auto& e : g.edges()) a(e.tail, e.head) = a(e.head, e.tail) = 1;
  return a;
}

IntMatrix valency(const LabeledDigraph& g) {
  IntMatrix b(g.vertex_count());
  for (const auto& e : g.edges()) {
    ++b(e.tail, e.tail);
    ++b(e.head, e.head);
  }
  return b;
}

IntMatrix laplacian(const LabeledDigraph& g) {
  IntMatrix l = adjacency(g);
  const IntMatrix b = valency(g);
  for (std::size_t k = 0; k < l.data.size(); ++k) l.data[k] -= b.data[k];
  return l;
}

std::size_t component_count_spectral(const LabeledDigraph& g) {
  const IntMatrix l = laplacian(g);
  RationalMatrix q(l.size, l.size);
  for (std::size_t i = 0; i < l.size; ++i)
    for (std::size_t j = 0; j < l.size; ++j) q(i, j) = l(i, j);
  return l.size - rank(q);
}

std::vector<std::vector<std::size_t>> components(const LabeledDigraph& g) {
  DisjointSets sets(g.vertex_count());
  for (const auto& e : g.edges()) sets.unite(e.tail, e.head);

  std::vector<std::vector<std::size_t>> out;
  std::vector<std::size_t> slot(g.vertex_count(), SIZE_MAX);
  for (std::size_t v = 0; v < g.vertex_count(); ++v) {
    const std::size_t root = sets.find(v);
    if (slot[root] == SIZE_MAX) {
      slot[root] = out.size();
      out.emplace_back();
    }
    out[slot[root]].push_back(v);
  }
  return out;
}

bool is_connected(const LabeledDigraph& g) { return components(g).size() <= 1; }

LabeledDigraph induced_subgraph(const LabeledDigraph& g, std::span<const std::size_t> subset) {
  std::vector<bool> keep(g.vertex_count(), false);
  for (auto v : subset) {
    if (v >= g.vertex_count()) throw PreconditionError("vertex index out of range");
    keep[v] = true;
  }
  std::vector<std::string> vertices;
  for (std::size_t v = 0; v < g.vertex_count(); ++v)
    if (keep[v]) vertices.push_back(g.vertices()[v]);

  std::vector<NamedEdge> edges;
  std::vector<bool> label_used(g.label_count(), false);
  for (const auto& e : g.edges()) {
    if (!keep[e.tail] || !keep[e.head]) continue;
    edges.push_back({g.vertices()[e.tail], g.vertices()[e.head], g.labels()[e.label]});
    label_used[e.label] = true;
  }
  std::vector<std::string> labels;
  for (std::size_t l = 0; l < g.label_count(); ++l)
    if (label_used[l]) labels.push_back(g.labels()[l]);
  return LabeledDigraph(std::move(vertices), std::move(labels), edges);
}

LabeledDigraph induced_subgraph(const LabeledDigraph& g, const std::vector<std::string>& subset) {
  std::vector<std::size_t> indices;
  indices.reserve(subset.size());
  for (const auto& name : subset) indices.push_back(g.vertex_index(name));
  return induced_subgraph(g, indices);
}

LabeledDigraph reverse_edge(const LabeledDigraph& g, std::size_t tail, std::size_t head) {
  const auto e = g.find_edge(tail, head);
  if (!e) throw PreconditionError("no edge " + (tail < g.vertex_count() ? g.vertices()[tail] : "?") + " -> " +
                                  (head < g.vertex_count() ? g.vertices()[head] : "?"));
  auto edges = g.named_edges();
  std::swap(edges[*e].tail, edges[*e].head);
  return LabeledDigraph(g.vertices(), g.labels(), edges);
}

LabeledDigraph reverse_edge(const LabeledDigraph& g, std::string_view tail, std::string_view head) {
  return reverse_edge(g, g.vertex_index(tail), g.vertex_index(head));
}

LabeledDigraph reorient(const LabeledDigraph& g, unsigned long long mask) {
  auto edges = g.named_edges();
  for (std::size_t k = 0; k < edges.size() && k < 64; ++k)
    if (mask & (1ULL << k)) std::swap(edges[k].tail, edges[k].head);
  return LabeledDigraph(g.vertices(), g.labels(), edges);
}

std::vector<std::size_t> neighborhood(const LabeledDigraph& g, std::size_t v) {
  if (v >= g.vertex_count()) throw PreconditionError("vertex index out of range");
  std::vector<std::size_t> out;
  for (const auto& e : g.edges()) {
    if (e.tail == v) out.push_back(e.head);
    if (e.head == v) out.push_back(e.tail);
  }
  std::sort(out.begin(), out.end());
  return out;
}

}  // namespace graphlie

#pragma once

#include <algorithm>
#include <random>
#include <string>
#include <vector>

#include "graphlie/graph.hpp"

namespace graphlie::fixtures {

struct RandomGraphSpec {
  std::size_t min_vertices = 1;
  std::size_t max_vertices = 7;
  double edge_probability = 0.5;
  std::size_t label_pool = 4;  // labels drawn from c1..c<pool>; 0 means one label per edge
};

// Vertices v1..vN; each pair joined with the given probability in a random
// direction. Labels are whatever the edges happen to use.
inline LabeledDigraph random_graph(std::mt19937& rng, const RandomGraphSpec& spec) {
  std::uniform_int_distribution<std::size_t> size(spec.min_vertices, spec.max_vertices);
  std::bernoulli_distribution coin(spec.edge_probability);
  std::bernoulli_distribution flip(0.5);
  const std::size_t n = size(rng);
  std::vector<std::string> vertices;
  for (std::size_t i = 1; i <= n; ++i) vertices.push_back("v" + std::to_string(i));
  std::vector<NamedEdge> edges;
  std::size_t next_label = 1;
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j) {
      if (!coin(rng)) continue;
      std::size_t label = next_label++;
      if (spec.label_pool > 0) label = std::uniform_int_distribution<std::size_t>(1, spec.label_pool)(rng);
      if (flip(rng))
        edges.push_back({vertices[i], vertices[j], "c" + std::to_string(label)});
      else
        edges.push_back({vertices[j], vertices[i], "c" + std::to_string(label)});
    }
  return LabeledDigraph(std::move(vertices), edges);
}

inline std::vector<std::string> numbered(const std::string& prefix, std::size_t count) {
  std::vector<std::string> out;
  for (std::size_t i = 1; i <= count; ++i) out.push_back(prefix + std::to_string(i));
  return out;
}

// Distinct-label graphs from an undirected edge list on x1..xn; edge k gets e<k+1>.
inline LabeledDigraph uniquely_labeled(std::size_t n, const std::vector<std::pair<std::size_t, std::size_t>>& pairs) {
  const auto names = numbered("x", n);
  std::vector<NamedEdge> edges;
  for (std::size_t k = 0; k < pairs.size(); ++k)
    edges.push_back({names[pairs[k].first], names[pairs[k].second], "e" + std::to_string(k + 1)});
  return LabeledDigraph(names, edges);
}

inline LabeledDigraph path_graph(std::size_t n) {
  std::vector<std::pair<std::size_t, std::size_t>> p;
  for (std::size_t i = 0; i + 1 < n; ++i) p.emplace_back(i, i + 1);
  return uniquely_labeled(n, p);
}

inline LabeledDigraph cycle_graph(std::size_t n) {
  std::vector<std::pair<std::size_t, std::size_t>> p;
  for (std::size_t i = 0; i < n; ++i) p.emplace_back(i, (i + 1) % n);
  return uniquely_labeled(n, p);
}

inline LabeledDigraph star_graph(std::size_t leaves) {
  std::vector<std::pair<std::size_t, std::size_t>> p;
  for (std::size_t i = 1; i <= leaves; ++i) p.emplace_back(0, i);
  return uniquely_labeled(leaves + 1, p);
}

inline LabeledDigraph complete_graph(std::size_t n) {
  std::vector<std::pair<std::size_t, std::size_t>> p;
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j) p.emplace_back(i, j);
  return uniquely_labeled(n, p);
}

inline LabeledDigraph k22_graph() { return uniquely_labeled(4, {{0, 2}, {0, 3}, {1, 2}, {1, 3}}); }

// Connected uniquely labeled graphs on at most five vertices.
inline std::vector<std::pair<std::string, LabeledDigraph>> small_connected_corpus() {
  std::vector<std::pair<std::string, LabeledDigraph>> out;
  for (std::size_t n = 2; n <= 5; ++n) out.emplace_back("P" + std::to_string(n), path_graph(n));
  for (std::size_t n = 3; n <= 5; ++n) out.emplace_back("C" + std::to_string(n), cycle_graph(n));
  for (std::size_t k = 2; k <= 4; ++k) out.emplace_back("S" + std::to_string(k), star_graph(k));
  out.emplace_back("K3", complete_graph(3));
  out.emplace_back("K4", complete_graph(4));
  out.emplace_back("K22", k22_graph());
  return out;
}

// Oracles below read the edge list directly and never touch LieAlgebra.

inline std::size_t bfs_component_count(const LabeledDigraph& g) {
  const std::size_t n = g.vertex_count();
  std::vector<std::vector<std::size_t>> adj(n);
  for (const auto& e : g.edges()) {
    adj[e.tail].push_back(e.head);
    adj[e.head].push_back(e.tail);
  }
  std::vector<bool> seen(n, false);
  std::size_t count = 0;
  for (std::size_t s = 0; s < n; ++s) {
    if (seen[s]) continue;
    ++count;
    std::vector<std::size_t> stack{s};
    seen[s] = true;
    while (!stack.empty()) {
      const auto v = stack.back();
      stack.pop_back();
      for (auto w : adj[v])
        if (!seen[w]) seen[w] = true, stack.push_back(w);
    }
  }
  return count;
}

// Membership over the basis (vertices, then labels) of the span of a vertex
// set and the labels on edges inside it.
inline std::vector<bool> induced_span(const LabeledDigraph& g, const std::vector<bool>& in_subset) {
  std::vector<bool> member(g.vertex_count() + g.label_count(), false);
  for (std::size_t v = 0; v < g.vertex_count(); ++v) member[v] = in_subset[v];
  for (const auto& e : g.edges())
    if (in_subset[e.tail] && in_subset[e.head]) member[g.vertex_count() + e.label] = true;
  return member;
}

// The bracket of two basis vectors is 0 or a single label up to sign, so
// closure only needs that label's membership.
inline bool bracket_lands_in(const LabeledDigraph& g, std::size_t a, std::size_t b, const std::vector<bool>& member) {
  const std::size_t n = g.vertex_count();
  if (a >= n || b >= n) return true;
  for (const auto& e : g.edges())
    if ((e.tail == a && e.head == b) || (e.tail == b && e.head == a)) return member[n + e.label];
  return true;
}

inline bool oracle_subalgebra(const LabeledDigraph& g, const std::vector<bool>& member) {
  for (std::size_t a = 0; a < member.size(); ++a)
    for (std::size_t b = 0; b < member.size(); ++b)
      if (member[a] && member[b] && !bracket_lands_in(g, a, b, member)) return false;
  return true;
}

inline bool oracle_ideal(const LabeledDigraph& g, const std::vector<bool>& member) {
  for (std::size_t a = 0; a < member.size(); ++a)
    for (std::size_t b = 0; b < member.size(); ++b)
      if (member[b] && !bracket_lands_in(g, a, b, member)) return false;
  return true;
}

inline std::vector<bool> mask_to_subset(std::size_t n, unsigned long long mask) {
  std::vector<bool> in(n);
  for (std::size_t v = 0; v < n; ++v) in[v] = (mask >> v) & 1ULL;
  return in;
}

inline std::vector<std::size_t> mask_to_indices(std::size_t n, unsigned long long mask) {
  std::vector<std::size_t> out;
  for (std::size_t v = 0; v < n; ++v)
    if ((mask >> v) & 1ULL) out.push_back(v);
  return out;
}

}  // namespace graphlie::fixtures

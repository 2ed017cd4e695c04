#include "graphlie/morphisms.hpp"

#include <algorithm>
#include <set>

#include "graphlie/errors.hpp"

namespace graphlie {

GradedLinearMap::GradedLinearMap(LieAlgebra source, LieAlgebra target, RationalMatrix minus_one,
                                 RationalMatrix minus_two)
    : source_(std::move(source)),
      target_(std::move(target)),
      minus_one_(std::move(minus_one)),
      minus_two_(std::move(minus_two)) {
  const auto shape_ok = [](const RationalMatrix& b, std::size_t rows, std::size_t cols) {
    // An empty block may come in as 0 x 0 whichever side is zero.
    if (rows == 0 || cols == 0) return b.rows() * b.cols() == 0;
    return b.rows() == rows && b.cols() == cols;
  };
  if (!shape_ok(minus_one_, target_.n(), source_.n()))
    throw DimensionError("degree -1 block must be " + std::to_string(target_.n()) + " x " +
                         std::to_string(source_.n()));
  if (!shape_ok(minus_two_, target_.m(), source_.m()))
    throw DimensionError("degree -2 block must be " + std::to_string(target_.m()) + " x " +
                         std::to_string(source_.m()));
  if (minus_one_.rows() != target_.n() || minus_one_.cols() != source_.n())
    minus_one_ = RationalMatrix(target_.n(), source_.n());
  if (minus_two_.rows() != target_.m() || minus_two_.cols() != source_.m())
    minus_two_ = RationalMatrix(target_.m(), source_.m());
}

GradedLinearMap GradedLinearMap::identity(const LieAlgebra& alg) {
  return GradedLinearMap(alg, alg, RationalMatrix::identity(alg.n()), RationalMatrix::identity(alg.m()));
}

Element GradedLinearMap::apply(const Element& v) const {
  if (v.coords.size() != source_.dim())
    throw DimensionError("element has " + std::to_string(v.coords.size()) + " coordinates, map source has " +
                         std::to_string(source_.dim()));
  const std::span<const Rational> all(v.coords);
  const auto low = minus_one_ * all.subspan(0, source_.n());
  const auto high = minus_two_ * all.subspan(source_.n());
  Element out;
  out.coords.reserve(target_.dim());
  out.coords.insert(out.coords.end(), low.begin(), low.end());
  out.coords.insert(out.coords.end(), high.begin(), high.end());
  return out;
}

GradedLinearMap GradedLinearMap::after(const GradedLinearMap& first) const {
  if (first.target_.n() != source_.n() || first.target_.m() != source_.m())
    throw DimensionError("cannot compose: strata dimensions differ");
  return GradedLinearMap(first.source_, target_, minus_one_ * first.minus_one_, minus_two_ * first.minus_two_);
}

IsomorphismReport is_graded_lie_isomorphism(const GradedLinearMap& f) {
  IsomorphismReport report;
  const auto invertible = [](const RationalMatrix& b, std::size_t rows, std::size_t cols) {
    if (rows != cols) return false;
    return rows == 0 || rank(b) == rows;
  };
  report.blocks_invertible = invertible(f.minus_one(), f.target().n(), f.source().n()) &&
                             invertible(f.minus_two(), f.target().m(), f.source().m());

  const LieAlgebra& src = f.source();
  std::vector<Element> images;
  for (std::size_t k = 0; k < src.dim(); ++k) images.push_back(f.apply(Element::basis(src, k)));

  report.bracket_preserved = true;
  for (std::size_t a = 0; a < src.dim() && report.bracket_preserved; ++a)
    for (std::size_t b = a + 1; b < src.dim(); ++b) {
      const Element lhs = f.apply(bracket(src, Element::basis(src, a), Element::basis(src, b)));
      const Element rhs = bracket(f.target(), images[a], images[b]);
      if (lhs != rhs) {
        report.bracket_preserved = false;
        report.witness = std::make_pair(a, b);
        break;
      }
    }
  return report;
}

namespace {

IsomorphismOutcome verify(GradedLinearMap map, LabeledDigraph target_graph) {
  IsomorphismReport report = is_graded_lie_isomorphism(map);
  if (report.passed()) return VerifiedIsomorphism{std::move(map), std::move(target_graph)};
  return Counterexample{std::move(map), std::move(target_graph), report};
}

// Sign-change map for reversing the edges with the given indices. Within the
// tail's component, the tail vertex is negated and so is every label on
// another edge at that tail; the reversed labels themselves stay fixed.
GradedLinearMap sign_change_map(const LabeledDigraph& g, const LabeledDigraph& reversed,
                                const std::vector<std::size_t>& edge_indices) {
  RationalMatrix vertex_block = RationalMatrix::identity(g.vertex_count());
  RationalMatrix label_block = RationalMatrix::identity(g.label_count());
  std::set<std::size_t> reversed_labels;
  for (auto k : edge_indices) reversed_labels.insert(g.edges()[k].label);

  std::set<std::size_t> negated_vertices;
  std::set<std::size_t> negated_labels;
  for (auto k : edge_indices) {
    const Edge& e = g.edges()[k];
    negated_vertices.insert(e.tail);
    for (auto y : neighborhood(g, e.tail)) {
      if (y == e.head) continue;
      const std::size_t label = g.signed_label(e.tail, y).label;
      if (!reversed_labels.count(label)) negated_labels.insert(label);
    }
  }
  for (auto v : negated_vertices) vertex_block(v, v) = -1;
  for (auto l : negated_labels) label_block(l, l) = -1;
  return GradedLinearMap(build_lie(g), build_lie(reversed), std::move(vertex_block), std::move(label_block));
}

}  // namespace

IsomorphismOutcome reversal_isomorphism(const LabeledDigraph& g, std::size_t tail, std::size_t head) {
  if (tail >= g.vertex_count() || head >= g.vertex_count()) throw PreconditionError("vertex index out of range");
  const auto e = g.find_edge(tail, head);
  if (!e) throw PreconditionError("no edge " + g.vertices()[tail] + " -> " + g.vertices()[head]);
  const std::size_t label = g.edges()[*e].label;
  if (const auto mult = g.label_multiplicity(label); mult != 1)
    throw PreconditionError("label '" + g.labels()[label] + "' occurs on " + std::to_string(mult) +
                            " edges; the reversed edge must carry a label used exactly once");
  LabeledDigraph reversed = reverse_edge(g, tail, head);
  GradedLinearMap map = sign_change_map(g, reversed, {*e});
  return verify(std::move(map), std::move(reversed));
}

IsomorphismOutcome relabel_group_reversal(const LabeledDigraph& g, std::size_t label) {
  if (label >= g.label_count()) throw PreconditionError("label index out of range");
  const auto comps = components(g);
  std::vector<std::size_t> component_of(g.vertex_count());
  for (std::size_t c = 0; c < comps.size(); ++c)
    for (auto v : comps[c]) component_of[v] = c;

  std::vector<std::size_t> edge_indices;
  std::set<std::size_t> seen_components;
  for (std::size_t k = 0; k < g.edge_count(); ++k) {
    if (g.edges()[k].label != label) continue;
    if (!seen_components.insert(component_of[g.edges()[k].tail]).second)
      throw PreconditionError("label '" + g.labels()[label] + "' occurs twice in one connected component");
    edge_indices.push_back(k);
  }

  auto edges = g.named_edges();
  for (auto k : edge_indices) std::swap(edges[k].tail, edges[k].head);
  LabeledDigraph reversed(g.vertices(), g.labels(), edges);
  GradedLinearMap map = sign_change_map(g, reversed, edge_indices);
  return verify(std::move(map), std::move(reversed));
}

IsomorphismOutcome orientation_isomorphism(const LabeledDigraph& g, std::span<const std::size_t> edges) {
  if (!is_connected(g)) throw PreconditionError("orientation_isomorphism requires a connected graph");
  if (g.label_count() != g.edge_count())
    throw PreconditionError("orientation_isomorphism requires every edge to carry its own label");

  std::vector<std::size_t> order(edges.begin(), edges.end());
  std::sort(order.begin(), order.end());
  order.erase(std::unique(order.begin(), order.end()), order.end());
  for (auto k : order)
    if (k >= g.edge_count()) throw PreconditionError("edge index out of range");

  const LieAlgebra source = build_lie(g);
  GradedLinearMap composite = GradedLinearMap::identity(source);
  LabeledDigraph current = g;
  for (auto k : order) {
    const Edge e = current.edges()[k];
    IsomorphismOutcome step = reversal_isomorphism(current, e.tail, e.head);
    if (auto* bad = std::get_if<Counterexample>(&step)) return *bad;
    auto& ok = std::get<VerifiedIsomorphism>(step);
    composite = ok.map.after(composite);
    current = std::move(ok.target_graph);
  }
  return verify(std::move(composite), std::move(current));
}

std::optional<OrientationHit> find_isomorphism_by_orientation_search(const LieAlgebra& source,
                                                                     const LabeledDigraph& g,
                                                                     std::span<const CandidateMap> candidates) {
  if (g.edge_count() > kMaxOrientationSearchEdges)
    throw PreconditionError("orientation search budget exceeded: " + std::to_string(g.edge_count()) +
                            " edges, limit " + std::to_string(kMaxOrientationSearchEdges));
  for (unsigned long long mask = 0; mask < (1ULL << g.edge_count()); ++mask) {
    LabeledDigraph oriented = reorient(g, mask);
    const LieAlgebra target = build_lie(oriented);
    for (std::size_t c = 0; c < candidates.size(); ++c) {
      GradedLinearMap map(source, target, candidates[c].minus_one, candidates[c].minus_two);
      if (is_graded_lie_isomorphism(map).passed()) return OrientationHit{mask, c, std::move(oriented), std::move(map)};
    }
  }
  return std::nullopt;
}

}  // namespace graphlie

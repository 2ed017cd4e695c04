#include "graphlie/substructures.hpp"

#include <algorithm>

#include "graphlie/errors.hpp"
#include "graphlie/lie_algebra.hpp"

namespace graphlie {

std::string to_string(Triviality t) {
  switch (t) {
    case Triviality::None: return "nontrivial";
    case Triviality::WholeAlgebra: return "whole algebra";
    case Triviality::InsideMinusTwo: return "inside g-2";
    case Triviality::AbelianFactor: return "abelian factor";
  }
  return "?";
}

std::vector<std::string> SubstructureReport::span_names(const LabeledDigraph& g) const {
  std::vector<std::string> out;
  for (auto v : vertices) out.push_back(g.vertices()[v]);
  for (auto l : labels) out.push_back(g.labels()[l]);
  return out;
}

namespace {

// The span is a coordinate subspace, so membership is a support check.
bool in_span(const Element& e, const std::vector<bool>& member) {
  for (std::size_t k = 0; k < e.coords.size(); ++k)
    if (!member[k] && sgn(e.coords[k]) != 0) return false;
  return true;
}

SubstructureReport analyze(const LabeledDigraph& g, const LieAlgebra& alg, std::span<const std::size_t> subset) {
  const std::size_t n = g.vertex_count();
  std::vector<bool> in_subset(n, false);
  for (auto v : subset) {
    if (v >= n) throw PreconditionError("vertex index out of range");
    in_subset[v] = true;
  }

  SubstructureReport report;
  for (std::size_t v = 0; v < n; ++v)
    if (in_subset[v]) report.vertices.push_back(v);

  std::vector<bool> label_in(g.label_count(), false);
  bool has_edge = false;
  for (const auto& e : g.edges())
    if (in_subset[e.tail] && in_subset[e.head]) {
      label_in[e.label] = true;
      has_edge = true;
    }
  for (std::size_t l = 0; l < g.label_count(); ++l)
    if (label_in[l]) report.labels.push_back(l);

  std::vector<bool> member(alg.dim(), false);
  for (auto v : report.vertices) member[v] = true;
  for (auto l : report.labels) member[n + l] = true;

  std::vector<std::size_t> span;
  for (std::size_t k = 0; k < alg.dim(); ++k)
    if (member[k]) span.push_back(k);

  report.is_subalgebra = true;
  for (std::size_t a = 0; a < span.size() && report.is_subalgebra; ++a)
    for (std::size_t b = a + 1; b < span.size(); ++b)
      if (!in_span(bracket(alg, Element::basis(alg, span[a]), Element::basis(alg, span[b])), member)) {
        report.is_subalgebra = false;
        break;
      }

  report.ideal_by_closure = true;
  for (std::size_t b = 0; b < alg.dim() && report.ideal_by_closure; ++b)
    for (auto s : span)
      if (!in_span(bracket(alg, Element::basis(alg, b), Element::basis(alg, s)), member)) {
        report.ideal_by_closure = false;
        break;
      }

  report.graph_ideal_criterion = true;
  for (auto x : report.vertices) {
    for (auto y : neighborhood(g, x))
      if (!label_in[g.signed_label(x, y).label]) {
        report.graph_ideal_criterion = false;
        break;
      }
    if (!report.graph_ideal_criterion) break;
  }

  if (report.vertices.size() == n)
    report.triviality = Triviality::WholeAlgebra;
  else if (report.vertices.empty())
    report.triviality = Triviality::InsideMinusTwo;
  else if (!has_edge)
    report.triviality = Triviality::AbelianFactor;
  return report;
}

}  // namespace

SubstructureReport check_subalgebra(const LabeledDigraph& g, std::span<const std::size_t> subset) {
  return analyze(g, build_lie(g), subset);
}

SubstructureReport check_graph_ideal(const LabeledDigraph& g, std::span<const std::size_t> subset) {
  return analyze(g, build_lie(g), subset);
}

std::vector<SubstructureReport> component_ideals(const LabeledDigraph& g) {
  const LieAlgebra alg = build_lie(g);
  std::vector<SubstructureReport> out;
  for (const auto& comp : components(g)) out.push_back(analyze(g, alg, comp));
  return out;
}

std::vector<SubstructureReport> enumerate_substructures(const LabeledDigraph& g,
                                                        std::optional<std::size_t> max_subset_size) {
  const std::size_t n = g.vertex_count();
  const std::size_t cap = std::min(max_subset_size.value_or(n), n);
  if (n >= 8 * sizeof(unsigned long long)) throw PreconditionError("graph too large to enumerate subsets");
  const LieAlgebra alg = build_lie(g);

  std::vector<SubstructureReport> out;
  std::vector<std::size_t> subset;
  for (unsigned long long mask = 0; mask < (1ULL << n); ++mask) {
    if (static_cast<std::size_t>(__builtin_popcountll(mask)) > cap) continue;
    subset.clear();
    for (std::size_t v = 0; v < n; ++v)
      if (mask & (1ULL << v)) subset.push_back(v);
    out.push_back(analyze(g, alg, subset));
  }
  std::stable_sort(out.begin(), out.end(), [](const SubstructureReport& a, const SubstructureReport& b) {
    if (a.is_trivial() != b.is_trivial()) return !a.is_trivial();
    if (a.vertices.size() != b.vertices.size()) return a.vertices.size() < b.vertices.size();
    return a.vertices < b.vertices;
  });
  return out;
}

}  // namespace graphlie

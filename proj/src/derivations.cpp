#include "graphlie/derivations.hpp"

#include <algorithm>

#include "graphlie/errors.hpp"

namespace graphlie {

DerivationSystem derivation_system(const LieAlgebra& alg) {
  DerivationSystem sys;
  sys.n = alg.n();
  sys.m = alg.m();
  const std::size_t n = sys.n;
  const std::size_t m = sys.m;
  const auto vertex_unknown = [n](std::size_t p, std::size_t q) { return p * n + q; };
  const auto label_unknown = [n, m](std::size_t p, std::size_t q) { return n * n + p * m + q; };

  sys.constraints = RationalMatrix(0, sys.unknowns());
  RationalVector row(sys.unknowns());
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j)
      for (std::size_t l = 0; l < m; ++l) {
        std::fill(row.begin(), row.end(), Rational(0));
        // D[x_i, x_j] = sum_k s(i,j,k) D c_k, whose c_l coordinate is sum_k s(i,j,k) E(l,k).
        for (std::size_t k = 0; k < m; ++k)
          if (const int s = alg.s(i, j, k)) row[label_unknown(l, k)] += s;
        // [D x_i, x_j] + [x_i, D x_j] = sum_p A(p,i) [x_p, x_j] + A(p,j) [x_i, x_p].
        for (std::size_t p = 0; p < n; ++p) {
          if (const int s = alg.s(p, j, l)) row[vertex_unknown(p, i)] -= s;
          if (const int s = alg.s(i, p, l)) row[vertex_unknown(p, j)] -= s;
        }
        sys.constraints.push_row(row);
      }
  return sys;
}

DerivationSpace der0(const LieAlgebra& alg) {
  const DerivationSystem sys = derivation_system(alg);
  const std::size_t n = sys.n;
  const std::size_t m = sys.m;

  const std::vector<RationalVector> kernel = nullspace_basis(sys.constraints);

  DerivationSpace space;
  space.dimension = kernel.size();
  space.basis.reserve(kernel.size());
  for (const auto& v : kernel) {
    RationalMatrix a(n, n);
    RationalMatrix e(m, m);
    for (std::size_t p = 0; p < n; ++p)
      for (std::size_t q = 0; q < n; ++q) a(p, q) = v[p * n + q];
    for (std::size_t p = 0; p < m; ++p)
      for (std::size_t q = 0; q < m; ++q) e(p, q) = v[n * n + p * m + q];
    space.basis.emplace_back(alg, alg, std::move(a), std::move(e));
  }
  return space;
}

bool is_derivation(const GradedLinearMap& d) {
  const LieAlgebra& alg = d.source();
  if (!(d.target() == alg)) return false;
  for (std::size_t a = 0; a < alg.dim(); ++a)
    for (std::size_t b = a + 1; b < alg.dim(); ++b) {
      const Element x = Element::basis(alg, a);
      const Element y = Element::basis(alg, b);
      if (d.apply(bracket(alg, x, y)) != bracket(alg, d.apply(x), y) + bracket(alg, x, d.apply(y))) return false;
    }
  return true;
}

namespace {

RationalVector flatten(const GradedLinearMap& d) {
  RationalVector v;
  const auto& a = d.minus_one();
  const auto& e = d.minus_two();
  for (std::size_t p = 0; p < a.rows(); ++p)
    for (std::size_t q = 0; q < a.cols(); ++q) v.push_back(a(p, q));
  for (std::size_t p = 0; p < e.rows(); ++p)
    for (std::size_t q = 0; q < e.cols(); ++q) v.push_back(e(p, q));
  return v;
}

}  // namespace

bool in_span(const DerivationSpace& space, const GradedLinearMap& d) {
  const RationalVector target = flatten(d);
  if (space.basis.empty()) {
    for (const auto& q : target)
      if (sgn(q) != 0) return false;
    return true;
  }
  RationalMatrix rows;
  for (const auto& b : space.basis) rows.push_row(flatten(b));
  const std::size_t r = rank(rows);
  rows.push_row(target);
  return rank(rows) == r;
}

GradedLinearMap commutator(const GradedLinearMap& d1, const GradedLinearMap& d2) {
  const GradedLinearMap ab = d1.after(d2);
  const GradedLinearMap ba = d2.after(d1);
  return GradedLinearMap(d1.source(), d1.target(), ab.minus_one() - ba.minus_one(), ab.minus_two() - ba.minus_two());
}

namespace {

void require_positive(std::size_t m, std::size_t n) {
  if (m == 0 || n == 0) throw PreconditionError("K_{m,n} needs m >= 1 and n >= 1");
}

std::vector<std::string> bipartite_vertices(std::size_t m, std::size_t n) {
  std::vector<std::string> v;
  for (std::size_t i = 1; i <= m; ++i) v.push_back("x" + std::to_string(i));
  for (std::size_t j = 1; j <= n; ++j) v.push_back("y" + std::to_string(j));
  return v;
}

}  // namespace

LabeledDigraph build_kmn_single_label(std::size_t m, std::size_t n) {
  require_positive(m, n);
  std::vector<NamedEdge> edges;
  for (std::size_t i = 1; i <= m; ++i)
    for (std::size_t j = 1; j <= n; ++j) edges.push_back({"x" + std::to_string(i), "y" + std::to_string(j), "u"});
  return LabeledDigraph(bipartite_vertices(m, n), edges);
}

LabeledDigraph build_kmn_distinct_labels(std::size_t m, std::size_t n) {
  require_positive(m, n);
  std::vector<NamedEdge> edges;
  for (std::size_t i = 1; i <= m; ++i)
    for (std::size_t j = 1; j <= n; ++j)
      edges.push_back({"x" + std::to_string(i), "y" + std::to_string(j),
                       "c" + std::to_string(i) + "_" + std::to_string(j)});
  return LabeledDigraph(bipartite_vertices(m, n), edges);
}

LabeledDigraph build_kmn(std::size_t m, std::size_t n, Labeling labeling) {
  return labeling == Labeling::Single ? build_kmn_single_label(m, n) : build_kmn_distinct_labels(m, n);
}

std::size_t kmn_dimension_formula(std::size_t m, std::size_t n, Labeling labeling) {
  require_positive(m, n);
  if (labeling == Labeling::Single) return (m + n) * (m + n + 1) / 2 + 1;
  if (m == 1 && n == 1)
    throw PreconditionError(
        "distinct-label formula needs max(m, n) >= 2: at m = n = 1 its elimination of the off-diagonal "
        "blocks has no second row or column to work with (der0 gives 4)");
  return m * m + n * n + m * m * n * n - m * n;
}

}  // namespace graphlie

#pragma once

#include <cstddef>
#include <vector>

#include "graphlie/graph.hpp"
#include "graphlie/lie_algebra.hpp"
#include "graphlie/matrix.hpp"
#include "graphlie/morphisms.hpp"

namespace graphlie {

/// Homogeneous linear system whose solutions are the degree-0 derivations.
///
/// Unknowns: the n x n vertex block A (column index p * n + q holds the
/// coefficient of x_p in D x_q) followed by the m x m label block E (column
/// n^2 + p * m + q, coefficient of c_p in D c_q). One row per vertex pair
/// i < j and label l, encoding the c_l coordinate of
///   D[x_i, x_j] - [D x_i, x_j] - [x_i, D x_j] = 0.
struct DerivationSystem {
  std::size_t n = 0;
  std::size_t m = 0;
  RationalMatrix constraints;

  std::size_t unknowns() const { return n * n + m * m; }
};

DerivationSystem derivation_system(const LieAlgebra& alg);

struct DerivationSpace {
  std::vector<GradedLinearMap> basis;
  std::size_t dimension = 0;
};

/// Der_0(alg) as the exact nullspace of derivation_system(alg).
DerivationSpace der0(const LieAlgebra& alg);

/// D[a,b] == [Da,b] + [a,Db] on every pair of basis vectors.
bool is_derivation(const GradedLinearMap& d);

/// Whether d lies in the span of the space's basis (exact rank test).
bool in_span(const DerivationSpace& space, const GradedLinearMap& d);

/// d1 d2 - d2 d1.
GradedLinearMap commutator(const GradedLinearMap& d1, const GradedLinearMap& d2);

enum class Labeling { Single, Distinct };

/// K_{m,n} with parts x1..xm and y1..yn, every edge directed x -> y.
/// Single: one label "u". Distinct: label "c<i>_<j>" on x_i -> y_j.
/// Throws PreconditionError when m or n is zero.
LabeledDigraph build_kmn_single_label(std::size_t m, std::size_t n);
LabeledDigraph build_kmn_distinct_labels(std::size_t m, std::size_t n);
LabeledDigraph build_kmn(std::size_t m, std::size_t n, Labeling labeling);

/// Closed forms claimed for dim Der_0(K_{m,n}):
///   single   (m+n)(m+n+1)/2 + 1
///   distinct m^2 + n^2 + m^2 n^2 - mn
/// The distinct-label form is rejected (PreconditionError) at m = n = 1,
/// where its derivation needs a second row or column; der0() gives 4 there.
///
/// Neither form agrees with der0() in general: the single-label form holds
/// only for m + n <= 3 and the distinct-label form only for {m, n} = {1, 2}.
/// They are kept verbatim as the values under test.
std::size_t kmn_dimension_formula(std::size_t m, std::size_t n, Labeling labeling);

}  // namespace graphlie

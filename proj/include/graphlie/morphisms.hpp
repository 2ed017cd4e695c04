#pragma once

#include <cstddef>
#include <optional>
#include <span>
#include <string>
#include <variant>
#include <vector>

#include "graphlie/graph.hpp"
#include "graphlie/lie_algebra.hpp"
#include "graphlie/matrix.hpp"

namespace graphlie {

/// Degree-0 linear map between stratified algebras, kept as its two diagonal
/// blocks. Column k of a block is the image of the k-th source basis vector
/// of that stratum.
class GradedLinearMap {
 public:
  /// Throws DimensionError unless minus_one is n_target x n_source and
  /// minus_two is m_target x m_source.
  GradedLinearMap(LieAlgebra source, LieAlgebra target, RationalMatrix minus_one, RationalMatrix minus_two);

  static GradedLinearMap identity(const LieAlgebra& alg);

  const LieAlgebra& source() const noexcept { return source_; }
  const LieAlgebra& target() const noexcept { return target_; }
  const RationalMatrix& minus_one() const noexcept { return minus_one_; }
  const RationalMatrix& minus_two() const noexcept { return minus_two_; }

  Element apply(const Element& v) const;

  /// this o first: apply `first`, then this map.
  GradedLinearMap after(const GradedLinearMap& first) const;

 private:
  LieAlgebra source_;
  LieAlgebra target_;
  RationalMatrix minus_one_;
  RationalMatrix minus_two_;
};

struct IsomorphismReport {
  bool blocks_invertible = false;
  bool bracket_preserved = false;
  std::optional<std::pair<std::size_t, std::size_t>> witness;  // source basis pair

  bool passed() const { return blocks_invertible && bracket_preserved; }
};

/// Checks invertibility of both blocks and f[a,b] = [f a, f b] on every pair
/// of source basis vectors.
IsomorphismReport is_graded_lie_isomorphism(const GradedLinearMap& f);

/// A map that passed is_graded_lie_isomorphism, with the graph it lands on.
struct VerifiedIsomorphism {
  GradedLinearMap map;
  LabeledDigraph target_graph;
};

/// A constructed map that failed verification.
struct Counterexample {
  GradedLinearMap candidate;
  LabeledDigraph target_graph;
  IsomorphismReport report;
};

using IsomorphismOutcome = std::variant<VerifiedIsomorphism, Counterexample>;

inline bool verified(const IsomorphismOutcome& o) { return std::holds_alternative<VerifiedIsomorphism>(o); }

/// Reverses the edge tail -> head and builds the sign-change map
///   tail -> -tail, other vertices fixed,
///   labels on other edges at the tail -> negated, remaining labels fixed,
/// then verifies it. Requires the edge to exist and its label to occur once
/// (PreconditionError otherwise).
IsomorphismOutcome reversal_isomorphism(const LabeledDigraph& g, std::size_t tail, std::size_t head);

/// Reverses every edge carrying `label`, building the same sign-change map
/// inside each component that holds the label. Requires the label to occur
/// at most once per connected component.
IsomorphismOutcome relabel_group_reversal(const LabeledDigraph& g, std::size_t label);

/// Reverses the given edges (indices into g.edges(), taken in ascending
/// order) one at a time through reversal_isomorphism and verifies the
/// composite. Requires g connected with all labels distinct.
IsomorphismOutcome orientation_isomorphism(const LabeledDigraph& g, std::span<const std::size_t> edges);

/// Candidate block matrices whose basis is the vertices/labels of a graph,
/// independent of its orientation.
struct CandidateMap {
  RationalMatrix minus_one;
  RationalMatrix minus_two;
};

struct OrientationHit {
  unsigned long long mask = 0;  // bit i set: edge i of g reversed
  std::size_t candidate = 0;
  LabeledDigraph oriented;
  GradedLinearMap map;
};

inline constexpr std::size_t kMaxOrientationSearchEdges = 8;

/// Sweeps the 2^|E| orientations of g in mask order and returns the first
/// (orientation, candidate) pair that is a graded isomorphism from
/// `source`. Throws PreconditionError when |E| exceeds the search budget.
std::optional<OrientationHit> find_isomorphism_by_orientation_search(const LieAlgebra& source,
                                                                     const LabeledDigraph& g,
                                                                     std::span<const CandidateMap> candidates);

}  // namespace graphlie

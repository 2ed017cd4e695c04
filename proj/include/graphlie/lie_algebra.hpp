#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "graphlie/graph.hpp"
#include "graphlie/matrix.hpp"

namespace graphlie {

/// Stratified 2-step nilpotent algebra g = g_{-1} + g_{-2} with a basis of
/// "vertices" spanning g_{-1} and "labels" spanning g_{-2}. The bracket of
/// two vertices is [x_i, x_j] = sum_l s(i, j, l) c_l; every bracket involving
/// a label vanishes.
///
/// The constructor stores whatever tensor it is given so that malformed
/// tensors can be inspected by verify_axioms(). Algebras produced by
/// build_lie() always satisfy antisymmetry, at most one label per pair, and
/// stratified generation.
class LieAlgebra {
 public:
  LieAlgebra() = default;
  LieAlgebra(std::vector<std::string> vertices, std::vector<std::string> labels,
             std::vector<std::int8_t> structure);

  std::size_t n() const noexcept { return vertices_.size(); }
  std::size_t m() const noexcept { return labels_.size(); }
  std::size_t dim() const noexcept { return n() + m(); }

  const std::vector<std::string>& vertices() const noexcept { return vertices_; }
  const std::vector<std::string>& labels() const noexcept { return labels_; }

  /// Basis name for coordinate k (vertices first, then labels).
  const std::string& basis_name(std::size_t k) const;

  int s(std::size_t i, std::size_t j, std::size_t l) const { return structure_[(i * n() + j) * m() + l]; }
  void set_s(std::size_t i, std::size_t j, std::size_t l, int value);

  friend bool operator==(const LieAlgebra&, const LieAlgebra&) = default;

 private:
  std::vector<std::string> vertices_;
  std::vector<std::string> labels_;
  std::vector<std::int8_t> structure_;  // n * n * m
};

/// Coordinates over the concatenated basis (vertices, then labels).
struct Element {
  RationalVector coords;

  static Element zero(const LieAlgebra& alg);
  static Element basis(const LieAlgebra& alg, std::size_t k);

  bool is_zero() const;
  Element operator+(const Element& rhs) const;
  Element operator-(const Element& rhs) const;
  Element operator*(const Rational& c) const;
  friend bool operator==(const Element&, const Element&) = default;
};

/// Lie(G): one basis vector per vertex and per label, [x_i, x_j] = +c when
/// x_i -> x_j carries c, -c when x_j -> x_i carries c, 0 otherwise.
LieAlgebra build_lie(const LabeledDigraph& g);

/// Bilinear extension of the structure tensor. Throws DimensionError when an
/// operand is not sized for `alg`.
Element bracket(const LieAlgebra& alg, const Element& u, const Element& v);

struct AxiomCheck {
  std::string name;
  bool passed = true;
  std::vector<std::size_t> witness;  // basis indices of the first failing tuple
  std::string detail;
};

struct AxiomReport {
  AxiomCheck antisymmetry;
  AxiomCheck jacobi;
  AxiomCheck two_step;
  AxiomCheck stratified;

  bool all_passed() const {
    return antisymmetry.passed && jacobi.passed && two_step.passed && stratified.passed;
  }
  std::vector<const AxiomCheck*> checks() const { return {&antisymmetry, &jacobi, &two_step, &stratified}; }
};

/// Exhaustive check over basis pairs and triples of antisymmetry, Jacobi,
/// [[a,b],c] = 0, and [g_{-1}, g_{-1}] = g_{-2}. Stratified generation is
/// vacuous when m = 0.
AxiomReport verify_axioms(const LieAlgebra& alg);

/// Inverse of build_lie(). Each vertex pair (i < j) with a nonzero constant
/// becomes one edge, oriented so that its constant is +1. Edges are ordered
/// by (i, j). Throws GraphError naming the offending pair when the tensor is
/// not graph-compatible.
LabeledDigraph graph_from_algebra(const LieAlgebra& alg);

struct Stratification {
  std::vector<std::string> minus_one;
  std::vector<std::string> minus_two;
};

Stratification stratification(const LieAlgebra& alg);

}  // namespace graphlie

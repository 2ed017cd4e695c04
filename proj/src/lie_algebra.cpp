#include "graphlie/lie_algebra.hpp"

#include <sstream>

#include "graphlie/errors.hpp"

namespace graphlie {

LieAlgebra::LieAlgebra(std::vector<std::string> vertices, std::vector<std::string> labels,
                       std::vector<std::int8_t> structure)
    : vertices_(std::move(vertices)), labels_(std::move(labels)), structure_(std::move(structure)) {
  if (structure_.size() != n() * n() * m())
    throw DimensionError("structure tensor must hold n*n*m = " + std::to_string(n() * n() * m()) + " entries");
}

const std::string& LieAlgebra::basis_name(std::size_t k) const {
  return k < n() ? vertices_.at(k) : labels_.at(k - n());
}

void LieAlgebra::set_s(std::size_t i, std::size_t j, std::size_t l, int value) {
  structure_.at((i * n() + j) * m() + l) = static_cast<std::int8_t>(value);
}

Element Element::zero(const LieAlgebra& alg) { return {RationalVector(alg.dim())}; }

Element Element::basis(const LieAlgebra& alg, std::size_t k) {
  Element e = zero(alg);
  e.coords.at(k) = 1;
  return e;
}

bool Element::is_zero() const {
  for (const auto& q : coords)
    if (sgn(q) != 0) return false;
  return true;
}

Element Element::operator+(const Element& rhs) const {
  if (coords.size() != rhs.coords.size()) throw DimensionError("element sizes differ");
  Element out = *this;
  for (std::size_t k = 0; k < coords.size(); ++k) out.coords[k] += rhs.coords[k];
  return out;
}

Element Element::operator-(const Element& rhs) const {
  if (coords.size() != rhs.coords.size()) throw DimensionError("element sizes differ");
  Element out = *this;
  for (std::size_t k = 0; k < coords.size(); ++k) out.coords[k] -= rhs.coords[k];
  return out;
}

Element Element::operator*(const Rational& c) const {
  Element out = *this;
  for (auto& q : out.coords) q *= c;
  return out;
}

LieAlgebra build_lie(const LabeledDigraph& g) {
  const std::size_t n = g.vertex_count();
  const std::size_t m = g.label_count();
  LieAlgebra alg(g.vertices(), g.labels(), std::vector<std::int8_t>(n * n * m, 0));
  for (const auto& e : g.edges()) {
    alg.set_s(e.tail, e.head, e.label, 1);
    alg.set_s(e.head, e.tail, e.label, -1);
  }
  return alg;
}

Element bracket(const LieAlgebra& alg, const Element& u, const Element& v) {
  if (u.coords.size() != alg.dim() || v.coords.size() != alg.dim())
    throw DimensionError("bracket operands must have " + std::to_string(alg.dim()) + " coordinates");
  Element out = Element::zero(alg);
  const std::size_t n = alg.n();
  for (std::size_t i = 0; i < n; ++i) {
    if (sgn(u.coords[i]) == 0) continue;
    for (std::size_t j = 0; j < n; ++j) {
      if (sgn(v.coords[j]) == 0) continue;
      const Rational w = u.coords[i] * v.coords[j];
      for (std::size_t l = 0; l < alg.m(); ++l)
        if (const int s = alg.s(i, j, l)) out.coords[n + l] += s * w;
    }
  }
  return out;
}

namespace {

std::string tuple_names(const LieAlgebra& alg, const std::vector<std::size_t>& idx) {
  std::ostringstream out;
  out << '(';
  for (std::size_t k = 0; k < idx.size(); ++k) out << (k ? ", " : "") << alg.basis_name(idx[k]);
  out << ')';
  return out.str();
}

void fail(AxiomCheck& check, const LieAlgebra& alg, std::vector<std::size_t> witness) {
  check.passed = false;
  check.detail = "fails at " + tuple_names(alg, witness);
  check.witness = std::move(witness);
}

}  // namespace

AxiomReport verify_axioms(const LieAlgebra& alg) {
  AxiomReport report;
  report.antisymmetry.name = "antisymmetry";
  report.jacobi.name = "jacobi";
  report.two_step.name = "two-step nilpotency";
  report.stratified.name = "stratified generation";

  const std::size_t d = alg.dim();
  std::vector<Element> basis;
  basis.reserve(d);
  for (std::size_t k = 0; k < d; ++k) basis.push_back(Element::basis(alg, k));

  // [a, b] for every ordered pair, reused by the triple checks.
  std::vector<Element> table;
  table.reserve(d * d);
  for (std::size_t a = 0; a < d; ++a)
    for (std::size_t b = 0; b < d; ++b) table.push_back(bracket(alg, basis[a], basis[b]));
  const auto br = [&](std::size_t a, std::size_t b) -> const Element& { return table[a * d + b]; };

  for (std::size_t a = 0; a < d && report.antisymmetry.passed; ++a)
    for (std::size_t b = a; b < d; ++b)
      if (!(br(a, b) + br(b, a)).is_zero()) {
        fail(report.antisymmetry, alg, a == b ? std::vector<std::size_t>{a} : std::vector<std::size_t>{a, b});
        break;
      }

  for (std::size_t a = 0; a < d && report.jacobi.passed; ++a)
    for (std::size_t b = 0; b < d && report.jacobi.passed; ++b)
      for (std::size_t c = 0; c < d; ++c) {
        const Element sum = bracket(alg, br(a, b), basis[c]) + bracket(alg, br(b, c), basis[a]) +
                            bracket(alg, br(c, a), basis[b]);
        if (!sum.is_zero()) {
          fail(report.jacobi, alg, {a, b, c});
          break;
        }
      }

  for (std::size_t a = 0; a < d && report.two_step.passed; ++a)
    for (std::size_t b = 0; b < d && report.two_step.passed; ++b)
      for (std::size_t c = 0; c < d; ++c)
        if (!bracket(alg, br(a, b), basis[c]).is_zero()) {
          fail(report.two_step, alg, {a, b, c});
          break;
        }

  if (alg.m() > 0) {
    RationalMatrix span;
    for (std::size_t i = 0; i < alg.n(); ++i)
      for (std::size_t j = i + 1; j < alg.n(); ++j) {
        const Element& e = br(i, j);
        span.push_row(std::span<const Rational>(e.coords).subspan(alg.n()));
      }
    const std::size_t r = span.rows() == 0 ? 0 : rank(span);
    if (r != alg.m()) {
      report.stratified.passed = false;
      report.stratified.detail =
          "[g-1, g-1] has dimension " + std::to_string(r) + ", expected " + std::to_string(alg.m());
    }
  } else {
    report.stratified.detail = "vacuous (no labels)";
  }
  return report;
}

LabeledDigraph graph_from_algebra(const LieAlgebra& alg) {
  const std::size_t n = alg.n();
  std::vector<NamedEdge> edges;
  std::vector<bool> used(alg.m(), false);
  const auto pair_name = [&](std::size_t i, std::size_t j) {
    return "(" + alg.vertices()[i] + ", " + alg.vertices()[j] + ")";
  };
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t l = 0; l < alg.m(); ++l)
      if (alg.s(i, i, l) != 0) throw GraphError("nonzero constant on diagonal pair " + pair_name(i, i));
    for (std::size_t j = i + 1; j < n; ++j) {
      std::optional<std::size_t> label;
      for (std::size_t l = 0; l < alg.m(); ++l) {
        const int s = alg.s(i, j, l);
        if (s == 0 && alg.s(j, i, l) == 0) continue;
        if (alg.s(j, i, l) != -s) throw GraphError("structure constants not antisymmetric on pair " + pair_name(i, j));
        if (s != 1 && s != -1) throw GraphError("structure constant outside {-1, 0, 1} on pair " + pair_name(i, j));
        if (label) throw GraphError("two labels on pair " + pair_name(i, j));
        label = l;
      }
      if (!label) continue;
      used[*label] = true;
      const auto& a = alg.vertices()[i];
      const auto& b = alg.vertices()[j];
      const auto& c = alg.labels()[*label];
      if (alg.s(i, j, *label) == 1)
        edges.push_back({a, b, c});
      else
        edges.push_back({b, a, c});
    }
  }
  for (std::size_t l = 0; l < alg.m(); ++l)
    if (!used[l]) throw GraphError("label '" + alg.labels()[l] + "' is not a bracket of two vertices");
  return LabeledDigraph(alg.vertices(), alg.labels(), edges);
}

Stratification stratification(const LieAlgebra& alg) { return {alg.vertices(), alg.labels()}; }

}  // namespace graphlie

#include <gtest/gtest.h>

#include <map>

#include "graphlie/catalog.hpp"
#include "graphlie/derivations.hpp"
#include "graphlie/errors.hpp"
#include "support.hpp"

using namespace graphlie;

namespace {

// dim Der_0(K_{m,n}) from an independent sympy nullspace computation.
const std::map<std::pair<std::size_t, std::size_t>, std::pair<std::size_t, std::size_t>> kFrozenKmn = {
    {{1, 1}, {4, 4}},   {{1, 2}, {7, 7}},   {{1, 3}, {12, 13}}, {{1, 4}, {19, 21}},
    {{2, 1}, {7, 7}},   {{2, 2}, {12, 8}},  {{2, 3}, {19, 13}}, {{2, 4}, {28, 20}},
    {{3, 1}, {12, 13}}, {{3, 2}, {19, 13}}, {{3, 3}, {28, 18}}, {{3, 4}, {39, 25}},
    {{4, 1}, {19, 21}}, {{4, 2}, {28, 20}}, {{4, 3}, {39, 25}}, {{4, 4}, {52, 32}},
};

std::size_t der0_dim(const LabeledDigraph& g) { return der0(build_lie(g)).dimension; }

}  // namespace

TEST(Der0, Heisenberg) { EXPECT_EQ(der0_dim(LabeledDigraph({"a", "b"}, {{"a", "b", "u"}})), 4u); }

TEST(Der0, SystemShape) {
  const DerivationSystem sys = derivation_system(build_lie(build_kmn_single_label(2, 3)));
  EXPECT_EQ(sys.unknowns(), 25u + 1u);
  EXPECT_EQ(sys.constraints.rows(), 10u);
  EXPECT_EQ(sys.constraints.cols(), 26u);
}

TEST(Der0, AbelianAlgebraIsGlN) {
  EXPECT_EQ(der0_dim(LabeledDigraph({"a", "b", "c"}, {})), 9u);
}

TEST(Der0, FrozenKmnTable) {
  for (const auto& [mn, dims] : kFrozenKmn) {
    const auto [m, n] = mn;
    EXPECT_EQ(der0_dim(build_kmn_single_label(m, n)), dims.first) << "single " << m << "," << n;
    EXPECT_EQ(der0_dim(build_kmn_distinct_labels(m, n)), dims.second) << "distinct " << m << "," << n;
  }
}

TEST(Der0, K23SingleLabel) {
  // The closed form gives 16; the solver and the independent oracle agree on 19.
  EXPECT_EQ(kmn_dimension_formula(2, 3, Labeling::Single), 16u);
  EXPECT_EQ(der0_dim(build_kmn_single_label(2, 3)), 19u);
}

TEST(Der0, K22DistinctLabels) {
  EXPECT_EQ(kmn_dimension_formula(2, 2, Labeling::Distinct), 20u);
  EXPECT_EQ(der0_dim(build_kmn_distinct_labels(2, 2)), 8u);
}

TEST(Der0, FormulaGuard) {
  EXPECT_THROW(kmn_dimension_formula(1, 1, Labeling::Distinct), PreconditionError);
  EXPECT_EQ(der0_dim(build_kmn_distinct_labels(1, 1)), 4u);
  EXPECT_THROW(kmn_dimension_formula(0, 3, Labeling::Single), PreconditionError);
}

TEST(Der0, FormulaAgreesOnSmallCases) {
  for (auto [m, n] : {std::pair<std::size_t, std::size_t>{1, 1}, {1, 2}, {2, 1}})
    EXPECT_EQ(kmn_dimension_formula(m, n, Labeling::Single), der0_dim(build_kmn_single_label(m, n)));
  EXPECT_EQ(kmn_dimension_formula(1, 2, Labeling::Distinct), der0_dim(build_kmn_distinct_labels(1, 2)));
  EXPECT_EQ(kmn_dimension_formula(2, 1, Labeling::Distinct), der0_dim(build_kmn_distinct_labels(2, 1)));
}

TEST(Kmn, Builders) {
  const LabeledDigraph k11 = build_kmn_single_label(1, 1);
  EXPECT_EQ(k11.edge_count(), 1u);
  EXPECT_EQ(build_kmn_distinct_labels(1, 1).edges(), k11.edges());
  const LabeledDigraph k23 = build_kmn_single_label(2, 3);
  EXPECT_EQ(k23.vertex_count(), 5u);
  EXPECT_EQ(k23.edge_count(), 6u);
  EXPECT_EQ(k23.label_count(), 1u);
  const LabeledDigraph d22 = build_kmn_distinct_labels(2, 2);
  EXPECT_EQ(d22.edge_count(), 4u);
  EXPECT_EQ(d22.label_count(), 4u);
  const LabeledDigraph star = build_kmn_distinct_labels(3, 1);
  EXPECT_EQ(neighborhood(star, star.vertex_index("y1")).size(), 3u);
  EXPECT_EQ(star.label_count(), 3u);
  EXPECT_THROW(build_kmn(0, 1, Labeling::Single), PreconditionError);
}

TEST(Der0, SymmetricInMN) {
  for (std::size_t m = 1; m <= 3; ++m)
    for (std::size_t n = 1; n <= 3; ++n)
      EXPECT_EQ(der0_dim(build_kmn_single_label(m, n)), der0_dim(build_kmn_single_label(n, m)));
}

TEST(Der0, FreeAlgebrasHaveSquareDimension) {
  for (std::size_t p = 2; p <= 4; ++p) EXPECT_EQ(der0_dim(catalog::complete_free_graph(p)), p * p);
}

TEST(DerivationProperty, BasisElementsAreDerivations) {
  for (const auto& name : {"g5_1", "g5_2", "g6_1", "g6_2", "heis_x_heis", "example1_K4"}) {
    const DerivationSpace space = der0(build_lie(catalog::get(name).graph));
    for (const auto& d : space.basis) EXPECT_TRUE(is_derivation(d)) << name;
  }
}

TEST(DerivationProperty, NonDerivationDetected) {
  const LieAlgebra h = build_lie(LabeledDigraph({"a", "b"}, {{"a", "b", "u"}}));
  const GradedLinearMap scale_a(h, h, RationalMatrix{{1, 0}, {0, 0}}, RationalMatrix{{0}});
  EXPECT_FALSE(is_derivation(scale_a));
  EXPECT_FALSE(in_span(der0(h), scale_a));
  const GradedLinearMap grading(h, h, RationalMatrix::identity(2), RationalMatrix{{2}});
  EXPECT_TRUE(is_derivation(grading));
  EXPECT_TRUE(in_span(der0(h), grading));
}

TEST(DerivationProperty, ClosedUnderCommutator) {
  for (const auto& name : {"g5_2", "g6_2", "K3_free"}) {
    const DerivationSpace space = der0(build_lie(catalog::get(name).graph));
    for (std::size_t i = 0; i < space.basis.size(); ++i)
      for (std::size_t j = i + 1; j < space.basis.size(); ++j)
        EXPECT_TRUE(in_span(space, commutator(space.basis[i], space.basis[j]))) << name << " " << i << "," << j;
  }
}

TEST(DerivationProperty, OrientationInvariant) {
  for (const auto& [name, g] : fixtures::small_connected_corpus()) {
    const std::size_t base = der0_dim(g);
    for (unsigned long long mask = 1; mask < (1ULL << g.edge_count()); ++mask)
      ASSERT_EQ(der0_dim(reorient(g, mask)), base) << name << " mask " << mask;
  }
}

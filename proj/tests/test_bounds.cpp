#include "qchsh/bounds.hpp"

#include <cmath>

#include <gtest/gtest.h>

#include "qchsh/errors.hpp"

namespace qchsh {
namespace {

const double kRoot2 = std::sqrt(2.0);

CorrelationMatrix bell_t() {
  CorrelationMatrix t{2, RealMatrix::Zero(3, 3)};
  t.entries.diagonal() << 1, -1, 1;
  return t;
}

TEST(TopTwoSingular, Examples) {
  auto [l1, l2] = top_two_singular(bell_t());
  EXPECT_NEAR(l1, 1.0, 1e-15);
  EXPECT_NEAR(l2, 1.0, 1e-15);

  std::tie(l1, l2) = top_two_singular(CorrelationMatrix{3, RealMatrix::Zero(8, 8)});
  EXPECT_EQ(l1, 0.0);
  EXPECT_EQ(l2, 0.0);

  for (int d = 2; d <= 8; ++d) {
    std::tie(l1, l2) = top_two_singular(correlation_matrix(ghz_state(d), GellMannBasis(d)));
    EXPECT_NEAR(l1, 4.0 / (d * d), 1e-13);
    EXPECT_NEAR(l2, 4.0 / (d * d), 1e-13);
  }
}

TEST(TopTwoSingular, RankOneCountsMultiplicityOnce) {
  CorrelationMatrix t{2, RealMatrix::Zero(3, 3)};
  t.entries(0, 1) = 0.5;
  const auto [l1, l2] = top_two_singular(t);
  EXPECT_NEAR(l1, 0.25, 1e-15);
  EXPECT_EQ(l2, 0.0);
}

TEST(ChshBounds, QutritGhz) {
  const BoundsReport b = chsh_bounds(correlation_matrix(ghz_state(3), GellMannBasis(3)));
  EXPECT_NEAR(b.lambda1 + b.lambda2, 8.0 / 9.0, 1e-13);
  EXPECT_NEAR(b.lower, kRoot2, 1e-12);
  EXPECT_NEAR(b.lower, 1.414214, 1e-6);
  EXPECT_NEAR(b.upper, 4.0 / 3.0 * kRoot2, 1e-12);
  EXPECT_NEAR(b.upper, 1.885618, 1e-6);
  EXPECT_TRUE(b.upper_improves_tsirelson());
}

TEST(ChshBounds, QubitGhzCoincide) {
  const BoundsReport b = chsh_bounds(correlation_matrix(ghz_state(2), GellMannBasis(2)));
  EXPECT_NEAR(b.lower, 2.0 * kRoot2, 1e-12);
  EXPECT_NEAR(b.upper, 2.0 * kRoot2, 1e-12);
  EXPECT_FALSE(b.upper_improves_tsirelson());
  EXPECT_EQ(b.tsirelson, kTsirelson);
}

TEST(ChshBounds, ZeroMatrix) {
  const BoundsReport b = chsh_bounds(CorrelationMatrix{4, RealMatrix::Zero(15, 15)});
  EXPECT_EQ(b.lower, 0.0);
  EXPECT_EQ(b.upper, 0.0);
}

TEST(ChshBounds, OrderedForRandomStates) {
  for (int d = 2; d <= 6; ++d) {
    const GellMannBasis basis(d);
    for (std::uint64_t seed = 0; seed < 25; ++seed) {
      const BoundsReport b = chsh_bounds(correlation_matrix(random_two_qudit_state(d, seed), basis));
      EXPECT_GE(b.lambda1, b.lambda2);
      EXPECT_GE(b.lambda2, 0.0);
      EXPECT_LE(b.lower, b.upper + 1e-12);
      if (d == 2) EXPECT_NEAR(b.lower, b.upper, 1e-12);
    }
  }
}

TEST(Horodecki, Values) {
  EXPECT_NEAR(horodecki_two_qubit(bell_t()), 2.0 * kRoot2, 1e-14);
  EXPECT_EQ(horodecki_two_qubit(CorrelationMatrix{2, RealMatrix::Zero(3, 3)}), 0.0);
  const GellMannBasis basis(2);
  for (std::uint64_t seed = 0; seed < 20; ++seed) {
    const CorrelationMatrix t = correlation_matrix(random_two_qudit_state(2, seed), basis);
    const BoundsReport b = chsh_bounds(t);
    EXPECT_NEAR(horodecki_two_qubit(t), b.lower, 1e-12);
    EXPECT_NEAR(horodecki_two_qubit(t), b.upper, 1e-12);
  }
  try {
    horodecki_two_qubit(CorrelationMatrix{3, RealMatrix::Zero(8, 8)});
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.kind(), ErrorKind::WrongDimension);
  }
}

TEST(GhzClosedForm, Pattern) {
  RealVector d2(3);
  d2 << 1, -1, 1;
  EXPECT_EQ(ghz_correlation_closed_form(2).entries, RealMatrix(d2.asDiagonal()));
  RealVector d3(8);
  d3 << 2, 2, 2, -2, -2, -2, 2, 2;
  d3 /= 3.0;
  EXPECT_LT((ghz_correlation_closed_form(3).entries - RealMatrix(d3.asDiagonal())).cwiseAbs().maxCoeff(),
            1e-15);
  EXPECT_THROW(ghz_correlation_closed_form(1), Error);
}

TEST(GhzBoundValue, Values) {
  EXPECT_NEAR(ghz_bound_value(2), 2.828427, 1e-6);
  EXPECT_NEAR(ghz_bound_value(3), 1.885618, 1e-6);
  EXPECT_NEAR(ghz_bound_value(5), 2.262742, 1e-6);
  EXPECT_NEAR(ghz_bound_value(7), 12.0 * kRoot2 / 7.0, 1e-14);
  for (int d = 2; d <= 12; ++d) {
    EXPECT_NEAR(ghz_bound_value(d), chsh_bounds(ghz_correlation_closed_form(d)).upper, 1e-12);
    if (d % 2 == 1) EXPECT_LT(ghz_bound_value(d), kTsirelson);
  }
  EXPECT_THROW(ghz_bound_value(1), Error);
}

}  // namespace
}  // namespace qchsh

#include <gtest/gtest.h>

#include "property_suite.hpp"

namespace {
void expect_holds(const props::Outcome& r) {
  EXPECT_GE(r.cases, props::kCases) << r.name;
  EXPECT_EQ(r.failures, 0) << r.name << ": first counterexample " << r.first_failure;
}
}  // namespace

TEST(Properties, FactorizationRoundTrip) { expect_holds(props::factorization_round_trip()); }
TEST(Properties, FactorizationSeedIndependent) { expect_holds(props::factorization_seed_independent()); }
TEST(Properties, DiscriminantDetectsRepeatedFactors) { expect_holds(props::discriminant_detects_repeated_factors()); }
TEST(Properties, NecklaceIdentity) { expect_holds(props::necklace_identity()); }
TEST(Properties, CofactorLiftIndependence) { expect_holds(props::lift_independence()); }
TEST(Properties, CriterionAgreesWithMaximalOrder) { expect_holds(props::criterion_matches_maximal_order()); }
TEST(Properties, SumEfEqualsDegree) { expect_holds(props::sum_ef_equals_degree()); }
TEST(Properties, NormMultiplicative) { expect_holds(props::norm_multiplicative()); }
TEST(Properties, RamificationIffDividesDiscriminant) { expect_holds(props::ramification_iff_divides_discriminant()); }
TEST(Properties, FamilyDiscriminantClosedForm) { expect_holds(props::family_discriminant_closed_form()); }

#include <gtest/gtest.h>

#include "descent/errors.hpp"
#include "descent/ideals.hpp"
#include "helpers.hpp"

using namespace descent;
using testing_helpers::P;
using testing_helpers::Ps;
using testing_helpers::xyz;

namespace {

const char* kE83 = "z^2+x^3+y^5+y^3*z";

IdealPresentation ideal(const RingPtr& R, const std::vector<std::string>& gens) {
  return IdealPresentation(R, Ps(R, gens));
}

}  // namespace

TEST(IdealPresentation, NeedsAGenerator) {
  EXPECT_THROW(IdealPresentation(xyz(2), {}), UsageError);
}

TEST(HypersurfaceGerm, Validation) {
  auto R = xyz(2);
  EXPECT_THROW(HypersurfaceGerm(Polynomial(R)), UsageError);
  EXPECT_THROW(HypersurfaceGerm(P(R, "x+1")), UsageError);
  HypersurfaceGerm g(P(R, kE83));
  EXPECT_EQ(g.dim(), 2u);
  EXPECT_EQ(g.p(), 2u);
}

TEST(JacobianIdeal, NondescentExample) {
  auto R = xyz(2);
  HypersurfaceGerm g(P(R, kE83));
  IdealPresentation J = jacobian_ideal(g);
  ASSERT_EQ(J.generators().size(), 4u);
  EXPECT_EQ(J.generators()[0], P(R, "x^2"));
  EXPECT_EQ(J.generators()[1], P(R, "y^4+y^2*z"));
  EXPECT_EQ(J.generators()[2], P(R, "y^3"));
  EXPECT_EQ(J.generators()[3], g.equation());
}

TEST(JacobianIdeal, E71) {
  auto R = xyz(2);
  HypersurfaceGerm g(P(R, "z^2+x^3+x*y^3+x^2*y*z"));
  auto gens = jacobian_ideal(g).generators();
  EXPECT_EQ(gens[0], P(R, "x^2+y^3"));
  EXPECT_EQ(gens[1], P(R, "x*y^2+x^2*z"));
  EXPECT_EQ(gens[2], P(R, "x^2*y"));
}

TEST(JacobianIdeal, PthPowerInOneVariable) {
  auto R = make_ring(PrimeChar(3), {"x"});
  HypersurfaceGerm g(P(R, "x^3"));
  auto gens = jacobian_ideal(g).generators();
  ASSERT_EQ(gens.size(), 2u);
  EXPECT_TRUE(gens[0].is_zero());
  EXPECT_EQ(gens[1], P(R, "x^3"));
  EXPECT_EQ(g.dim(), 0u);
}

TEST(BracketIdeal, NondescentExample) {
  auto R = xyz(2);
  HypersurfaceGerm g(P(R, kE83));
  auto gens = bracket_ideal(jacobian_ideal(g), g).generators();
  ASSERT_EQ(gens.size(), 4u);
  EXPECT_EQ(gens[0], P(R, "x^4"));
  EXPECT_EQ(gens[1], P(R, "y^8+y^4*z^2"));
  EXPECT_EQ(gens[2], P(R, "y^6"));
  EXPECT_EQ(gens[3], g.equation());
}

TEST(BracketIdeal, MonomialGeneratorsSquare) {
  auto R = xyz(2);
  HypersurfaceGerm g(P(R, "z^2+x*y"));
  auto gens = bracket_ideal(ideal(R, {"x", "y", "z^2+x*y"}), g).generators();
  ASSERT_EQ(gens.size(), 3u);
  EXPECT_EQ(gens[0], P(R, "x^2"));
  EXPECT_EQ(gens[1], P(R, "y^2"));
}

TEST(BracketIdeal, TwiceEqualsFourth) {
  auto R = xyz(2);
  HypersurfaceGerm g(P(R, kE83));
  IdealPresentation J = jacobian_ideal(g);
  auto twice = bracket_ideal(bracket_ideal(J, g), g).generators();
  auto fourth = bracket_ideal(J, g, 2).generators();
  ASSERT_EQ(twice.size(), fourth.size());
  for (std::size_t i = 0; i < twice.size(); ++i) EXPECT_EQ(twice[i], fourth[i]);
  EXPECT_EQ(fourth[0], P(R, "x^8"));
}

TEST(BracketIdeal, EquationMustLieInIdeal) {
  auto R = xyz(2);
  HypersurfaceGerm g(P(R, "z^2+x*y"));
  EXPECT_THROW(bracket_ideal(ideal(R, {"x", "y"}), g), UsageError);
  // Membership rather than literal presence is what counts.
  EXPECT_NO_THROW(bracket_ideal(ideal(R, {"x", "z^2"}), g));
}

TEST(BracketIdeal, GeneratorsLieInOriginalIdeal) {
  auto R = xyz(3);
  HypersurfaceGerm g(P(R, "z^2+x^3+y^4+x^2*y^2"));
  IdealPresentation J = jacobian_ideal(g);
  IdealPresentation Jp = bracket_ideal(J, g);
  for (const auto& b : Jp.generators()) EXPECT_TRUE(contains(J, b));
}

TEST(LocalLength, Examples) {
  auto R = xyz(2);
  EXPECT_EQ(local_length(ideal(R, {"x", "y", "z"})), QuotientLength::finite(1));
  HypersurfaceGerm g(P(R, kE83));
  IdealPresentation J = jacobian_ideal(g);
  EXPECT_EQ(local_length(J), QuotientLength::finite(10));
  EXPECT_EQ(local_length(bracket_ideal(J, g)), QuotientLength::finite(44));
}

TEST(LocalLength, UnitAndInfinite) {
  auto R = xyz(2);
  EXPECT_EQ(local_length(ideal(R, {"1+x", "y"})), QuotientLength::finite(0));
  EXPECT_FALSE(local_length(ideal(R, {"x*y"})).is_finite());
  // Globally (x-1) contributes another point; locally it is a unit.
  EXPECT_EQ(local_length(ideal(R, {"x^2-x", "y", "z"})), QuotientLength::finite(1));
}

TEST(LocalLength, MonotoneOnNestedIdeals) {
  auto R = xyz(2);
  auto small = ideal(R, {"x^4", "y^3", "z^2"});
  auto mid = ideal(R, {"x^4", "y^3", "z^2", "x^2*y"});
  auto big = ideal(R, {"x^2", "y^2", "z^2"});
  const auto a = local_length(small).value(), b = local_length(mid).value(),
             c = local_length(big).value();
  EXPECT_GE(a, b);
  EXPECT_GE(b, c);
  EXPECT_EQ(c, 8u);
}

TEST(Contains, Examples) {
  auto R = xyz(2);
  EXPECT_TRUE(contains(ideal(R, {"x"}), Polynomial(R)));
  EXPECT_FALSE(contains(ideal(R, {"x^2+y^3", "y^4", "z^2"}), P(R, "x*y^2+x^2*z")));
  EXPECT_TRUE(contains(ideal(R, {"x"}), P(R, "x+x*y")));
  EXPECT_TRUE(contains(ideal(R, {"x+x*y"}), P(R, "x")));  // 1+y is a unit locally
}

TEST(Contains, DFamilyFzNotInIz) {
  auto R = xyz(2);
  for (unsigned m = 2; m <= 6; ++m) {
    for (unsigned r = 1; r < m; ++r) {
      const std::string ym = "y^" + std::to_string(m);
      const std::string ymr = "y^" + std::to_string(m - r);
      HypersurfaceGerm g(P(R, "z^2+x^2*y+x*" + ym + "+x*" + ymr + "*z"));
      const Polynomial& f = g.equation();
      IdealPresentation Iz(R, {partial_derivative(f, 0), partial_derivative(f, 1), f});
      EXPECT_FALSE(contains(Iz, P(R, "x*" + ymr))) << "m=" << m << " r=" << r;
    }
  }
}

TEST(IsParameterIdeal, E71Permutations) {
  auto R = xyz(2);
  HypersurfaceGerm g(P(R, "z^2+x^3+x*y^3+x^2*y*z"));
  const Polynomial& f = g.equation();
  auto d = [&](std::size_t i) { return partial_derivative(f, i); };
  EXPECT_TRUE(is_parameter_ideal(ideal(R, {"x", "y", "z"})));
  EXPECT_FALSE(is_parameter_ideal(IdealPresentation(R, {d(1), d(2), f})));
  IdealPresentation Iy(R, {d(0), d(2), f});
  EXPECT_TRUE(is_parameter_ideal(Iy));
  EXPECT_EQ(local_length(Iy), QuotientLength::finite(16));
  EXPECT_FALSE(is_parameter_ideal(ideal(R, {"1+x"})));
}

TEST(TruncationOracle, Examples) {
  auto R = xyz(2);
  EXPECT_EQ(truncation_length_oracle(ideal(R, {"x", "y", "z"})).length, 1u);
  HypersurfaceGerm g(P(R, kE83));
  EXPECT_EQ(truncation_length_oracle(jacobian_ideal(g)).length, 10u);
  EXPECT_EQ(truncation_length_oracle(ideal(R, {"x^2", "y^2", "z^2"})).length, 8u);
}

TEST(TruncationOracle, UnstableWhenInfinite) {
  auto R = xyz(2);
  OracleResult r = truncation_length_oracle(ideal(R, {"x", "y"}), 20);
  EXPECT_FALSE(r.stable());
  EXPECT_EQ(r.degree_reached, 20u);
}

TEST(TruncationOracle, UnstableWhenCapTooSmall) {
  auto R = xyz(2);
  OracleResult r = truncation_length_oracle(ideal(R, {"x^9", "y", "z"}), 5);
  EXPECT_FALSE(r.stable());
  EXPECT_EQ(truncation_length_oracle(ideal(R, {"x^9", "y", "z"}), 16).length, 9u);
}

TEST(TruncationOracle, UnitIdeal) {
  auto R = xyz(3);
  EXPECT_EQ(truncation_length_oracle(ideal(R, {"1+x"})).length, 0u);
}

TEST(TruncationOracle, RejectsBadCap) {
  auto R = xyz(2);
  EXPECT_THROW(truncation_length_oracle(ideal(R, {"x"}), 0), UsageError);
  EXPECT_THROW(truncation_length_oracle(ideal(R, {"x"}), 256), UsageError);
}

TEST(TruncationOracle, AgreesWithEngineOnBracket) {
  auto R = xyz(2);
  HypersurfaceGerm g(P(R, kE83));
  EXPECT_EQ(truncation_length_oracle(bracket_ideal(jacobian_ideal(g), g)).length, 44u);
}

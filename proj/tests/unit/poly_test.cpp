#include <gtest/gtest.h>

#include <array>

#include "descent/errors.hpp"
#include "helpers.hpp"

using namespace descent;
using testing_helpers::P;
using testing_helpers::xyz;

TEST(Ring, RejectsBadVariableLists) {
  EXPECT_THROW(make_ring(PrimeChar(2), {"x", "x"}), UsageError);
  EXPECT_THROW(make_ring(PrimeChar(2), {}), UsageError);
  EXPECT_THROW(make_ring(PrimeChar(2), {""}), UsageError);
  EXPECT_THROW(make_ring(PrimeChar(2), {"a", "b", "c", "d", "e", "f", "g", "h", "i"}),
               UsageError);
}

TEST(Ordering, Names) {
  EXPECT_STREQ(to_string(Ordering::GlobalDegRevLex), "GLOBAL_DEGREVLEX");
  EXPECT_STREQ(to_string(Ordering::LocalNegDegRevLex), "LOCAL_NEG_DEGREVLEX");
}

TEST(Ordering, GlobalDegRevLex) {
  // x > y > z in degree 1; x^2 > xy > y^2 > xz > yz > z^2 in degree 2.
  const Ordering o = Ordering::GlobalDegRevLex;
  EXPECT_TRUE(compare({1, 0, 0}, {0, 1, 0}, o) > 0);
  EXPECT_TRUE(compare({0, 2, 0}, {1, 0, 1}, o) > 0);
  EXPECT_TRUE(compare({1, 1, 0}, {0, 2, 0}, o) > 0);
  EXPECT_TRUE(compare({0, 0, 2}, {0, 1, 0}, o) > 0);
  EXPECT_TRUE(compare({1, 2, 3}, {1, 2, 3}, o) == 0);
}

TEST(Ordering, LocalMakesOneLargest) {
  const Ordering o = Ordering::LocalNegDegRevLex;
  EXPECT_TRUE(compare({0, 0, 0}, {1, 0, 0}, o) > 0);
  EXPECT_TRUE(compare({0, 0, 1}, {2, 0, 0}, o) > 0);
  EXPECT_TRUE(compare({1, 0, 0}, {0, 1, 0}, o) > 0);
}

TEST(Polynomial, SpecProducts) {
  auto R2 = xyz(2);
  EXPECT_EQ(P(R2, "(z+y)*(z+y)"), P(R2, "z^2+y^2"));
  auto R3 = xyz(3);
  EXPECT_EQ(pow(P(R3, "x+1"), 3), P(R3, "x^3+1"));
  EXPECT_TRUE((P(R3, "x*y+z") * Polynomial(R3)).is_zero());
}

TEST(Polynomial, AmbientMismatchThrows) {
  auto R2 = xyz(2);
  auto R3 = xyz(3);
  EXPECT_THROW(P(R2, "x") + P(R3, "x"), UsageError);
  EXPECT_THROW(P(R2, "x") * P(R3, "x"), UsageError);
  auto Rab = make_ring(PrimeChar(2), {"a", "b"});
  EXPECT_THROW(P(R2, "x") * P(Rab, "a"), UsageError);
}

TEST(Polynomial, ZeroHasNoTerms) {
  auto R = xyz(5);
  Polynomial f = P(R, "x+y") - P(R, "y+x");
  EXPECT_TRUE(f.is_zero());
  EXPECT_EQ(f.size(), 0u);
  EXPECT_EQ(f.to_string(), "0");
}

TEST(Polynomial, TermsSortedAndNonzero) {
  auto R = xyz(3);
  Polynomial f = P(R, "z^2 + 1 + x + 3*y + x^2*z");
  EXPECT_EQ(f.to_string(), "x^2*z+z^2+x+1");
  for (const auto& t : f.terms()) EXPECT_NE(t.coeff, 0u);
}

TEST(Polynomial, RenderingShowsCoefficientsOnlyWhenNotOne) {
  auto R = xyz(7);
  EXPECT_EQ(P(R, "2*x^3 - y + 5").to_string(), "2*x^3+6*y+5");
  EXPECT_EQ(P(R, "1").to_string(), "1");
  EXPECT_EQ(P(R, "-1").to_string(), "6");
}

TEST(Polynomial, DegreeAndOrder) {
  auto R = xyz(2);
  Polynomial f = P(R, "z^2+x^3+y^5+y^3*z");
  EXPECT_EQ(f.total_degree(), 5u);
  EXPECT_EQ(f.order(), 2u);
  EXPECT_EQ(f.constant_coeff(), 0u);
  EXPECT_TRUE(f.involves(0));
}

TEST(Polynomial, EqualityIgnoresOrdering) {
  auto G = xyz(2);
  auto L = xyz(2, Ordering::LocalNegDegRevLex);
  EXPECT_EQ(P(G, "x^2+y+z^3"), P(L, "x^2+y+z^3"));
  EXPECT_EQ(P(L, "x^2+y+z^3").leading_monomial(), Monomial({0, 1, 0}));
  EXPECT_EQ(P(G, "x^2+y+z^3").leading_monomial(), Monomial({0, 0, 3}));
}

TEST(Polynomial, ExponentOverflowIsReported) {
  auto R = xyz(2);
  Polynomial f = P(R, "x^60000");
  EXPECT_THROW(f * f, EngineLimitError);
}

TEST(PartialDerivative, SpecNondescentExample) {
  auto R = xyz(2);
  Polynomial f = P(R, "z^2+x^3+y^5+y^3*z");
  EXPECT_EQ(partial_derivative(f, 0), P(R, "x^2"));
  EXPECT_EQ(partial_derivative(f, 1), P(R, "y^4+y^2*z"));
  EXPECT_EQ(partial_derivative(f, 2), P(R, "y^3"));
}

TEST(PartialDerivative, DFamily) {
  auto R = xyz(2);
  for (unsigned m = 2; m <= 6; ++m) {
    for (unsigned r = 1; r < m; ++r) {
      const std::string ym = "y^" + std::to_string(m);
      const std::string ymr = "y^" + std::to_string(m - r);
      Polynomial f = P(R, "z^2+x^2*y+x*" + ym + "+x*" + ymr + "*z");
      EXPECT_EQ(partial_derivative(f, 0), P(R, ym + "+" + ymr + "*z"));
    }
  }
}

TEST(PartialDerivative, ConstantGivesZero) {
  for (unsigned p : {2u, 3u, 5u}) {
    auto R = xyz(p);
    for (std::size_t v = 0; v < 3; ++v) EXPECT_TRUE(partial_derivative(P(R, "1"), v).is_zero());
  }
}

TEST(PartialDerivative, RejectsBadIndex) {
  auto R = xyz(2);
  EXPECT_THROW(partial_derivative(P(R, "x"), 3), UsageError);
}

TEST(Frobenius, SpecExamples) {
  auto R2 = xyz(2);
  EXPECT_EQ(frobenius_power(P(R2, "x+y"), 1), P(R2, "x^2+y^2"));
  Polynomial f = P(R2, "y^4+y^2*z");
  EXPECT_EQ(frobenius_power(f, 1), P(R2, "y^8+y^4*z^2"));
  EXPECT_EQ(frobenius_power(f, 1), f * f);
  auto R3 = xyz(3);
  EXPECT_EQ(frobenius_power(P(R3, "x^2+y^3"), 1), P(R3, "x^6+y^9"));
}

TEST(Frobenius, IteratedEqualsComposed) {
  auto R = xyz(2);
  Polynomial f = P(R, "x*y+z^3+x");
  EXPECT_EQ(frobenius_power(f, 2), frobenius_power(frobenius_power(f, 1), 1));
  EXPECT_EQ(frobenius_power(f, 2), pow(f, 4));
}

TEST(Frobenius, CoefficientsArePreservedInPrimeField) {
  auto R = xyz(5);
  Polynomial f = P(R, "2*x+3*y");
  EXPECT_EQ(frobenius_power(f, 1), pow(f, 5));
}

TEST(SubstituteRename, SpecExamples) {
  auto R = xyz(2);
  const std::array<std::size_t, 3> swap_xz{2, 1, 0};
  EXPECT_EQ(substitute_rename(P(R, "z^2+x^3"), swap_xz), P(R, "x^2+z^3"));
  const std::array<std::size_t, 3> id{0, 1, 2};
  Polynomial f = P(R, "z^2+x^3+y^5+y^3*z");
  EXPECT_EQ(substitute_rename(f, id), f);
  const std::array<std::size_t, 3> cycle{1, 2, 0};  // x -> y -> z -> x
  EXPECT_EQ(substitute_rename(P(R, "x*y"), cycle), P(R, "y*z"));
}

TEST(SubstituteRename, PreservesDegreeAndSize) {
  auto R = xyz(3);
  Polynomial f = P(R, "z^2+x^3+x*y^3+x^2*y^2");
  const std::array<std::size_t, 3> perm{2, 0, 1};
  Polynomial g = substitute_rename(f, perm);
  EXPECT_EQ(g.size(), f.size());
  EXPECT_EQ(g.total_degree(), f.total_degree());
}

TEST(SubstituteRename, RejectsNonPermutations) {
  auto R = xyz(2);
  const std::array<std::size_t, 3> bad{0, 0, 1};
  EXPECT_THROW(substitute_rename(P(R, "x"), bad), UsageError);
  const std::array<std::size_t, 2> short_perm{1, 0};
  EXPECT_THROW(substitute_rename(P(R, "x"), short_perm), UsageError);
}

TEST(Monomial, Arithmetic) {
  Monomial a{2, 0, 1}, b{1, 3, 0};
  EXPECT_EQ(a * b, Monomial({3, 3, 1}));
  EXPECT_EQ(a.lcm(b), Monomial({2, 3, 1}));
  EXPECT_TRUE(Monomial({1, 0, 0}).divides(a));
  EXPECT_FALSE(b.divides(a));
  EXPECT_EQ(Monomial({1, 0, 1}).quotient_of(a), Monomial({1, 0, 0}));
  EXPECT_TRUE(Monomial({1, 0, 0}).coprime(Monomial({0, 2, 2})));
  EXPECT_EQ(a.degree(), 3u);
}

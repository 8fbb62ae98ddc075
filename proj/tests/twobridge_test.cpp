#include <gtest/gtest.h>

#include <chrono>

#include "charvar/errors.hpp"
#include "charvar/factor_oracle.hpp"
#include "charvar/format.hpp"
#include "charvar/polyalg.hpp"
#include "charvar/trace.hpp"
#include "charvar/twobridge.hpp"

namespace charvar {
namespace {

MultiPoly XZ(std::string_view t) { return parse_poly(t, xz_vars()); }
MultiPoly Z(std::string_view t) {
  static const Vars z = make_vars({"z"});
  return parse_poly(t, z);
}

TEST(TwoBridgeKnot, Validation) {
  EXPECT_NO_THROW(TwoBridgeKnot(7, 3));
  EXPECT_THROW(TwoBridgeKnot(8, 3), UnsupportedInput);
  EXPECT_THROW(TwoBridgeKnot(9, 3), UnsupportedInput);
  EXPECT_THROW(TwoBridgeKnot(7, 2), UnsupportedInput);
  EXPECT_THROW(TwoBridgeKnot(7, 7), UnsupportedInput);
  EXPECT_THROW(TwoBridgeKnot(1, 1), UnsupportedInput);
  const TwoBridgeKnot k(9, 5);
  EXPECT_EQ(k.d(), 4);
  EXPECT_EQ(k.c(), 2);
}

TEST(Epsilon, Examples) {
  EXPECT_EQ(epsilon_sequence({3, 1}), (std::vector<int>{1, 1}));
  EXPECT_EQ(epsilon_sequence({5, 3}), (std::vector<int>{1, -1, -1, 1}));
  EXPECT_EQ(epsilon_sequence({5, 1}), (std::vector<int>{1, 1, 1, 1}));
}

TEST(Epsilon, PalindromeForAllKnots) {
  for (const auto& k : two_bridge_knots_up_to(45)) {
    const auto e = epsilon_sequence(k);
    for (int j = 1; j < k.p(); ++j) EXPECT_EQ(e[j - 1], e[k.p() - j - 1]);
  }
}

TEST(WordW, Examples) {
  EXPECT_EQ(word_w({3, 1}), parse_word("a b"));
  EXPECT_EQ(word_w({5, 3}), parse_word("a b^-1 a^-1 b"));
  EXPECT_EQ(word_w({7, 1}), parse_word("a b a b a b"));
  EXPECT_EQ(word_slice({5, 3}, 1), parse_word("b^-1 a^-1"));
}

TEST(WordW, TorusKnotsArePowersOfAb) {
  for (int p = 3; p <= 21; p += 2) EXPECT_EQ(word_w({p, 1}), parse_word("a b").power((p - 1) / 2));
}

// Reference values from an independent symbolic computation with explicit
// matrices a = [[s, 1], [0, 1/s]], b = [[s, 0], [r, 1/s]].
TEST(Phi, MatchesMatrixReference) {
  EXPECT_EQ(phi({3, 1}), XZ("z - 1"));
  EXPECT_EQ(phi({5, 1}), XZ("z^2 - z - 1"));
  EXPECT_EQ(phi({5, 3}), XZ("-x^2*z + 2*x^2 + z^2 - z - 1"));
  EXPECT_EQ(phi({7, 3}), XZ("-x^2*z^2 + 3*x^2*z - 2*x^2 + z^3 - z^2 - 2*z + 1"));
  EXPECT_EQ(phi({7, 5}), XZ("x^4*z - 2*x^4 - 2*x^2*z^2 + 3*x^2*z + 2*x^2 + z^3 - z^2 - 2*z + 1"));
  EXPECT_EQ(phi({9, 5}), XZ("x^4*z^2 - 4*x^4*z + 4*x^4 - 2*x^2*z^3 + 5*x^2*z^2 + x^2*z - 6*x^2 + z^4 - z^3 - "
                           "3*z^2 + 2*z + 1"));
}

TEST(Phi, AtZeroIsPhiD) {
  const MultiPoly at0 = align(specialize(phi({5, 3}), "x", 0), make_vars({"z"}));
  EXPECT_EQ(at0, Z("z^2 - z - 1"));
  EXPECT_TRUE(gcd_in(at0, derivative(at0, "z"), "z").is_constant());
}

TEST(Phi, TorusKnotPhiIndependentOfX) {
  for (int p = 3; p <= 21; p += 2) {
    const TwoBridgeKnot k(p, 1);
    EXPECT_EQ(align(phi(k), make_vars({"z"})), phi_d(k.d()));
  }
}

TEST(Gamma, TopDegreeParts) {
  EXPECT_EQ(gamma({3, 1}), parse_poly("z - 1", Xz_vars()));
  EXPECT_EQ(gamma({5, 3}).homogeneous_part(2), leading_form(1, 1));
  EXPECT_EQ(gamma({7, 3}).homogeneous_part(3), leading_form(2, 1));
  EXPECT_EQ(leading_form(1, 1), parse_poly("z^2 - X*z", Xz_vars()));
}

TEST(NewtonVertices, Examples) {
  const auto r73 = check_newton_vertices({7, 3});
  EXPECT_TRUE(r73.passed());
  EXPECT_EQ(r73.claim_id, "NewtonVertices");
  const auto hull73 = newton_polygon(gamma({7, 3}));
  EXPECT_TRUE(hull73.has_vertex({0, 3}));
  EXPECT_TRUE(hull73.has_vertex({1, 2}));
  EXPECT_TRUE(newton_polygon(gamma({3, 1})).has_vertex({0, 1}));
  EXPECT_TRUE(check_newton_vertices({3, 1}).passed());
  const auto hull253 = newton_polygon(gamma({25, 3}));
  EXPECT_TRUE(hull253.has_vertex({0, 12}));
  EXPECT_TRUE(hull253.has_vertex({1, 11}));
}

TEST(LeadingTerms, Examples) {
  const auto r = check_prop_lot({5, 3});
  ASSERT_TRUE(r.passed());
  EXPECT_EQ(r.details["per_j"][0]["c_j"], 1);
  EXPECT_EQ(r.details["per_j"][0]["top"], to_string(leading_form(1, 1)));
  EXPECT_EQ(r.details["per_j"][1]["c_j"], 0);
  EXPECT_EQ(r.details["per_j"][1]["top"], "z");
  const auto torus = check_prop_lot({7, 1});
  ASSERT_TRUE(torus.passed());
  for (const auto& j : torus.details["per_j"]) EXPECT_EQ(j["c_j"], 0);
}

TEST(LeadingTerms, CountEqualsHalfOfMMinusOne) {
  for (const auto& k : two_bridge_knots_up_to(31)) {
    EXPECT_EQ(check_prop_lot(k).details["c"], k.c()) << k.p() << "," << k.m();
  }
}

TEST(Suite, AllKnotsUpTo45) {
  const auto start = std::chrono::steady_clock::now();
  for (const auto& k : two_bridge_knots_up_to(45)) {
    const auto slices = slice_traces(k);
    const MultiPoly f = phi_from_slices(k, slices);
    EXPECT_EQ(f.degree_in("z"), k.d());
    EXPECT_EQ(f.coeff_in("z", k.d()), XZ("1"));
    EXPECT_TRUE(check_x0_specialization(k, f).passed()) << k.p() << "," << k.m();
    EXPECT_TRUE(check_newton_vertices(k, gamma_from_phi(k, f)).passed()) << k.p() << "," << k.m();
    if (k.p() <= 31) EXPECT_TRUE(check_prop_lot(k, slices).passed()) << k.p() << "," << k.m();
  }
  EXPECT_LT(std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count(), 120.0);
}

TEST(FactorOracle, Examples) {
  const auto f = factor_oracle(Z("z^2 - 1"));
  EXPECT_EQ(f, (std::vector<MultiPoly>{Z("z - 1"), Z("z + 1")}));
  EXPECT_EQ(factor_oracle(phi_d(3)), std::vector<MultiPoly>{Z("z^3 - z^2 - 2*z + 1")});
  EXPECT_EQ(factor_oracle(phi_d(4)), (std::vector<MultiPoly>{Z("z - 1"), Z("z^3 - 3*z - 1")}));
}

TEST(FactorOracle, CompositeTwentyFive) {
  EXPECT_EQ(factor_oracle(phi_d(12)),
            (std::vector<MultiPoly>{Z("z^2 - z - 1"),
                                    Z("z^10 - 10*z^8 + 35*z^6 - z^5 - 50*z^4 + 5*z^3 + 25*z^2 - 5*z - 1")}));
  EXPECT_FALSE(irreducible_over_Q_phi_d(25));
}

TEST(FactorOracle, RepeatedAndLinearFactors) {
  const auto f = factor_oracle(Z("(z - 1)^2*(z^2 + 1)*(z + 3)"));
  EXPECT_EQ(f, (std::vector<MultiPoly>{Z("z - 1"), Z("z - 1"), Z("z + 3"), Z("z^2 + 1")}));
}

TEST(FactorOracle, DegreeTwentyFour) {
  const auto f = factor_oracle(Z("(z^12 - z - 1)*(z^12 + 2*z^5 - 3)"));
  ASSERT_EQ(f.size(), 3u);  // z^12 + 2z^5 - 3 has the root z = 1.
  EXPECT_EQ(f[0], Z("z - 1"));
}

TEST(FactorOracle, Preconditions) {
  EXPECT_THROW(factor_oracle(Z("2*z^2 - 1")), UnsupportedInput);
  EXPECT_THROW(factor_oracle(Z("z^2 - 1/2")), UnsupportedInput);
  EXPECT_THROW(factor_oracle(Z("z^25")), UnsupportedInput);
  EXPECT_THROW(factor_oracle(XZ("x - z")), UnsupportedInput);
}

TEST(Irreducibility, PrimalityAgreesWithOracle) {
  EXPECT_TRUE(irreducible_over_Q_phi_d(7));
  EXPECT_FALSE(irreducible_over_Q_phi_d(9));
  for (int p = 3; p <= 23; p += 2) {
    const auto r = irreducibility_cross_check(p);
    EXPECT_TRUE(r.passed()) << p;
    EXPECT_EQ(r.details["p_prime"].get<bool>(), is_prime(p));
  }
}

TEST(OverCCertificate, Examples) {
  EXPECT_EQ(over_C_certificate({7, 3}), ComplexVerdict::GuaranteedIrreducibleOverC);
  EXPECT_EQ(over_C_certificate({9, 5}), ComplexVerdict::Unknown);
  EXPECT_EQ(over_C_certificate({13, 5}), ComplexVerdict::Unknown);
  EXPECT_EQ(over_C_certificate({3, 1}), ComplexVerdict::GuaranteedIrreducibleOverC);
  EXPECT_EQ(over_C_certificate({7, 1}), ComplexVerdict::Unknown);
}

}  // namespace
}  // namespace charvar

namespace charvar {
namespace {

TEST(PhiAtXZero, ReportsStructureFields) {
  const TwoBridgeKnot k(9, 5);
  const auto r = check_x0_specialization(k, phi(k));
  EXPECT_TRUE(r.passed());
  EXPECT_EQ(r.details["integer_coefficients"], true);
  EXPECT_EQ(r.details["even_x_powers"], true);
  EXPECT_EQ(r.details["z_leading_term_is_z_d"], true);
  // A half-integer coefficient is caught.
  const MultiPoly bad = phi(k) + parse_poly("1/2*x^2", xz_vars());
  const auto rb = check_x0_specialization(k, bad);
  EXPECT_FALSE(rb.passed());
  EXPECT_EQ(rb.details["integer_coefficients"], false);
}

}  // namespace
}  // namespace charvar

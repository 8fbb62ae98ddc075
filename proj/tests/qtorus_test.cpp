#include <gtest/gtest.h>

#include <cmath>
#include <random>

#include "charvar/errors.hpp"
#include "charvar/format.hpp"
#include "charvar/polyalg.hpp"
#include "charvar/qtorus.hpp"
#include "test_util.hpp"

namespace charvar {
namespace {

using testing::random_qt;

MultiPoly T(std::string_view s) { return parse_poly(s, t_vars()); }
MultiPoly ML(std::string_view s) { return parse_poly(s, ml_vars()); }
QTElem L(int k = 1) { return qt_monomial(0, 0, k); }
QTElem Mq(int k = 1) { return qt_monomial(0, k, 0); }

TEST(QtMul, Examples) {
  EXPECT_EQ(qt_mul(L(), Mq()), qt_monomial(2, 1, 1));
  EXPECT_EQ(qt_mul(Mq(), L()), qt_monomial(0, 1, 1));
  const QTElem ml = qt_monomial(0, 1, 1);
  EXPECT_EQ(qt_mul(ml, ml), qt_monomial(2, 2, 2));
  EXPECT_EQ(qt_mul(L(-1), Mq(-1)), qt_monomial(2, -1, -1));
}

TEST(QtMul, Associative) {
  std::mt19937_64 rng(11);
  for (int i = 0; i < 200; ++i) {
    const QTElem a = random_qt(rng), b = random_qt(rng), c = random_qt(rng);
    ASSERT_EQ(qt_mul(qt_mul(a, b), c), qt_mul(a, qt_mul(b, c))) << i;
  }
}

TEST(QtMul, LInverse) {
  EXPECT_EQ(qt_mul(L(), L(-1)), qt_monomial(0, 0, 0));
  EXPECT_EQ(qt_mul(L(-1), L()), qt_monomial(0, 0, 0));
}

TEST(Sigma, Examples) {
  EXPECT_EQ(qt_sigma(qt_monomial(0, 2, 1)), qt_monomial(0, -2, -1));
  EXPECT_EQ(qt_sigma(qt_monomial(3, 0, 0)), qt_monomial(3, 0, 0));
}

TEST(Sigma, AutomorphismAndInvolution) {
  std::mt19937_64 rng(12);
  for (int i = 0; i < 200; ++i) {
    const QTElem a = random_qt(rng), b = random_qt(rng);
    ASSERT_EQ(qt_sigma(qt_mul(a, b)), qt_mul(qt_sigma(a), qt_sigma(b))) << i;
    ASSERT_EQ(qt_sigma(qt_sigma(a)), a);
    ASSERT_EQ(qt_sigma(a + b), qt_sigma(a) + qt_sigma(b));
  }
}

TEST(Upsilon, NamedCurves) {
  EXPECT_EQ(upsilon(1, 0), -(Mq(1) + Mq(-1)));
  EXPECT_EQ(upsilon(0, 1), -(L(1) + L(-1)));
  EXPECT_EQ(upsilon(1, 1), qt_monomial(1, 1, 1) + qt_monomial(1, -1, -1));
}

TEST(Upsilon, SigmaInvariant) {
  for (int k = -5; k <= 5; ++k) {
    for (int l = -5; l <= 5; ++l) EXPECT_EQ(qt_sigma(upsilon(k, l)), upsilon(k, l)) << k << "," << l;
  }
}

TEST(Epsilon, Examples) {
  EXPECT_EQ(epsilon_eval(qt_mul(L(), Mq())), ML("M*L"));
  EXPECT_EQ(epsilon_eval(qt_monomial(1, 0, 0)), ML("-1"));
  EXPECT_EQ(epsilon_eval(alpha_unknot()), ML("(M^2 - 1)*(L - 1)"));
}

TEST(Epsilon, Multiplicative) {
  std::mt19937_64 rng(13);
  for (int i = 0; i < 200; ++i) {
    const QTElem a = random_qt(rng), b = random_qt(rng);
    ASSERT_EQ(epsilon_eval(qt_mul(a, b)), epsilon_eval(a) * epsilon_eval(b)) << i;
  }
}

TEST(Jones, Examples) {
  EXPECT_EQ(jones_unknot(1), T("1"));
  EXPECT_TRUE(jones_unknot(0).is_zero());
  EXPECT_EQ(jones_unknot(2), T("t^2 + t^-2"));
  for (int n = -6; n <= 6; ++n) EXPECT_EQ(jones_unknot(-n), -jones_unknot(n));
}

DiscreteSeq random_seq(std::uint64_t seed) {
  return [seed](int n) {
    std::mt19937_64 rng(seed ^ static_cast<std::uint64_t>(n + 1000) * 0x9e3779b97f4a7c15ULL);
    std::uniform_int_distribution<int> e(-3, 3), c(-3, 3);
    MultiPoly p(t_vars());
    for (int i = 0; i < 3; ++i) p.add_term({e(rng)}, c(rng));
    return p;
  };
}

TEST(Act, Examples) {
  const DiscreteSeq f = random_seq(5);
  EXPECT_EQ(act(L(), f, 0), f(1));
  EXPECT_EQ(act(qt_monomial(0, 2, 1), f, 1), T("t^4") * f(2));
  for (int n = -5; n <= 5; ++n) {
    EXPECT_EQ(act(qt_mul(L(), Mq()), f, n), T("t^2") * act(qt_mul(Mq(), L()), f, n)) << n;
  }
}

TEST(Act, ModuleCompatibility) {
  std::mt19937_64 rng(14);
  std::uniform_int_distribution<int> nd(-5, 5);
  for (int i = 0; i < 100; ++i) {
    const QTElem p = random_qt(rng, 3), q = random_qt(rng, 3);
    const DiscreteSeq f = random_seq(rng());
    const int n = nd(rng);
    ASSERT_EQ(act(qt_mul(p, q), f, n), act(p, apply(q, f), n)) << i;
  }
}

TEST(Alpha, AnnihilatesUnknot) {
  EXPECT_TRUE(annihilation_check(alpha_unknot(), jones_unknot, -20, 20, "unknot").passed());
}

TEST(Alpha, MatchesFloatingOracle) {
  // (t^4n - 1)[n+1] - (t^(4n+2) - t^-2)[n] with [n] from its closed quotient.
  const double t = 1.3;
  auto bracket = [&](int n) { return (std::pow(t, 2 * n) - std::pow(t, -2 * n)) / (t * t - 1 / (t * t)); };
  for (int n = -10; n <= 10; ++n) {
    const double direct = (std::pow(t, 4 * n) - 1) * bracket(n + 1) - (std::pow(t, 4 * n + 2) - std::pow(t, -2)) * bracket(n);
    EXPECT_NEAR(direct, 0, 1e-6 * std::max(1.0, std::pow(t, 6 * std::abs(n))));
    EXPECT_NEAR(std::abs(eval_complex(jones_unknot(n), {{"t", t}})), std::abs(bracket(n)), 1e-9 * std::pow(t, 2 * std::abs(n)));
  }
}

TEST(Annihilation, ControlCases) {
  const DiscreteSeq one = [](int) { return T("1"); };
  EXPECT_TRUE(annihilation_check(L() - qt_monomial(0, 0, 0), one, -5, 5, "const").passed());
  const auto bad = annihilation_check(L(), jones_unknot, -3, 3, "unknot");
  EXPECT_FALSE(bad.passed());
  // (L[.])(-1) = [0] = 0, so every n but -1 fails.
  EXPECT_EQ(bad.details["failures"].size(), 6u);
}

TEST(AJ, Unknot) {
  const auto r = aj_unknot_report();
  EXPECT_TRUE(r.passed()) << r.details.dump();
  EXPECT_EQ(r.details["M_only"], true);
  EXPECT_EQ(r.details["quotient_by_L_minus_1"], "-1 + M^2");
}

TEST(SigmaSymmetry, AlphaUnknotIsLdLeft) {
  const auto f = sigma_symmetry_factor(alpha_unknot());
  ASSERT_TRUE(f.has_value());
  EXPECT_EQ(f->ordering, Ordering::LdLeft);
  EXPECT_EQ(f->h, RationalFunction(tm("t^2*M^2")));
  EXPECT_FALSE(f->m_only);
  // The ordering h sigma(alpha) L fails since L does not commute past M^-2.
  const QTElem right = qt_mul(qt_sigma(alpha_unknot()), L());
  EXPECT_NE(qt_mul(qt_scalar(tm("t^2*M^2")), right), alpha_unknot());
  EXPECT_TRUE(sigma_symmetry_report().passed());
}

TEST(SigmaSymmetry, SmallExamples) {
  const auto a = sigma_symmetry_factor(L() - qt_monomial(0, 0, 0));
  ASSERT_TRUE(a.has_value());
  EXPECT_EQ(a->h, RationalFunction(tm("-1")));
  EXPECT_TRUE(a->m_only);
  const auto b = sigma_symmetry_factor(Mq());
  ASSERT_TRUE(b.has_value());
  EXPECT_EQ(b->h, RationalFunction(tm("M^2")));
  EXPECT_FALSE(sigma_symmetry_factor(L() + qt_monomial(0, 0, 0) + qt_monomial(0, 1, 2)).has_value());
  EXPECT_THROW(sigma_symmetry_factor(L()), UnsupportedInput);
}

TEST(Height, Examples) {
  EXPECT_EQ(height(LocalizedScalar(tm("(1 + t)^2*M + (1 + t)^3"))), 2);
  EXPECT_EQ(height(LocalizedScalar(tm("1 - t^2"))), 1);
  EXPECT_EQ(height(LocalizedScalar(tm("M - 1"))), 0);
  EXPECT_EQ(height(LocalizedScalar()), std::nullopt);
  EXPECT_EQ(height(LocalizedScalar(tm("(1 + t)^2"), tm("M - t"))), 2);
  EXPECT_EQ(height(tm("t^-3*(1 + t)^4")), 4);
}

TEST(Localized, DenominatorInvariant) {
  EXPECT_THROW(LocalizedScalar(tm("1"), tm("1 + t")), DivisionError);
  EXPECT_THROW(LocalizedScalar(tm("1"), tm("M + M*t")), DivisionError);
  EXPECT_NO_THROW(LocalizedScalar(tm("1 + t"), tm("M + M*t")));
  EXPECT_THROW(LocalizedScalar(tm("M")) / LocalizedScalar(tm("1 + t")), DivisionError);
}

TEST(WeakDivide, Examples) {
  const LocalQTElem f = localize(qt_monomial(0, 1, 2) + qt_monomial(0, 0, 0));
  const LocalQTElem g = localize(L());
  const auto [q, r] = weak_divide(f, g);
  EXPECT_EQ(q, localize(qt_monomial(0, 1, 1)));
  EXPECT_EQ(r, localize(qt_monomial(0, 0, 0)));
  EXPECT_EQ(q * g + r, f);

  const auto [q2, r2] = weak_divide(g, g);
  EXPECT_EQ(q2, localize(qt_monomial(0, 0, 0)));
  EXPECT_TRUE(r2.is_zero());
}

TEST(WeakDivide, TwistedLeadingCoefficient) {
  // lc(g) = M, so a = lc(f) / (t^2 M) when k = 1.
  const LocalQTElem f = localize(qt_monomial(0, 0, 2));
  const LocalQTElem g = localize(qt_monomial(0, 1, 1) + qt_monomial(0, 0, 0));
  const auto [q, r] = weak_divide(f, g);
  EXPECT_EQ(q, LocalQTElem::monomial(LocalizedScalar(tm("1"), tm("t^2*M")), 1));
  EXPECT_LT(r.degree(), 2);
  EXPECT_EQ(q * g + r, f);
}

TEST(WeakDivide, Preconditions) {
  const LocalQTElem g = localize(QTElem::monomial(tm("1 + t"), 1));
  EXPECT_THROW(weak_divide(localize(L(2)), LocalQTElem()), DivisionError);
  EXPECT_THROW(weak_divide(localize(qt_monomial(0, 0, 0)), g), DivisionError);
  EXPECT_THROW(weak_divide(localize(L(2)), g), DivisionError);
  EXPECT_THROW(weak_divide(localize(L(-1) + L(2)), localize(L())), DivisionError);
  EXPECT_NO_THROW(weak_divide(localize(QTElem::monomial(tm("1 - t^2"), 2)), g));
}

TEST(WeakDivide, RandomIdentity) {
  std::mt19937_64 rng(15);
  int done = 0;
  for (int i = 0; i < 200 && done < 50; ++i) {
    QTElem f = random_qt(rng), g = random_qt(rng, 2);
    if (f.is_zero() || g.is_zero()) continue;
    f = qt_mul(qt_monomial(0, 0, 3 - f.min_degree()), f);
    g = qt_mul(qt_monomial(0, 0, -g.min_degree()), g);
    if (f.degree() < g.degree()) continue;
    const auto [q, r] = weak_divide(localize(f), localize(g));
    EXPECT_EQ(q * localize(g) + r, localize(f));
    EXPECT_TRUE(r.is_zero() || r.degree() < f.degree());
    ++done;
  }
  EXPECT_EQ(done, 50);
}

}  // namespace
}  // namespace charvar

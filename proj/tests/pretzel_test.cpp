#include <gtest/gtest.h>

#include <cmath>
#include <numbers>

#include "charvar/errors.hpp"
#include "charvar/format.hpp"
#include "charvar/polyalg.hpp"
#include "charvar/pretzel.hpp"

namespace charvar {
namespace {

MultiPoly XYZ(std::string_view t) { return parse_poly(t, xyz_vars()); }
MultiPoly Y(std::string_view t) {
  static const Vars y = make_vars({"y"});
  return parse_poly(t, y);
}

TEST(PClosed, Examples) {
  const MultiPoly p = p_closed();
  EXPECT_EQ(p.coeff_in("z", 3), XYZ("1"));
  EXPECT_EQ(p.constant_term(), 0);
  EXPECT_EQ(specialize(p, "x", 0), XYZ("z*(-3 + y^2 + z^2)"));
}

TEST(QClosed, SmallN) {
  // Chebyshev values S_-1 = 0, S_-2 = -1, S_-3 = -y, S_-4 = 1 - y^2, S_-5 = 2y - y^3 by hand.
  EXPECT_EQ(q_closed(1), XYZ("y^2 + y - 2 - x*y*z + z^2"));
  EXPECT_EQ(q_closed(0).coeff_in("z", 2), XYZ("1 + y"));
}

TEST(QClosed, XZeroSliceIsABPlusZSquared) {
  for (int n = -6; n <= 12; ++n) {
    const X0SliceData d = x0_slice(n);
    const MultiPoly expected = align(d.a_n, xyz_vars()) + align(d.b_n, xyz_vars()) * XYZ("z^2");
    EXPECT_EQ(specialize(q_closed(n), "x", 0), expected) << n;
  }
}

TEST(Traces, ClosedFormsMatchFirstPrinciples) {
  EXPECT_EQ(p_trace(), p_closed());
  for (int n = -6; n <= 6; ++n) EXPECT_EQ(q_trace(n), q_closed(n)) << n;
}

TEST(Traces, WordPowerBound) {
  EXPECT_THROW(q_trace(9), RangeError);
  EXPECT_THROW(q_trace(-3, 2), RangeError);
  EXPECT_NO_THROW(q_trace(8));
}

TEST(Traces, Words) {
  EXPECT_EQ(to_string(word_E(), "a", "w"), "a w a^-1 w^-1 a^-1");
  EXPECT_EQ(to_string(word_F(), "a", "w"), "a^-1 w^-1 a w a w^-1");
}

TEST(ClosedFormReport, Passes) {
  for (int n : {-6, 0, 6}) EXPECT_TRUE(closed_form_report(n).passed()) << n;
}

TEST(Resultant, DegreesAndLeadingCoefficient) {
  const MultiPoly r4 = resultant_in(p_closed(), q_closed(4), "z");
  EXPECT_EQ(r4.degree_in("y"), 10);
  EXPECT_EQ(r4.coeff_in("y", 10), XYZ("1"));
  EXPECT_EQ(resultant_in(p_closed(), q_closed(-5), "z").degree_in("y"), 16);
  const MultiPoly r2 = resultant_in(p_closed(), q_closed(2), "z");
  EXPECT_EQ(r2.coeff_in("y", r2.degree_in("y")), XYZ("1"));
}

TEST(Resultant, ReportPassesOnRange) {
  for (int n = -5; n <= 8; ++n) {
    const auto r = resultant_report(n);
    EXPECT_TRUE(r.passed()) << n << " " << r.details.dump();
  }
}

TEST(X0Slice, Examples) {
  const X0SliceData d3 = x0_slice(3);
  EXPECT_TRUE(d3.identity_ok);
  EXPECT_TRUE(d3.squarefree_ok);
  EXPECT_EQ(u_poly(0), Y("1"));
  EXPECT_EQ(u_poly(1), Y("y + 1"));
  for (int j = 1; j <= 5; ++j) {
    EXPECT_LT(std::abs(eval_complex(u_poly(5), {{"y", 2 * std::cos(2 * j * std::numbers::pi / 11)}})), 1e-9);
  }
  const X0SliceData d5 = x0_slice(5);
  for (int k = 0; k <= 2; ++k) {
    EXPECT_LT(std::abs(eval_complex(d5.a_n, {{"y", 2 * std::cos((2 * k + 1) * std::numbers::pi / 5)}})), 1e-9);
  }
}

TEST(X0Slice, IdentityAndSquarefreeOnRange) {
  for (int n = -6; n <= 12; ++n) {
    const auto r = x0_slice_report(n);
    EXPECT_TRUE(r.passed()) << n << " " << r.details.dump();
    const X0SliceData d = x0_slice(n);
    EXPECT_TRUE(d.identity_ok) << n;
    if (d.main_case) EXPECT_TRUE(d.squarefree_ok) << n;
  }
}

TEST(X0Slice, URecursion) {
  const MultiPoly y = Y("y");
  for (int n = -10; n <= 10; ++n) EXPECT_EQ(u_poly(n + 1), y * u_poly(n) - u_poly(n - 1)) << n;
}

TEST(X0Slice, NegativeMirror) {
  for (int n = -8; n <= -1; ++n) {
    EXPECT_EQ(u_poly(n), -u_poly(-n - 1)) << n;
    EXPECT_EQ(x0_slice(n).a_n, x0_slice(5 - n).a_n) << n;
  }
}

TEST(X0Slice, RootCountsMatchDegrees) {
  for (int n = -6; n <= 12; ++n) {
    const X0SliceData d = x0_slice(n);
    EXPECT_EQ(static_cast<int>(u_roots(n).size()), std::max(d.U_n.degree_in("y"), 0)) << n;
    EXPECT_EQ(static_cast<int>(a_roots(n).size()), d.a_n.degree_in("y")) << n;
  }
}

TEST(Seidenberg, Examples) {
  for (int n : {3, 7, -2}) {
    const auto r = seidenberg_check(n);
    EXPECT_EQ(r.claim_id, "Seidenberg");
    EXPECT_EQ(r.status, Status::NumericPass) << n << r.details.dump();
    EXPECT_EQ(r.details["z_certificate"]["exact"], false);
  }
}

TEST(Seidenberg, PrintedVnHasRepeatedFactorForSevenAndMirror) {
  // U_7(-1) = 0 and a_7(1) = 0, so z^2 - 2 appears twice in the product over all roots.
  EXPECT_EQ(eval_complex(u_poly(7), {{"y", -1.0}}), std::complex<double>(0));
  EXPECT_EQ(eval_complex(x0_slice(7).a_n, {{"y", 1.0}}), std::complex<double>(0));
  for (int n : {7, -2}) {
    const auto r = seidenberg_check(n);
    EXPECT_EQ(r.details["z_certificate"]["product_over_roots_squarefree"], false) << n;
    EXPECT_EQ(r.details["z_certificate"]["merged_y_squares"], 1) << n;
  }
  EXPECT_EQ(seidenberg_check(3).details["z_certificate"]["product_over_roots_squarefree"], true);
  EXPECT_TRUE(jacobian_radical_check(7).passed());
}

TEST(Seidenberg, PassesOnRange) {
  for (int n = -6; n <= 12; ++n) EXPECT_TRUE(seidenberg_check(n).passed()) << n;
}

TEST(Seidenberg, DirectRouteForSmallN) {
  for (int n : {0, 1, 2}) {
    const auto r = seidenberg_check(n);
    EXPECT_EQ(r.claim_id, "DirectRadical");
    EXPECT_TRUE(r.passed()) << n << r.details.dump();
  }
}

TEST(Seidenberg, JacobianRouteAgreesElsewhere) {
  for (int n : {-3, -1, 3, 5}) EXPECT_TRUE(jacobian_radical_check(n).passed()) << n;
}

TEST(Witness, AllCasesOnRange) {
  for (int n = -4; n <= 4; ++n) {
    for (const auto& r : {witness_case1(n), witness_case2(n), witness_case3(n)}) {
      EXPECT_TRUE(r.passed()) << n << " " << r.claim_id << " " << r.details.dump();
      EXPECT_EQ(r.details["det_r_a"], "pass");
      EXPECT_EQ(r.details["det_r_w"], "pass");
    }
  }
}

TEST(Witness, PrintedSignOfPFactorizationIsOff) {
  const auto r = witness_case1(1);
  EXPECT_EQ(r.details["P_factorization"], "pass");
  EXPECT_EQ(r.details["P_factorization_s_minus_1"], "fail");
}

TEST(Witness, BoundEnforced) {
  EXPECT_THROW(witness_case1(7), RangeError);
  EXPECT_THROW(witness_case2(-7), RangeError);
  EXPECT_THROW(witness_case3(7), RangeError);
  EXPECT_TRUE(witness_case3(6).passed());
}

}  // namespace
}  // namespace charvar

#pragma once

// The (-2, 3, 2n+1)-pretzel knot K_(2n+1) with group <a, w | w^n E = F w^n>,
// E = a w a^-1 w^-1 a^-1, F = a^-1 w^-1 a w a w^-1. Coordinates are
// x = tr a, y = tr w, z = tr aw; the character variety is {P = Q_n = 0}.

#include <vector>

#include "charvar/freeword.hpp"
#include "charvar/multipoly.hpp"
#include "charvar/report.hpp"

namespace charvar {

inline constexpr int kDefaultWordPowerBound = 8;

/// {x, y, z}, shared with trace_poly.
const Vars& xyz_vars();

/// x - x y + (-3 + x^2 + y^2) z - x y z^2 + z^3.
MultiPoly p_closed();

/// S_(n-2) + S_(n-3) - S_(n-4) - S_(n-5) - S_(n-2) x^2
///   + (S_(n-1) + S_(n-3) + S_(n-4)) x z - (S_(n-2) + S_(n-3)) z^2, with S_k = S_k(y).
MultiPoly q_closed(int n);

FreeWord word_E();
FreeWord word_F();

/// tr E - tr F.
MultiPoly p_trace();
/// tr(w^n E a) - tr(F w^n a). Throws RangeError when |n| > bound.
MultiPoly q_trace(int n, int bound = kDefaultWordPowerBound);

/// T-expression E_n with (y^2 - 4)(y + 2) Res = (y + 2 - x^2) E_n.
MultiPoly resultant_bracket(int n);

/// Claim "ResultantStructure": Res_z(P, Q_n) has y-leading coefficient 1, y-degree 3n-2
/// (n >= 4) or 1-3n (n <= -5), and satisfies the T-expression identity.
VerificationReport resultant_report(int n);

/// Claim "ClosedForms": closed forms against first-principles trace polynomials.
VerificationReport closed_form_report(int n);

struct X0SliceData {
  int n = 0;
  MultiPoly a_n;  // over {y}
  MultiPoly b_n;
  MultiPoly U_n;
  bool identity_ok = false;    // b_n^2 z P = (Q_n - a_n)(Q_n - U_n) at x = 0
  bool squarefree_ok = false;  // a_n U_n square-free in y
  bool main_case = false;     // n >= 3 or n <= -1
  double max_root_residual_U = 0;
  double max_root_residual_a = 0;
};

/// Builds a_n, b_n, U_n and checks the x = 0 identities exactly; root
/// residuals at the cosine roots are evaluated in double precision.
X0SliceData x0_slice(int n);

/// U_n = S_n(y) + S_(n-1)(y) over {y}.
MultiPoly u_poly(int n);

/// Cosine roots of U_n and a_n in double precision.
std::vector<double> u_roots(int n);
std::vector<double> a_roots(int n);

/// Claim "X0Slice": the identity, square-freeness (n >= 3 or n <= -1) and root residuals below tol.
VerificationReport x0_slice_report(int n, double tol = 1e-9);

/// Radicality of I_n at x = 0. For n outside {0, 1, 2}: claim "Seidenberg",
/// with the exact y-certificate a_n U_n and the floating z-certificate
/// (distinct roots of V_n to tol), status numeric-pass. For n in {0, 1, 2}:
/// claim "DirectRadical" via jacobian_radical_check.
VerificationReport seidenberg_check(int n, double tol = 1e-9);

/// Exact check that P|x=0 and Q_n|x=0 meet transversally: the three
/// z-resultants of P0, Q0 and their Jacobian determinant in (y, z) have
/// constant gcd, so no common zero is singular and the zero-dimensional
/// complete intersection is radical.
VerificationReport jacobian_radical_check(int n);

/// Claim "WitnessGeneric": Case 1 witness r(a) = [[u, 1], [uv-1, v]],
/// r(w) = diag(s, 1/s), plus the factorizations of P and Q_n through P', Q'_n
/// and the diagonal case uv = 1. Throws RangeError when |n| > 6.
VerificationReport witness_case1(int n);

/// Claim "WitnessYEqualsTwo": Case 2 witness r(a) = [[z, 0], [-1/z, 1/z]], r(w) = [[1, 1], [0, 1]],
/// the y = 2 closed forms and the x = z = +-2 subcases.
VerificationReport witness_case2(int n);

/// Claim "WitnessXPlusZ": Case 3 witness over Q(x, z), the y = -2 closed forms and the diagonal case x = z = 0.
VerificationReport witness_case3(int n);

inline constexpr int kWitnessBound = 6;

}  // namespace charvar

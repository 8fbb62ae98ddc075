#pragma once

// Algorithms over MultiPoly: calculus, substitution, exact division, gcd,
// resultants, square-freeness and floating-point evaluation.

#include <complex>
#include <map>
#include <optional>
#include <string>
#include <string_view>

#include "charvar/multipoly.hpp"

namespace charvar {

/// Formal partial derivative. Throws UnsupportedInput on negative exponents in var.
MultiPoly derivative(const MultiPoly& p, std::string_view var);

/// Replaces `var` by `replacement`. The result lives over replacement's
/// variable list, which must contain every other variable occurring in p.
/// Negative powers of var are allowed only when replacement is a single term
/// in Laurent variables.
MultiPoly substitute(const MultiPoly& p, std::string_view var, const MultiPoly& replacement);

/// Sets var to a rational value, keeping the variable list.
MultiPoly specialize(const MultiPoly& p, std::string_view var, const Rational& value);

/// Rewrites var^2 -> new_name (so x^4 + x^2*z becomes X^2 + X*z). The new
/// variable takes var's position. Throws UnsupportedInput on an odd exponent.
MultiPoly substitute_even_power(const MultiPoly& p, std::string_view var, const std::string& new_name);

/// p / q when q divides p exactly; nullopt otherwise. Laurent monomial factors
/// are handled by shifting both operands to non-negative exponents first.
std::optional<MultiPoly> try_divide(const MultiPoly& p, const MultiPoly& q);

/// As try_divide but throws DivisionError when q does not divide p.
MultiPoly exact_divide(const MultiPoly& p, const MultiPoly& q);

/// Scales by a nonzero rational so coefficients are coprime integers and the
/// grlex-leading coefficient is positive. Zero stays zero.
MultiPoly normalize(const MultiPoly& p);

/// Pseudo-remainder of a by b, both viewed as univariate in var.
MultiPoly pseudo_remainder(const MultiPoly& a, const MultiPoly& b, std::size_t var);

/// gcd of the coefficients of p viewed as univariate in var (normalized).
MultiPoly content_in(const MultiPoly& p, std::size_t var);
MultiPoly primitive_part_in(const MultiPoly& p, std::size_t var);

/// Greatest common divisor computed by a primitive remainder sequence in var,
/// with the content gcd (in the remaining variables) multiplied back in, so
/// gcd_in(p*g, q*g, var) is always divisible by g. Normalized per normalize().
/// Throws UndefinedOperation when both inputs are zero.
MultiPoly gcd_in(const MultiPoly& p, const MultiPoly& q, std::string_view var);

/// Full multivariate gcd (main variable chosen automatically).
MultiPoly gcd(const MultiPoly& p, const MultiPoly& q);

/// Determinant of the Sylvester matrix of p and q in var, rows of p first with
/// coefficients in descending degree, i.e. Res(f, g) = lc(f)^deg g * prod g(roots of f).
/// Evaluated by fraction-free (Bareiss) elimination.
MultiPoly resultant_in(const MultiPoly& p, const MultiPoly& q, std::string_view var);

/// True iff gcd_in(p, dp/dvar, var) has degree 0 in var.
bool is_squarefree_in(const MultiPoly& p, std::string_view var);

/// Floating-point evaluation; every variable of p must be assigned.
std::complex<double> eval_complex(const MultiPoly& p,
                                  const std::map<std::string, std::complex<double>>& point);

}  // namespace charvar

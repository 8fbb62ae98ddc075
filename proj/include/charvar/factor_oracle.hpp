#pragma once

// Factorization of monic integer univariate polynomials by high-precision
// complex root finding and reconstruction of factors from root subsets.
// Every returned factor has been confirmed by exact division.

#include <vector>

#include "charvar/multipoly.hpp"

namespace charvar {

inline constexpr int kFactorOracleMaxDegree = 24;

/// Monic irreducible-over-Q factors of f with multiplicity, sorted by degree
/// (ties by ascending coefficient list). Subsets of at most `max_subset` roots
/// are tried, so with max_subset < deg/2 the last factor may be reducible.
/// Preconditions: one variable, monic, integer coefficients, degree <= 24
/// (UnsupportedInput otherwise). Throws ConvergenceError when root refinement
/// fails at both 60 and 120 digits.
std::vector<MultiPoly> factor_oracle(const MultiPoly& f, int max_subset = kFactorOracleMaxDegree);

}  // namespace charvar

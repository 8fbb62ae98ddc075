#pragma once

// Floating-point check of trace polynomials against random SL2(C) matrices.

#include <Eigen/Core>
#include <cstdint>
#include <random>

#include "charvar/freeword.hpp"
#include "charvar/multipoly.hpp"

namespace charvar {

inline constexpr double kMinPivot = 0.5;

struct Sl2Pair {
  Eigen::Matrix2cd first;
  Eigen::Matrix2cd second;
};

/// Entries with real and imaginary parts uniform in [-1, 1]; the (1,1) entry is
/// then solved for so that det = 1, resampling while |(0,0) entry| < kMinPivot.
/// The pivot bound keeps the solved entry below 6 in modulus, so traces of
/// words of length 12 stay small enough for an absolute tolerance of 1e-8.
class Sl2Sampler {
 public:
  explicit Sl2Sampler(std::uint64_t seed) : rng_(seed) {}
  Eigen::Matrix2cd next_matrix();
  Sl2Pair next_pair() { return {next_matrix(), next_matrix()}; }

 private:
  std::complex<double> uniform_entry();
  std::mt19937_64 rng_;
};

Eigen::Matrix2cd evaluate_numeric(const FreeWord& word, const Eigen::Matrix2cd& first,
                                  const Eigen::Matrix2cd& second);

/// True iff on every trial |tr(word(A, B)) - candidate(tr A, tr B, tr AB)| < tol.
/// `candidate` is over {x, y, z}.
bool numeric_trace_oracle(const FreeWord& word, const MultiPoly& candidate, int trials, double tol,
                          std::uint64_t seed);

/// Same check with candidate = trace_poly(word).
bool numeric_trace_oracle(const FreeWord& word, int trials, double tol, std::uint64_t seed);

inline constexpr std::uint64_t kDefaultSeed = 20110913;

}  // namespace charvar

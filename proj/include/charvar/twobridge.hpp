#pragma once

// Two-bridge knots b(p, m): the word w with wa = bw, the polynomial
// Phi_(p,m)(x, z) cutting out the non-abelian character variety, its
// X = x^2 form Gamma_(p,m)(X, z), and checks of its leading-term structure.

#include <vector>

#include "charvar/freeword.hpp"
#include "charvar/multipoly.hpp"
#include "charvar/newton.hpp"
#include "charvar/report.hpp"

namespace charvar {

class TwoBridgeKnot {
 public:
  /// Throws UnsupportedInput unless p >= 3 is odd, m is odd, 0 < m < p and gcd(p, m) = 1.
  TwoBridgeKnot(int p, int m);

  int p() const { return p_; }
  int m() const { return m_; }
  int d() const { return (p_ - 1) / 2; }
  int c() const { return (m_ - 1) / 2; }

 private:
  int p_;
  int m_;
};

/// All valid knots with p <= max_p, ordered by p then m.
std::vector<TwoBridgeKnot> two_bridge_knots_up_to(int max_p);

/// eps[j - 1] = (-1)^floor(j m / p) for j = 1..p-1. Throws InternalInconsistency
/// if the sequence is not a palindrome.
std::vector<int> epsilon_sequence(const TwoBridgeKnot& k);

/// a^eps_1 b^eps_2 ... a^eps_(p-2) b^eps_(p-1).
FreeWord word_w(const TwoBridgeKnot& k);

/// w with j letters removed from each end (0 <= j <= d).
FreeWord word_slice(const TwoBridgeKnot& k, int j);

/// Variables {x, z}; {X, z} for Gamma.
const Vars& xz_vars();
const Vars& Xz_vars();

/// |w^(j)| for j = 0..d-1 with y = x, over {x, z}.
std::vector<MultiPoly> slice_traces(const TwoBridgeKnot& k);

/// |w| - |w'| + ... + (-1)^(d-1) |w^(d-1)| + (-1)^d over {x, z}. Throws
/// InternalInconsistency on an odd power of x or a z-leading term other than z^d.
MultiPoly phi(const TwoBridgeKnot& k);
MultiPoly phi_from_slices(const TwoBridgeKnot& k, const std::vector<MultiPoly>& slices);

/// Phi with x^2 -> X, over {X, z}. Throws InternalInconsistency unless the
/// top-degree part is z^(d-c) (z - X)^c.
MultiPoly gamma(const TwoBridgeKnot& k);
MultiPoly gamma_from_phi(const TwoBridgeKnot& k, const MultiPoly& phi_poly);

/// S_d(z) - S_(d-1)(z) over {z}.
MultiPoly phi_d(int d);

/// z^a (z - X)^b over {X, z}.
MultiPoly leading_form(int a, int b);

/// Claim "NewtonVertices": (0, d) and (c, (p - m)/2) are vertices of the Newton polygon of Gamma.
VerificationReport check_newton_vertices(const TwoBridgeKnot& k);
VerificationReport check_newton_vertices(const TwoBridgeKnot& k, const MultiPoly& gamma_poly);

/// Claim "LeadingTerms": for j = 1..d, |w_j| (= |w^(j-1)|) has total degree d+1-j in
/// (X, z) and top part z^(d+1-j-c_j) (z - X)^(c_j), with nu = eps.
VerificationReport check_prop_lot(const TwoBridgeKnot& k);
VerificationReport check_prop_lot(const TwoBridgeKnot& k, const std::vector<MultiPoly>& slices);

/// Claim "PhiAtXZero": Phi(0, z) = S_d(z) - S_(d-1)(z), plus Phi in Z[x^2, z] with z-leading term z^d.
VerificationReport check_x0_specialization(const TwoBridgeKnot& k, const MultiPoly& phi_poly);

bool is_prime(int n);

/// Whether Phi_d is irreducible over Q, decided by primality of p = 2d + 1.
/// For d <= 11 the verdict is cross-checked with factor_oracle and
/// InternalInconsistency is thrown on disagreement.
bool irreducible_over_Q_phi_d(int p);

/// Claim "PhiDIrreducible": the primality verdict against the factor oracle's, with the factors found.
VerificationReport irreducibility_cross_check(int p);

enum class ComplexVerdict { GuaranteedIrreducibleOverC, Unknown };

/// Guaranteed iff p is prime and gcd(d, c) = 1, where gcd(d, 0) = d.
ComplexVerdict over_C_certificate(const TwoBridgeKnot& k);
const char* to_string(ComplexVerdict v);

}  // namespace charvar

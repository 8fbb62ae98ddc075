#pragma once

// Trace polynomials of words in the rank-2 free group. With x = tr A,
// y = tr B, z = tr AB every trace tr(w(A, B)) of A, B in SL2 is a polynomial
// in x, y, z. It is computed by folding the word into the span of
// {1, A, B, AB}, which is closed under left multiplication by A and B:
//
//   A*1 = A      A*A = xA - 1              A*B = AB      A*AB = xAB - B
//   B*1 = B      B*A = yA + xB + (z-xy) - AB   B*B = yB - 1   B*AB = A + zB - x
//
// and A^-1 = x - A, B^-1 = y - B.

#include <string_view>

#include "charvar/freeword.hpp"
#include "charvar/multipoly.hpp"

namespace charvar {

/// Values substituted for tr A, tr B, tr AB; all over one variable list.
/// Folding with specialized coordinates (e.g. y := x) gives the specialized
/// trace directly, since folding only uses ring operations.
struct TraceCoords {
  MultiPoly x;
  MultiPoly y;
  MultiPoly z;

  /// x, y, z as the variables of {x, y, z}.
  static TraceCoords standard();
  const Vars& vars() const { return x.vars(); }
};

/// alpha*1 + beta*A + gamma*B + delta*AB.
struct QuadBasisElem {
  MultiPoly one;
  MultiPoly a;
  MultiPoly b;
  MultiPoly ab;

  static QuadBasisElem identity(const Vars& vars);
  MultiPoly trace(const TraceCoords& coords) const;

  friend bool operator==(const QuadBasisElem&, const QuadBasisElem&) = default;
};

/// Left multiplication of e by A, A^-1, B or B^-1 (sign of `exp`, |exp| == 1).
QuadBasisElem left_multiply(const Letter& unit, const QuadBasisElem& e, const TraceCoords& coords);

/// Element of the basis span equal to the image of the word.
QuadBasisElem fold(const FreeWord& word, const TraceCoords& coords);

MultiPoly trace_poly(const FreeWord& word);
MultiPoly trace_poly(const FreeWord& word, const TraceCoords& coords);

struct ChebyshevKind {
  enum class Kind { S, T };
  Kind kind;
  int index;
};

/// S_k or T_k in `var` (which must belong to vars), for any integer k:
/// S_0 = 1, S_1 = y, T_0 = 2, T_1 = y, f_{k+1} = y f_k - f_{k-1}.
MultiPoly chebyshev(ChebyshevKind which, const Vars& vars, std::string_view var);
MultiPoly chebyshev_s(int k, const Vars& vars, std::string_view var);
MultiPoly chebyshev_t(int k, const Vars& vars, std::string_view var);

}  // namespace charvar

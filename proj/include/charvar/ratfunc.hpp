#pragma once

#include "charvar/multipoly.hpp"

namespace charvar {

/// Quotient of polynomials kept in lowest terms: gcd(num, den) is constant,
/// den has coprime integer coefficients and a positive leading coefficient.
/// Laurent inputs are cleared of monomial denominators on construction.
class RationalFunction {
 public:
  RationalFunction() : den_(MultiPoly::constant(num_.vars(), 1)) {}
  explicit RationalFunction(const MultiPoly& num);
  RationalFunction(const MultiPoly& num, const MultiPoly& den);

  const MultiPoly& num() const { return num_; }
  const MultiPoly& den() const { return den_; }
  const Vars& vars() const { return num_.vars(); }

  bool is_zero() const { return num_.is_zero(); }
  bool is_polynomial() const { return den_.is_constant(); }

  RationalFunction& operator+=(const RationalFunction& rhs);
  RationalFunction& operator-=(const RationalFunction& rhs);
  RationalFunction& operator*=(const RationalFunction& rhs);
  RationalFunction& operator/=(const RationalFunction& rhs);

  friend RationalFunction operator+(RationalFunction a, const RationalFunction& b) { return a += b; }
  friend RationalFunction operator-(RationalFunction a, const RationalFunction& b) { return a -= b; }
  friend RationalFunction operator*(RationalFunction a, const RationalFunction& b) { return a *= b; }
  friend RationalFunction operator/(RationalFunction a, const RationalFunction& b) { return a /= b; }
  RationalFunction operator-() const;

  friend bool operator==(const RationalFunction& a, const RationalFunction& b) {
    return a.num_ == b.num_ && a.den_ == b.den_;
  }
  friend bool operator!=(const RationalFunction& a, const RationalFunction& b) { return !(a == b); }

 private:
  void reduce();

  MultiPoly num_;
  MultiPoly den_;
};

}  // namespace charvar

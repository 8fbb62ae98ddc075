#include "charvar/ratfunc.hpp"

#include <algorithm>

#include "charvar/errors.hpp"
#include "charvar/polyalg.hpp"

namespace charvar {

RationalFunction::RationalFunction(const MultiPoly& num)
    : RationalFunction(num, MultiPoly::constant(num.vars(), 1)) {}

RationalFunction::RationalFunction(const MultiPoly& num, const MultiPoly& den) : num_(num), den_(den) {
  if (den_.is_zero()) throw DivisionError("rational function with zero denominator");
  if (!num_.vars()->same_names(*den_.vars())) {
    throw AlignmentError("rational function: numerator and denominator variable lists differ");
  }
  reduce();
}

void RationalFunction::reduce() {
  if (num_.is_zero()) {
    den_ = MultiPoly::constant(num_.vars(), 1);
    return;
  }
  Exponents mn = min_exponents(num_);
  Exponents md = min_exponents(den_);
  Exponents shift_num(mn.size()), shift_den(md.size());
  for (std::size_t i = 0; i < mn.size(); ++i) {
    const int low = std::min(mn[i], md[i]);
    shift_num[i] = -low;
    shift_den[i] = -low;
  }
  num_ = num_.shifted(shift_num);
  den_ = den_.shifted(shift_den);
  const MultiPoly g = gcd(num_, den_);
  if (!g.is_constant()) {
    num_ = exact_divide(num_, g);
    den_ = exact_divide(den_, g);
  }
  const MultiPoly normalized = normalize(den_);
  const Rational scale = normalized.leading_term().second / den_.leading_term().second;
  num_ *= scale;
  den_ = normalized;
}

RationalFunction& RationalFunction::operator+=(const RationalFunction& rhs) {
  if (den_ == rhs.den_) {
    num_ += rhs.num_;
  } else {
    num_ = num_ * rhs.den_ + rhs.num_ * den_;
    den_ *= rhs.den_;
  }
  reduce();
  return *this;
}

RationalFunction& RationalFunction::operator-=(const RationalFunction& rhs) { return *this += -rhs; }

RationalFunction& RationalFunction::operator*=(const RationalFunction& rhs) {
  num_ *= rhs.num_;
  den_ *= rhs.den_;
  reduce();
  return *this;
}

RationalFunction& RationalFunction::operator/=(const RationalFunction& rhs) {
  if (rhs.is_zero()) throw DivisionError("rational function division by zero");
  num_ *= rhs.den_;
  den_ *= rhs.num_;
  reduce();
  return *this;
}

RationalFunction RationalFunction::operator-() const {
  RationalFunction out = *this;
  out.num_ = -out.num_;
  return out;
}

}  // namespace charvar

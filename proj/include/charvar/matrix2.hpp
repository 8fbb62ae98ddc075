#pragma once

// 2x2 matrices over an arbitrary commutative scalar (MultiPoly,
// RationalFunction, GaussianRational, ...), with word evaluation for
// representations of the rank-2 free group.

#include <array>
#include <cstdlib>

#include "charvar/errors.hpp"
#include "charvar/freeword.hpp"

namespace charvar {

template <class Scalar>
class Matrix2 {
 public:
  Matrix2(Scalar a, Scalar b, Scalar c, Scalar d) : m_{std::move(a), std::move(b), std::move(c), std::move(d)} {}

  static Matrix2 diagonal(const Scalar& d0, const Scalar& d1, const Scalar& zero) {
    return Matrix2(d0, zero, zero, d1);
  }

  const Scalar& operator()(int i, int j) const { return m_[2 * i + j]; }
  Scalar& operator()(int i, int j) { return m_[2 * i + j]; }

  Scalar det() const { return m_[0] * m_[3] - m_[1] * m_[2]; }
  Scalar trace() const { return m_[0] + m_[3]; }
  Matrix2 adjugate() const { return Matrix2(m_[3], -m_[1], -m_[2], m_[0]); }

  friend Matrix2 operator*(const Matrix2& x, const Matrix2& y) {
    return Matrix2(x.m_[0] * y.m_[0] + x.m_[1] * y.m_[2], x.m_[0] * y.m_[1] + x.m_[1] * y.m_[3],
                   x.m_[2] * y.m_[0] + x.m_[3] * y.m_[2], x.m_[2] * y.m_[1] + x.m_[3] * y.m_[3]);
  }
  friend Matrix2 operator+(const Matrix2& x, const Matrix2& y) {
    return Matrix2(x.m_[0] + y.m_[0], x.m_[1] + y.m_[1], x.m_[2] + y.m_[2], x.m_[3] + y.m_[3]);
  }
  friend Matrix2 operator-(const Matrix2& x, const Matrix2& y) {
    return Matrix2(x.m_[0] - y.m_[0], x.m_[1] - y.m_[1], x.m_[2] - y.m_[2], x.m_[3] - y.m_[3]);
  }
  friend bool operator==(const Matrix2& x, const Matrix2& y) { return x.m_ == y.m_; }
  friend bool operator!=(const Matrix2& x, const Matrix2& y) { return !(x == y); }

 private:
  std::array<Scalar, 4> m_;
};

/// Image of a word under the representation sending the generators to
/// `first` and `second`. Both must have determinant equal to identity(0,0);
/// inverses are adjugates.
template <class Scalar>
Matrix2<Scalar> evaluate_word(const FreeWord& word, const Matrix2<Scalar>& first, const Matrix2<Scalar>& second,
                              const Matrix2<Scalar>& identity) {
  const Scalar& one = identity(0, 0);
  if (first.det() != one || second.det() != one) {
    throw UnsupportedInput("evaluate_word: generator images must have determinant 1");
  }
  const Matrix2<Scalar> first_inv = first.adjugate();
  const Matrix2<Scalar> second_inv = second.adjugate();
  Matrix2<Scalar> result = identity;
  for (const auto& l : word.letters()) {
    const bool is_first = l.gen == Generator::First;
    const Matrix2<Scalar>& step = l.exp > 0 ? (is_first ? first : second) : (is_first ? first_inv : second_inv);
    for (int i = 0; i < std::abs(l.exp); ++i) result = result * step;
  }
  return result;
}

}  // namespace charvar

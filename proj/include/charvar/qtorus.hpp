#pragma once

// The quantum torus R<L^+-1, M^+-1>/(LM - t^2 ML), R = Q[t^+-1]. Elements are
// kept in the normal form sum_j a_j(t, M) L^j.

#include <functional>
#include <map>
#include <optional>
#include <string>

#include "charvar/multipoly.hpp"
#include "charvar/ratfunc.hpp"
#include "charvar/report.hpp"

namespace charvar {

/// {t, M}, both Laurent. Coefficients of QTElem live here.
const Vars& tm_vars();
/// {t}, Laurent. Values of discrete sequences.
const Vars& t_vars();
/// {M, L}, both Laurent. Target of epsilon_eval.
const Vars& ml_vars();

/// a(t, M) -> a(t, t^(2k) M).
MultiPoly twist(const MultiPoly& a, int k);

/// Element of Q[t^+-1, M^+-1] localized at 1 + t: num/den with den not
/// divisible by 1 + t. Checked on construction.
class LocalizedScalar {
 public:
  LocalizedScalar();
  explicit LocalizedScalar(const MultiPoly& num);
  LocalizedScalar(const MultiPoly& num, const MultiPoly& den);
  explicit LocalizedScalar(RationalFunction f);

  const RationalFunction& value() const { return f_; }
  bool is_zero() const { return f_.is_zero(); }

  friend LocalizedScalar operator+(const LocalizedScalar& a, const LocalizedScalar& b) {
    return LocalizedScalar(a.f_ + b.f_);
  }
  friend LocalizedScalar operator-(const LocalizedScalar& a, const LocalizedScalar& b) {
    return LocalizedScalar(a.f_ - b.f_);
  }
  friend LocalizedScalar operator*(const LocalizedScalar& a, const LocalizedScalar& b) {
    return LocalizedScalar(a.f_ * b.f_);
  }
  /// Throws DivisionError when the quotient leaves the localized ring.
  friend LocalizedScalar operator/(const LocalizedScalar& a, const LocalizedScalar& b);
  LocalizedScalar operator-() const { return LocalizedScalar(-f_); }
  friend bool operator==(const LocalizedScalar& a, const LocalizedScalar& b) { return a.f_ == b.f_; }
  friend bool operator!=(const LocalizedScalar& a, const LocalizedScalar& b) { return !(a == b); }

 private:
  RationalFunction f_;
};

LocalizedScalar twist(const LocalizedScalar& a, int k);

/// (1+t)-adic valuation; nullopt for zero (infinite height).
std::optional<int> height(const LocalizedScalar& s);
std::optional<int> height(const MultiPoly& a);

inline bool is_zero_coeff(const MultiPoly& a) { return a.is_zero(); }
inline bool is_zero_coeff(const LocalizedScalar& a) { return a.is_zero(); }

template <class Coeff>
class BasicQT {
 public:
  using Terms = std::map<int, Coeff>;

  BasicQT() = default;
  static BasicQT monomial(const Coeff& a, int l) {
    BasicQT out;
    out.add(l, a);
    return out;
  }

  const Terms& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  /// Highest / lowest L-exponent. Precondition: nonzero.
  int degree() const { return terms_.rbegin()->first; }
  int min_degree() const { return terms_.begin()->first; }
  const Coeff& leading_coeff() const { return terms_.rbegin()->second; }
  std::optional<Coeff> coeff(int j) const {
    auto it = terms_.find(j);
    if (it == terms_.end()) return std::nullopt;
    return it->second;
  }

  void add(int l, const Coeff& a) {
    if (is_zero_coeff(a)) return;
    auto [it, inserted] = terms_.try_emplace(l, a);
    if (inserted) return;
    it->second = it->second + a;
    if (is_zero_coeff(it->second)) terms_.erase(it);
  }

  friend BasicQT operator+(BasicQT a, const BasicQT& b) {
    for (const auto& [l, c] : b.terms_) a.add(l, c);
    return a;
  }
  friend BasicQT operator-(BasicQT a, const BasicQT& b) {
    for (const auto& [l, c] : b.terms_) a.add(l, -c);
    return a;
  }
  BasicQT operator-() const { return BasicQT() - *this; }

  /// a(M) L^k * b(M) L^l = a(M) b(t^(2k) M) L^(k+l).
  friend BasicQT operator*(const BasicQT& p, const BasicQT& q) {
    BasicQT out;
    for (const auto& [k, a] : p.terms_) {
      for (const auto& [l, b] : q.terms_) out.add(k + l, a * twist(b, k));
    }
    return out;
  }

  friend bool operator==(const BasicQT& a, const BasicQT& b) { return a.terms_ == b.terms_; }
  friend bool operator!=(const BasicQT& a, const BasicQT& b) { return !(a == b); }

 private:
  Terms terms_;
};

using QTElem = BasicQT<MultiPoly>;
using LocalQTElem = BasicQT<LocalizedScalar>;

/// Parses a coefficient over {t, M}.
MultiPoly tm(std::string_view text);
/// t^i M^j L^l with coefficient c.
QTElem qt_monomial(int i, int j, int l, const Rational& c = 1);
QTElem qt_scalar(const MultiPoly& a);
LocalQTElem localize(const QTElem& p);

QTElem qt_mul(const QTElem& p, const QTElem& q);
/// M^k L^l -> M^-k L^-l, R-linear.
QTElem qt_sigma(const QTElem& p);
/// (-1)^(k+l) t^(kl) (M^k L^l + M^-k L^-l).
QTElem upsilon(int k, int l);
/// t = -1, over ml_vars().
MultiPoly epsilon_eval(const QTElem& p);

std::string to_string(const QTElem& p);

using DiscreteSeq = std::function<MultiPoly(int)>;

/// (a(t, M) L^j f)(n) = a(t, t^(2n)) f(n + j).
MultiPoly act(const QTElem& p, const DiscreteSeq& f, int n);
/// n -> act(p, f, n).
DiscreteSeq apply(const QTElem& p, DiscreteSeq f);

/// [n] = (t^2n - t^-2n) / (t^2 - t^-2).
MultiPoly jones_unknot(int n);
/// (M^2 - 1) L - (t^2 M^2 - t^-2).
QTElem alpha_unknot();

/// Claim "Annihilation": act(p, f, n) = 0 for every n in [lo, hi].
VerificationReport annihilation_check(const QTElem& p, const DiscreteSeq& f, int lo, int hi,
                                      const std::string& subject);

enum class Ordering { LdRight, LdLeft };
std::string to_string(Ordering o);

struct SigmaSymmetry {
  Ordering ordering;
  RationalFunction h;  // over tm_vars()
  bool m_only;
};

/// Looks for h with p = h sigma(p) L^d (LdRight) or p = h L^d sigma(p)
/// (LdLeft), in that order. Requires p nonzero with lowest L-exponent 0.
std::optional<SigmaSymmetry> sigma_symmetry_factor(const QTElem& p);

/// Claim "AJUnknot": epsilon(alpha_unknot) = (M^2 - 1)(L - 1), quotient by L - 1 M-only.
VerificationReport aj_unknot_report();
/// Claim "SigmaSymmetry" for alpha_unknot.
VerificationReport sigma_symmetry_report();

struct WeakDivision {
  LocalQTElem q;
  LocalQTElem r;
};

/// f = q g + r with q = a L^k, deg r < deg f. Throws DivisionError naming the
/// failed precondition.
WeakDivision weak_divide(const LocalQTElem& f, const LocalQTElem& g);

}  // namespace charvar

#include "charvar/qtorus.hpp"

#include <sstream>

#include "charvar/errors.hpp"
#include "charvar/format.hpp"
#include "charvar/polyalg.hpp"

namespace charvar {

const Vars& tm_vars() {
  static const Vars v = make_vars({"t", "M"}, {"t", "M"});
  return v;
}

const Vars& t_vars() {
  static const Vars v = make_vars({"t"}, {"t"});
  return v;
}

const Vars& ml_vars() {
  static const Vars v = make_vars({"M", "L"}, {"M", "L"});
  return v;
}

MultiPoly tm(std::string_view text) { return parse_poly(text, tm_vars()); }

MultiPoly twist(const MultiPoly& a, int k) {
  if (k == 0) return a;
  const std::size_t t = a.index_of("t");
  const std::size_t m = a.index_of("M");
  MultiPoly out(a.vars());
  for (const auto& [e, c] : a.terms()) {
    Exponents f = e;
    f[t] += 2 * k * e[m];
    out.add_term(f, c);
  }
  return out;
}

namespace {

bool vanishes_at_minus_one(const MultiPoly& p) {
  const std::size_t t = p.index_of("t");
  MultiPoly out(p.vars());
  for (const auto& [e, c] : p.terms()) {
    Exponents f = e;
    f[t] = 0;
    out.add_term(f, e[t] % 2 == 0 ? c : Rational(-c));
  }
  return out.is_zero();
}

const MultiPoly& one_plus_t() {
  static const MultiPoly p = tm("1 + t");
  return p;
}

}  // namespace

LocalizedScalar::LocalizedScalar() : LocalizedScalar(MultiPoly(tm_vars())) {}

LocalizedScalar::LocalizedScalar(const MultiPoly& num) : LocalizedScalar(RationalFunction(align(num, tm_vars()))) {}

LocalizedScalar::LocalizedScalar(const MultiPoly& num, const MultiPoly& den)
    : LocalizedScalar(RationalFunction(align(num, tm_vars()), align(den, tm_vars()))) {}

LocalizedScalar::LocalizedScalar(RationalFunction f) : f_(std::move(f)) {
  if (vanishes_at_minus_one(f_.den())) throw DivisionError("localized scalar: denominator divisible by 1 + t");
}

LocalizedScalar operator/(const LocalizedScalar& a, const LocalizedScalar& b) {
  if (b.is_zero()) throw DivisionError("localized scalar: division by zero");
  const RationalFunction q = a.f_ / b.f_;
  if (vanishes_at_minus_one(q.den())) throw DivisionError("localized scalar: quotient is not in the localized ring");
  return LocalizedScalar(q);
}

LocalizedScalar twist(const LocalizedScalar& a, int k) {
  return LocalizedScalar(twist(a.value().num(), k), twist(a.value().den(), k));
}

std::optional<int> height(const MultiPoly& a) {
  if (a.is_zero()) return std::nullopt;
  MultiPoly p = align(a, tm_vars());
  int k = 0;
  while (auto q = try_divide(p, one_plus_t())) {
    p = *std::move(q);
    ++k;
  }
  return k;
}

std::optional<int> height(const LocalizedScalar& s) { return height(s.value().num()); }

QTElem qt_monomial(int i, int j, int l, const Rational& c) {
  return QTElem::monomial(MultiPoly::monomial(tm_vars(), {i, j}, c), l);
}

QTElem qt_scalar(const MultiPoly& a) { return QTElem::monomial(align(a, tm_vars()), 0); }

LocalQTElem localize(const QTElem& p) {
  LocalQTElem out;
  for (const auto& [l, a] : p.terms()) out.add(l, LocalizedScalar(a));
  return out;
}

QTElem qt_mul(const QTElem& p, const QTElem& q) { return p * q; }

QTElem qt_sigma(const QTElem& p) {
  QTElem out;
  for (const auto& [l, a] : p.terms()) {
    const std::size_t m = a.index_of("M");
    MultiPoly b(a.vars());
    for (const auto& [e, c] : a.terms()) {
      Exponents f = e;
      f[m] = -f[m];
      b.add_term(f, c);
    }
    out.add(-l, b);
  }
  return out;
}

QTElem upsilon(int k, int l) {
  const Rational sign = (k + l) % 2 == 0 ? 1 : -1;
  return qt_monomial(k * l, k, l, sign) + qt_monomial(k * l, -k, -l, sign);
}

MultiPoly epsilon_eval(const QTElem& p) {
  MultiPoly out(ml_vars());
  for (const auto& [l, a] : p.terms()) {
    for (const auto& [e, c] : a.terms()) out.add_term({e[1], l}, e[0] % 2 == 0 ? c : Rational(-c));
  }
  return out;
}

std::string to_string(const QTElem& p) {
  if (p.is_zero()) return "0";
  std::ostringstream os;
  bool first = true;
  for (const auto& [l, a] : p.terms()) {
    if (!first) os << " + ";
    first = false;
    os << "(" << to_string(a) << ")";
    if (l != 0) os << "*L" << (l == 1 ? "" : "^" + std::to_string(l));
  }
  return os.str();
}

MultiPoly act(const QTElem& p, const DiscreteSeq& f, int n) {
  MultiPoly out(t_vars());
  const MultiPoly t2n = MultiPoly::monomial(t_vars(), {2 * n});
  for (const auto& [l, a] : p.terms()) out += substitute(a, "M", t2n) * align(f(n + l), t_vars());
  return out;
}

DiscreteSeq apply(const QTElem& p, DiscreteSeq f) {
  return [p, f = std::move(f)](int n) { return act(p, f, n); };
}

MultiPoly jones_unknot(int n) {
  auto tp = [](int k) { return MultiPoly::monomial(t_vars(), {k}); };
  return exact_divide(tp(2 * n) - tp(-2 * n), tp(2) - tp(-2));
}

QTElem alpha_unknot() { return QTElem::monomial(tm("M^2 - 1"), 1) - qt_scalar(tm("t^2*M^2 - t^-2")); }

VerificationReport annihilation_check(const QTElem& p, const DiscreteSeq& f, int lo, int hi,
                                      const std::string& subject) {
  nlohmann::json failures = nlohmann::json::array();
  for (int n = lo; n <= hi; ++n) {
    const MultiPoly v = act(p, f, n);
    if (!v.is_zero()) failures.push_back({{"n", n}, {"value", to_string(v)}});
  }
  const bool ok = failures.empty();
  return {"Annihilation", subject, status_of(ok),
          {{"operator", to_string(p)}, {"range", {lo, hi}}, {"failures", failures}}};
}

std::string to_string(Ordering o) { return o == Ordering::LdRight ? "LdRight" : "LdLeft"; }

std::optional<SigmaSymmetry> sigma_symmetry_factor(const QTElem& p) {
  if (p.is_zero()) throw UnsupportedInput("sigma_symmetry_factor: zero element");
  if (p.min_degree() != 0) throw UnsupportedInput("sigma_symmetry_factor: lowest L-exponent must be 0");
  const int d = p.degree();
  const QTElem ld = qt_monomial(0, 0, d);
  const QTElem s = qt_sigma(p);
  for (Ordering o : {Ordering::LdRight, Ordering::LdLeft}) {
    const QTElem candidate = o == Ordering::LdRight ? s * ld : ld * s;
    if (candidate.terms().size() != p.terms().size()) continue;
    const RationalFunction h(p.leading_coeff(), candidate.leading_coeff());
    bool ok = true;
    for (const auto& [l, a] : p.terms()) {
      const auto b = candidate.coeff(l);
      if (!b || RationalFunction(a) != h * RationalFunction(*b)) {
        ok = false;
        break;
      }
    }
    if (!ok) continue;
    const std::size_t t = h.num().index_of("t");
    const bool m_only = !h.num().involves(t) && !h.den().involves(t);
    return SigmaSymmetry{o, h, m_only};
  }
  return std::nullopt;
}

VerificationReport aj_unknot_report() {
  const MultiPoly eps = epsilon_eval(alpha_unknot());
  const MultiPoly l_minus_1 = parse_poly("L - 1", ml_vars());
  const auto quotient = try_divide(eps, l_minus_1);
  const bool divisible = quotient.has_value();
  const bool m_only = divisible && !quotient->involves(quotient->index_of("L"));
  const bool expected = divisible && *quotient == parse_poly("M^2 - 1", ml_vars());
  return {"AJUnknot", "unknot", status_of(divisible && m_only && expected),
          {{"epsilon_alpha", to_string(eps)},
           {"quotient_by_L_minus_1", divisible ? to_string(*quotient) : "not divisible"},
           {"M_only", m_only}}};
}

VerificationReport sigma_symmetry_report() {
  const auto f = sigma_symmetry_factor(alpha_unknot());
  if (!f) return {"SigmaSymmetry", "unknot", Status::Fail, {{"proportional", false}}};
  const bool expected = f->ordering == Ordering::LdLeft && f->h == RationalFunction(tm("t^2*M^2"));
  return {"SigmaSymmetry", "unknot", status_of(expected),
          {{"proportional", true},
           {"ordering", to_string(f->ordering)},
           {"h", to_string(f->h)},
           {"M_only", f->m_only}}};
}

WeakDivision weak_divide(const LocalQTElem& f, const LocalQTElem& g) {
  if (g.is_zero()) throw DivisionError("weak_divide: g is zero");
  if (f.is_zero()) throw DivisionError("weak_divide: deg f >= deg g fails (f is zero)");
  if (f.min_degree() < 0 || g.min_degree() < 0) throw DivisionError("weak_divide: negative powers of L");
  if (f.degree() < g.degree()) throw DivisionError("weak_divide: deg f >= deg g fails");
  const auto hf = height(f.leading_coeff());
  const auto hg = height(g.leading_coeff());
  if (*hf < *hg) throw DivisionError("weak_divide: height of lc(f) is below height of lc(g)");
  const int k = f.degree() - g.degree();
  const LocalQTElem q = LocalQTElem::monomial(f.leading_coeff() / twist(g.leading_coeff(), k), k);
  LocalQTElem r = f - q * g;
  if ((!r.is_zero() && r.degree() >= f.degree()) || q * g + r != f) {
    throw InternalInconsistency("weak_divide: postcondition failed");
  }
  return {q, std::move(r)};
}

}  // namespace charvar

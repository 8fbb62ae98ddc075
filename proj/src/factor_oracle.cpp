#include "charvar/factor_oracle.hpp"

#include <Eigen/Eigenvalues>
#include <algorithm>
#include <boost/multiprecision/cpp_bin_float.hpp>
#include <boost/multiprecision/cpp_complex.hpp>
#include <boost/multiprecision/cpp_int.hpp>
#include <optional>

#include "charvar/errors.hpp"
#include "charvar/polyalg.hpp"

namespace charvar {
namespace {

namespace mp = boost::multiprecision;

// Acceptance window for "this high-precision number is an integer".
constexpr double kIntegralityWindow = 1e-20;

std::vector<mpz_class> integer_coefficients(const MultiPoly& f) {
  std::vector<mpz_class> c(f.degree_in(std::size_t{0}) + 1, 0);
  for (const auto& [e, v] : f.terms()) c[e[0]] = v.get_num();
  return c;
}

std::vector<std::complex<double>> seed_roots(const std::vector<mpz_class>& c) {
  const int n = static_cast<int>(c.size()) - 1;
  Eigen::MatrixXd companion = Eigen::MatrixXd::Zero(n, n);
  for (int i = 1; i < n; ++i) companion(i, i - 1) = 1.0;
  for (int i = 0; i < n; ++i) companion(i, n - 1) = -c[i].get_d();
  Eigen::EigenSolver<Eigen::MatrixXd> solver(companion, false);
  std::vector<std::complex<double>> roots;
  for (int i = 0; i < n; ++i) roots.push_back(solver.eigenvalues()[i]);
  return roots;
}

template <unsigned Digits>
class Engine {
 public:
  using Real = mp::number<mp::cpp_bin_float<Digits>, mp::et_off>;
  using Complex = mp::number<mp::complex_adaptor<mp::cpp_bin_float<Digits>>, mp::et_off>;

  explicit Engine(const std::vector<mpz_class>& coeffs) {
    for (const auto& c : coeffs) coeffs_.emplace_back(Real(c.get_str()));
  }

  // Newton refinement of every seed; nullopt if any seed fails to converge or
  // two seeds converge to the same root.
  std::optional<std::vector<Complex>> refine(const std::vector<std::complex<double>>& seeds) const {
    const Real step_tol = pow(Real(10), -static_cast<int>(Digits) + 8);
    std::vector<Complex> roots;
    for (const auto& s : seeds) {
      Complex r(Real(s.real()), Real(s.imag()));
      bool converged = false;
      for (int it = 0; it < 400 && !converged; ++it) {
        auto [v, dv] = eval_with_derivative(r);
        if (abs(dv) == 0) return std::nullopt;
        const Complex step = v / dv;
        r -= step;
        converged = abs(step) <= step_tol * std::max(Real(1), Real(abs(r)));
      }
      if (!converged) return std::nullopt;
      roots.push_back(r);
    }
    const Real separation = pow(Real(10), -static_cast<int>(Digits) / 2);
    for (std::size_t i = 0; i < roots.size(); ++i) {
      for (std::size_t j = i + 1; j < roots.size(); ++j) {
        if (abs(roots[i] - roots[j]) < separation) return std::nullopt;
      }
    }
    return roots;
  }

  static std::optional<mpz_class> as_integer(const Complex& v) {
    const Real window(kIntegralityWindow);
    if (abs(v.imag()) > window) return std::nullopt;
    const Real rounded = round(v.real());
    if (abs(v.real() - rounded) > window) return std::nullopt;
    return mpz_class(static_cast<mp::cpp_int>(rounded).str());
  }

  // Monic integer polynomial with the given roots, if its coefficients are
  // all within the integrality window.
  static std::optional<std::vector<mpz_class>> product_polynomial(const std::vector<Complex>& roots) {
    std::vector<Complex> c{Complex(1)};
    for (const auto& r : roots) {
      std::vector<Complex> next(c.size() + 1, Complex(0));
      for (std::size_t i = 0; i < c.size(); ++i) {
        next[i + 1] += c[i];
        next[i] -= r * c[i];
      }
      c = std::move(next);
    }
    std::vector<mpz_class> out;
    for (const auto& v : c) {
      auto k = as_integer(v);
      if (!k) return std::nullopt;
      out.push_back(*k);
    }
    return out;
  }

 private:
  std::pair<Complex, Complex> eval_with_derivative(const Complex& r) const {
    Complex v(0), dv(0);
    for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) {
      dv = dv * r + v;
      v = v * r + Complex(*it);
    }
    return {v, dv};
  }

  std::vector<Real> coeffs_;
};

MultiPoly from_coefficients(const Vars& vars, const std::vector<mpz_class>& c) {
  MultiPoly p(vars);
  for (std::size_t i = 0; i < c.size(); ++i) p.add_term({static_cast<int>(i)}, Rational(c[i]));
  return p;
}

// Calls visit(indices) for each k-subset of [0, n) in lexicographic order
// until visit returns true; returns whether it did.
template <class Visit>
bool for_each_subset(int n, int k, Visit visit) {
  if (k > n) return false;
  std::vector<int> idx(k);
  for (int i = 0; i < k; ++i) idx[i] = i;
  while (true) {
    if (visit(idx)) return true;
    int i = k - 1;
    while (i >= 0 && idx[i] == n - k + i) --i;
    if (i < 0) return false;
    ++idx[i];
    for (int j = i + 1; j < k; ++j) idx[j] = idx[j - 1] + 1;
  }
}

template <unsigned Digits>
std::optional<std::vector<MultiPoly>> factor_squarefree(const MultiPoly& f, int max_subset) {
  const auto coeffs = integer_coefficients(f);
  Engine<Digits> engine(coeffs);
  auto refined = engine.refine(seed_roots(coeffs));
  if (!refined) return std::nullopt;
  using Complex = typename Engine<Digits>::Complex;
  std::vector<Complex> roots = std::move(*refined);

  std::vector<MultiPoly> factors;
  MultiPoly rest = f;
  for (int k = 1; 2 * k <= static_cast<int>(roots.size()) && k <= max_subset;) {
    std::vector<int> hit;
    MultiPoly quotient;
    const bool found = for_each_subset(static_cast<int>(roots.size()), k, [&](const std::vector<int>& idx) {
      Complex sum(0);
      for (int i : idx) sum += roots[i];
      if (!Engine<Digits>::as_integer(sum)) return false;
      std::vector<Complex> subset;
      for (int i : idx) subset.push_back(roots[i]);
      auto candidate = Engine<Digits>::product_polynomial(subset);
      if (!candidate) return false;
      const MultiPoly g = from_coefficients(f.vars(), *candidate);
      auto q = try_divide(rest, g);
      if (!q) return false;
      factors.push_back(g);
      quotient = std::move(*q);
      hit = idx;
      return true;
    });
    if (!found) {
      ++k;
      continue;
    }
    rest = std::move(quotient);
    for (auto it = hit.rbegin(); it != hit.rend(); ++it) roots.erase(roots.begin() + *it);
  }
  if (rest.degree_in(std::size_t{0}) > 0) factors.push_back(rest);
  return factors;
}

std::vector<MultiPoly> factor_squarefree_escalating(const MultiPoly& f, int max_subset) {
  if (f.degree_in(std::size_t{0}) <= 0) return {};
  if (f.degree_in(std::size_t{0}) == 1) return {f};
  if (auto r = factor_squarefree<60>(f, max_subset)) return *r;
  if (auto r = factor_squarefree<120>(f, max_subset)) return *r;
  throw ConvergenceError("factor_oracle: root refinement did not converge at 60 or 120 digits");
}

MultiPoly make_monic(const MultiPoly& p) {
  const Rational lc = p.coeff_in(std::size_t{0}, p.degree_in(std::size_t{0})).constant_term();
  return p * Rational(1 / lc);
}

std::vector<MultiPoly> factor_recursive(const MultiPoly& f, int max_subset) {
  if (f.degree_in(std::size_t{0}) <= 0) return {};
  const MultiPoly g = make_monic(gcd_in(f, derivative(f, f.vars()->names[0]), f.vars()->names[0]));
  if (g.degree_in(std::size_t{0}) == 0) return factor_squarefree_escalating(f, max_subset);
  // f / g is square-free and holds each irreducible factor once; g holds the rest.
  auto out = factor_squarefree_escalating(exact_divide(f, g), max_subset);
  auto more = factor_recursive(g, max_subset);
  out.insert(out.end(), more.begin(), more.end());
  return out;
}

}  // namespace

std::vector<MultiPoly> factor_oracle(const MultiPoly& f, int max_subset) {
  if (f.num_vars() != 1) throw UnsupportedInput("factor_oracle: expected a univariate polynomial");
  if (f.is_zero()) throw UnsupportedInput("factor_oracle: zero polynomial");
  if (f.has_negative_exponents()) throw UnsupportedInput("factor_oracle: negative exponents");
  const int deg = f.degree_in(std::size_t{0});
  if (deg > kFactorOracleMaxDegree) throw UnsupportedInput("factor_oracle: degree exceeds 24");
  if (f.coeff_in(std::size_t{0}, deg).constant_term() != 1) throw UnsupportedInput("factor_oracle: not monic");
  for (const auto& [e, c] : f.terms()) {
    if (c.get_den() != 1) throw UnsupportedInput("factor_oracle: non-integer coefficient");
  }
  auto factors = factor_recursive(f, std::max(max_subset, 1));
  std::sort(factors.begin(), factors.end(), [](const MultiPoly& a, const MultiPoly& b) {
    const int da = a.degree_in(std::size_t{0});
    const int db = b.degree_in(std::size_t{0});
    if (da != db) return da < db;
    const auto ca = integer_coefficients(a);
    const auto cb = integer_coefficients(b);
    return std::lexicographical_compare(ca.begin(), ca.end(), cb.begin(), cb.end());
  });
  return factors;
}

}  // namespace charvar

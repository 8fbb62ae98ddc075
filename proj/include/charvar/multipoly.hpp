#pragma once

// Sparse multivariate (optionally Laurent) polynomials over arbitrary-precision
// rationals. Terms are stored in a map keyed by exponent vector, ordered
// graded-lexicographically, so two polynomials over the same variable list are
// equal exactly when their term maps are equal.

#include <gmpxx.h>

#include <initializer_list>
#include <map>
#include <memory>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace charvar {

using Rational = mpq_class;
using Exponents = std::vector<int>;

/// Graded-lexicographic order: total degree first, then lexicographic with the
/// first variable most significant.
struct GrlexLess {
  bool operator()(const Exponents& a, const Exponents& b) const;
};

/// Ordered variable names plus a per-variable flag allowing negative exponents.
struct VarSet {
  std::vector<std::string> names;
  std::vector<bool> laurent;

  std::size_t size() const { return names.size(); }
  std::optional<std::size_t> index_of(std::string_view name) const;
  bool same_names(const VarSet& other) const { return names == other.names; }
};

using Vars = std::shared_ptr<const VarSet>;

/// Builds a variable list. `laurent_names` must be a subset of `names`.
Vars make_vars(std::vector<std::string> names,
               std::vector<std::string> laurent_names = {});

class MultiPoly {
 public:
  using TermMap = std::map<Exponents, Rational, GrlexLess>;

  MultiPoly();
  explicit MultiPoly(Vars vars);

  static MultiPoly constant(Vars vars, const Rational& c);
  static MultiPoly variable(Vars vars, std::string_view name);
  static MultiPoly monomial(Vars vars, Exponents exps, const Rational& c = 1);

  const Vars& vars() const { return vars_; }
  const TermMap& terms() const { return terms_; }
  std::size_t num_vars() const { return vars_->size(); }
  std::size_t index_of(std::string_view name) const;  // throws if absent

  /// Adds c * monomial(exps); zero results are erased.
  void add_term(const Exponents& exps, const Rational& c);

  bool is_zero() const { return terms_.empty(); }
  bool is_constant() const;
  Rational constant_term() const;
  /// Largest term under the grlex order. Precondition: nonzero.
  const TermMap::value_type& leading_term() const;

  int degree_in(std::size_t var) const;      // -1 for zero polynomial (no negatives)
  int min_degree_in(std::size_t var) const;  // 0 for zero polynomial
  int degree_in(std::string_view var) const { return degree_in(index_of(var)); }
  int total_degree() const;
  bool has_negative_exponents() const;
  bool involves(std::size_t var) const;

  /// Coefficient of var^k, as a polynomial over the same variable list with
  /// that variable's exponent zeroed.
  MultiPoly coeff_in(std::size_t var, int k) const;
  MultiPoly coeff_in(std::string_view var, int k) const { return coeff_in(index_of(var), k); }

  /// Homogeneous part of the given total degree.
  MultiPoly homogeneous_part(int degree) const;

  MultiPoly& operator+=(const MultiPoly& rhs);
  MultiPoly& operator-=(const MultiPoly& rhs);
  MultiPoly& operator*=(const MultiPoly& rhs);
  MultiPoly& operator*=(const Rational& c);

  friend MultiPoly operator+(MultiPoly a, const MultiPoly& b) { return a += b; }
  friend MultiPoly operator-(MultiPoly a, const MultiPoly& b) { return a -= b; }
  friend MultiPoly operator*(const MultiPoly& a, const MultiPoly& b);
  friend MultiPoly operator*(MultiPoly a, const Rational& c) { return a *= c; }
  friend MultiPoly operator*(const Rational& c, MultiPoly a) { return a *= c; }
  friend MultiPoly operator+(MultiPoly a, const Rational& c);
  friend MultiPoly operator-(MultiPoly a, const Rational& c);
  MultiPoly operator-() const;

  friend bool operator==(const MultiPoly& a, const MultiPoly& b);
  friend bool operator!=(const MultiPoly& a, const MultiPoly& b) { return !(a == b); }

  MultiPoly pow(int k) const;

  /// Multiplies by the monomial with the given exponent vector.
  MultiPoly shifted(const Exponents& by) const;

 private:
  void require_same_vars(const MultiPoly& other, const char* op) const;

  Vars vars_;
  TermMap terms_;
};

/// Re-expresses p over `target`. Variables of p absent from `target` must not
/// occur in p.
MultiPoly align(const MultiPoly& p, const Vars& target);

/// Renames variables (same order); `renamed` must have the same size.
MultiPoly relabel(const MultiPoly& p, const Vars& renamed);

/// Smallest exponent of each variable over all terms (0 for the zero poly).
Exponents min_exponents(const MultiPoly& p);

}  // namespace charvar

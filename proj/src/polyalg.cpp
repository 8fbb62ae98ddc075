#include "charvar/polyalg.hpp"

#include <algorithm>
#include <vector>

#include "charvar/errors.hpp"

namespace charvar {

MultiPoly derivative(const MultiPoly& p, std::string_view var) {
  const std::size_t v = p.index_of(var);
  MultiPoly out(p.vars());
  for (const auto& [e, c] : p.terms()) {
    if (e[v] < 0) throw UnsupportedInput("derivative: Laurent exponent in '" + std::string(var) + "'");
    if (e[v] == 0) continue;
    Exponents f = e;
    f[v] -= 1;
    out.add_term(f, c * e[v]);
  }
  return out;
}

MultiPoly substitute(const MultiPoly& p, std::string_view var, const MultiPoly& replacement) {
  const std::size_t v = p.index_of(var);
  const Vars& target = replacement.vars();
  std::vector<std::optional<std::size_t>> map(p.num_vars());
  for (std::size_t i = 0; i < p.num_vars(); ++i) {
    if (i != v) map[i] = target->index_of(p.vars()->names[i]);
  }

  std::optional<MultiPoly> inverse;
  auto inverse_of_replacement = [&]() -> const MultiPoly& {
    if (!inverse) {
      if (replacement.terms().size() != 1) {
        throw UnsupportedInput("substitute: negative exponent needs a monomial replacement");
      }
      const auto& [e, c] = *replacement.terms().begin();
      Exponents neg(e.size());
      for (std::size_t i = 0; i < e.size(); ++i) {
        if (e[i] != 0 && !target->laurent[i]) {
          throw UnsupportedInput("substitute: replacement is not a unit monomial");
        }
        neg[i] = -e[i];
      }
      inverse = MultiPoly::monomial(target, neg, 1 / c);
    }
    return *inverse;
  };

  std::map<int, MultiPoly> powers;
  auto power = [&](int k) -> const MultiPoly& {
    auto it = powers.find(k);
    if (it != powers.end()) return it->second;
    MultiPoly val = k >= 0 ? replacement.pow(k) : inverse_of_replacement().pow(-k);
    return powers.emplace(k, std::move(val)).first->second;
  };

  MultiPoly out(target);
  for (const auto& [e, c] : p.terms()) {
    Exponents f(target->size(), 0);
    for (std::size_t i = 0; i < e.size(); ++i) {
      if (i == v || e[i] == 0) continue;
      if (!map[i]) {
        throw AlignmentError("substitute: variable '" + p.vars()->names[i] + "' missing from replacement's list");
      }
      f[*map[i]] += e[i];
    }
    out += MultiPoly::monomial(target, f, c) * power(e[v]);
  }
  return out;
}

MultiPoly specialize(const MultiPoly& p, std::string_view var, const Rational& value) {
  if (value == 0) {
    const std::size_t v = p.index_of(var);
    MultiPoly out(p.vars());
    for (const auto& [e, c] : p.terms()) {
      if (e[v] < 0) throw UndefinedOperation("specialize: negative power of a variable set to 0");
      if (e[v] == 0) out.add_term(e, c);
    }
    return out;
  }
  return substitute(p, var, MultiPoly::constant(p.vars(), value));
}

MultiPoly substitute_even_power(const MultiPoly& p, std::string_view var, const std::string& new_name) {
  const std::size_t v = p.index_of(var);
  VarSet vs = *p.vars();
  vs.names[v] = new_name;
  std::vector<std::string> laurent;
  for (std::size_t i = 0; i < vs.size(); ++i) {
    if (vs.laurent[i]) laurent.push_back(vs.names[i]);
  }
  Vars target = make_vars(vs.names, laurent);
  MultiPoly out(target);
  for (const auto& [e, c] : p.terms()) {
    if (e[v] % 2 != 0) {
      throw UnsupportedInput("substitute_even_power: odd power of '" + std::string(var) + "'");
    }
    Exponents f = e;
    f[v] /= 2;
    out.add_term(f, c);
  }
  return out;
}

namespace {

// Division algorithm against grlex leading terms; both operands have
// non-negative exponents.
std::optional<MultiPoly> divide_nonneg(MultiPoly r, const MultiPoly& q) {
  if (q.is_zero()) throw DivisionError("division by the zero polynomial");
  MultiPoly quotient(q.vars());
  const auto& [eq, cq] = q.leading_term();
  const std::size_t n = eq.size();
  Exponents shift(n);
  while (!r.is_zero()) {
    const auto& [er, cr] = r.leading_term();
    for (std::size_t i = 0; i < n; ++i) {
      shift[i] = er[i] - eq[i];
      if (shift[i] < 0) return std::nullopt;
    }
    Rational factor = cr / cq;
    quotient.add_term(shift, factor);
    MultiPoly step = q.shifted(shift);
    step *= factor;
    r -= step;
  }
  return quotient;
}

Exponents negate(Exponents e) {
  for (int& k : e) k = -k;
  return e;
}

}  // namespace

std::optional<MultiPoly> try_divide(const MultiPoly& p, const MultiPoly& q) {
  if (q.is_zero()) throw DivisionError("division by the zero polynomial");
  if (p.vars() != q.vars() && !p.vars()->same_names(*q.vars())) {
    throw AlignmentError("divide: operands have different variable lists");
  }
  if (p.is_zero()) return MultiPoly(p.vars());
  const Exponents mp = min_exponents(p);
  const Exponents mq = min_exponents(q);
  auto quotient = divide_nonneg(p.shifted(negate(mp)), q.shifted(negate(mq)));
  if (!quotient) return std::nullopt;
  Exponents net(mp.size());
  for (std::size_t i = 0; i < net.size(); ++i) net[i] = mp[i] - mq[i];
  for (std::size_t i = 0; i < net.size(); ++i) {
    if (net[i] < 0 && !p.vars()->laurent[i] && quotient->min_degree_in(i) + net[i] < 0) {
      return std::nullopt;
    }
  }
  return quotient->shifted(net);
}

MultiPoly exact_divide(const MultiPoly& p, const MultiPoly& q) {
  auto r = try_divide(p, q);
  if (!r) throw DivisionError("exact_divide: divisor does not divide dividend");
  return *std::move(r);
}

MultiPoly normalize(const MultiPoly& p) {
  if (p.is_zero()) return p;
  mpz_class num_gcd = 0;
  mpz_class den_lcm = 1;
  for (const auto& [e, c] : p.terms()) {
    num_gcd = gcd(num_gcd, mpz_class(c.get_num()));
    den_lcm = lcm(den_lcm, mpz_class(c.get_den()));
  }
  Rational scale(den_lcm, num_gcd);
  scale.canonicalize();
  if (p.leading_term().second < 0) scale = -scale;
  MultiPoly out = p;
  out *= scale;
  return out;
}

MultiPoly pseudo_remainder(const MultiPoly& a, const MultiPoly& b, std::size_t var) {
  const int db = b.degree_in(var);
  if (db < 0) throw DivisionError("pseudo_remainder: zero divisor");
  const MultiPoly lb = b.coeff_in(var, db);
  MultiPoly r = a;
  Exponents shift(a.num_vars(), 0);
  while (!r.is_zero()) {
    const int dr = r.degree_in(var);
    if (dr < db) break;
    MultiPoly lr = r.coeff_in(var, dr);
    shift[var] = dr - db;
    r = lb * r - lr * b.shifted(shift);
  }
  return r;
}

namespace {

void require_nonneg(const MultiPoly& p, const char* op) {
  if (p.has_negative_exponents()) {
    throw UnsupportedInput(std::string(op) + ": Laurent exponents are not supported");
  }
}

MultiPoly gcd_main(const MultiPoly& p, const MultiPoly& q, std::size_t var);

MultiPoly gcd_auto(const MultiPoly& p, const MultiPoly& q) {
  if (p.is_zero() && q.is_zero()) throw UndefinedOperation("gcd of two zero polynomials");
  if (p.is_zero()) return normalize(q);
  if (q.is_zero()) return normalize(p);
  if (p.is_constant() || q.is_constant()) return MultiPoly::constant(p.vars(), 1);
  for (std::size_t v = 0; v < p.num_vars(); ++v) {
    if (p.involves(v) || q.involves(v)) return gcd_main(p, q, v);
  }
  return MultiPoly::constant(p.vars(), 1);
}

MultiPoly content_of(const MultiPoly& p, std::size_t var) {
  const int d = p.degree_in(var);
  MultiPoly g(p.vars());
  for (int k = d; k >= 0; --k) {
    MultiPoly c = p.coeff_in(var, k);
    if (c.is_zero()) continue;
    g = g.is_zero() ? normalize(c) : gcd_auto(g, c);
    if (g.is_constant()) return MultiPoly::constant(p.vars(), 1);
  }
  return g;
}

MultiPoly gcd_main(const MultiPoly& p, const MultiPoly& q, std::size_t var) {
  if (p.is_zero() && q.is_zero()) throw UndefinedOperation("gcd of two zero polynomials");
  if (p.is_zero()) return normalize(q);
  if (q.is_zero()) return normalize(p);
  const MultiPoly cp = content_of(p, var);
  const MultiPoly cq = content_of(q, var);
  const MultiPoly content_gcd = gcd_auto(cp, cq);
  MultiPoly a = exact_divide(p, cp);
  MultiPoly b = exact_divide(q, cq);
  if (a.degree_in(var) < b.degree_in(var)) std::swap(a, b);
  while (!b.is_zero()) {
    if (b.degree_in(var) == 0) return content_gcd;
    MultiPoly r = pseudo_remainder(a, b, var);
    a = std::move(b);
    b = r.is_zero() ? r : normalize(exact_divide(r, content_of(r, var)));
  }
  return normalize(content_gcd * normalize(a));
}

}  // namespace

MultiPoly content_in(const MultiPoly& p, std::size_t var) {
  require_nonneg(p, "content_in");
  if (p.is_zero()) return p;
  return content_of(p, var);
}

MultiPoly primitive_part_in(const MultiPoly& p, std::size_t var) {
  if (p.is_zero()) return p;
  return normalize(exact_divide(p, content_in(p, var)));
}

MultiPoly gcd_in(const MultiPoly& p, const MultiPoly& q, std::string_view var) {
  if (p.vars() != q.vars() && !p.vars()->same_names(*q.vars())) {
    throw AlignmentError("gcd_in: operands have different variable lists");
  }
  require_nonneg(p, "gcd_in");
  require_nonneg(q, "gcd_in");
  return gcd_main(p, q, p.index_of(var));
}

MultiPoly gcd(const MultiPoly& p, const MultiPoly& q) {
  if (p.vars() != q.vars() && !p.vars()->same_names(*q.vars())) {
    throw AlignmentError("gcd: operands have different variable lists");
  }
  require_nonneg(p, "gcd");
  require_nonneg(q, "gcd");
  return gcd_auto(p, q);
}

MultiPoly resultant_in(const MultiPoly& p, const MultiPoly& q, std::string_view var) {
  if (p.vars() != q.vars() && !p.vars()->same_names(*q.vars())) {
    throw AlignmentError("resultant_in: operands have different variable lists");
  }
  if (p.is_zero() || q.is_zero()) throw UndefinedOperation("resultant with a zero polynomial");
  const std::size_t v = p.index_of(var);
  if (p.min_degree_in(v) < 0 || q.min_degree_in(v) < 0) {
    throw UnsupportedInput("resultant_in: Laurent exponents in the eliminated variable");
  }
  const int m = p.degree_in(v);
  const int n = q.degree_in(v);
  if (m == 0 && n == 0) throw UndefinedOperation("resultant of two polynomials constant in the variable");
  const int size = m + n;
  const MultiPoly zero(p.vars());
  std::vector<std::vector<MultiPoly>> mat(size, std::vector<MultiPoly>(size, zero));
  for (int row = 0; row < n; ++row) {
    for (int k = 0; k <= m; ++k) mat[row][row + k] = p.coeff_in(v, m - k);
  }
  for (int row = 0; row < m; ++row) {
    for (int k = 0; k <= n; ++k) mat[n + row][row + k] = q.coeff_in(v, n - k);
  }

  // Bareiss fraction-free elimination.
  int sign = 1;
  MultiPoly prev = MultiPoly::constant(p.vars(), 1);
  for (int k = 0; k + 1 < size; ++k) {
    if (mat[k][k].is_zero()) {
      int swap_row = -1;
      for (int i = k + 1; i < size; ++i) {
        if (!mat[i][k].is_zero()) {
          swap_row = i;
          break;
        }
      }
      if (swap_row < 0) return zero;
      std::swap(mat[k], mat[swap_row]);
      sign = -sign;
    }
    for (int i = k + 1; i < size; ++i) {
      for (int j = k + 1; j < size; ++j) {
        MultiPoly num = mat[i][j] * mat[k][k] - mat[i][k] * mat[k][j];
        mat[i][j] = exact_divide(num, prev);
      }
      mat[i][k] = zero;
    }
    prev = mat[k][k];
  }
  MultiPoly det = mat[size - 1][size - 1];
  if (sign < 0) det = -det;
  return det;
}

bool is_squarefree_in(const MultiPoly& p, std::string_view var) {
  if (p.is_zero()) throw UndefinedOperation("is_squarefree_in: zero polynomial");
  const MultiPoly g = gcd_in(p, derivative(p, var), var);
  return g.degree_in(var) == 0;
}

std::complex<double> eval_complex(const MultiPoly& p,
                                  const std::map<std::string, std::complex<double>>& point) {
  const std::size_t n = p.num_vars();
  std::vector<std::complex<double>> values(n);
  std::vector<bool> needed(n, false);
  for (const auto& [e, c] : p.terms()) {
    for (std::size_t i = 0; i < n; ++i) {
      if (e[i] != 0) needed[i] = true;
    }
  }
  for (std::size_t i = 0; i < n; ++i) {
    auto it = point.find(p.vars()->names[i]);
    if (it == point.end()) {
      if (needed[i] || p.is_zero()) {
        throw UnsupportedInput("eval_complex: no value for variable '" + p.vars()->names[i] + "'");
      }
      continue;
    }
    values[i] = it->second;
  }
  std::complex<double> sum = 0;
  for (const auto& [e, c] : p.terms()) {
    std::complex<double> term = c.get_d();
    for (std::size_t i = 0; i < n; ++i) {
      if (e[i] != 0) term *= std::pow(values[i], e[i]);
    }
    sum += term;
  }
  return sum;
}

}  // namespace charvar

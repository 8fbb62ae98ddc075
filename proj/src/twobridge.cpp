#include "charvar/twobridge.hpp"

#include <algorithm>
#include <numeric>

#include "charvar/errors.hpp"
#include "charvar/factor_oracle.hpp"
#include "charvar/format.hpp"
#include "charvar/polyalg.hpp"
#include "charvar/trace.hpp"

namespace charvar {

TwoBridgeKnot::TwoBridgeKnot(int p, int m) : p_(p), m_(m) {
  if (p < 3 || p % 2 == 0) throw UnsupportedInput("two-bridge knot: p must be odd and >= 3");
  if (m <= 0 || m >= p || m % 2 == 0) throw UnsupportedInput("two-bridge knot: m must be odd with 0 < m < p");
  if (std::gcd(p, m) != 1) throw UnsupportedInput("two-bridge knot: gcd(p, m) must be 1");
}

std::vector<TwoBridgeKnot> two_bridge_knots_up_to(int max_p) {
  std::vector<TwoBridgeKnot> out;
  for (int p = 3; p <= max_p; p += 2) {
    for (int m = 1; m < p; m += 2) {
      if (std::gcd(p, m) == 1) out.emplace_back(p, m);
    }
  }
  return out;
}

std::vector<int> epsilon_sequence(const TwoBridgeKnot& k) {
  std::vector<int> eps(k.p() - 1);
  for (int j = 1; j < k.p(); ++j) eps[j - 1] = ((j * k.m()) / k.p()) % 2 == 0 ? 1 : -1;
  for (int j = 1; j < k.p(); ++j) {
    if (eps[j - 1] != eps[k.p() - j - 1]) throw InternalInconsistency("epsilon sequence is not a palindrome");
  }
  return eps;
}

FreeWord word_w(const TwoBridgeKnot& k) {
  const auto eps = epsilon_sequence(k);
  std::vector<Letter> letters;
  for (std::size_t i = 0; i < eps.size(); ++i) {
    letters.push_back({i % 2 == 0 ? Generator::First : Generator::Second, eps[i]});
  }
  return FreeWord(std::move(letters));
}

FreeWord word_slice(const TwoBridgeKnot& k, int j) {
  if (j < 0 || j > k.d()) throw RangeError("word_slice: j must lie in [0, d]");
  const FreeWord w = word_w(k);
  const auto& all = w.letters();
  return FreeWord(std::vector<Letter>(all.begin() + j, all.end() - j));
}

const Vars& xz_vars() {
  static const Vars v = make_vars({"x", "z"});
  return v;
}

const Vars& Xz_vars() {
  static const Vars v = make_vars({"X", "z"});
  return v;
}

namespace {

// Both generators are meridians, so tr b = tr a = x.
const TraceCoords& meridian_coords() {
  static const TraceCoords coords{MultiPoly::variable(xz_vars(), "x"), MultiPoly::variable(xz_vars(), "x"),
                                  MultiPoly::variable(xz_vars(), "z")};
  return coords;
}

bool only_even_x_powers(const MultiPoly& p) {
  const std::size_t x = p.index_of("x");
  for (const auto& [e, c] : p.terms()) {
    if (e[x] % 2 != 0) return false;
  }
  return true;
}

MultiPoly to_Xz(const MultiPoly& p) { return relabel(substitute_even_power(p, "x", "X"), Xz_vars()); }

nlohmann::json point_json(const LatticePoint& pt) { return nlohmann::json::array({pt[0], pt[1]}); }

}  // namespace

std::vector<MultiPoly> slice_traces(const TwoBridgeKnot& k) {
  std::vector<MultiPoly> out;
  const FreeWord w = word_w(k);
  const auto& all = w.letters();
  for (int j = 0; j < k.d(); ++j) {
    const FreeWord slice(std::vector<Letter>(all.begin() + j, all.end() - j));
    out.push_back(fold(slice, meridian_coords()).trace(meridian_coords()));
  }
  return out;
}

MultiPoly phi_from_slices(const TwoBridgeKnot& k, const std::vector<MultiPoly>& slices) {
  MultiPoly sum = MultiPoly::constant(xz_vars(), k.d() % 2 == 0 ? 1 : -1);
  for (int j = 0; j < k.d(); ++j) {
    if (j % 2 == 0) {
      sum += slices[j];
    } else {
      sum -= slices[j];
    }
  }
  if (!only_even_x_powers(sum)) throw InternalInconsistency("Phi has an odd power of x");
  if (sum.degree_in("z") != k.d() || sum.coeff_in("z", k.d()) != MultiPoly::constant(xz_vars(), 1)) {
    throw InternalInconsistency("Phi does not have z-leading term z^d");
  }
  return sum;
}

MultiPoly phi(const TwoBridgeKnot& k) { return phi_from_slices(k, slice_traces(k)); }

MultiPoly leading_form(int a, int b) {
  const auto X = MultiPoly::variable(Xz_vars(), "X");
  const auto z = MultiPoly::variable(Xz_vars(), "z");
  return z.pow(a) * (z - X).pow(b);
}

MultiPoly gamma_from_phi(const TwoBridgeKnot& k, const MultiPoly& phi_poly) {
  if (!only_even_x_powers(phi_poly)) throw InternalInconsistency("Phi has an odd power of x");
  MultiPoly g = to_Xz(phi_poly);
  if (g.total_degree() != k.d() || g.homogeneous_part(k.d()) != leading_form(k.d() - k.c(), k.c())) {
    throw InternalInconsistency("Gamma's top-degree part is not z^(d-c) (z-X)^c");
  }
  return g;
}

MultiPoly gamma(const TwoBridgeKnot& k) { return gamma_from_phi(k, phi(k)); }

MultiPoly phi_d(int d) {
  static const Vars z = make_vars({"z"});
  return chebyshev_s(d, z, "z") - chebyshev_s(d - 1, z, "z");
}

namespace {

std::string subject_of(const TwoBridgeKnot& k) {
  return "twobridge(p=" + std::to_string(k.p()) + ",m=" + std::to_string(k.m()) + ")";
}

}  // namespace

VerificationReport check_newton_vertices(const TwoBridgeKnot& k, const MultiPoly& gamma_poly) {
  const NewtonPolygon hull = newton_polygon(gamma_poly);
  const LatticePoint first{0, k.d()};
  const LatticePoint second{k.c(), (k.p() - k.m()) / 2};
  const bool ok = hull.has_vertex(first) && hull.has_vertex(second);
  nlohmann::json verts = nlohmann::json::array();
  for (const auto& v : hull.vertices) verts.push_back(point_json(v));
  return {"NewtonVertices", subject_of(k), status_of(ok),
          {{"vertices", verts}, {"expected", {point_json(first), point_json(second)}}}};
}

VerificationReport check_newton_vertices(const TwoBridgeKnot& k) { return check_newton_vertices(k, gamma(k)); }

VerificationReport check_prop_lot(const TwoBridgeKnot& k, const std::vector<MultiPoly>& slices) {
  const auto eps = epsilon_sequence(k);
  const int d = k.d();
  // mu[j] = nu_j nu_(j+1) for j = 1..d (1-based); mu_d = 1 by the palindrome.
  std::vector<int> mu(d + 2, 1);
  for (int j = 1; j <= d; ++j) mu[j] = eps[j - 1] * eps[j];
  bool all_ok = true;
  nlohmann::json per_j = nlohmann::json::array();
  int c_j = 0;
  std::vector<int> cs(d + 2, 0);
  for (int j = d; j >= 1; --j) {
    if (mu[j] == -1) ++c_j;
    cs[j] = c_j;
  }
  for (int j = 1; j <= d; ++j) {
    const MultiPoly& w = slices[j - 1];
    const int degree = d + 1 - j;
    bool ok = only_even_x_powers(w);
    std::string top_text;
    int total = -1;
    if (ok) {
      const MultiPoly W = to_Xz(w);
      total = W.total_degree();
      const MultiPoly top = W.homogeneous_part(degree);
      top_text = to_string(top);
      ok = total == degree && top == leading_form(degree - cs[j], cs[j]);
    }
    all_ok = all_ok && ok;
    per_j.push_back({{"j", j},
                     {"c_j", cs[j]},
                     {"total_degree", total},
                     {"top", top_text},
                     {"expected", to_string(leading_form(degree - cs[j], cs[j]))},
                     {"status", ok ? "pass" : "fail"}});
  }
  return {"LeadingTerms", subject_of(k), status_of(all_ok), {{"c", cs[1]}, {"per_j", per_j}}};
}

VerificationReport check_prop_lot(const TwoBridgeKnot& k) { return check_prop_lot(k, slice_traces(k)); }

VerificationReport check_x0_specialization(const TwoBridgeKnot& k, const MultiPoly& phi_poly) {
  const MultiPoly at0 = align(specialize(phi_poly, "x", 0), make_vars({"z"}));
  const MultiPoly expected = phi_d(k.d());
  const bool at0_ok = at0 == expected;
  const bool integral = std::all_of(phi_poly.terms().begin(), phi_poly.terms().end(),
                                    [](const auto& t) { return t.second.get_den() == 1; });
  const bool even = only_even_x_powers(phi_poly);
  const bool lead = phi_poly.degree_in("z") == k.d() &&
                    phi_poly.coeff_in("z", k.d()) == MultiPoly::constant(phi_poly.vars(), 1);
  return {"PhiAtXZero", subject_of(k), status_of(at0_ok && integral && even && lead),
          {{"phi_at_x0", to_string(at0)},
           {"expected", to_string(expected)},
           {"integer_coefficients", integral},
           {"even_x_powers", even},
           {"z_leading_term_is_z_d", lead}}};
}

bool is_prime(int n) {
  if (n < 2) return false;
  for (int q = 2; q * q <= n; ++q) {
    if (n % q == 0) return false;
  }
  return true;
}

namespace {

void require_odd_p(int p) {
  if (p < 3 || p % 2 == 0) throw UnsupportedInput("p must be odd and >= 3");
}

}  // namespace

bool irreducible_over_Q_phi_d(int p) {
  require_odd_p(p);
  const bool verdict = is_prime(p);
  const int d = (p - 1) / 2;
  if (d <= 11 && (factor_oracle(phi_d(d)).size() == 1) != verdict) {
    throw InternalInconsistency("factor oracle disagrees with the primality verdict for p = " + std::to_string(p));
  }
  return verdict;
}

VerificationReport irreducibility_cross_check(int p) {
  require_odd_p(p);
  const int d = (p - 1) / 2;
  const auto factors = factor_oracle(phi_d(d));
  const bool prime = is_prime(p);
  const bool oracle_irreducible = factors.size() == 1;
  nlohmann::json texts = nlohmann::json::array();
  for (const auto& f : factors) texts.push_back(to_string(f));
  return {"PhiDIrreducible", "phi_d(p=" + std::to_string(p) + ")", status_of(prime == oracle_irreducible),
          {{"p_prime", prime}, {"oracle_irreducible", oracle_irreducible}, {"factors", texts}}};
}

ComplexVerdict over_C_certificate(const TwoBridgeKnot& k) {
  const int g = k.c() == 0 ? k.d() : std::gcd(k.d(), k.c());
  return is_prime(k.p()) && g == 1 ? ComplexVerdict::GuaranteedIrreducibleOverC : ComplexVerdict::Unknown;
}

const char* to_string(ComplexVerdict v) {
  return v == ComplexVerdict::GuaranteedIrreducibleOverC ? "guaranteed-irreducible-over-C" : "unknown";
}

}  // namespace charvar

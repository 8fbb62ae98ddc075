#include "charvar/suite.hpp"

#include <random>

#include "charvar/format.hpp"
#include "charvar/pretzel.hpp"
#include "charvar/qtorus.hpp"
#include "charvar/trace.hpp"

namespace charvar {

PretzelRanges PretzelRanges::uniform(IntRange r) {
  const IntRange w{std::max(r.lo, -kWitnessBound), std::min(r.hi, kWitnessBound)};
  return {r, r, r, r, w};
}

std::vector<VerificationReport> twobridge_reports(const TwoBridgeKnot& k, bool prop_lot) {
  const auto slices = slice_traces(k);
  const MultiPoly ph = phi_from_slices(k, slices);
  std::vector<VerificationReport> out{check_x0_specialization(k, ph),
                                      check_newton_vertices(k, gamma_from_phi(k, ph))};
  if (prop_lot) out.push_back(check_prop_lot(k, slices));
  return out;
}

std::vector<VerificationReport> closed_form_suite(IntRange r) {
  std::vector<VerificationReport> out;
  for (int n = r.lo; n <= r.hi; ++n) out.push_back(closed_form_report(n));
  return out;
}

std::vector<VerificationReport> resultant_suite(IntRange r) {
  std::vector<VerificationReport> out;
  for (int n = r.lo; n <= r.hi; ++n) out.push_back(resultant_report(n));
  return out;
}

std::vector<VerificationReport> x0_suite(IntRange r, double tol, std::optional<IntRange> seidenberg) {
  std::vector<VerificationReport> out;
  for (int n = r.lo; n <= r.hi; ++n) out.push_back(x0_slice_report(n, tol));
  if (seidenberg) {
    for (int n = seidenberg->lo; n <= seidenberg->hi; ++n) out.push_back(seidenberg_check(n, tol));
  }
  return out;
}

std::vector<VerificationReport> witness_suite(IntRange r) {
  std::vector<VerificationReport> out;
  for (int n = r.lo; n <= r.hi; ++n) {
    out.push_back(witness_case1(n));
    out.push_back(witness_case2(n));
    out.push_back(witness_case3(n));
  }
  return out;
}

std::vector<VerificationReport> pretzel_suite(const PretzelRanges& r, double tol) {
  std::vector<VerificationReport> out;
  auto append = [&out](std::vector<VerificationReport> more) {
    out.insert(out.end(), std::make_move_iterator(more.begin()), std::make_move_iterator(more.end()));
  };
  append(closed_form_suite(r.closed_forms));
  append(resultant_suite(r.resultant));
  append(x0_suite(r.x0_slice, tol, r.seidenberg));
  append(witness_suite(r.witnesses));
  return out;
}

std::vector<VerificationReport> twobridge_structure_suite(int max_p, int prop_lot_max_p) {
  std::vector<VerificationReport> out;
  for (const auto& k : two_bridge_knots_up_to(max_p)) {
    auto more = twobridge_reports(k, k.p() <= prop_lot_max_p);
    out.insert(out.end(), more.begin(), more.end());
  }
  return out;
}

std::vector<VerificationReport> irreducibility_suite(int max_p) {
  std::vector<VerificationReport> out;
  for (int p = 3; p <= max_p; p += 2) out.push_back(irreducibility_cross_check(p));
  return out;
}

std::vector<VerificationReport> twobridge_suite(const TwoBridgeRanges& r) {
  auto out = twobridge_structure_suite(r.max_p, r.prop_lot_max_p);
  auto irr = irreducibility_suite(r.irreducibility_max_p);
  out.insert(out.end(), irr.begin(), irr.end());
  return out;
}

namespace {

QTElem random_element(std::mt19937_64& rng) {
  std::uniform_int_distribution<int> l_dist(-3, 3);
  std::uniform_int_distribution<int> e_dist(-2, 2);
  std::uniform_int_distribution<int> c_dist(-4, 4);
  QTElem p;
  for (int i = 0; i < 4; ++i) p = p + qt_monomial(e_dist(rng), e_dist(rng), l_dist(rng), c_dist(rng));
  return p;
}

DiscreteSeq random_sequence(std::uint64_t seed) {
  return [seed](int n) {
    std::mt19937_64 rng(seed + static_cast<std::uint64_t>(n + (1 << 20)));
    std::uniform_int_distribution<int> e(-3, 3), c(-3, 3);
    MultiPoly p(t_vars());
    for (int i = 0; i < 3; ++i) p.add_term({e(rng)}, c(rng));
    return p;
  };
}

// Counts failures of `check` over `cases` random draws and keeps the first one.
template <class Check>
VerificationReport property_report(const std::string& claim, int cases, std::mt19937_64& rng, Check check) {
  int failures = 0;
  nlohmann::json first;
  for (int i = 0; i < cases; ++i) {
    if (auto bad = check(rng); bad) {
      if (failures++ == 0) first = *bad;
    }
  }
  nlohmann::json details{{"cases", cases}, {"failures", failures}};
  if (failures > 0) details["first_counterexample"] = first;
  return {claim, "quantum-torus", status_of(failures == 0), details};
}

using MaybeJson = std::optional<nlohmann::json>;

}  // namespace

std::vector<VerificationReport> qtorus_suite(const QtorusOptions& o) {
  std::mt19937_64 rng(o.seed);
  std::vector<VerificationReport> out;
  out.push_back(property_report("QtAssociativity", o.random_cases, rng, [](auto& g) -> MaybeJson {
    const QTElem a = random_element(g), b = random_element(g), c = random_element(g);
    if (qt_mul(qt_mul(a, b), c) == qt_mul(a, qt_mul(b, c))) return std::nullopt;
    return nlohmann::json{{"p", to_string(a)}, {"q", to_string(b)}, {"r", to_string(c)}};
  }));
  out.push_back(property_report("SigmaAutomorphism", o.random_cases, rng, [](auto& g) -> MaybeJson {
    const QTElem a = random_element(g), b = random_element(g);
    if (qt_sigma(qt_mul(a, b)) == qt_mul(qt_sigma(a), qt_sigma(b))) return std::nullopt;
    return nlohmann::json{{"p", to_string(a)}, {"q", to_string(b)}};
  }));
  out.push_back(property_report("SigmaInvolution", o.random_cases, rng, [](auto& g) -> MaybeJson {
    const QTElem a = random_element(g);
    if (qt_sigma(qt_sigma(a)) == a) return std::nullopt;
    return nlohmann::json{{"p", to_string(a)}};
  }));
  out.push_back(property_report("EpsilonMultiplicative", o.random_cases, rng, [](auto& g) -> MaybeJson {
    const QTElem a = random_element(g), b = random_element(g);
    if (epsilon_eval(qt_mul(a, b)) == epsilon_eval(a) * epsilon_eval(b)) return std::nullopt;
    return nlohmann::json{{"p", to_string(a)}, {"q", to_string(b)}};
  }));
  out.push_back(property_report("ActionCompatibility", o.random_cases, rng, [](auto& g) -> MaybeJson {
    const QTElem a = random_element(g), b = random_element(g);
    const DiscreteSeq f = random_sequence(g());
    const int n = std::uniform_int_distribution<int>(-5, 5)(g);
    if (act(qt_mul(a, b), f, n) == act(a, apply(b, f), n)) return std::nullopt;
    return nlohmann::json{{"p", to_string(a)}, {"q", to_string(b)}, {"n", n}};
  }));
  {
    nlohmann::json bad = nlohmann::json::array();
    for (int k = -5; k <= 5; ++k) {
      for (int l = -5; l <= 5; ++l) {
        if (qt_sigma(upsilon(k, l)) != upsilon(k, l)) bad.push_back({k, l});
      }
    }
    out.push_back({"UpsilonSigmaInvariant", "quantum-torus", status_of(bad.empty()),
                   {{"range", {-5, 5}}, {"failures", bad}}});
  }
  out.push_back(annihilation_check(alpha_unknot(), jones_unknot, o.annihilation.lo, o.annihilation.hi, "unknot"));
  out.push_back(aj_unknot_report());
  out.push_back(sigma_symmetry_report());
  return out;
}

std::vector<VerificationReport> trace_oracle_suite(const TraceOracleOptions& o) {
  std::mt19937_64 rng(o.seed);
  std::uniform_int_distribution<int> len_dist(0, o.max_length);
  std::uniform_int_distribution<int> coin(0, 1);
  int failures = 0;
  nlohmann::json failed = nlohmann::json::array();
  for (int i = 0; i < o.words; ++i) {
    std::vector<Letter> letters;
    const int len = len_dist(rng);
    for (int j = 0; j < len; ++j) {
      letters.push_back({coin(rng) ? Generator::First : Generator::Second, coin(rng) ? 1 : -1});
    }
    const FreeWord w(letters);
    if (!numeric_trace_oracle(w, o.trials, o.tol, o.seed + static_cast<std::uint64_t>(i) + 1)) {
      ++failures;
      if (failed.size() < 10) failed.push_back(to_string(w));
    }
  }
  return {{"TraceOracle", "random-words", status_of(failures == 0),
           {{"words", o.words},
            {"max_length", o.max_length},
            {"trials", o.trials},
            {"tolerance", o.tol},
            {"seed", o.seed},
            {"failures", failures},
            {"failed_words", failed}}}};
}

}  // namespace charvar

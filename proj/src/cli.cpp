#include "charvar/cli.hpp"

#include <CLI11.hpp>

#include <iomanip>
#include <ostream>
#include <stdexcept>

#include "charvar/errors.hpp"
#include "charvar/format.hpp"
#include "charvar/pretzel.hpp"
#include "charvar/qtorus.hpp"
#include "charvar/suite.hpp"
#include "charvar/trace.hpp"
#include "charvar/twobridge.hpp"

#ifndef CHARVAR_VERSION
#define CHARVAR_VERSION "0.0.0"
#endif

namespace charvar {

namespace {

struct Outcome {
  std::string subject;
  nlohmann::json result = nlohmann::json::object();
  std::vector<VerificationReport> reports;
  // Plain-text body printed before the report table.
  std::string text;
};

void emit(Outcome o, bool json, std::ostream& out) {
  sort_reports(o.reports);
  if (json) {
    nlohmann::json reports = nlohmann::json::array();
    for (const auto& r : o.reports) reports.push_back(r.to_json());
    const nlohmann::json doc{{"tool_version", CHARVAR_VERSION},
                             {"subject", o.subject},
                             {"result", o.result},
                             {"reports", reports}};
    out << doc.dump(2) << "\n";
    return;
  }
  out << o.text;
  if (o.reports.empty()) return;
  std::size_t claim_w = 8, subject_w = 7;
  for (const auto& r : o.reports) {
    claim_w = std::max(claim_w, r.claim_id.size());
    subject_w = std::max(subject_w, r.subject.size());
  }
  out << std::left << std::setw(static_cast<int>(claim_w) + 2) << "claim" << std::setw(static_cast<int>(subject_w) + 2)
      << "subject" << "status\n";
  int failed = 0;
  for (const auto& r : o.reports) {
    out << std::setw(static_cast<int>(claim_w) + 2) << r.claim_id << std::setw(static_cast<int>(subject_w) + 2)
        << r.subject << to_string(r.status) << "\n";
    if (!r.passed()) ++failed;
  }
  out << o.reports.size() << " reports, " << failed << " failed\n";
}

Outcome twobridge_outcome(int p, int m) {
  const TwoBridgeKnot k(p, m);
  const auto slices = slice_traces(k);
  const MultiPoly ph = phi_from_slices(k, slices);
  const MultiPoly ga = gamma_from_phi(k, ph);
  Outcome o;
  o.subject = "twobridge(p=" + std::to_string(p) + ",m=" + std::to_string(m) + ")";
  o.reports = {check_x0_specialization(k, ph), check_newton_vertices(k, ga), check_prop_lot(k, slices)};
  nlohmann::json irreducibility{{"over_Q_at_x0", is_prime(p)}, {"over_C", to_string(over_C_certificate(k))}};
  if (k.d() <= 24) o.reports.push_back(irreducibility_cross_check(p));
  nlohmann::json lot = nlohmann::json::object();
  for (const auto& e : o.reports[2].details["per_j"]) lot[std::to_string(e["j"].get<int>())] = e["status"];
  o.result = {{"phi", to_string(ph)},
              {"gamma", to_string(ga)},
              {"z_degree", ph.degree_in("z")},
              {"newton_vertices", o.reports[1].details["vertices"]},
              {"prop_lot", lot},
              {"irreducibility", irreducibility}};
  o.text = "Phi = " + to_string(ph) + "\nGamma = " + to_string(ga) + "\n";
  return o;
}

Outcome pretzel_outcome(int n, double tol) {
  Outcome o;
  o.subject = "pretzel(n=" + std::to_string(n) + ")";
  o.reports = {closed_form_report(n), resultant_report(n), x0_slice_report(n, tol), seidenberg_check(n, tol)};
  o.result = {{"P", to_string(p_closed())},
              {"Q_n", to_string(q_closed(n))},
              {"resultant", o.reports[1].details},
              {"x0_slice", o.reports[2].details},
              {"seidenberg", o.reports[3].details}};
  if (std::abs(n) <= kWitnessBound) {
    o.reports.push_back(witness_case1(n));
    o.reports.push_back(witness_case2(n));
    o.reports.push_back(witness_case3(n));
    o.result["witnesses"] = {{"case1", to_string(o.reports[4].status)},
                             {"case2", to_string(o.reports[5].status)},
                             {"case3", to_string(o.reports[6].status)}};
  } else {
    o.result["witnesses"] = "skipped: |n| > 6";
  }
  o.text = "P = " + to_string(p_closed()) + "\nQ_n = " + to_string(q_closed(n)) + "\n";
  return o;
}

Outcome qtorus_outcome(IntRange range) {
  Outcome o;
  o.subject = "unknot";
  const auto ann = annihilation_check(alpha_unknot(), jones_unknot, range.lo, range.hi, "unknot");
  const auto aj = aj_unknot_report();
  const auto sig = sigma_symmetry_report();
  o.reports = {ann, aj, sig};
  o.result = {{"alpha", to_string(alpha_unknot())},
              {"annihilation", to_string(ann.status)},
              {"epsilon_alpha", aj.details["epsilon_alpha"]},
              {"aj_unknot",
               {{"quotient_by_L_minus_1", aj.details["quotient_by_L_minus_1"]}, {"M_only", aj.details["M_only"]}}},
              {"sigma_factor", sig.details}};
  o.text = "alpha = " + to_string(alpha_unknot()) + "\n";
  return o;
}

Outcome trace_outcome(const std::string& text, const std::string& first, const std::string& second,
                      std::uint64_t seed) {
  const FreeWord w = parse_word(text, first, second);
  const MultiPoly tr = trace_poly(w);
  Outcome o;
  o.subject = "trace(" + to_string(w, first, second) + ")";
  const bool ok = numeric_trace_oracle(w, 20, 1e-8, seed);
  o.reports.push_back({"TraceOracle", o.subject, ok ? Status::NumericPass : Status::Fail,
                       {{"trials", 20}, {"tolerance", 1e-8}, {"seed", seed}}});
  o.result = {{"word", to_string(w, first, second)}, {"trace", to_string(tr)}};
  o.text = to_string(tr) + "\n";
  return o;
}

Outcome verify_outcome(const std::string& suite, std::optional<IntRange> n_range, double tol, std::uint64_t seed) {
  Outcome o;
  o.subject = "suite:" + suite;
  auto append = [&o](std::vector<VerificationReport> more) {
    o.reports.insert(o.reports.end(), more.begin(), more.end());
  };
  const PretzelRanges pr = n_range ? PretzelRanges::uniform(*n_range) : PretzelRanges{};
  if (suite == "all" || suite == "twobridge") append(twobridge_suite());
  if (suite == "all" || suite == "pretzel") append(pretzel_suite(pr, tol));
  if (suite == "all" || suite == "qtorus") append(qtorus_suite({.seed = seed}));
  if (suite == "all") append(trace_oracle_suite({.seed = seed}));
  int failed = 0;
  for (const auto& r : o.reports) failed += r.passed() ? 0 : 1;
  o.result = {{"total", o.reports.size()}, {"failed", failed}};
  return o;
}

}  // namespace

int exit_code_for(const std::vector<VerificationReport>& reports) {
  return all_passed(reports) ? kExitOk : kExitFailure;
}

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Character varieties and the quantum torus: exact checks", "charvar"};
  app.require_subcommand(1);
  app.set_version_flag("--version", CHARVAR_VERSION);

  bool json = false;
  double tol = 1e-9;
  std::uint64_t seed = kDefaultSeed;

  auto* tb = app.add_subcommand("twobridge", "Phi, Gamma and leading-term checks for b(p, m)");
  int p = 0, m = 0;
  tb->add_option("--p", p, "odd p >= 3")->required();
  tb->add_option("--m", m, "odd m, 0 < m < p, gcd(p, m) = 1")->required();
  tb->add_flag("--json", json);

  auto* pz = app.add_subcommand("pretzel", "(-2, 3, 2n+1)-pretzel checks for one n");
  int n = 0;
  pz->add_option("--n", n)->required();
  pz->add_option("--tol", tol, "root tolerance")->capture_default_str();
  pz->add_flag("--json", json);

  auto* qt = app.add_subcommand("qtorus", "Quantum torus demonstrations");
  qt->require_subcommand(1);
  auto* demo = qt->add_subcommand("demo-unknot", "Recurrence, AJ shape and sigma-symmetry for the unknot");
  std::vector<int> range{-20, 20};
  demo->add_option("--range", range, "window a b")->expected(2);
  demo->add_flag("--json", json);

  auto* tr = app.add_subcommand("trace", "Trace polynomial of a word in x = tr a, y = tr b, z = tr ab");
  std::string word;
  std::vector<std::string> gens{"a", "b"};
  tr->add_option("--word", word, "e.g. \"a b^-1\"")->required();
  tr->add_option("--gens", gens, "generator names")->expected(2);
  tr->add_option("--seed", seed)->capture_default_str();
  tr->add_flag("--json", json);

  auto* vf = app.add_subcommand("verify", "Run a verification suite");
  std::string suite = "all";
  std::vector<int> n_range;
  vf->add_option("--suite", suite)->check(CLI::IsMember({"all", "twobridge", "pretzel", "qtorus"}))->capture_default_str();
  vf->add_option("--n-range", n_range, "pretzel range A B")->expected(2);
  vf->add_option("--tol", tol)->capture_default_str();
  vf->add_option("--seed", seed)->capture_default_str();
  vf->add_flag("--json", json);

  std::vector<std::string> rest(args.size() > 1 ? args.begin() + 1 : args.end(), args.end());
  std::reverse(rest.begin(), rest.end());
  try {
    app.parse(rest);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kExitOk;
  } catch (const CLI::CallForVersion&) {
    out << CHARVAR_VERSION << "\n";
    return kExitOk;
  } catch (const CLI::ParseError& e) {
    err << e.what() << "\n" << app.help();
    return kExitUsage;
  }

  try {
    Outcome o;
    if (*tb) {
      o = twobridge_outcome(p, m);
    } else if (*pz) {
      o = pretzel_outcome(n, tol);
    } else if (*demo) {
      o = qtorus_outcome({range[0], range[1]});
    } else if (*tr) {
      o = trace_outcome(word, gens[0], gens[1], seed);
    } else {
      std::optional<IntRange> r;
      if (!n_range.empty()) r = IntRange{n_range[0], n_range[1]};
      o = verify_outcome(suite, r, tol, seed);
    }
    const int code = exit_code_for(o.reports);
    emit(std::move(o), json, out);
    return code;
  } catch (const std::invalid_argument& e) {
    err << "error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const std::out_of_range& e) {
    err << "error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return kExitFailure;
  }
}

}  // namespace charvar

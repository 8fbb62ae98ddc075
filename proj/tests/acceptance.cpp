// Acceptance run: one line per criterion, exit 0 iff every criterion passes
// within its time limit.

#include <chrono>
#include <cstdio>
#include <functional>
#include <string>
#include <vector>

#include "charvar/suite.hpp"

namespace {

using charvar::IntRange;
using charvar::VerificationReport;

constexpr double kRootTol = 1e-9;
constexpr double kTraceTol = 1e-8;
constexpr int kTraceWords = 500;
constexpr int kTraceMaxLength = 12;
constexpr int kTraceTrials = 20;
constexpr int kRandomCases = 200;

struct Criterion {
  int id;
  const char* name;
  double limit_seconds;
  std::function<std::vector<VerificationReport>()> run;
};

}  // namespace

int main() {
  const std::vector<Criterion> criteria{
      {1, "closed forms P, Q_n equal trace polynomials, n in [-6, 6]", 5,
       [] { return charvar::closed_form_suite({-6, 6}); }},
      {2, "resultant degree, leading coefficient, T-expression, n in [-8, 8]", 60,
       [] { return charvar::resultant_suite({-8, 8}); }},
      {3, "x=0 identity, a_n U_n square-free, cosine-root residuals, n in [-6, 12]", 10,
       [] { return charvar::x0_suite({-6, 12}, kRootTol); }},
      {4, "witness representations and determinants, n in [-4, 4]", 10,
       [] { return charvar::witness_suite({-4, 4}); }},
      {5, "two-bridge Phi structure, Newton vertices (p <= 45), leading terms (p <= 31)", 120,
       [] { return charvar::twobridge_structure_suite(45, 31); }},
      {6, "Phi_d irreducibility verdict vs factor oracle, odd p in [3, 23]", 30,
       [] { return charvar::irreducibility_suite(23); }},
      {7, "quantum torus properties, unknot recurrence, AJ shape, sigma-symmetry", 5,
       [] {
         return charvar::qtorus_suite(
             {.seed = charvar::kDefaultSeed, .random_cases = kRandomCases, .annihilation = IntRange{-20, 20}});
       }},
      {8, "trace engine vs random SL2(C) matrices", 20,
       [] {
         return charvar::trace_oracle_suite({.seed = charvar::kDefaultSeed,
                                             .words = kTraceWords,
                                             .max_length = kTraceMaxLength,
                                             .trials = kTraceTrials,
                                             .tol = kTraceTol});
       }},
  };

  int failed = 0;
  for (const auto& c : criteria) {
    const auto start = std::chrono::steady_clock::now();
    std::vector<VerificationReport> reports;
    std::string error;
    try {
      reports = c.run();
    } catch (const std::exception& e) {
      error = e.what();
    }
    const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    int bad = 0;
    for (const auto& r : reports) {
      if (!r.passed()) {
        ++bad;
        std::fprintf(stderr, "  failing: %s %s %s\n", r.claim_id.c_str(), r.subject.c_str(), r.details.dump().c_str());
      }
    }
    const bool ok = error.empty() && bad == 0 && !reports.empty() && secs < c.limit_seconds;
    if (!ok) ++failed;
    std::printf("criterion %d: %s  %s  [%zu reports, %d failing, %.2f s, limit %.0f s]%s%s\n", c.id,
                ok ? "PASS" : "FAIL", c.name, reports.size(), bad, secs, c.limit_seconds,
                error.empty() ? "" : "  error: ", error.c_str());
  }
  std::printf("%d of %zu criteria passed\n", static_cast<int>(criteria.size()) - failed, criteria.size());
  return failed == 0 ? 0 : 1;
}

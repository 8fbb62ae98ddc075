#include "charvar/report.hpp"

#include <algorithm>

namespace charvar {

std::string_view to_string(Status s) {
  switch (s) {
    case Status::Pass:
      return "pass";
    case Status::Fail:
      return "fail";
    case Status::NumericPass:
      return "numeric-pass";
  }
  return "fail";
}

nlohmann::json VerificationReport::to_json() const {
  return {{"claim_id", claim_id}, {"subject", subject}, {"status", std::string(to_string(status))},
          {"details", details}};
}

bool all_passed(const std::vector<VerificationReport>& reports) {
  return std::all_of(reports.begin(), reports.end(), [](const auto& r) { return r.passed(); });
}

void sort_reports(std::vector<VerificationReport>& reports) {
  std::stable_sort(reports.begin(), reports.end(), [](const auto& a, const auto& b) {
    if (a.claim_id != b.claim_id) return a.claim_id < b.claim_id;
    return a.subject < b.subject;
  });
}

}  // namespace charvar

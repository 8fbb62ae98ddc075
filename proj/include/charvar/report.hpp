#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "json.hpp"

namespace charvar {

enum class Status { Pass, Fail, NumericPass };

std::string_view to_string(Status s);

/// Outcome of one checked claim. `claim_id` names the identity or statement
/// checked (e.g. "ClosedForms", "LeadingTerms"); `subject` names the
/// object it was checked on (e.g. "pretzel(n=3)").
struct VerificationReport {
  std::string claim_id;
  std::string subject;
  Status status = Status::Fail;
  nlohmann::json details = nlohmann::json::object();

  bool passed() const { return status != Status::Fail; }
  nlohmann::json to_json() const;
};

inline Status status_of(bool ok) { return ok ? Status::Pass : Status::Fail; }

bool all_passed(const std::vector<VerificationReport>& reports);

/// Orders by claim_id, then subject (stable for equal keys).
void sort_reports(std::vector<VerificationReport>& reports);

}  // namespace charvar

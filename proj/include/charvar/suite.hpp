#pragma once

// Report batches shared by the CLI `verify` command and the acceptance run.
// Default ranges are the acceptance ranges.

#include <cstdint>
#include <optional>
#include <utility>
#include <vector>

#include "charvar/report.hpp"
#include "charvar/trace_oracle.hpp"
#include "charvar/twobridge.hpp"

namespace charvar {

struct IntRange {
  int lo;
  int hi;
};

struct PretzelRanges {
  IntRange closed_forms{-6, 6};
  IntRange resultant{-8, 8};
  IntRange x0_slice{-6, 12};
  IntRange seidenberg{-6, 12};
  IntRange witnesses{-4, 4};

  /// The same range for every check (witness range clipped to |n| <= 6).
  static PretzelRanges uniform(IntRange r);
};

struct TwoBridgeRanges {
  int max_p = 45;
  int prop_lot_max_p = 31;
  int irreducibility_max_p = 23;
};

struct QtorusOptions {
  std::uint64_t seed = kDefaultSeed;
  int random_cases = 200;
  IntRange annihilation{-20, 20};
};

struct TraceOracleOptions {
  std::uint64_t seed = kDefaultSeed;
  int words = 500;
  int max_length = 12;
  int trials = 20;
  double tol = 1e-8;
};

/// PhiAtXZero, NewtonVertices and (optionally) LeadingTerms for one knot.
std::vector<VerificationReport> twobridge_reports(const TwoBridgeKnot& k, bool prop_lot);

std::vector<VerificationReport> closed_form_suite(IntRange r);
std::vector<VerificationReport> resultant_suite(IntRange r);
/// X0Slice reports, plus Seidenberg/DirectRadical when `seidenberg` is set.
std::vector<VerificationReport> x0_suite(IntRange r, double tol, std::optional<IntRange> seidenberg = std::nullopt);
std::vector<VerificationReport> witness_suite(IntRange r);

std::vector<VerificationReport> pretzel_suite(const PretzelRanges& r = {}, double tol = 1e-9);
std::vector<VerificationReport> twobridge_structure_suite(int max_p, int prop_lot_max_p);
std::vector<VerificationReport> irreducibility_suite(int max_p);
std::vector<VerificationReport> twobridge_suite(const TwoBridgeRanges& r = {});
std::vector<VerificationReport> qtorus_suite(const QtorusOptions& o = {});
std::vector<VerificationReport> trace_oracle_suite(const TraceOracleOptions& o = {});

}  // namespace charvar

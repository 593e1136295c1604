#pragma once

// Command-line front end and the JSON report format it emits.

#include <iosfwd>
#include <string>
#include <vector>

#include <json.hpp>

#include "wps/classify.hpp"
#include "wps/cohom.hpp"
#include "wps/strata.hpp"

namespace wps {

using Json = nlohmann::ordered_json;

inline constexpr const char* kSchemaVersion = "wps-report/1";

enum ExitCode : int {
  kExitOk = 0,
  kExitInvalidInput = 2,
  kExitResourceLimit = 3,
};

/// Environment variable holding the default census budget.
inline constexpr const char* kCensusLimitEnv = "WPS_CENSUS_LIMIT";

// Report builders. Keys are emitted in a fixed order; integers that can
// outgrow 64 bits (l-values, structure constants, group orders) are strings.
Json normalize_report(const WeightVector& w);
Json invariants_report(const WeightVector& w);
Json compare_report(const WeightVector& a, const WeightVector& b);
Json lens_report(Weight k, const WeightVector& w);
Json stratum_report(const WeightVector& w, const IndexSet& support);
Json cells_report(const WeightVector& w);
Json census_report(const CensusReport& report, bool include_members);
Json split_report(const PLocalRational& x, const PrimeSet& primes);

/// Plain-text census listing, one homeomorphism class per line.
std::string census_table(const CensusReport& report);

/// Runs one subcommand. args excludes the program name. Reports go to out,
/// diagnostics to err. Returns an ExitCode.
int run(const std::vector<std::string>& args, std::ostream& out,
        std::ostream& err);

}  // namespace wps

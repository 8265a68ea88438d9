#pragma once

#include <qident/identities.hpp>

#include <string>
#include <vector>

namespace qident {

/// Result of one acceptance suite.
struct SuiteResult {
    int criterion = 0;
    std::string name;
    bool pass = false;
    long cases = 0;       // individual checks performed
    std::string detail;   // first failure, empty when passing
    std::string note;     // informational, shown even on pass
    double seconds = 0.0;
};

struct SelftestOptions {
    /// Reduced desk ranges (grids capped at m <= 2, n <= 4) for a fast run.
    bool quick = false;
    Mutation mutation = Mutation::None;
    /// Path to the command-line binary; the cli-contract suite is skipped
    /// (reported as passing with a note) when empty.
    std::string cli_path;
};

/// Criteria are numbered 1..10:
///   1 new3-identity          2 new4-identity       3 phi-bijective-route
///   4 theta-involutive-route 5 series-route        6 qbinomial-theorem
///   7 classical-identities   8 special-cases       9 structural-properties
///  10 cli-contract
SuiteResult run_suite(int criterion, const SelftestOptions& options);
std::vector<SuiteResult> run_all_suites(const SelftestOptions& options);

std::string format_suite_line(const SuiteResult& result);

}  // namespace qident

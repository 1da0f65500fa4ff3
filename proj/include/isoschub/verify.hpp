#pragma once

// Verification suites.  Each suite checks the identities of one module on
// all of B_n (or a fixed sample where B_n is too large) and reports every
// violation with its inputs.

#include <string>
#include <string_view>
#include <vector>

#include "isoschub/report.hpp"

namespace isoschub {

/// core, factor, orders, chains, pieri, schur, monoid, symmetry, examples
const std::vector<std::string>& suite_names();

/// Runs one suite; "all" runs every suite and merges the reports.  Ranks
/// outside 1..5 throw.  Properties stated for a fixed small rank use
/// min(rank, that rank).
VerifyReport run_suite(std::string_view name, int rank);

VerifyReport core_suite(int n);
VerifyReport factor_suite(int n);
VerifyReport orders_suite(int n);
VerifyReport chains_suite(int n);
VerifyReport pieri_suite(int n);
VerifyReport schur_suite(int n);
VerifyReport monoid_suite(int n);
VerifyReport symmetry_battery(int n);
/// The worked examples with their exact published data.
VerifyReport examples_suite();

}  // namespace isoschub

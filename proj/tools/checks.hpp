#pragma once

#include <string>
#include <vector>

namespace mubar::checks {

// One named check of the golden regression suite.  `expected_fail` marks a
// documented deviation: the check's target value is stated by the reference
// table but unattainable by the shipped construction (see README, "Known
// deviations"), so red is the correct, recorded outcome.  A passing
// expected_fail check is an error: it means the recorded analysis went stale.
struct CheckResult {
    std::string name;
    bool passed = false;
    bool expected_fail = false;
    std::string detail;
    double seconds = 0.0;
};

// Runs the golden suite against the corpus in `golden_dir`.  When `only` is
// nonempty a check runs iff its name contains one of the substrings.  The
// end-to-end command line checks need the path of the mubar binary in
// `mubar_bin` and are skipped (not failed) when it is empty.
std::vector<CheckResult> run_checks(const std::string& golden_dir,
                                    const std::vector<std::string>& only = {},
                                    const std::string& mubar_bin = {});

// Every check is fine: passed normally, or failed while expected to.
bool all_good(const std::vector<CheckResult>& results);

// "PASS name detail" / "FAIL ..." / "XFAIL ..." lines plus a summary line.
void print_report(const std::vector<CheckResult>& results);

} // namespace mubar::checks

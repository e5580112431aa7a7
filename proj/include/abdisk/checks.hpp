#pragma once

#include <string>
#include <vector>

namespace abdisk {

// One executed self-check. error is the measured figure (relative or
// absolute, as the name says) and bound the tolerance it was held against.
struct CheckResult {
    std::string suite;
    std::string name;
    double error = 0.0;
    double bound = 0.0;
    bool pass = false;
};

// Selectable suites, in execution order. "all" is accepted by run_checks as
// the union but is not itself listed.
const std::vector<std::string>& check_suite_names();

// Runs one suite (or "all") and returns every result in deterministic
// order. Unknown names are a domain error. Checks that cannot produce a
// number (an unexpected exception, say) come back as failed with the
// message folded into the name.
std::vector<CheckResult> run_checks(const std::string& suite);

}  // namespace abdisk

#pragma once

#include <string>
#include <vector>

namespace cubeslides {

// Exhaustive machine checks over the 384 spanning trees of Q_3, grouped the
// way the CLI exposes them. Each check sweeps every tree (OpenMP inside) and
// reports the first failure it sees.

struct CheckResult {
    std::string name;
    bool pass = false;
    std::string details;
};

struct SuiteResult {
    std::string suite;
    std::vector<CheckResult> checks;

    bool all_pass() const;
};

SuiteResult verify_weights(int threads = 0);
SuiteResult verify_slides(int threads = 0);
SuiteResult verify_retraction(int threads = 0);
SuiteResult verify_bijection(int threads = 0);
SuiteResult verify_graph(int threads = 0);

// The five suites above, in CLI order.
std::vector<SuiteResult> verify_all(int threads = 0);

}  // namespace cubeslides

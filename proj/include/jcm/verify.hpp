// On-demand self-checks: oracle-equivalence runs against the truncated-Fock
// verifier plus the library's structural invariants. Drives the `verify` CLI
// subcommand.
#pragma once

#include <string>
#include <vector>

#include "jcm/model.hpp"

namespace jcm {

struct CheckResult {
    std::string name;
    double deviation = 0.0;
    double tolerance = 0.0;
    bool pass = false;
};

struct VerifyOptions {
    /// "all", "oracle" or "invariants".
    std::string checks = "all";
    /// Temperatures used by the oracle-equivalence checks.
    std::vector<double> betas = {0.5, 1.0, 2.0};
    /// 0 = derive the Fock dimension from the thermal tail per beta.
    int fock_dim = 0;
    unsigned int seed = 20240717;
    int random_cases = 1000;
};

std::vector<CheckResult> run_verification(const VerifyOptions& opts);

}  // namespace jcm

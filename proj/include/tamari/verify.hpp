#pragma once

// Exhaustive oracle checks, one per group of claims about the bijection. Each check runs up
// to the given size (clamped to what is affordable for that check) and never
// throws: failures are reported in the result.

#include <string>
#include <vector>

namespace tamari {

struct CheckResult {
    std::string name;
    int max_n = 0;  ///< largest size actually checked
    bool passed = false;
    std::string detail;
};

CheckResult check_interval_counts(int max_n);
CheckResult check_flawed_pairs(int max_n);
CheckResult check_round_trips(int max_n);
CheckResult check_transfer_lemmas(int max_n);
CheckResult check_duality(int max_n);
CheckResult check_parameter_transfer(int max_n);
CheckResult check_dyck_formulation(int max_n);
CheckResult check_decomposition(int max_n);
CheckResult check_refined_counts(int max_n);
CheckResult check_trivariate(int max_n);
CheckResult check_modern_series(int max_n);
CheckResult check_bud_adjacency(int max_n);
CheckResult check_involution(int max_n);
CheckResult check_sampler_encoding(int max_n);
CheckResult check_rendering(int max_n);

/// Every check above, in a fixed order.
std::vector<CheckResult> run_verify(int max_n);

}  // namespace tamari

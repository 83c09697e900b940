#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "icfb/serialize.hpp"

namespace icfb {

struct VerifyFailure {
    std::string params;
    std::string witness;
};

struct VerifyOptions {
    int max_n = 6;
    long long samples = 100000;
    double tol = -1;  // < 0: use the claim's own default
    int rho_grid = 257;
    int grid_points = 10;
    int jobs = 1;
    std::uint64_t seed = 20220915;
};

struct VerifyReport {
    std::string claim, description, notes;
    long long cases = 0;
    long long failure_count = 0;
    std::vector<VerifyFailure> failures;  // first failures, capped
    std::vector<std::string> csv;         // header + one row per case (failures only for large samples)
    double wall_ms = 0;

    // "failures empty <=> success". Claims with an explicit allowance clear
    // the list when the allowance is met.
    bool ok() const { return failures.empty(); }
};

std::vector<std::string> claim_names();
VerifyReport run_claim(const std::string& claim, const VerifyOptions& opt);

Json report_to_json(const VerifyReport& r);

}  // namespace icfb

#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "semitop/semitopology.hpp"

namespace semitop {

struct TheoremResult {
    std::string name;
    bool passed = true;
    /// Set when the check needs an exact open family that was not available.
    bool skipped = false;
    /// First counterexample, if any.
    std::string detail;
};

struct CheckOptions {
    std::size_t cap = kDefaultOpensCap;
    std::uint64_t seed = 0;
    /// Random value assignments per instance for the consensus properties.
    int assignments = 4;
    /// Cross-check against the brute-force oracle when n is at most this.
    std::size_t oracle_max_points = 10;
};

/// Runs every structural law on one space. Each result names one law.
std::vector<TheoremResult> check_theorems(const SemiTopology& space, const CheckOptions& options = {});

/// True when no result failed (skipped results count as passing).
bool all_passed(const std::vector<TheoremResult>& results);

}  // namespace semitop

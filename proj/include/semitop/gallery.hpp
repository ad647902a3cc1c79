#pragma once

#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "semitop/relations.hpp"
#include "semitop/semitopology.hpp"

namespace semitop::gallery {

/// Expected classification of one point. Hypertransitivity is pinned only
/// where it is known independently of this library.
struct PinnedRow {
    PointSet intertwined;
    PointSet community;
    bool regular = false;
    bool weakly_regular = false;
    bool quasiregular = false;
    bool unconflicted = false;
    std::optional<bool> hypertransitive;
};

/// Expectations for a fixture built with its default parameters.
struct PinnedExpectation {
    std::vector<PinnedRow> rows;
    TopenPartition partition;
};

struct FixtureEntry {
    std::string name;
    std::string description;
    std::vector<int> default_params;
    std::function<SemiTopology(const std::vector<int>&)> builder;
    std::optional<PinnedExpectation> expected;
};

const std::vector<FixtureEntry>& fixtures();
std::vector<std::string> fixture_names();
/// Throws UnknownFixture.
const FixtureEntry& fixture(const std::string& name);

/// Builds a fixture; empty `params` selects the defaults. Throws
/// UnknownFixture or BadParams.
SemiTopology build(const std::string& name, const std::vector<int>& params = {});

/// n points, k generators drawn uniformly from the nonempty subsets,
/// duplicates merged. Deterministic in `seed`. Requires 1 ≤ n ≤ 16.
SemiTopology random_semitopology(int n, int k, std::uint64_t seed);

}  // namespace semitop::gallery

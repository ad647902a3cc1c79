#pragma once

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "semitop/semitopology.hpp"

namespace semitop {

using ValueId = std::size_t;

/// Total map from points to a discrete set of labelled values.
class ValueAssignment {
  public:
    ValueAssignment(std::vector<ValueId> values, std::vector<std::string> labels);
    /// Every point mapped to value 0 of a single label.
    static ValueAssignment constant(std::size_t n, std::string label = "A");

    ValueId operator[](Point p) const { return values_.at(p); }
    const std::vector<ValueId>& values() const { return values_; }
    const std::vector<std::string>& labels() const { return labels_; }
    std::size_t size() const { return values_.size(); }
    /// f⁻¹(v).
    PointSet preimage(ValueId v) const;

    bool operator==(const ValueAssignment&) const = default;

  private:
    std::vector<ValueId> values_;
    std::vector<std::string> labels_;
};

bool continuous_at(const SemiTopology& space, const ValueAssignment& f, Point p);
bool continuous_on(const SemiTopology& space, const ValueAssignment& f, PointSet s);
bool is_continuous(const SemiTopology& space, const ValueAssignment& f);
/// Global continuity via open preimages of every value.
bool is_continuous_by_preimages(const SemiTopology& space, const ValueAssignment& f);
/// Global continuity via closed preimages of every set of values (≤ 16 labels).
bool is_continuous_by_closed_preimages(const SemiTopology& space, const ValueAssignment& f);

/// Two points of T, both continuity points of f, with different values.
std::optional<std::pair<Point, Point>> find_split(const SemiTopology& space, const ValueAssignment& f, PointSet t);

/// A two-valued assignment splitting T, present exactly when T is not transitive.
std::optional<ValueAssignment> build_splitting_assignment(const SemiTopology& space, PointSet t);

struct PropagationResult {
    PointSet seed;
    ValueId value = 0;
    PointSet committed_grade2;  // the seed itself
    PointSet committed_grade1;  // closure(seed) ∖ seed
    std::size_t rounds = 0;
    /// C₀ = seed, C₁, ... up to the stable set.
    std::vector<PointSet> trace;
};

/// Grows the seed by Cₖ₊₁ = Cₖ ∪ {p : every generator at p meets Cₖ} until
/// stable. `rounds` counts the steps up to the stable set; the confirming
/// step is not counted, so a closure-idempotent run reports 1.
PropagationResult propagate(const SemiTopology& space, PointSet seed, ValueId value);

/// Maximal topens meeting an open seed.
std::vector<PointSet> topen_reached_by(const SemiTopology& space, PointSet seed);

}  // namespace semitop

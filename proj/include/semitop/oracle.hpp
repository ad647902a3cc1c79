#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "semitop/semitopology.hpp"
#include "semitop/values.hpp"

// Reference implementations that quantify literally over the full open
// family. Nothing here calls the generator-reduced code paths; the only
// shared piece is PointSet.
namespace semitop::oracle {

/// A universe together with its complete list of open sets.
struct OracleSpace {
    std::size_t n = 0;
    PointSet universe;
    std::vector<PointSet> opens;

    bool is_open(PointSet s) const;
};

/// Open family by testing every subset for being a union of generators.
/// Throws FamilyTruncated above `max_points` points.
OracleSpace brute_force(const SemiTopology& space, std::size_t max_points = 20);
/// Wraps an exact enumerated family; throws FamilyTruncated otherwise.
OracleSpace from_family(const SemiTopology& space, const OpenFamily& family);

PointSet interior(const OracleSpace& s, PointSet x);
PointSet closure(const OracleSpace& s, PointSet x);
bool is_closed(const OracleSpace& s, PointSet x);

bool intertwined(const OracleSpace& s, Point p, Point q);
PointSet intertwined_of(const OracleSpace& s, Point p);
bool is_transitive(const OracleSpace& s, PointSet t);
bool is_strongly_transitive(const OracleSpace& s, PointSet t);
bool is_topen(const OracleSpace& s, PointSet t);
bool is_hyperconnected(const OracleSpace& s, PointSet t);

PointSet community(const OracleSpace& s, Point p);
bool is_regular(const OracleSpace& s, Point p);
bool is_weakly_regular(const OracleSpace& s, Point p);
bool is_quasiregular(const OracleSpace& s, Point p);
bool is_unconflicted(const OracleSpace& s, Point p);
/// O' ⋔ nbhd(p) ⋔ O'' implies O' ⋔ O'', over all opens.
bool is_hypertransitive(const OracleSpace& s, Point p);

std::vector<PointSet> closed_neighbourhoods_of(const OracleSpace& s, Point p);
std::vector<PointSet> minimal_closed_neighbourhoods(const OracleSpace& s);
std::vector<PointSet> regular_opens(const OracleSpace& s);
std::vector<PointSet> regular_closeds(const OracleSpace& s);

bool continuous_at(const OracleSpace& s, const ValueAssignment& f, Point p);

struct OracleReport {
    std::string predicate;
    std::string instance;
    std::string fast;
    std::string oracle;
    bool agree = true;
};

struct DiffOptions {
    /// Random value assignments tried per instance for the continuity check.
    int assignments = 4;
    std::uint64_t seed = 0;
    std::size_t cap = kDefaultOpensCap;
};

/// One report per predicate, each covering every argument tried: all subsets
/// (or a deterministic sample above 10 points), all points, all point pairs.
std::vector<OracleReport> diff(const SemiTopology& space, const DiffOptions& options = {});

/// Short text description of an instance, used in reports.
std::string describe(const SemiTopology& space);

}  // namespace semitop::oracle

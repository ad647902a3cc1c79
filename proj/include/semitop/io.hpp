#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "semitop/semitopology.hpp"
#include "semitop/values.hpp"

namespace semitop::io {

/// {"points": [...], "basis": [[...], ...], "assignment": {label: value}}
struct Document {
    SemiTopology space;
    std::optional<ValueAssignment> assignment;
    /// Dropped empty or duplicate generators.
    std::vector<std::string> warnings;
};

/// Throws ParseError (malformed JSON) or SchemaError. `source` prefixes messages.
Document parse(std::string_view text, const std::string& source = "<input>");
Document load(const std::string& path);

/// Two-space indented JSON with a trailing newline. Labels follow point order.
std::string dump(const SemiTopology& space, const std::optional<ValueAssignment>& assignment = std::nullopt);
void save(const std::string& path, const SemiTopology& space,
          const std::optional<ValueAssignment>& assignment = std::nullopt);

/// Graphviz text: points coloured by flag profile, generators as boxes,
/// maximal topens as dashed clusters.
std::string to_dot(const SemiTopology& space);

/// SEMITOP_OPENS_CAP if set to a positive integer, else the default cap.
std::size_t opens_cap_from_env();

/// Comma-separated labels; empty text is ∅. Throws Usage on unknown labels.
PointSet parse_label_set(const SemiTopology& space, std::string_view text);

}  // namespace semitop::io

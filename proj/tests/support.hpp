#pragma once

#include <doctest.h>

#include <string>

#include "semitop/gallery.hpp"
#include "semitop/point_set.hpp"

namespace doctest {
template <>
struct StringMaker<semitop::PointSet> {
    static String convert(const semitop::PointSet& s) {
        std::string out = "{";
        bool first = true;
        for (auto p : s) {
            if (!first) out += ',';
            out += std::to_string(p);
            first = false;
        }
        return (out + "}").c_str();
    }
};
}  // namespace doctest

using semitop::PointSet;

inline semitop::SemiTopology fx(const std::string& name) { return semitop::gallery::build(name); }

#pragma once

#include <set>
#include <string>
#include <tuple>

#include "mgs/quiver.hpp"

namespace mgs_test {

/// Arrow set keyed by endpoint labels so quivers with different internal ids
/// compare naturally.
using LabeledArrows = std::set<std::tuple<std::string, std::string, int>>;

inline LabeledArrows arrow_labels(const mgs::IceQuiver& q) {
    LabeledArrows out;
    for (const mgs::Arrow& a : q.arrows()) {
        out.insert({q.vertex(a.src).label, q.vertex(a.dst).label, a.mult});
    }
    return out;
}

/// The A2 quiver 1 -> 2.
inline mgs::IceQuiver a2() {
    mgs::IceQuiver q;
    const auto v1 = q.add_vertex("1");
    const auto v2 = q.add_vertex("2");
    q.add_arrow(v1, v2);
    return q;
}

/// The path 1 -> 2 -> 3.
inline mgs::IceQuiver path3() {
    mgs::IceQuiver q;
    const auto v1 = q.add_vertex("1");
    const auto v2 = q.add_vertex("2");
    const auto v3 = q.add_vertex("3");
    q.add_arrow(v1, v2);
    q.add_arrow(v2, v3);
    return q;
}

} // namespace mgs_test

#pragma once

#include <string>

#include "mgs/quiver.hpp"

namespace mgs {

/// Oriented m-cycle: vertices c_1..c_m with c_i -> c_{i-1} for 2 <= i <= m
/// and c_1 -> c_m. Requires m >= 3 (a 2-cycle is not a quiver).
IceQuiver cycle_quiver(int m);

/// The two candidate encodings of the ladder family differ only in the
/// orientation of row 1 and its couplings to the apex g_0; everything below
/// row 1 is identical. Standalone is the canonical orientation (it carries
/// the alpha-chain maximal green sequence for every row count and is what
/// the torus family embeds); Flipped reverses those four arrows and is kept
/// so the verification suite can certify that the choice matters.
enum class LadderOrientation { Standalone, Flipped };

/// Ladder quiver with apex g_0 and rows g_1^j, g_2^j, g_3^j for 1 <= j <= k.
/// k = 0 yields the bare apex.
IceQuiver ladder_quiver(int k, LadderOrientation orientation = LadderOrientation::Standalone);

/// Quiver of the triangulated closed genus-n surface with p punctures:
/// an (n+2)-cycle on f_1..f_{n+2}, one 5-vertex handle block a_i..e_i per
/// genus, and a (p-3)-row ladder attached between f_n, f_{n+1} and f_{n+2}.
/// Requires n >= 2 and p >= 4.
IceQuiver torus_quiver(int n, int p);

/// Parameter record for the three generated families.
struct FamilySpec {
    enum class Family { Cycle, Ladder, Torus };

    Family family = Family::Cycle;
    int m = 0; // cycle length
    int k = 0; // ladder row count
    int n = 0; // genus
    int p = 0; // puncture count

    IceQuiver build() const;
    std::string describe() const;
};

} // namespace mgs

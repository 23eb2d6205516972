#pragma once

#include <cstdint>
#include <span>
#include <vector>

#include "fairkm/types.hpp"

namespace fairkm {

// Red/blue totals of one child subtree, tagged with the caller's node id.
struct ChildProfile {
    std::int32_t child = -1;
    ColorCount counts;
};

// Per-child removal counts produced by min_heavy_points. Invariants on every
// return path: each child residual is balanced and the aggregate is balanced.
struct RemovalPlan {
    std::vector<ColorCount> removals;  // aligned with the input children
    ColorCount aggregate;              // column sums of removals
    int stages_used = 1;               // 1: stage-1 optimum closed the instance

    long long total() const { return aggregate.total(); }
};

// Minimum removals making (red, blue) balanced; removes from one color only.
// Never returns negative counts.
ColorCount unbalanced_points(const ColorCount& counts, const FairnessParams& p);

// Maximum number of points of color c removable from a balanced set while it
// stays balanced: 0 when N_c <= N_other, else N_c - ceil(N_other * b / r).
long long extra_point(Color c, const ColorCount& counts, const FairnessParams& p);

// Leftover of a balanced set after extracting as many saturated fairlets
// (r of the dominant color, b of the other) as leave a balanced-or-empty
// remainder. The leftover itself is balanced or empty.
ColorCount non_satur_fairlet(const ColorCount& counts, const FairnessParams& p);

// Three-stage approximate Minimum Heavy Points solver. Precondition: the
// aggregate of all child counts is balanced. Throws internal_error if no
// balanced plan is reached (impossible for a balanced aggregate).
RemovalPlan min_heavy_points(std::span<const ChildProfile> children,
                             const FairnessParams& p);

}  // namespace fairkm

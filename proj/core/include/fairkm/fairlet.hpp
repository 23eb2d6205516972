#pragma once

#include <cstdint>
#include <vector>

#include "fairkm/heavy_points.hpp"
#include "fairkm/hst.hpp"
#include "fairkm/types.hpp"

namespace fairkm {

struct Fairlet {
    std::vector<std::int32_t> points;  // nonempty
    std::int32_t lca_node = -1;        // node the fairlet was created at
    std::int32_t lca_level = 0;
};

// A partition of all point indices into fairlets.
struct FairletSet {
    std::vector<Fairlet> fairlets;
    std::vector<std::int32_t> fairlet_of_point;  // back-map, index -> fairlet id
};

struct DecomposeOptions {
    // Pick removal points from the shallowest leaves first instead of plain
    // DFS order. Off by default; the guarantee holds for arbitrary selection.
    bool prefer_shallow = false;
};

// Splits a balanced count pair into per-fairlet count shapes, each balanced
// with total <= r + b, summing to the input. Saturated fairlets are peeled
// while the dominant color has at least r + b points; the remainder is split
// exhaustively into at most 3 balanced fairlets.
std::vector<ColorCount> decompose_balanced_counts(const ColorCount& counts,
                                                  const FairnessParams& p);

// Takes `count` not-yet-removed points of `color` from the subtree at `node`
// in DFS order, marking them removed and keeping `residual` consistent from
// each touched leaf up to `node`. Returns the picked indices.
std::vector<std::int32_t> select_points(const HstTree& tree,
                                        const ColoredDataset& data,
                                        std::int32_t node, Color color,
                                        long long count,
                                        std::vector<std::uint8_t>& removed,
                                        std::vector<ColorCount>& residual,
                                        bool prefer_shallow = false);

// Top-down fairlet decomposition over the HST: at each internal node, solve
// Minimum Heavy Points over the children, materialize the removed points as
// fairlets anchored at this node, then recurse with the removals masked out.
// Point-leaf residents decompose locally at their leaf. Precondition: the
// root counts are balanced.
FairletSet fairlet_decomposition(const HstTree& tree, const ColoredDataset& data,
                                 const FairnessParams& p,
                                 const DecomposeOptions& options = {});

}  // namespace fairkm

#pragma once

#include <cstdint>
#include <iosfwd>
#include <span>
#include <vector>

#include "fairkm/types.hpp"

namespace fairkm {

struct HstNode {
    std::int32_t parent = -1;
    std::int32_t level = 0;  // root = 0
    std::vector<std::int32_t> children;
    ColorCount counts;                 // red/blue totals of the subtree
    std::vector<std::int32_t> points;  // resident point indices (leaves only)
    std::vector<double> anchor;        // low corner of the cell
    double side = 0.0;

    bool is_leaf() const { return children.empty(); }
};

struct DistortionReport {
    double min_ratio = 0.0;
    double mean_ratio = 0.0;
    double max_ratio = 0.0;
    int pairs = 0;
    friend bool operator==(const DistortionReport&, const DistortionReport&) = default;
};

// Randomly shifted nested-grid gamma-HST over a colored pointset.
//
// The bounding box is centered, the root cell has side 4*delta (delta = half
// extent of the box), and the cell is shifted per coordinate by a uniform
// draw from [-delta, delta], which keeps every point enclosed. Cells split
// into gamma equal parts per axis; only nonempty children are materialized,
// in ascending grid order (node ids are a DFS preorder). Recursion stops at
// cells holding a single distinct location or at max_depth.
//
// Edge weight from a level-i node to each of its children:
//   W(i) = sqrt(d) * side(i),   side(i) = 4*delta / gamma^i
// so sibling edges are equal and consecutive edges shrink by exactly 1/gamma,
// and leaf-to-leaf distances never contract below the Euclidean distance.
//
// The finished tree is immutable; all queries are safe concurrently.
class HstTree {
public:
    static constexpr int kDefaultMaxDepth = 40;

    static HstTree build(const ColoredDataset& data, int gamma, std::uint64_t seed,
                         int max_depth = kDefaultMaxDepth);

    // Sum of edge weights on the unique leaf-to-leaf path; 0 iff same leaf.
    double tree_distance(std::int32_t i, std::int32_t j) const;

    // Leaf-to-ancestor part of the path sum.
    double distance_to_ancestor(std::int32_t point, std::int32_t ancestor_node) const;

    struct Lca {
        std::int32_t node = -1;
        std::int32_t level = 0;
    };
    // Deepest node whose subtree contains all given points.
    Lca lca_node(std::span<const std::int32_t> points) const;

    DistortionReport audit_distortion(const ColoredDataset& data, int pair_sample,
                                      std::uint64_t seed) const;

    // One node per line: level, anchor coordinates, side, red, blue, #children.
    void dump(std::ostream& os) const;

    const HstNode& node(std::int32_t id) const { return nodes_[id]; }
    std::size_t node_count() const { return nodes_.size(); }
    std::int32_t root() const { return 0; }
    std::int32_t leaf_of(std::int32_t point) const { return leaf_of_point_[point]; }

    int gamma() const { return gamma_; }
    int dim() const { return dim_; }
    double delta() const { return delta_; }
    std::span<const double> shift() const { return shift_; }
    int max_depth() const { return max_depth_; }
    int depth() const { return depth_; }  // deepest level present

    double cell_side(int level) const { return level_side_[level]; }
    // Weight of the edges from a level-`level` node down to its children.
    double edge_weight(int level) const { return level_weight_[level]; }

private:
    int gamma_ = 2;
    int dim_ = 0;
    int max_depth_ = kDefaultMaxDepth;
    int depth_ = 0;
    double delta_ = 0.0;
    std::vector<double> shift_;
    std::vector<HstNode> nodes_;
    std::vector<std::int32_t> leaf_of_point_;
    std::vector<double> level_side_;
    std::vector<double> level_weight_;
};

}  // namespace fairkm

#include "fairkm/hst.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <ostream>

#include "fairkm/rng.hpp"

namespace fairkm {

namespace {

bool all_points_coincident(const ColoredDataset& data,
                           std::span<const std::int32_t> pts) {
    const auto first = data.point(pts[0]);
    for (std::size_t k = 1; k < pts.size(); ++k) {
        const auto q = data.point(pts[k]);
        if (!std::equal(first.begin(), first.end(), q.begin())) return false;
    }
    return true;
}

double euclidean(std::span<const double> a, std::span<const double> b) {
    double s = 0.0;
    for (std::size_t i = 0; i < a.size(); ++i) {
        const double d = a[i] - b[i];
        s += d * d;
    }
    return std::sqrt(s);
}

struct Builder {
    const ColoredDataset& data;
    int gamma;
    int max_depth;
    std::vector<HstNode>& nodes;
    std::vector<std::int32_t>& leaf_of_point;
    int depth_seen = 0;

    std::int32_t make_leaf(std::vector<std::int32_t> pts, std::int32_t parent,
                           int level, std::vector<double> anchor, double side) {
        const auto id = static_cast<std::int32_t>(nodes.size());
        HstNode node;
        node.parent = parent;
        node.level = level;
        node.anchor = std::move(anchor);
        node.side = side;
        for (std::int32_t p : pts) {
            ++node.counts.of(data.colors[p]);
            leaf_of_point[p] = id;
        }
        node.points = std::move(pts);
        nodes.push_back(std::move(node));
        return id;
    }

    std::int32_t build(std::vector<std::int32_t> pts, std::int32_t parent,
                       int level, std::vector<double> anchor, double side) {
        depth_seen = std::max(depth_seen, level);
        if (level == max_depth || pts.size() == 1 ||
            all_points_coincident(data, pts)) {
            return make_leaf(std::move(pts), parent, level, std::move(anchor), side);
        }

        const auto id = static_cast<std::int32_t>(nodes.size());
        {
            HstNode node;
            node.parent = parent;
            node.level = level;
            node.anchor = anchor;
            node.side = side;
            nodes.push_back(std::move(node));
        }

        // Bucket points by their child cell. Grid indices are clamped so a
        // coordinate sitting exactly on the upper boundary stays inside.
        const double child_side = side / gamma;
        const int d = data.dim;
        std::map<std::vector<std::int32_t>, std::vector<std::int32_t>> buckets;
        std::vector<std::int32_t> key(d);
        for (std::int32_t p : pts) {
            const auto x = data.point(p);
            for (int a = 0; a < d; ++a) {
                auto idx = static_cast<long long>(
                    std::floor((x[a] - anchor[a]) / child_side));
                key[a] = static_cast<std::int32_t>(
                    std::clamp(idx, 0LL, static_cast<long long>(gamma - 1)));
            }
            buckets[key].push_back(p);
        }
        pts.clear();
        pts.shrink_to_fit();

        for (auto& [cell, bucket] : buckets) {
            std::vector<double> child_anchor(d);
            for (int a = 0; a < d; ++a)
                child_anchor[a] = anchor[a] + cell[a] * child_side;
            const std::int32_t child =
                build(std::move(bucket), id, level + 1, std::move(child_anchor),
                      child_side);
            nodes[id].children.push_back(child);
            nodes[id].counts += nodes[child].counts;
        }
        return id;
    }
};

}  // namespace

HstTree HstTree::build(const ColoredDataset& data, int gamma, std::uint64_t seed,
                       int max_depth) {
    if (data.n() == 0) throw validation_error("build_hst: empty dataset");
    if (gamma < 2) throw validation_error("build_hst: gamma must be >= 2");
    if (max_depth < 0) throw validation_error("build_hst: negative max_depth");

    HstTree t;
    t.gamma_ = gamma;
    t.dim_ = data.dim;
    t.max_depth_ = max_depth;
    t.leaf_of_point_.assign(data.n(), -1);

    const int d = data.dim;
    std::vector<double> lo(data.point(0).begin(), data.point(0).end());
    std::vector<double> hi = lo;
    for (std::size_t i = 1; i < data.n(); ++i) {
        const auto x = data.point(i);
        for (int a = 0; a < d; ++a) {
            lo[a] = std::min(lo[a], x[a]);
            hi[a] = std::max(hi[a], x[a]);
        }
    }
    double delta = 0.0;
    for (int a = 0; a < d; ++a) delta = std::max(delta, (hi[a] - lo[a]) / 2.0);
    t.delta_ = delta;

    Rng rng(seed);
    t.shift_.resize(d);
    for (int a = 0; a < d; ++a)
        t.shift_[a] = delta > 0.0 ? uniform_double(rng, -delta, delta) : 0.0;

    // All locations identical: the tree is a single leaf and side(0) = 1.
    const double root_side = delta > 0.0 ? 4.0 * delta : 1.0;
    std::vector<double> anchor(d);
    for (int a = 0; a < d; ++a)
        anchor[a] = (lo[a] + hi[a]) / 2.0 - root_side / 2.0 + t.shift_[a];
    for (std::size_t i = 0; i < data.n(); ++i) {
        const auto x = data.point(i);
        for (int a = 0; a < d; ++a) {
            if (x[a] < anchor[a] || x[a] > anchor[a] + root_side)
                throw internal_error("build_hst: shifted root cell misses a point");
        }
    }

    std::vector<std::int32_t> all(data.n());
    for (std::size_t i = 0; i < data.n(); ++i) all[i] = static_cast<std::int32_t>(i);

    Builder builder{data, gamma, max_depth, t.nodes_, t.leaf_of_point_};
    builder.build(std::move(all), -1, 0, std::move(anchor), root_side);
    t.depth_ = builder.depth_seen;

    t.level_side_.resize(t.depth_ + 1);
    t.level_weight_.resize(t.depth_ + 1);
    const double sqrt_d = std::sqrt(static_cast<double>(d));
    double side = root_side;
    for (int level = 0; level <= t.depth_; ++level) {
        t.level_side_[level] = side;
        t.level_weight_[level] = sqrt_d * side;
        side /= gamma;
    }
    return t;
}

double HstTree::tree_distance(std::int32_t i, std::int32_t j) const {
    if (i < 0 || j < 0 || static_cast<std::size_t>(i) >= leaf_of_point_.size() ||
        static_cast<std::size_t>(j) >= leaf_of_point_.size())
        throw validation_error("tree_distance: point index out of range");
    std::int32_t a = leaf_of_point_[i];
    std::int32_t b = leaf_of_point_[j];
    double dist = 0.0;
    while (nodes_[a].level > nodes_[b].level) {
        dist += level_weight_[nodes_[a].level - 1];
        a = nodes_[a].parent;
    }
    while (nodes_[b].level > nodes_[a].level) {
        dist += level_weight_[nodes_[b].level - 1];
        b = nodes_[b].parent;
    }
    while (a != b) {
        dist += 2.0 * level_weight_[nodes_[a].level - 1];
        a = nodes_[a].parent;
        b = nodes_[b].parent;
    }
    return dist;
}

double HstTree::distance_to_ancestor(std::int32_t point,
                                     std::int32_t ancestor_node) const {
    std::int32_t v = leaf_of_point_[point];
    double dist = 0.0;
    while (v != ancestor_node) {
        if (v < 0) throw validation_error("distance_to_ancestor: not an ancestor");
        dist += level_weight_[nodes_[v].level - 1];
        v = nodes_[v].parent;
    }
    return dist;
}

HstTree::Lca HstTree::lca_node(std::span<const std::int32_t> points) const {
    if (points.empty()) throw validation_error("lca_node: empty point set");
    std::int32_t a = leaf_of_point_[points[0]];
    for (std::size_t k = 1; k < points.size() && a != root(); ++k) {
        std::int32_t b = leaf_of_point_[points[k]];
        while (nodes_[a].level > nodes_[b].level) a = nodes_[a].parent;
        while (nodes_[b].level > nodes_[a].level) b = nodes_[b].parent;
        while (a != b) {
            a = nodes_[a].parent;
            b = nodes_[b].parent;
        }
    }
    return Lca{a, nodes_[a].level};
}

DistortionReport HstTree::audit_distortion(const ColoredDataset& data,
                                           int pair_sample,
                                           std::uint64_t seed) const {
    bool has_distinct = false;
    for (std::size_t i = 1; i < data.n() && !has_distinct; ++i) {
        const auto a = data.point(0);
        const auto b = data.point(i);
        has_distinct = !std::equal(a.begin(), a.end(), b.begin());
    }
    if (!has_distinct)
        throw validation_error("audit_distortion: fewer than 2 distinct locations");

    Rng rng(seed);
    DistortionReport report;
    double sum = 0.0;
    long long attempts = 0;
    const long long attempt_cap = 1000LL * pair_sample + 1000;
    while (report.pairs < pair_sample && attempts < attempt_cap) {
        ++attempts;
        const auto i =
            static_cast<std::int32_t>(uniform_int(rng, 0, static_cast<long long>(data.n()) - 1));
        const auto j =
            static_cast<std::int32_t>(uniform_int(rng, 0, static_cast<long long>(data.n()) - 1));
        const double d = euclidean(data.point(i), data.point(j));
        if (d <= 0.0) continue;
        const double ratio = tree_distance(i, j) / d;
        if (report.pairs == 0) {
            report.min_ratio = report.max_ratio = ratio;
        } else {
            report.min_ratio = std::min(report.min_ratio, ratio);
            report.max_ratio = std::max(report.max_ratio, ratio);
        }
        sum += ratio;
        ++report.pairs;
    }
    if (report.pairs > 0) report.mean_ratio = sum / report.pairs;
    return report;
}

void HstTree::dump(std::ostream& os) const {
    for (const auto& node : nodes_) {
        os << node.level;
        for (double a : node.anchor) os << ' ' << a;
        os << ' ' << node.side << ' ' << node.counts.red << ' ' << node.counts.blue
           << ' ' << node.children.size() << '\n';
    }
}

}  // namespace fairkm

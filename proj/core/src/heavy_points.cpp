#include "fairkm/heavy_points.hpp"

#include <algorithm>

namespace fairkm {

namespace {

long long ceil_div(long long a, long long b) { return (a + b - 1) / b; }

}  // namespace

ColorCount unbalanced_points(const ColorCount& counts, const FairnessParams& p) {
    ColorCount removal;
    if (counts.red >= counts.blue) {
        removal.red = std::max(0LL, counts.red - (counts.blue * p.r) / p.b);
    } else {
        removal.blue = std::max(0LL, counts.blue - (counts.red * p.r) / p.b);
    }
    return removal;
}

long long extra_point(Color c, const ColorCount& counts, const FairnessParams& p) {
    const long long n_c = counts.of(c);
    const long long n_other = counts.of(other(c));
    if (n_c <= n_other) return 0;
    return n_c - ceil_div(n_other * p.b, p.r);
}

ColorCount non_satur_fairlet(const ColorCount& counts, const FairnessParams& p) {
    const Color dom = counts.dominant();
    const long long n_dom = counts.of(dom);
    const long long n_other = counts.of(other(dom));
    long long s = std::min(n_dom / p.r, n_other / p.b);
    for (; s >= 0; --s) {
        ColorCount leftover;
        leftover.of(dom) = n_dom - s * p.r;
        leftover.of(other(dom)) = n_other - s * p.b;
        if (leftover.empty() || is_rb_balanced(leftover, p)) return leftover;
    }
    // s = 0 leaves the (balanced) input itself, so this is unreachable for
    // valid preconditions.
    throw internal_error("non_satur_fairlet: no balanced leftover exists");
}

RemovalPlan min_heavy_points(std::span<const ChildProfile> children,
                             const FairnessParams& p) {
    RemovalPlan plan;
    plan.removals.resize(children.size());

    // Stage 1: per-child minimum removals; a lower bound on any solution.
    for (std::size_t i = 0; i < children.size(); ++i) {
        plan.removals[i] = unbalanced_points(children[i].counts, p);
        plan.aggregate += plan.removals[i];
    }
    if (is_rb_balanced(plan.aggregate, p)) return plan;

    // Stage 2: the aggregate is dominated by one color; borrow spare points
    // of the other color from children where that color is dominant, capped
    // at the remaining deficit so no child is stripped below balance.
    plan.stages_used = 2;
    const Color dom = plan.aggregate.dominant();
    const Color want = other(dom);
    for (std::size_t i = 0; i < children.size(); ++i) {
        long long deficit =
            ceil_div(plan.aggregate.of(dom) * p.b, p.r) - plan.aggregate.of(want);
        if (deficit <= 0) break;
        const ColorCount residual = children[i].counts - plan.removals[i];
        const long long borrow = std::min(extra_point(want, residual, p), deficit);
        if (borrow > 0) {
            plan.removals[i].of(want) += borrow;
            plan.aggregate.of(want) += borrow;
        }
    }
    if (is_rb_balanced(plan.aggregate, p)) return plan;

    // Stage 3: pull whole non-saturated fairlets out of the children until
    // the aggregate balances. Each leftover is balanced, so the aggregate
    // approaches balance monotonically and cannot overshoot.
    plan.stages_used = 3;
    for (std::size_t i = 0; i < children.size(); ++i) {
        const ColorCount residual = children[i].counts - plan.removals[i];
        const ColorCount leftover = non_satur_fairlet(residual, p);
        if (!leftover.empty()) {
            plan.removals[i] += leftover;
            plan.aggregate += leftover;
            if (is_rb_balanced(plan.aggregate, p)) return plan;
        }
    }
    if (is_rb_balanced(plan.aggregate, p)) return plan;

    // Reachable only if the children aggregate was not balanced, i.e. the
    // caller broke the subtree invariant.
    throw internal_error("min_heavy_points: aggregate unbalanced after stage 3");
}

}  // namespace fairkm

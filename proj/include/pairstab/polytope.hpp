#pragma once

#include <optional>
#include <vector>

#include "pairstab/weight.hpp"

namespace pairstab {

/// Finite set of integer weight points together with its exact convex hull.
/// Hulls are counterclockwise vertex lists; degenerate inputs give a segment
/// (two vertices) or a single point. No floating point is used anywhere.
class WeightPolytope {
public:
    WeightPolytope() = default;

    /// Deduplicates, sorts the support and computes the hull.
    static WeightPolytope from_points(std::vector<Weight> points);

    const std::vector<Weight>& support() const { return support_; }
    const std::vector<Weight>& hull() const { return hull_; }
    bool empty() const { return support_.empty(); }
    bool is_point() const { return hull_.size() == 1; }
    bool is_segment() const { return hull_.size() == 2; }

    bool contains(const Weight& p) const;

    /// True when p lies on the boundary. For degenerate hulls the whole set
    /// counts as boundary.
    bool on_boundary(const Weight& p) const;

    long long max_functional(Functional f) const;
    long long min_functional(Functional f) const;

    friend bool operator==(const WeightPolytope& a, const WeightPolytope& b) {
        return a.support_ == b.support_ && a.hull_ == b.hull_;
    }

private:
    std::vector<Weight> support_;
    std::vector<Weight> hull_;
};

struct InclusionResult {
    bool included = false;
    /// First support point of the inner candidate lying outside, in canonical
    /// order, when not included.
    std::optional<Weight> witness;
    /// Support points of the inner polytope lying on the outer boundary.
    std::vector<Weight> boundary_contacts;
};

/// Does P contain Q? Tests every support point of Q against P exactly.
InclusionResult includes(const WeightPolytope& p, const WeightPolytope& q);

WeightPolytope minkowski_sum(const WeightPolytope& p, const WeightPolytope& q);
WeightPolytope scale(const WeightPolytope& p, long long d);

/// conv{L1, L2, L3} = {l1 <= 1, l2 <= 1, l3 <= 1}.
WeightPolytope fundamental_triangle();

/// Least positive d with P contained in d * conv{L1, L2, L3}.
long long degree_of(const WeightPolytope& p);

/// An integer one-parameter-subgroup direction (m1, m2) with
/// torus_pairing(m1, m2, s) > 0 for every support point s, when one exists
/// (exactly when the origin is outside the hull).
std::optional<std::pair<long long, long long>> separating_functional(const WeightPolytope& p);

}  // namespace pairstab

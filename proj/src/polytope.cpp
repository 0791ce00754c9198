#include "pairstab/polytope.hpp"

#include <algorithm>
#include <stdexcept>

namespace pairstab {

namespace {

// Orientation predicate: sign of cross(b - a, c - a).
long long cross(const Weight& a, const Weight& b, const Weight& c) {
    return (b.c1 - a.c1) * (c.c2 - a.c2) - (b.c2 - a.c2) * (c.c1 - a.c1);
}

long long dot(const Weight& a, const Weight& b) { return a.c1 * b.c1 + a.c2 * b.c2; }

Weight sub(const Weight& a, const Weight& b) { return Weight{a.c1 - b.c1, a.c2 - b.c2}; }

// Andrew's monotone chain over sorted unique points. Collinear points on
// hull edges are dropped so vertices are exactly the extreme points.
std::vector<Weight> monotone_chain(const std::vector<Weight>& pts) {
    size_t n = pts.size();
    if (n <= 2) return pts;
    std::vector<Weight> h(2 * n);
    size_t k = 0;
    for (size_t i = 0; i < n; ++i) {
        while (k >= 2 && cross(h[k - 2], h[k - 1], pts[i]) <= 0) --k;
        h[k++] = pts[i];
    }
    size_t lower = k + 1;
    for (size_t i = n - 1; i-- > 0;) {
        while (k >= lower && cross(h[k - 2], h[k - 1], pts[i]) <= 0) --k;
        h[k++] = pts[i];
    }
    h.resize(k - 1);
    return h;
}

bool point_on_segment(const Weight& a, const Weight& b, const Weight& p) {
    if (cross(a, b, p) != 0) return false;
    Weight d = sub(b, a), v = sub(p, a);
    long long t = dot(v, d);
    return t >= 0 && t <= dot(d, d);
}

}  // namespace

WeightPolytope WeightPolytope::from_points(std::vector<Weight> points) {
    if (points.empty()) throw std::invalid_argument("WeightPolytope: empty point set");
    std::sort(points.begin(), points.end());
    points.erase(std::unique(points.begin(), points.end()), points.end());
    WeightPolytope p;
    p.support_ = std::move(points);
    p.hull_ = monotone_chain(p.support_);  // counterclockwise, lex-min vertex first
    return p;
}

bool WeightPolytope::contains(const Weight& p) const {
    if (hull_.empty()) return false;
    if (hull_.size() == 1) return hull_[0] == p;
    if (hull_.size() == 2) return point_on_segment(hull_[0], hull_[1], p);
    for (size_t i = 0; i < hull_.size(); ++i) {
        const Weight& a = hull_[i];
        const Weight& b = hull_[(i + 1) % hull_.size()];
        if (cross(a, b, p) < 0) return false;
    }
    return true;
}

bool WeightPolytope::on_boundary(const Weight& p) const {
    if (hull_.size() <= 2) return contains(p);
    if (!contains(p)) return false;
    for (size_t i = 0; i < hull_.size(); ++i) {
        const Weight& a = hull_[i];
        const Weight& b = hull_[(i + 1) % hull_.size()];
        if (cross(a, b, p) == 0) return true;
    }
    return false;
}

long long WeightPolytope::max_functional(Functional f) const {
    if (support_.empty()) throw std::invalid_argument("WeightPolytope: empty");
    long long best = eval_functional(f, support_[0]);
    for (const Weight& w : support_) best = std::max(best, eval_functional(f, w));
    return best;
}

long long WeightPolytope::min_functional(Functional f) const {
    if (support_.empty()) throw std::invalid_argument("WeightPolytope: empty");
    long long best = eval_functional(f, support_[0]);
    for (const Weight& w : support_) best = std::min(best, eval_functional(f, w));
    return best;
}

InclusionResult includes(const WeightPolytope& p, const WeightPolytope& q) {
    InclusionResult r;
    r.included = true;
    for (const Weight& w : q.support()) {
        if (!p.contains(w)) {
            if (r.included) r.witness = w;
            r.included = false;
        } else if (p.on_boundary(w)) {
            r.boundary_contacts.push_back(w);
        }
    }
    return r;
}

WeightPolytope minkowski_sum(const WeightPolytope& p, const WeightPolytope& q) {
    std::vector<Weight> sums;
    sums.reserve(p.hull().size() * q.hull().size());
    for (const Weight& a : p.hull())
        for (const Weight& b : q.hull()) sums.push_back(Weight{a.c1 + b.c1, a.c2 + b.c2});
    return WeightPolytope::from_points(std::move(sums));
}

WeightPolytope scale(const WeightPolytope& p, long long d) {
    if (d <= 0) throw std::invalid_argument("scale: factor must be positive");
    std::vector<Weight> pts;
    pts.reserve(p.support().size());
    for (const Weight& w : p.support()) pts.push_back(Weight{d * w.c1, d * w.c2});
    return WeightPolytope::from_points(std::move(pts));
}

WeightPolytope fundamental_triangle() {
    return WeightPolytope::from_points({Weight{1, 0}, Weight{0, 1}, Weight{-1, -1}});
}

long long degree_of(const WeightPolytope& p) {
    if (p.empty()) throw std::invalid_argument("degree_of: empty polytope");
    // d * conv{L1,L2,L3} = {l1 <= d, l2 <= d, l3 <= d}, so the degree is the
    // largest value any of the three edge functionals takes on the support.
    long long d = 1;
    for (Functional f : {Functional::l1, Functional::l2, Functional::l3})
        d = std::max(d, p.max_functional(f));
    return d;
}

std::optional<std::pair<long long, long long>> separating_functional(const WeightPolytope& p) {
    const Weight origin{0, 0};
    if (p.contains(origin)) return std::nullopt;
    const auto& h = p.hull();
    if (h.size() == 1) return std::make_pair(h[0].c1, h[0].c2);
    if (h.size() == 2) {
        // Normal direction if the origin is off the segment's line; otherwise
        // the segment lies on a ray from the origin and any endpoint works.
        Weight d = sub(h[1], h[0]);
        long long s = cross(h[0], h[1], origin);
        if (s != 0) {
            Weight n{-d.c2, d.c1};  // left normal; flip so the support is positive
            if (s > 0) n = Weight{-n.c1, -n.c2};
            return std::make_pair(n.c1, n.c2);
        }
        return std::make_pair(h[0].c1, h[0].c2);
    }
    for (size_t i = 0; i < h.size(); ++i) {
        const Weight& a = h[i];
        const Weight& b = h[(i + 1) % h.size()];
        if (cross(a, b, origin) < 0) {
            Weight d = sub(b, a);
            return std::make_pair(-d.c2, d.c1);  // inward normal of the violated edge
        }
    }
    return std::nullopt;  // unreachable: origin outside violates some edge
}

}  // namespace pairstab

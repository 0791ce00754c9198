#pragma once

#include <optional>
#include <string>
#include <vector>

#include "pairstab/reps.hpp"

namespace pairstab {

/// Matrix family g(t) with Laurent entries and determinant identically 1.
struct GroupCurve {
    CurveMatrix matrix;

    explicit GroupCurve(CurveMatrix m) : matrix(std::move(m)) {
        if (!(matrix.det() == Laurent(1)))
            throw std::invalid_argument("GroupCurve: determinant must be identically 1");
    }
};

/// diag(t^{e_0}, ..., t^{e_{n-1}}) with exponents summing to zero.
GroupCurve diagonal_curve(const std::vector<long>& exponents);

/// diag(t^{-p}, t^p) * (I + c t^tau E21), the SL2 degeneration family.
GroupCurve sl2_shear_curve(long p, long tau, const Rational& c);

/// [[t, 0], [1, t^{-1}]], the curve destabilizing the reducible SL2 pair.
GroupCurve sl2_reducible_curve();

/// diag(t^{-mu}, t^{-mu}, t^{2 mu}) * exp(t E23) for mu >= 1.
GroupCurve sl3_mu_curve(long mu);

/// Order of vanishing of g(t).x as t -> 0: the smallest t-exponent carrying a
/// nonzero coefficient across all monomials of the image.
long curve_order(const GroupCurve& curve, const RepVector& x);

enum class VerdictKind { sample_pass, numerical_failure, destabilized, indeterminate };

const char* verdict_kind_name(VerdictKind k);

struct PairVerdict {
    VerdictKind kind = VerdictKind::indeterminate;
    std::optional<Weight> witness_weight;       // excluded weight on numerical failure
    std::optional<GroupElement> witness_g;      // failing group element
    std::optional<long> sample_index;           // lowest failing sample
    std::optional<long> ord_v, ord_w;           // curve orders
    std::optional<RepVector> limit;             // normalized limit in V when destabilized
    long samples_run = 0;
};

/// One-point numerical check: does the weight polytope of g.w contain the one
/// of g.v?
PairVerdict numerically_semistable_at(const GroupElement& g, const RepVector& v,
                                      const RepVector& w);

struct SamplerConfig {
    uint64_t seed = 1;
    long samples = 500;
    long long bound = 7;
    std::vector<std::string> strata;  // empty = group default
};

/// Names of the sampling strata used for a group when none are requested:
/// a generic stratum plus the degenerate patterns of the case analyses.
std::vector<std::string> default_strata(Group g);

/// Deterministic stratified sampling of group elements; sample i is drawn
/// from stratum i mod #strata with a seed split from cfg.seed, so results do
/// not depend on evaluation order. Returns the lowest-index failure or an
/// aggregate pass.
PairVerdict sample_numerical_semistability(const RepVector& v, const RepVector& w,
                                           const SamplerConfig& cfg);

/// Compares orders of vanishing along the curve; ord_v < ord_w certifies a
/// destabilized pair (the limit of g(t).[v, w] leaves the w-component), and
/// the verdict then carries the normalized limit vector in V.
PairVerdict destabilizes(const GroupCurve& curve, const RepVector& v, const RepVector& w);

struct TorusVerdict {
    bool destabilizing = false;
    /// Diagonal one-parameter-subgroup exponents (m1, m2) driving w to zero.
    std::optional<std::pair<long long, long long>> witness;
};

/// Classical torus check: true exactly when the origin is outside the weight
/// polytope of w; the witness direction then sends w to zero.
TorusVerdict torus_destabilizes(const RepVector& w);

/// Polytope-level test of the tensor-power stability condition at a fixed m:
///   deg(V) * N(g.I) + m * N(g.v)  inside  (m+1) * N(g.w),
/// where N(g.I) is the hull of the column weights of g (always the
/// fundamental triangle for invertible g).
bool numerically_stable_at(const GroupElement& g, const RepVector& v, const RepVector& w,
                           long m);

/// Least m in [1, m_max] passing numerically_stable_at, if any.
std::optional<long> search_stability_m(const GroupElement& g, const RepVector& v,
                                       const RepVector& w, long m_max);

/// Q(x) = (n - x)(m - x - n + g1) - (n - g1)(m - n), evaluated at g2. The
/// quadratic obstruction in the irreducible SL2 argument: nonpositive for
/// g2 in [g1, m], zero exactly at the roots g1 and m.
Rational q_obstruction(long n, long m, long gamma1, long gamma2);

}  // namespace pairstab

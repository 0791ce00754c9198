#pragma once

#include <array>
#include <functional>
#include <memory>
#include <map>
#include <stdexcept>
#include <string>
#include <vector>

#include "pairstab/matrix.hpp"
#include "pairstab/polytope.hpp"
#include "pairstab/rng.hpp"
#include "pairstab/weight.hpp"

namespace pairstab {

enum class Group { SL2, SL3 };

/// Descriptor of a representation space:
///   - Sym^n of the standard SL2 representation,
///   - Sym^a U (x) Sym^b U* for SL3,
///   - the kernel of the contraction inside the latter (an irreducible
///     SL3 representation of highest weight a L1 - b L3),
///   - finite direct sums over a common group.
struct RepSpace {
    enum class Kind { sl2_sym, sl3_tensor, sl3_gamma, sum };

    Kind kind = Kind::sl2_sym;
    int n = 0;         // sl2_sym
    int a = 0, b = 0;  // sl3_tensor / sl3_gamma
    std::vector<RepSpace> parts;

    static RepSpace sl2_sym(int n);
    static RepSpace sl3_tensor(int a, int b);
    static RepSpace sl3_gamma(int a, int b);
    static RepSpace direct_sum(std::vector<RepSpace> components);

    Group group() const;
    int matrix_size() const { return group() == Group::SL2 ? 2 : 3; }
    int component_count() const { return kind == Kind::sum ? static_cast<int>(parts.size()) : 1; }
    const RepSpace& component(int c) const;

    bool operator==(const RepSpace& o) const;
};

/// Basis monomial of a component space. SL2 components store the exponent i
/// of e1 in e1^i e2^{n-i}; SL3 components store exponent vectors alpha on
/// (e1,e2,e3) and beta on (e1*,e2*,e3*).
struct Monomial {
    int component = 0;
    int i = -1, n = -1;  // SL2 only (n < 0 marks SL3)
    std::array<int, 3> alpha{0, 0, 0};
    std::array<int, 3> beta{0, 0, 0};

    bool sl2() const { return n >= 0; }

    static Monomial sl2(int component, int i, int n) {
        Monomial m;
        m.component = component;
        m.i = i;
        m.n = n;
        return m;
    }
    static Monomial sl3(int component, std::array<int, 3> alpha, std::array<int, 3> beta) {
        Monomial m;
        m.component = component;
        m.alpha = alpha;
        m.beta = beta;
        return m;
    }

    // Canonical order: by component, then lexicographically with e1 > e2 > e3
    // (higher e1 exponents first), sym part before dual part.
    bool operator<(const Monomial& o) const {
        if (component != o.component) return component < o.component;
        if (sl2() != o.sl2()) return o.sl2();
        if (sl2()) return i > o.i;
        if (alpha != o.alpha) return alpha > o.alpha;
        return beta > o.beta;
    }
    bool operator==(const Monomial& o) const {
        return component == o.component && i == o.i && n == o.n && alpha == o.alpha &&
               beta == o.beta;
    }
};

void validate_monomial(const Monomial& m, const RepSpace& s);

Weight weight_of(const Monomial& m, const RepSpace& s);

/// Sparse vector in a representation space. Scalars are Rational for honest
/// vectors and Laurent for images under group curves. No zero coefficients
/// are stored.
template <class S>
struct RepVectorT {
    RepSpace space;
    std::map<Monomial, S> terms;

    bool is_zero() const { return terms.empty(); }

    void add_term(const Monomial& m, const S& c) {
        if (scalar::is_zero(c)) return;
        auto it = terms.find(m);
        if (it == terms.end()) {
            terms.emplace(m, c);
        } else {
            it->second += c;
            if (scalar::is_zero(it->second)) terms.erase(it);
        }
    }

    RepVectorT& operator+=(const RepVectorT& o) {
        if (!(space == o.space)) throw std::invalid_argument("RepVector: space mismatch");
        for (const auto& [m, c] : o.terms) add_term(m, c);
        return *this;
    }
    friend RepVectorT operator+(RepVectorT a, const RepVectorT& b) { return a += b; }

    RepVectorT scaled(const S& c) const {
        RepVectorT r;
        r.space = space;
        if (scalar::is_zero(c)) return r;
        for (const auto& [m, x] : terms) r.terms.emplace(m, x * c);
        return r;
    }

    bool operator==(const RepVectorT& o) const { return space == o.space && terms == o.terms; }
};

using RepVector = RepVectorT<Rational>;
using CurveVector = RepVectorT<Laurent>;

CurveVector promote_to_curve(const RepVector& x);

/// Group action by substitution: e_j -> sum_i A(i,j) e_i on symmetric
/// factors, e_j* -> sum_i B(i,j) e_i* with B = (A^T)^{-1}, extended
/// multiplicatively over monomials and linearly over terms. Requires
/// det(A) = 1 and a size matching the group.
RepVector act_group(const GroupElement& g, const RepVector& x);
CurveVector act_group(const CurveMatrix& g, const CurveVector& x);
CurveVector act_group(const CurveMatrix& g, const RepVector& x);

/// Reusable action of one fixed group element. Substitution caches persist
/// across apply() calls, which matters when acting on many vectors (basis
/// sweeps). Not safe to share one instance across threads.
class GroupAction {
public:
    explicit GroupAction(GroupElement g);
    ~GroupAction();
    GroupAction(GroupAction&&) noexcept;
    GroupAction& operator=(GroupAction&&) noexcept;

    const GroupElement& element() const;
    RepVector apply(const RepVector& x);

private:
    struct Impl;
    std::unique_ptr<Impl> impl_;
};

/// Lie algebra action of the elementary matrix E_{ij} (1-based, i != j):
/// derivation with e_j -> e_i on symmetric factors and e_i* -> -e_j* on dual
/// factors.
RepVector act_lie(int i, int j, const RepVector& x);

/// Contraction Sym^a U (x) Sym^b U* -> Sym^{a-1} U (x) Sym^{b-1} U*, with the
/// derivative-pairing normalization
///   e^alpha (x) e*^beta -> sum_j alpha_j beta_j e^{alpha - d_j} (x) e*^{beta - d_j}.
RepVector contract(const RepVector& x);

/// Deterministic basis of the contraction kernel inside Sym^a U (x) Sym^b U*,
/// computed weight space by weight space via exact reduced-row-echelon
/// nullspaces in the canonical monomial order. Size (a+1)(b+1)(a+b+2)/2.
std::vector<RepVector> gamma_basis(int a, int b);

long long gamma_dimension_formula(int a, int b);

/// Weight predicate given as a conjunction of affine conditions in the six
/// functionals.
struct FunctionalCondition {
    Functional f;
    enum class Rel { le, ge, lt, gt } rel;
    long long value;

    bool holds(const Weight& w) const {
        long long v = eval_functional(f, w);
        switch (rel) {
            case Rel::le: return v <= value;
            case Rel::ge: return v >= value;
            case Rel::lt: return v < value;
            case Rel::gt: return v > value;
        }
        return false;
    }
};

struct WeightPredicate {
    std::vector<FunctionalCondition> conditions;

    bool holds(const Weight& w) const {
        for (const auto& c : conditions)
            if (!c.holds(w)) return false;
        return true;
    }
};

/// Sub-list of a weight-homogeneous basis whose weights satisfy the
/// predicate.
std::vector<RepVector> filter_by_weight(const std::vector<RepVector>& basis,
                                        const WeightPredicate& pred);

Weight weight_of_homogeneous(const RepVector& x);

/// Set of weights carried by the nonzero terms of x. Errors on zero vectors.
template <class S>
WeightPolytope support_polytope(const RepVectorT<S>& x) {
    if (x.is_zero()) throw std::invalid_argument("support: zero vector has empty support");
    std::vector<Weight> pts;
    pts.reserve(x.terms.size());
    for (const auto& [m, c] : x.terms) pts.push_back(weight_of(m, x.space));
    return WeightPolytope::from_points(std::move(pts));
}

/// Weight polytope of the whole space (the polytope of a generic vector):
/// [-n, n] for SL2 Sym^n, and the Minkowski sum a*conv(L_i) + b*conv(-L_j)
/// for both SL3 kinds.
WeightPolytope space_polytope(const RepSpace& s);

/// The full weight set of the space as a polytope support (exact per-weight
/// enumeration; kernel spaces enumerate their computed basis).
WeightPolytope full_weight_support(const RepSpace& s);

/// The explicitly chosen vectors for the reducible SL2 scenario and the SL3
/// scenario.
struct Sl2ReduciblePair {
    RepVector v;  // e1 e2^{n-1} in Sym^n
    RepVector w;  // e1^n + (second-summand e2)^{n-2} in Sym^n + Sym^{n-2}
};
Sl2ReduciblePair sl2_reducible_pair(int n);

struct Sl3Pair {
    RepVector v;   // (e2*)^2 (e3*)^{k-1}, a lowest-layer vector of Gamma_{0,k+1}
    RepVector w0;  // the 6-term anchor vector of Gamma_{2k,1}
};
Sl3Pair sl3_pair(int k);

/// W' = the part of Gamma_{2k,1} with l3(weight) <= 2k - 7.
std::vector<RepVector> sl3_wprime_basis(int k);

/// Deterministic integer combination of the basis with coefficients uniform
/// in [-bound, bound] \ {0}, drawn from splitmix64(seed) in basis order.
RepVector random_vector(const std::vector<RepVector>& basis, uint64_t seed, long long bound);

}  // namespace pairstab

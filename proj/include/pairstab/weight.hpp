#pragma once

#include <compare>
#include <cstdint>
#include <stdexcept>
#include <string>

namespace pairstab {

/// Torus weight in canonical coordinates (c1, c2) with respect to the basis
/// {L1, L2} of the dual Cartan algebra, where L3 = -L1 - L2. A coefficient
/// expression a1 L1 + a2 L2 + a3 L3 is stored as (a1 - a3, a2 - a3).
/// SL2 weights use the single integer 2i - n embedded as (c1, 0).
struct Weight {
    long long c1 = 0;
    long long c2 = 0;

    friend auto operator<=>(const Weight&, const Weight&) = default;
};

inline Weight weight_from_L(long long a1, long long a2, long long a3) {
    return Weight{a1 - a3, a2 - a3};
}

/// The six linear functionals on the weight lattice. All of them kill
/// L1 + L2 + L3 and are therefore well defined on canonical coordinates.
enum class Functional { l1, l2, l3, f1, f2, f3 };

inline long long eval_functional(Functional f, const Weight& w) {
    switch (f) {
        case Functional::l1: return w.c2 - 2 * w.c1;
        case Functional::l2: return w.c1 - 2 * w.c2;
        case Functional::l3: return w.c1 + w.c2;
        case Functional::f1: return w.c2;
        case Functional::f2: return w.c1;
        case Functional::f3: return w.c1 - w.c2;
    }
    throw std::logic_error("eval_functional: bad functional");
}

inline const char* functional_name(Functional f) {
    switch (f) {
        case Functional::l1: return "l1";
        case Functional::l2: return "l2";
        case Functional::l3: return "l3";
        case Functional::f1: return "f1";
        case Functional::f2: return "f2";
        case Functional::f3: return "f3";
    }
    return "?";
}

/// Pairing between a diagonal one-parameter subgroup with exponents
/// (m1, m2, -m1-m2) and a weight: the t-exponent a monomial of that weight
/// picks up under the subgroup.
inline long long torus_pairing(long long m1, long long m2, const Weight& w) {
    return m1 * w.c1 + m2 * w.c2;
}

}  // namespace pairstab

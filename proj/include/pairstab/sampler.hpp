#pragma once

#include <array>
#include <string>

#include "pairstab/reps.hpp"
#include "pairstab/rng.hpp"

namespace pairstab {

/// Product of 6..20 elementary shears I + c E_{ij} with c in
/// [-bound, bound] \ {0}: integer entries, determinant 1, and every Bruhat
/// cell reachable.
GroupElement random_shear_product(Group g, SplitMix64& rng, long long bound);

/// Permutation x unipotent-upper x lower-triangular factorization. The lower
/// factor carries unit diagonal entries up to sign so the product stays an
/// integer matrix of determinant 1.
struct PULDecomposition {
    std::array<int, 3> perm{0, 1, 2};  // row i of P is e_{perm[i]}
    GroupElement p, u, l;

    PULDecomposition() : p(GroupElement::identity(3)), u(p), l(p) {}
    GroupElement product() const { return p * (u * l); }
};

/// Unipotent pattern selector for the degenerate strata: free entries are
/// sampled in [-bound, bound]; forced entries are pinned.
struct UnipotentPattern {
    enum class Entry { free, zero, nonzero };
    Entry u12 = Entry::free, u13 = Entry::free, u23 = Entry::free;
};

PULDecomposition sample_pul(SplitMix64& rng, long long bound, const UnipotentPattern& pattern,
                            bool random_permutation);

/// Integer determinant-1 matrix with a prescribed zero entry, randomized
/// elsewhere. Used to reach the measure-zero case splits that generic
/// sampling never hits.
GroupElement sample_with_zero_entry(int row, int col, SplitMix64& rng, long long bound);

/// Integer determinant-1 matrix whose transpose-inverse B has prescribed
/// zeros in column 2 (the column steering the dual-factor case analysis).
/// zero_b12 / zero_b22 select which entries vanish.
GroupElement sample_with_dual_column_zeros(bool zero_b12, bool zero_b22, SplitMix64& rng,
                                           long long bound);

/// Draws one element of the named stratum.
GroupElement sample_stratum_element(Group g, const std::string& stratum, SplitMix64& rng,
                                    long long bound);

}  // namespace pairstab

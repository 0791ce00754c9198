#include "pairstab/sampler.hpp"

#include <stdexcept>

namespace pairstab {

namespace {

GroupElement shear(int n, int i, int j, const Rational& c) {
    GroupElement e = GroupElement::identity(n);
    e.at(i, j) = c;
    return e;
}

int perm_sign(const std::array<int, 3>& p) {
    int s = 1;
    for (int i = 0; i < 3; ++i)
        for (int j = i + 1; j < 3; ++j)
            if (p[static_cast<size_t>(i)] > p[static_cast<size_t>(j)]) s = -s;
    return s;
}

}  // namespace

GroupElement random_shear_product(Group g, SplitMix64& rng, long long bound) {
    int n = g == Group::SL2 ? 2 : 3;
    GroupElement m = GroupElement::identity(n);
    long count = rng.uniform(6, 20);
    for (long s = 0; s < count; ++s) {
        int i = static_cast<int>(rng.uniform(0, n - 1));
        int j = static_cast<int>(rng.uniform(0, n - 2));
        if (j >= i) ++j;
        m = m * shear(n, i, j, Rational(rng.nonzero(bound)));
    }
    return m;
}

PULDecomposition sample_pul(SplitMix64& rng, long long bound, const UnipotentPattern& pattern,
                            bool random_permutation) {
    PULDecomposition d;
    if (random_permutation) {
        // Fisher-Yates on {0,1,2}.
        d.perm = {0, 1, 2};
        for (int i = 2; i > 0; --i)
            std::swap(d.perm[static_cast<size_t>(i)],
                      d.perm[static_cast<size_t>(rng.uniform(0, i))]);
    }
    d.p = GroupElement(3);
    for (int i = 0; i < 3; ++i) d.p.at(i, d.perm[static_cast<size_t>(i)]) = Rational(1);

    auto entry = [&rng, bound](UnipotentPattern::Entry e) -> Rational {
        switch (e) {
            case UnipotentPattern::Entry::zero: return Rational(0);
            case UnipotentPattern::Entry::nonzero: return Rational(rng.nonzero(bound));
            case UnipotentPattern::Entry::free: return Rational(rng.uniform(-bound, bound));
        }
        return Rational(0);
    };
    d.u = GroupElement::identity(3);
    d.u.at(0, 1) = entry(pattern.u12);
    d.u.at(0, 2) = entry(pattern.u13);
    d.u.at(1, 2) = entry(pattern.u23);

    // Unit diagonal up to signs; the last sign makes det(P U L) = 1.
    long d1 = rng.coin() ? 1 : -1;
    long d2 = rng.coin() ? 1 : -1;
    long d3 = perm_sign(d.perm) * d1 * d2;
    d.l = GroupElement(3);
    d.l.at(0, 0) = Rational(d1);
    d.l.at(1, 1) = Rational(d2);
    d.l.at(2, 2) = Rational(d3);
    d.l.at(1, 0) = Rational(rng.uniform(-bound, bound));
    d.l.at(2, 0) = Rational(rng.uniform(-bound, bound));
    d.l.at(2, 1) = Rational(rng.uniform(-bound, bound));
    return d;
}

GroupElement sample_with_zero_entry(int row, int col, SplitMix64& rng, long long bound) {
    // Family U(u,v,w) L(p,q,s) =
    //   [[1+up+vq, u+vs, v],
    //    [p+wq,    1+ws, w],
    //    [q,       s,    1]]
    // with one parameter pinned per target entry; positions (1,1) and (3,3)
    // go through a row swap with a sign fix.
    long long u = rng.uniform(-bound, bound), v = rng.uniform(-bound, bound);
    long long w = rng.uniform(-bound, bound), p = rng.uniform(-bound, bound);
    long long q = rng.uniform(-bound, bound), s = rng.uniform(-bound, bound);
    bool swap13 = false;
    if (row == 0 && col == 0) {
        swap13 = true;
        q = 0;
    } else if (row == 2 && col == 2) {
        swap13 = true;
        v = 0;
    } else if (row == 0 && col == 1) {
        u = -v * s;
    } else if (row == 0 && col == 2) {
        v = 0;
    } else if (row == 1 && col == 0) {
        p = -w * q;
    } else if (row == 1 && col == 1) {
        w = rng.coin() ? 1 : -1;
        s = -w;
    } else if (row == 1 && col == 2) {
        w = 0;
    } else if (row == 2 && col == 0) {
        q = 0;
    } else if (row == 2 && col == 1) {
        s = 0;
    } else {
        throw std::invalid_argument("sample_with_zero_entry: bad position");
    }

    GroupElement m(3);
    m.at(0, 0) = Rational(1 + u * p + v * q);
    m.at(0, 1) = Rational(u + v * s);
    m.at(0, 2) = Rational(v);
    m.at(1, 0) = Rational(p + w * q);
    m.at(1, 1) = Rational(1 + w * s);
    m.at(1, 2) = Rational(w);
    m.at(2, 0) = Rational(q);
    m.at(2, 1) = Rational(s);
    m.at(2, 2) = Rational(1);
    if (swap13) {
        GroupElement p13(3);
        p13.at(0, 2) = Rational(1);
        p13.at(1, 1) = Rational(1);
        p13.at(2, 0) = Rational(1);
        GroupElement flip = GroupElement::identity(3);
        flip.at(0, 0) = Rational(-1);
        m = p13 * (m * flip);
    }
    if (!(m.det() == Rational(1))) throw std::logic_error("sample_with_zero_entry: det != 1");
    if (!m.at(row, col).is_zero()) throw std::logic_error("sample_with_zero_entry: entry not 0");
    return m;
}

GroupElement sample_with_dual_column_zeros(bool zero_b12, bool zero_b22, SplitMix64& rng,
                                           long long bound) {
    GroupElement b(3);
    if (zero_b12 && zero_b22) {
        // Column 2 of B is (0, 0, e); det = -e (v - u x) = 1.
        long long e = rng.coin() ? 1 : -1;
        long long u = rng.uniform(-bound, bound), x = rng.uniform(-bound, bound);
        long long y = rng.uniform(-bound, bound), z = rng.uniform(-bound, bound);
        long long v = u * x - e;
        b.at(0, 0) = Rational(1);
        b.at(0, 2) = Rational(u);
        b.at(1, 0) = Rational(x);
        b.at(1, 2) = Rational(v);
        b.at(2, 0) = Rational(y);
        b.at(2, 1) = Rational(e);
        b.at(2, 2) = Rational(z);
    } else if (zero_b12) {
        b = sample_with_zero_entry(0, 1, rng, bound);
    } else if (zero_b22) {
        b = sample_with_zero_entry(1, 1, rng, bound);
    } else {
        b = sample_with_zero_entry(2, 1, rng, bound);
    }
    // A with (A^T)^{-1} = B is the cofactor matrix of B.
    GroupElement a(3);
    for (int i = 0; i < 3; ++i)
        for (int j = 0; j < 3; ++j) a.at(i, j) = b.cofactor(i, j);
    return a;
}

GroupElement sample_stratum_element(Group g, const std::string& stratum, SplitMix64& rng,
                                    long long bound) {
    if (g == Group::SL2) {
        if (stratum == "ac-nonzero") {
            for (;;) {
                GroupElement m = random_shear_product(g, rng, bound);
                if (!m.at(0, 0).is_zero() && !m.at(1, 0).is_zero()) return m;
            }
        }
        if (stratum == "a-zero") {
            long long s = rng.coin() ? 1 : -1;
            GroupElement m(2);
            m.at(0, 1) = Rational(s);
            m.at(1, 0) = Rational(-s);
            m.at(1, 1) = Rational(rng.uniform(-bound, bound));
            return m;
        }
        if (stratum == "c-zero") {
            long long s = rng.coin() ? 1 : -1;
            GroupElement m(2);
            m.at(0, 0) = Rational(s);
            m.at(0, 1) = Rational(rng.uniform(-bound, bound));
            m.at(1, 1) = Rational(s);
            return m;
        }
        throw std::invalid_argument("unknown SL2 stratum '" + stratum + "'");
    }
    if (stratum == "generic") return random_shear_product(g, rng, bound);
    if (stratum == "pul-u23nz") {
        UnipotentPattern pat;
        pat.u23 = UnipotentPattern::Entry::nonzero;
        return sample_pul(rng, bound, pat, true).product();
    }
    if (stratum == "pul-u23z-u13nz") {
        UnipotentPattern pat;
        pat.u23 = UnipotentPattern::Entry::zero;
        pat.u13 = UnipotentPattern::Entry::nonzero;
        return sample_pul(rng, bound, pat, true).product();
    }
    if (stratum == "pul-u23z-u13z") {
        UnipotentPattern pat;
        pat.u23 = UnipotentPattern::Entry::zero;
        pat.u13 = UnipotentPattern::Entry::zero;
        return sample_pul(rng, bound, pat, true).product();
    }
    if (stratum == "b12-zero") return sample_with_dual_column_zeros(true, false, rng, bound);
    if (stratum == "b22-zero") return sample_with_dual_column_zeros(false, true, rng, bound);
    if (stratum == "b32-zero") return sample_with_dual_column_zeros(false, false, rng, bound);
    if (stratum == "b12-b22-zero") return sample_with_dual_column_zeros(true, true, rng, bound);
    throw std::invalid_argument("unknown SL3 stratum '" + stratum + "'");
}

}  // namespace pairstab

#pragma once

#include <stdexcept>
#include <vector>

#include "pairstab/laurent.hpp"
#include "pairstab/rational.hpp"

namespace pairstab {

namespace scalar {

inline Rational one(const Rational*) { return Rational(1); }
inline Laurent one(const Laurent*) { return Laurent(1); }
inline mpz_class one(const mpz_class*) { return mpz_class(1); }
template <class S>
S one() { return one(static_cast<const S*>(nullptr)); }

inline bool is_zero(const Rational& x) { return x.is_zero(); }
inline bool is_zero(const Laurent& x) { return x.is_zero(); }
inline bool is_zero(const mpz_class& x) { return sgn(x) == 0; }

/// Exact scalar division; for Laurent scalars the divisor must be a unit.
inline Rational divide(const Rational& a, const Rational& b) { return a / b; }
inline Laurent divide(const Laurent& a, const Laurent& b) { return a.divide_by_unit(b); }

}  // namespace scalar

/// Dense square matrix of size 2 or 3 over an exact scalar type.
template <class S>
class SquareMatrix {
public:
    explicit SquareMatrix(int n) : n_(n), e_(static_cast<size_t>(n) * n) {
        if (n != 2 && n != 3) throw std::invalid_argument("SquareMatrix: size must be 2 or 3");
    }

    static SquareMatrix identity(int n) {
        SquareMatrix m(n);
        for (int i = 0; i < n; ++i) m.at(i, i) = scalar::one<S>();
        return m;
    }

    int size() const { return n_; }
    S& at(int i, int j) { return e_[static_cast<size_t>(i) * n_ + j]; }
    const S& at(int i, int j) const { return e_[static_cast<size_t>(i) * n_ + j]; }

    friend SquareMatrix operator*(const SquareMatrix& a, const SquareMatrix& b) {
        if (a.n_ != b.n_) throw std::invalid_argument("SquareMatrix: size mismatch");
        SquareMatrix r(a.n_);
        for (int i = 0; i < a.n_; ++i)
            for (int j = 0; j < a.n_; ++j) {
                S acc{};
                for (int k = 0; k < a.n_; ++k) acc += a.at(i, k) * b.at(k, j);
                r.at(i, j) = acc;
            }
        return r;
    }

    S det() const {
        if (n_ == 2) return at(0, 0) * at(1, 1) - at(0, 1) * at(1, 0);
        return at(0, 0) * (at(1, 1) * at(2, 2) - at(1, 2) * at(2, 1)) -
               at(0, 1) * (at(1, 0) * at(2, 2) - at(1, 2) * at(2, 0)) +
               at(0, 2) * (at(1, 0) * at(2, 1) - at(1, 1) * at(2, 0));
    }

    /// Cofactor C_ij (signed minor obtained by deleting row i and column j).
    S cofactor(int i, int j) const {
        S m{};
        if (n_ == 2) {
            m = at(1 - i, 1 - j);
        } else {
            int r0 = (i == 0) ? 1 : 0, r1 = (i == 2) ? 1 : 2;
            int c0 = (j == 0) ? 1 : 0, c1 = (j == 2) ? 1 : 2;
            m = at(r0, c0) * at(r1, c1) - at(r0, c1) * at(r1, c0);
        }
        if ((i + j) % 2 != 0) m = -m;
        return m;
    }

    /// adj(M), so that M * adj(M) = det(M) * I.
    SquareMatrix adjugate() const {
        SquareMatrix r(n_);
        for (int i = 0; i < n_; ++i)
            for (int j = 0; j < n_; ++j) r.at(i, j) = cofactor(j, i);
        return r;
    }

    friend bool operator==(const SquareMatrix& a, const SquareMatrix& b) {
        return a.n_ == b.n_ && a.e_ == b.e_;
    }

private:
    int n_;
    std::vector<S> e_;
};

/// (M^T)^{-1}, computed as the cofactor matrix divided by det(M).
/// For Laurent entries the determinant must be a unit (here always 1 for
/// group curves); division is then exact.
template <class S>
SquareMatrix<S> transpose_inverse(const SquareMatrix<S>& m) {
    S d = m.det();
    if (scalar::is_zero(d)) throw std::domain_error("transpose_inverse: singular matrix");
    SquareMatrix<S> r(m.size());
    for (int i = 0; i < m.size(); ++i)
        for (int j = 0; j < m.size(); ++j) r.at(i, j) = scalar::divide(m.cofactor(i, j), d);
    return r;
}

using GroupElement = SquareMatrix<Rational>;
using CurveMatrix = SquareMatrix<Laurent>;

inline CurveMatrix promote_to_curve(const GroupElement& g) {
    CurveMatrix c(g.size());
    for (int i = 0; i < g.size(); ++i)
        for (int j = 0; j < g.size(); ++j) c.at(i, j) = Laurent(g.at(i, j));
    return c;
}

}  // namespace pairstab

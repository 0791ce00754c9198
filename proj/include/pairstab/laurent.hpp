#pragma once

#include <map>
#include <stdexcept>
#include <utility>

#include "pairstab/rational.hpp"

namespace pairstab {

/// Laurent polynomial in one variable t with Rational coefficients and
/// finitely many terms. No zero coefficients are stored; the empty map is 0.
class Laurent {
public:
    Laurent() = default;
    Laurent(const Rational& c) {  // NOLINT: implicit constant embedding
        if (!c.is_zero()) t_[0] = c;
    }
    Laurent(long c) : Laurent(Rational(c)) {}

    static Laurent term(long exp, const Rational& c) {
        Laurent l;
        if (!c.is_zero()) l.t_[exp] = c;
        return l;
    }
    static Laurent t(long exp) { return term(exp, Rational(1)); }

    bool is_zero() const { return t_.empty(); }
    bool is_unit() const { return t_.size() == 1; }
    bool is_one() const {
        return t_.size() == 1 && t_.begin()->first == 0 && t_.begin()->second == Rational(1);
    }

    /// Smallest exponent with nonzero coefficient. ord(0) is an error.
    long ord() const {
        if (t_.empty()) throw std::domain_error("Laurent: ord of zero");
        return t_.begin()->first;
    }

    Rational coeff(long exp) const {
        auto it = t_.find(exp);
        return it == t_.end() ? Rational(0) : it->second;
    }

    const std::map<long, Rational>& terms() const { return t_; }

    Laurent operator-() const {
        Laurent r;
        for (const auto& [e, c] : t_) r.t_[e] = -c;
        return r;
    }

    Laurent& operator+=(const Laurent& o) {
        for (const auto& [e, c] : o.t_) add_term(e, c);
        return *this;
    }
    Laurent& operator-=(const Laurent& o) {
        for (const auto& [e, c] : o.t_) add_term(e, -c);
        return *this;
    }

    friend Laurent operator+(Laurent a, const Laurent& b) { return a += b; }
    friend Laurent operator-(Laurent a, const Laurent& b) { return a -= b; }

    friend Laurent operator*(const Laurent& a, const Laurent& b) {
        Laurent r;
        for (const auto& [ea, ca] : a.t_)
            for (const auto& [eb, cb] : b.t_) r.add_term(ea + eb, ca * cb);
        return r;
    }
    Laurent& operator*=(const Laurent& o) { return *this = *this * o; }

    /// Exact division by a single-term (unit) Laurent polynomial.
    Laurent divide_by_unit(const Laurent& u) const {
        if (!u.is_unit()) throw std::domain_error("Laurent: divisor is not a unit");
        const auto& [ue, uc] = *u.t_.begin();
        Laurent r;
        for (const auto& [e, c] : t_) r.t_[e - ue] = c / uc;
        return r;
    }

    friend bool operator==(const Laurent& a, const Laurent& b) { return a.t_ == b.t_; }
    friend bool operator!=(const Laurent& a, const Laurent& b) { return !(a == b); }

    void add_term(long exp, const Rational& c) {
        if (c.is_zero()) return;
        auto it = t_.find(exp);
        if (it == t_.end()) {
            t_[exp] = c;
        } else {
            it->second += c;
            if (it->second.is_zero()) t_.erase(it);
        }
    }

private:
    std::map<long, Rational> t_;
};

}  // namespace pairstab

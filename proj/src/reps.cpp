#include "pairstab/reps.hpp"

#include <algorithm>
#include <memory>

#include "pairstab/linalg.hpp"

namespace pairstab {

RepSpace RepSpace::sl2_sym(int n) {
    if (n < 0) throw std::invalid_argument("RepSpace: Sym^n needs n >= 0");
    RepSpace s;
    s.kind = Kind::sl2_sym;
    s.n = n;
    return s;
}

RepSpace RepSpace::sl3_tensor(int a, int b) {
    if (a < 0 || b < 0) throw std::invalid_argument("RepSpace: tensor needs a, b >= 0");
    RepSpace s;
    s.kind = Kind::sl3_tensor;
    s.a = a;
    s.b = b;
    return s;
}

RepSpace RepSpace::sl3_gamma(int a, int b) {
    RepSpace s = sl3_tensor(a, b);
    s.kind = Kind::sl3_gamma;
    return s;
}

RepSpace RepSpace::direct_sum(std::vector<RepSpace> components) {
    if (components.empty()) throw std::invalid_argument("RepSpace: empty direct sum");
    for (const RepSpace& c : components) {
        if (c.kind == Kind::sum) throw std::invalid_argument("RepSpace: nested direct sum");
        if (c.group() != components[0].group())
            throw std::invalid_argument("RepSpace: direct sum mixes groups");
    }
    RepSpace s;
    s.kind = Kind::sum;
    s.parts = std::move(components);
    return s;
}

Group RepSpace::group() const {
    switch (kind) {
        case Kind::sl2_sym: return Group::SL2;
        case Kind::sl3_tensor:
        case Kind::sl3_gamma: return Group::SL3;
        case Kind::sum: return parts[0].group();
    }
    throw std::logic_error("RepSpace: bad kind");
}

const RepSpace& RepSpace::component(int c) const {
    if (kind == Kind::sum) {
        if (c < 0 || c >= static_cast<int>(parts.size()))
            throw std::invalid_argument("RepSpace: component out of range");
        return parts[static_cast<size_t>(c)];
    }
    if (c != 0) throw std::invalid_argument("RepSpace: component out of range");
    return *this;
}

bool RepSpace::operator==(const RepSpace& o) const {
    return kind == o.kind && n == o.n && a == o.a && b == o.b && parts == o.parts;
}

void validate_monomial(const Monomial& m, const RepSpace& s) {
    const RepSpace& c = s.component(m.component);
    if (c.kind == RepSpace::Kind::sl2_sym) {
        if (!m.sl2() || m.n != c.n || m.i < 0 || m.i > c.n)
            throw std::invalid_argument("Monomial: invalid for Sym^n component");
        return;
    }
    if (m.sl2()) throw std::invalid_argument("Monomial: SL2 monomial in SL3 space");
    int sa = 0, sb = 0;
    for (int j = 0; j < 3; ++j) {
        if (m.alpha[j] < 0 || m.beta[j] < 0)
            throw std::invalid_argument("Monomial: negative exponent");
        sa += m.alpha[j];
        sb += m.beta[j];
    }
    if (sa != c.a || sb != c.b)
        throw std::invalid_argument("Monomial: exponent sums do not match the space");
}

Weight weight_of(const Monomial& m, const RepSpace& s) {
    validate_monomial(m, s);
    if (m.sl2()) return Weight{2LL * m.i - m.n, 0};
    long long a1 = m.alpha[0] - m.beta[0];
    long long a2 = m.alpha[1] - m.beta[1];
    long long a3 = m.alpha[2] - m.beta[2];
    return weight_from_L(a1, a2, a3);
}

CurveVector promote_to_curve(const RepVector& x) {
    CurveVector r;
    r.space = x.space;
    for (const auto& [m, c] : x.terms) r.terms.emplace(m, Laurent(c));
    return r;
}

// ---------------------------------------------------------------------------
// Group action engine.
//
// The image of a monomial factors through powers of the linear forms given
// by matrix columns; those powers (and full exponent products) are memoized
// per action so that acting on vectors with many terms costs little more
// than acting on their distinct exponent vectors.
// ---------------------------------------------------------------------------

namespace {

using Exp = std::array<int, 3>;

template <class S>
using ExpPoly = std::map<Exp, S>;

template <class S>
ExpPoly<S> multiply_linear(const ExpPoly<S>& p, const ExpPoly<S>& form) {
    ExpPoly<S> r;
    for (const auto& [ep, cp] : p) {
        for (const auto& [ef, cf] : form) {
            Exp e{ep[0] + ef[0], ep[1] + ef[1], ep[2] + ef[2]};
            S prod = cp * cf;
            if (scalar::is_zero(prod)) continue;
            auto it = r.find(e);
            if (it == r.end()) {
                r.emplace(e, std::move(prod));
            } else {
                it->second += prod;
                if (scalar::is_zero(it->second)) r.erase(it);
            }
        }
    }
    return r;
}

// mpz overload: accumulate in place (no temporaries, no cancellation pruning
// needed until the end).
inline ExpPoly<mpz_class> multiply_linear(const ExpPoly<mpz_class>& p,
                                          const ExpPoly<mpz_class>& form) {
    ExpPoly<mpz_class> r;
    for (const auto& [ep, cp] : p) {
        for (const auto& [ef, cf] : form) {
            Exp e{ep[0] + ef[0], ep[1] + ef[1], ep[2] + ef[2]};
            mpz_addmul(r[e].get_mpz_t(), cp.get_mpz_t(), cf.get_mpz_t());
        }
    }
    for (auto it = r.begin(); it != r.end();)
        it = sgn(it->second) == 0 ? r.erase(it) : std::next(it);
    return r;
}

template <class S>
class SubstitutionCache {
public:
    SubstitutionCache(const SquareMatrix<S>& m, int dim) : dim_(dim) {
        for (int j = 0; j < dim; ++j) {
            ExpPoly<S> form;
            for (int i = 0; i < dim; ++i) {
                if (scalar::is_zero(m.at(i, j))) continue;
                Exp e{0, 0, 0};
                e[static_cast<size_t>(i)] = 1;
                form.emplace(e, m.at(i, j));
            }
            cols_[static_cast<size_t>(j)] = std::move(form);
        }
    }

    // Image of the monomial with exponent vector a under substitution.
    const ExpPoly<S>& image(const Exp& a) {
        auto it = memo_.find(a);
        if (it != memo_.end()) return it->second;
        ExpPoly<S> result;
        int j = dim_ - 1;
        while (j >= 0 && a[static_cast<size_t>(j)] == 0) --j;
        if (j < 0) {
            result.emplace(Exp{0, 0, 0}, scalar::one<S>());
        } else {
            Exp prev = a;
            --prev[static_cast<size_t>(j)];
            result = multiply_linear(image(prev), cols_[static_cast<size_t>(j)]);
        }
        return memo_.emplace(a, std::move(result)).first->second;
    }

private:
    int dim_;
    std::array<ExpPoly<S>, 3> cols_;
    std::map<Exp, ExpPoly<S>> memo_;
};

// Index of an exponent vector inside the degree-T simplex (dense layout for
// the integer fast path below).
inline size_t simplex_size(int t) { return static_cast<size_t>(t + 2) * (t + 1) / 2; }
inline size_t simplex_index(const Exp& e, int t) {
    int r = t - e[0];
    return static_cast<size_t>(r) * (r + 1) / 2 + static_cast<size_t>(r - e[1]);
}

// Exponent lists per degree and index maps idx_d(e) -> idx_{d+1}(e + delta_i).
struct SimplexTables {
    std::vector<std::vector<Exp>> exps;
    std::vector<std::array<std::vector<size_t>, 3>> shift;

    void ensure(int d) {
        while (static_cast<int>(exps.size()) <= d) {
            int t = static_cast<int>(exps.size());
            std::vector<Exp> list(simplex_size(t));
            for (int x = t; x >= 0; --x)
                for (int y = t - x; y >= 0; --y)
                    list[simplex_index(Exp{x, y, t - x - y}, t)] = Exp{x, y, t - x - y};
            std::array<std::vector<size_t>, 3> sh;
            for (int i = 0; i < 3; ++i) {
                sh[static_cast<size_t>(i)].resize(list.size());
                for (size_t idx = 0; idx < list.size(); ++idx) {
                    Exp e = list[idx];
                    ++e[static_cast<size_t>(i)];
                    sh[static_cast<size_t>(i)][idx] = simplex_index(e, t + 1);
                }
            }
            exps.push_back(std::move(list));
            shift.push_back(std::move(sh));
        }
    }
};

// Memoized dense images of monomials under an integer substitution.
class DenseSubstitution {
public:
    DenseSubstitution(const SquareMatrix<mpz_class>& m, SimplexTables& tables)
        : dim_(m.size()), tables_(&tables) {
        for (int j = 0; j < dim_; ++j)
            for (int i = 0; i < dim_; ++i) col_[static_cast<size_t>(j)][static_cast<size_t>(i)] = m.at(i, j);
    }

    const std::vector<mpz_class>& image(const Exp& a) {
        auto it = memo_.find(a);
        if (it != memo_.end()) return it->second;
        int d = a[0] + a[1] + a[2];
        std::vector<mpz_class> out(simplex_size(d));
        if (d == 0) {
            out[0] = 1;
        } else {
            int j = 2;
            while (a[static_cast<size_t>(j)] == 0) --j;
            Exp prev = a;
            --prev[static_cast<size_t>(j)];
            const std::vector<mpz_class>& in = image(prev);
            tables_->ensure(d);
            const auto& sh = tables_->shift[static_cast<size_t>(d - 1)];
            for (int i = 0; i < dim_; ++i) {
                const mpz_class& cij = col_[static_cast<size_t>(j)][static_cast<size_t>(i)];
                if (sgn(cij) == 0) continue;
                const std::vector<size_t>& si = sh[static_cast<size_t>(i)];
                for (size_t idx = 0; idx < in.size(); ++idx) {
                    if (sgn(in[idx]) == 0) continue;
                    mpz_addmul(out[si[idx]].get_mpz_t(), in[idx].get_mpz_t(), cij.get_mpz_t());
                }
            }
        }
        return memo_.emplace(a, std::move(out)).first->second;
    }

private:
    int dim_;
    SimplexTables* tables_;
    mpz_class col_[3][3];
    std::map<Exp, std::vector<mpz_class>> memo_;
};

template <class S>
RepVectorT<S> act_group_impl(const SquareMatrix<S>& g, const RepVectorT<S>& x) {
    int dim = x.space.matrix_size();
    if (g.size() != dim) throw std::invalid_argument("act_group: matrix size does not match group");
    if (!(g.det() == scalar::one<S>()))
        throw std::invalid_argument("act_group: determinant must be 1");

    SubstitutionCache<S> sym(g, dim);
    std::unique_ptr<SubstitutionCache<S>> dual;  // built on first dual factor

    RepVectorT<S> out;
    out.space = x.space;
    for (const auto& [m, c] : x.terms) {
        validate_monomial(m, x.space);
        if (m.sl2()) {
            Exp a{m.i, m.n - m.i, 0};
            for (const auto& [e, coeff] : sym.image(a))
                out.add_term(Monomial::sl2(m.component, e[0], m.n), c * coeff);
            continue;
        }
        const ExpPoly<S>& si = sym.image(m.alpha);
        if (m.beta[0] + m.beta[1] + m.beta[2] == 0) {
            for (const auto& [ea, ca] : si)
                out.add_term(Monomial::sl3(m.component, ea, m.beta), c * ca);
            continue;
        }
        if (!dual)
            dual = std::make_unique<SubstitutionCache<S>>(transpose_inverse(g), dim);
        const ExpPoly<S>& di = dual->image(m.beta);
        for (const auto& [ea, ca] : si) {
            S cca = c * ca;
            for (const auto& [eb, cb] : di)
                out.add_term(Monomial::sl3(m.component, ea, eb), cca * cb);
        }
    }
    return out;
}


}  // namespace

// Fast path for integer group elements (every sampled element is one): the
// whole substitution runs over mpz with a single common denominator and a
// dense per-component accumulator, avoiding per-operation rational
// canonicalization and map lookups. Caches live in the Impl so repeated
// applications of one element share all power products.
struct GroupAction::Impl {
    GroupElement g;
    bool integral = true;
    SquareMatrix<mpz_class> big;
    SimplexTables tables;
    std::unique_ptr<DenseSubstitution> sym;
    std::unique_ptr<DenseSubstitution> dual;

    explicit Impl(GroupElement elem) : g(std::move(elem)), big(g.size()) {
        for (int i = 0; i < g.size(); ++i)
            for (int j = 0; j < g.size(); ++j) integral = integral && g.at(i, j).is_integer();
        if (integral) {
            for (int i = 0; i < g.size(); ++i)
                for (int j = 0; j < g.size(); ++j) big.at(i, j) = g.at(i, j).numerator();
            if (big.det() != 1) throw std::invalid_argument("act_group: determinant must be 1");
            sym = std::make_unique<DenseSubstitution>(big, tables);
        } else if (!(g.det() == Rational(1))) {
            throw std::invalid_argument("act_group: determinant must be 1");
        }
    }

    void ensure_dual() {
        if (dual) return;
        int dim = g.size();
        SquareMatrix<mpz_class> b(dim);  // (big^T)^{-1} = cofactor matrix since det = 1
        for (int i = 0; i < dim; ++i)
            for (int j = 0; j < dim; ++j) b.at(i, j) = big.cofactor(i, j);
        dual = std::make_unique<DenseSubstitution>(b, tables);
    }

    RepVector apply(const RepVector& x);
};

RepVector GroupAction::Impl::apply(const RepVector& x) {
    int dim = x.space.matrix_size();
    if (g.size() != dim) throw std::invalid_argument("act_group: matrix size does not match group");
    if (!integral) return act_group_impl(g, x);

    mpz_class denom(1);
    for (const auto& [m, c] : x.terms) {
        validate_monomial(m, x.space);
        mpz_class d = c.denominator();
        mpz_lcm(denom.get_mpz_t(), denom.get_mpz_t(), d.get_mpz_t());
    }

    // Dense slot layout per component.
    int ncomp = x.space.component_count();
    std::vector<size_t> comp_offset(static_cast<size_t>(ncomp) + 1, 0);
    std::vector<size_t> dual_stride(static_cast<size_t>(ncomp), 1);
    for (int c = 0; c < ncomp; ++c) {
        const RepSpace& cs = x.space.component(c);
        size_t slots;
        if (cs.kind == RepSpace::Kind::sl2_sym) {
            slots = static_cast<size_t>(cs.n) + 1;
        } else {
            dual_stride[static_cast<size_t>(c)] = simplex_size(cs.b);
            slots = simplex_size(cs.a) * simplex_size(cs.b);
        }
        comp_offset[static_cast<size_t>(c) + 1] = comp_offset[static_cast<size_t>(c)] + slots;
    }
    size_t total = comp_offset[static_cast<size_t>(ncomp)];
    std::vector<mpz_class> val(total);
    std::vector<Monomial> mono(total);
    std::vector<uint8_t> used(total, 0);

    // Canonical term order groups equal (component, alpha) runs together, so
    // the dual parts of a run can be combined before the symmetric
    // convolution (one pass over the image instead of one per term).
    for (auto it = x.terms.begin(); it != x.terms.end();) {
        const Monomial& m = it->first;
        size_t base = comp_offset[static_cast<size_t>(m.component)];
        if (m.sl2()) {
            mpz_class ci = it->second.numerator() * (denom / it->second.denominator());
            Exp a{m.i, m.n - m.i, 0};
            const std::vector<mpz_class>& img = sym->image(a);
            tables.ensure(m.n);
            for (size_t ia = 0; ia < img.size(); ++ia) {
                if (sgn(img[ia]) == 0) continue;
                const Exp& e = tables.exps[static_cast<size_t>(m.n)][ia];
                size_t idx = base + static_cast<size_t>(e[0]);
                if (!used[idx]) {
                    used[idx] = 1;
                    mono[idx] = Monomial::sl2(m.component, e[0], m.n);
                }
                mpz_addmul(val[idx].get_mpz_t(), ci.get_mpz_t(), img[ia].get_mpz_t());
            }
            ++it;
            continue;
        }
        const RepSpace& cs = x.space.component(m.component);
        if (cs.b > 0) ensure_dual();
        std::vector<mpz_class> combined(simplex_size(cs.b));
        mpz_class ci;
        for (; it != x.terms.end() && it->first.component == m.component &&
               it->first.alpha == m.alpha && !it->first.sl2();
             ++it) {
            mpz_class scale = denom / it->second.denominator();
            mpz_mul(ci.get_mpz_t(), it->second.numerator().get_mpz_t(), scale.get_mpz_t());
            if (cs.b == 0) {
                combined[simplex_index(it->first.beta, 0)] += ci;
                continue;
            }
            const std::vector<mpz_class>& dimg = dual->image(it->first.beta);
            for (size_t ib = 0; ib < dimg.size(); ++ib) {
                if (sgn(dimg[ib]) == 0) continue;
                mpz_addmul(combined[ib].get_mpz_t(), ci.get_mpz_t(), dimg[ib].get_mpz_t());
            }
        }
        const std::vector<mpz_class>& si = sym->image(m.alpha);
        tables.ensure(std::max(cs.a, cs.b));
        const auto& aexps = tables.exps[static_cast<size_t>(cs.a)];
        const auto& bexps = tables.exps[static_cast<size_t>(cs.b)];
        size_t stride = dual_stride[static_cast<size_t>(m.component)];
        mpz_class cca;
        for (size_t ia = 0; ia < si.size(); ++ia) {
            if (sgn(si[ia]) == 0) continue;
            size_t arow = base + ia * stride;
            for (size_t ib = 0; ib < combined.size(); ++ib) {
                if (sgn(combined[ib]) == 0) continue;
                size_t idx = arow + ib;
                if (!used[idx]) {
                    used[idx] = 1;
                    mono[idx] = Monomial::sl3(m.component, aexps[ia], bexps[ib]);
                }
                mpz_mul(cca.get_mpz_t(), si[ia].get_mpz_t(), combined[ib].get_mpz_t());
                mpz_add(val[idx].get_mpz_t(), val[idx].get_mpz_t(), cca.get_mpz_t());
            }
        }
    }

    RepVector out;
    out.space = x.space;
    for (size_t idx = 0; idx < total; ++idx) {
        if (!used[idx] || sgn(val[idx]) == 0) continue;
        out.terms.emplace(mono[idx], Rational(val[idx], denom));
    }
    return out;
}

GroupAction::GroupAction(GroupElement g) : impl_(std::make_unique<Impl>(std::move(g))) {}
GroupAction::~GroupAction() = default;
GroupAction::GroupAction(GroupAction&&) noexcept = default;
GroupAction& GroupAction::operator=(GroupAction&&) noexcept = default;

const GroupElement& GroupAction::element() const { return impl_->g; }

RepVector GroupAction::apply(const RepVector& x) { return impl_->apply(x); }

RepVector act_group(const GroupElement& g, const RepVector& x) {
    GroupAction action(g);
    return action.apply(x);
}

CurveVector act_group(const CurveMatrix& g, const CurveVector& x) { return act_group_impl(g, x); }

CurveVector act_group(const CurveMatrix& g, const RepVector& x) {
    return act_group_impl(g, promote_to_curve(x));
}

RepVector act_lie(int i, int j, const RepVector& x) {
    int dim = x.space.matrix_size();
    if (i == j || i < 1 || j < 1 || i > dim || j > dim)
        throw std::invalid_argument("act_lie: invalid elementary index");
    RepVector out;
    out.space = x.space;
    for (const auto& [m, c] : x.terms) {
        validate_monomial(m, x.space);
        if (m.sl2()) {
            // E_21 maps e1 -> e2; E_12 maps e2 -> e1.
            if (i == 2 && j == 1) {
                if (m.i > 0) out.add_term(Monomial::sl2(m.component, m.i - 1, m.n), c * Rational(m.i));
            } else {
                if (m.n - m.i > 0)
                    out.add_term(Monomial::sl2(m.component, m.i + 1, m.n), c * Rational(m.n - m.i));
            }
            continue;
        }
        size_t ii = static_cast<size_t>(i - 1), jj = static_cast<size_t>(j - 1);
        if (m.alpha[jj] > 0) {
            Monomial t = m;
            --t.alpha[jj];
            ++t.alpha[ii];
            out.add_term(t, c * Rational(m.alpha[jj]));
        }
        if (m.beta[ii] > 0) {
            Monomial t = m;
            --t.beta[ii];
            ++t.beta[jj];
            out.add_term(t, c * Rational(-m.beta[ii]));
        }
    }
    return out;
}

RepVector contract(const RepVector& x) {
    if (x.space.kind != RepSpace::Kind::sl3_tensor && x.space.kind != RepSpace::Kind::sl3_gamma)
        throw std::invalid_argument("contract: expects an SL3 tensor-type space");
    if (x.space.a < 1 || x.space.b < 1)
        throw std::invalid_argument("contract: needs a >= 1 and b >= 1");
    RepVector out;
    out.space = RepSpace::sl3_tensor(x.space.a - 1, x.space.b - 1);
    for (const auto& [m, c] : x.terms) {
        for (size_t j = 0; j < 3; ++j) {
            long long f = static_cast<long long>(m.alpha[j]) * m.beta[j];
            if (f == 0) continue;
            Monomial t = m;
            --t.alpha[j];
            --t.beta[j];
            out.add_term(t, c * Rational(static_cast<long>(f)));
        }
    }
    return out;
}

long long gamma_dimension_formula(int a, int b) {
    return static_cast<long long>(a + 1) * (b + 1) * (a + b + 2) / 2;
}

namespace {

std::vector<std::array<int, 3>> compositions_of(int total) {
    std::vector<std::array<int, 3>> out;
    for (int x = total; x >= 0; --x)
        for (int y = total - x; y >= 0; --y) out.push_back({x, y, total - x - y});
    return out;
}

}  // namespace

std::vector<RepVector> gamma_basis(int a, int b) {
    RepSpace ambient = RepSpace::sl3_tensor(a, b);
    RepSpace gamma = RepSpace::sl3_gamma(a, b);

    // All monomials grouped by weight; within a weight they stay in canonical
    // monomial order because the enumeration below is monotone in it.
    std::map<Weight, std::vector<Monomial>> by_weight;
    for (const auto& alpha : compositions_of(a))
        for (const auto& beta : compositions_of(b)) {
            Monomial m = Monomial::sl3(0, alpha, beta);
            by_weight[weight_of(m, ambient)].push_back(m);
        }

    std::vector<RepVector> basis;
    for (auto& [w, monos] : by_weight) {
        std::sort(monos.begin(), monos.end());
        std::vector<std::vector<Rational>> columns;  // contraction image per monomial
        std::map<Monomial, size_t> target_index;
        columns.reserve(monos.size());
        bool contraction_defined = a >= 1 && b >= 1;
        for (const Monomial& m : monos) {
            std::vector<Rational> col;
            if (contraction_defined) {
                RepVector v;
                v.space = ambient;
                v.add_term(m, Rational(1));
                RepVector img = contract(v);
                for (const auto& [tm, tc] : img.terms) {
                    auto [it, inserted] = target_index.emplace(tm, target_index.size());
                    size_t idx = it->second;
                    if (idx >= col.size()) col.resize(idx + 1, Rational(0));
                    col[idx] = tc;
                }
            }
            columns.push_back(std::move(col));
        }
        size_t nrows = target_index.size();
        RatMatrix mat(nrows, std::vector<Rational>(monos.size(), Rational(0)));
        for (size_t c = 0; c < columns.size(); ++c)
            for (size_t r = 0; r < columns[c].size(); ++r) mat[r][c] = columns[c][r];

        std::vector<std::vector<Rational>> kernel =
            nrows == 0 ? std::vector<std::vector<Rational>>() : nullspace(mat);
        if (nrows == 0) {
            // Contraction vacuous on this weight space: every monomial survives.
            kernel.reserve(monos.size());
            for (size_t c = 0; c < monos.size(); ++c) {
                std::vector<Rational> v(monos.size(), Rational(0));
                v[c] = Rational(1);
                kernel.push_back(std::move(v));
            }
        }
        for (const auto& coeffs : kernel) {
            RepVector v;
            v.space = gamma;
            for (size_t c = 0; c < coeffs.size(); ++c) v.add_term(monos[c], coeffs[c]);
            basis.push_back(std::move(v));
        }
    }

    if (static_cast<long long>(basis.size()) != gamma_dimension_formula(a, b))
        throw std::logic_error("gamma_basis: kernel rank disagrees with the dimension formula");
    return basis;
}

std::vector<RepVector> filter_by_weight(const std::vector<RepVector>& basis,
                                        const WeightPredicate& pred) {
    std::vector<RepVector> out;
    for (const RepVector& v : basis)
        if (pred.holds(weight_of_homogeneous(v))) out.push_back(v);
    return out;
}

Weight weight_of_homogeneous(const RepVector& x) {
    if (x.is_zero()) throw std::invalid_argument("weight_of_homogeneous: zero vector");
    Weight w = weight_of(x.terms.begin()->first, x.space);
    for (const auto& [m, c] : x.terms)
        if (!(weight_of(m, x.space) == w))
            throw std::invalid_argument("weight_of_homogeneous: vector is not weight-homogeneous");
    return w;
}

WeightPolytope space_polytope(const RepSpace& s) {
    switch (s.kind) {
        case RepSpace::Kind::sl2_sym:
            return WeightPolytope::from_points({Weight{-s.n, 0}, Weight{s.n, 0}});
        case RepSpace::Kind::sl3_tensor:
        case RepSpace::Kind::sl3_gamma: {
            std::vector<Weight> pts;
            for (int i = 0; i < 3; ++i)
                for (int j = 0; j < 3; ++j) {
                    long long a1 = (i == 0 ? s.a : 0) - (j == 0 ? s.b : 0);
                    long long a2 = (i == 1 ? s.a : 0) - (j == 1 ? s.b : 0);
                    long long a3 = (i == 2 ? s.a : 0) - (j == 2 ? s.b : 0);
                    pts.push_back(weight_from_L(a1, a2, a3));
                }
            return WeightPolytope::from_points(std::move(pts));
        }
        case RepSpace::Kind::sum: {
            std::vector<Weight> pts;
            for (const RepSpace& c : s.parts) {
                WeightPolytope p = space_polytope(c);
                pts.insert(pts.end(), p.support().begin(), p.support().end());
            }
            return WeightPolytope::from_points(std::move(pts));
        }
    }
    throw std::logic_error("space_polytope: bad kind");
}

WeightPolytope full_weight_support(const RepSpace& s) {
    std::vector<Weight> pts;
    switch (s.kind) {
        case RepSpace::Kind::sl2_sym:
            for (int i = 0; i <= s.n; ++i) pts.push_back(Weight{2LL * i - s.n, 0});
            break;
        case RepSpace::Kind::sl3_tensor:
            for (const auto& alpha : compositions_of(s.a))
                for (const auto& beta : compositions_of(s.b))
                    pts.push_back(
                        weight_of(Monomial::sl3(0, alpha, beta), s));
            break;
        case RepSpace::Kind::sl3_gamma:
            for (const RepVector& v : gamma_basis(s.a, s.b))
                pts.push_back(weight_of_homogeneous(v));
            break;
        case RepSpace::Kind::sum:
            for (const RepSpace& c : s.parts) {
                WeightPolytope p = full_weight_support(c);
                pts.insert(pts.end(), p.support().begin(), p.support().end());
            }
            break;
    }
    return WeightPolytope::from_points(std::move(pts));
}

Sl2ReduciblePair sl2_reducible_pair(int n) {
    if (n < 3) throw std::invalid_argument("sl2_reducible_pair: needs n >= 3");
    Sl2ReduciblePair p;
    p.v.space = RepSpace::sl2_sym(n);
    p.v.add_term(Monomial::sl2(0, 1, n), Rational(1));
    p.w.space = RepSpace::direct_sum({RepSpace::sl2_sym(n), RepSpace::sl2_sym(n - 2)});
    p.w.add_term(Monomial::sl2(0, n, n), Rational(1));
    p.w.add_term(Monomial::sl2(1, 0, n - 2), Rational(1));
    return p;
}

Sl3Pair sl3_pair(int k) {
    if (k < 1) throw std::invalid_argument("sl3_pair: needs k >= 1");
    Sl3Pair p;
    p.v.space = RepSpace::sl3_gamma(0, k + 1);
    p.v.add_term(Monomial::sl3(0, {0, 0, 0}, {0, 2, k - 1}), Rational(1));

    p.w0.space = RepSpace::sl3_gamma(2 * k, 1);
    // e2^{2k-1} (e2 (x) e2* - (2k+1) e1 (x) e1* + e3 (x) e3*)
    p.w0.add_term(Monomial::sl3(0, {0, 2 * k, 0}, {0, 1, 0}), Rational(1));
    p.w0.add_term(Monomial::sl3(0, {1, 2 * k - 1, 0}, {1, 0, 0}), Rational(-(2L * k + 1)));
    p.w0.add_term(Monomial::sl3(0, {0, 2 * k - 1, 1}, {0, 0, 1}), Rational(1));
    // e1^{2k-1} (-1/k e1 (x) e1* + e2 (x) e2* + e3 (x) e3*)
    p.w0.add_term(Monomial::sl3(0, {2 * k, 0, 0}, {1, 0, 0}), Rational(-1, k));
    p.w0.add_term(Monomial::sl3(0, {2 * k - 1, 1, 0}, {0, 1, 0}), Rational(1));
    p.w0.add_term(Monomial::sl3(0, {2 * k - 1, 0, 1}, {0, 0, 1}), Rational(1));
    return p;
}

std::vector<RepVector> sl3_wprime_basis(int k) {
    WeightPredicate low_l3;
    low_l3.conditions.push_back(
        {Functional::l3, FunctionalCondition::Rel::le, 2LL * k - 7});
    return filter_by_weight(gamma_basis(2 * k, 1), low_l3);
}

RepVector random_vector(const std::vector<RepVector>& basis, uint64_t seed, long long bound) {
    if (basis.empty()) throw std::invalid_argument("random_vector: empty basis");
    if (bound < 1) throw std::invalid_argument("random_vector: bound must be positive");
    SplitMix64 rng(seed);
    RepVector out;
    out.space = basis[0].space;
    for (const RepVector& b : basis) {
        Rational c(static_cast<long>(rng.nonzero(bound)));
        for (const auto& [m, x] : b.terms) out.add_term(m, x * c);
    }
    return out;
}

}  // namespace pairstab

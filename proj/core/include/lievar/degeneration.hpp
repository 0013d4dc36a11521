#ifndef LIEVAR_DEGENERATION_HPP
#define LIEVAR_DEGENERATION_HPP

#include "lievar/battery.hpp"

#include <array>
#include <map>

namespace lievar {

/// A structure constant of g.mu with a pole at t = 0.
struct pole_report {
    int i, j, k; // 0-based
    int order;   // negative
};

struct limit_does_not_exist_error : arithmetic_error {
    std::vector<pole_report> poles;
    explicit limit_does_not_exist_error(std::vector<pole_report> p)
        : arithmetic_error("limit at t=0 does not exist"), poles(std::move(p)) {}
};

/// (g.mu)(x, y) = g(mu(g^-1 x, g^-1 y)).
template <class F>
LieAlgebra<F> apply_base_change(const LieAlgebra<F>& L, const Matrix<F>& g) {
    int n = L.dim();
    if (g.rows() != n || g.cols() != n)
        throw arithmetic_error("base change: dimension mismatch");
    Matrix<F> ginv = inverse(g);
    return apply_base_change_with_inverse(L, g, ginv);
}

template <class F>
LieAlgebra<F> apply_base_change_with_inverse(const LieAlgebra<F>& L, const Matrix<F>& g,
                                             const Matrix<F>& ginv) {
    int n = L.dim();
    LieAlgebra<F> out(n, L.label());
    for (int i = 0; i < n; ++i) {
        Vec<F> ui = ginv.column(i);
        for (int j = i + 1; j < n; ++j) {
            Vec<F> uj = ginv.column(j);
            Vec<F> w = g.apply(L.bracket(ui, uj));
            for (int k = 0; k < n; ++k)
                if (!w[static_cast<size_t>(k)].is_zero())
                    out.set_c(i, j, k, w[static_cast<size_t>(k)]);
        }
    }
    return out;
}

/// Structure constants of g.mu over the function field, evaluated at t=0.
/// Every constant must be regular there; otherwise the offending entries
/// are reported.  The limit law satisfies Jacobi automatically (the
/// variety of laws is closed), which is asserted.
template <class B>
LieAlgebra<B> psg_limit(const LieAlgebra<B>& L, const Matrix<RatFunc<B>>& g,
                        bool given_inverse = false) {
    using R = RatFunc<B>;
    int n = L.dim();
    LieAlgebra<R> Lt = L.template map_scalars<R>();
    Matrix<R> gm = g, ginv = g;
    if (given_inverse)
        gm = inverse(g);
    else
        ginv = inverse(g);
    LieAlgebra<R> moved = apply_base_change_with_inverse(Lt, gm, ginv);

    std::vector<pole_report> poles;
    LieAlgebra<B> out(n, L.label());
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j)
            for (int k = 0; k < n; ++k) {
                const R& c = moved.c(i, j, k);
                if (c.is_zero()) continue;
                int ord = c.order_at_zero();
                if (ord < 0) {
                    poles.push_back({i, j, k, ord});
                    continue;
                }
                if (ord == 0) out.set_c(i, j, k, c.limit_at_zero());
            }
    if (!poles.empty()) throw limit_does_not_exist_error(std::move(poles));
    if (!out.jacobi_check().empty())
        throw arithmetic_error("limit law violates the Jacobi identity");
    return out;
}

// ---------------------------------------------------------------------------
// Codimension-1 ideal property: does L possess an ideal I of codimension 1
// with [L,L] contained in I and [I,[I,I]] = 0?

enum class IdealRKind {
    Witness,     // ideal exists, explicit witness over the base field
    ExistsOnly,  // ideal exists over the algebraic closure, no witness found
    None,        // no such ideal over the algebraic closure
    Undecided    // outside the decidable range (complement dimension > 3)
};

template <class F>
struct IdealRResult {
    IdealRKind kind = IdealRKind::None;
    std::optional<Subspace<F>> witness;
    bool exists() const { return kind == IdealRKind::Witness || kind == IdealRKind::ExistsOnly; }
    bool none() const { return kind == IdealRKind::None; }
};

namespace detail {

/// Homogeneous polynomial in at most 3 variables over F, degree <= 3.
template <class F>
struct HPoly {
    std::map<std::array<int, 3>, F> terms;

    void add(std::array<int, 3> e, const F& c) {
        if (c.is_zero()) return;
        auto it = terms.find(e);
        if (it == terms.end())
            terms.emplace(e, c);
        else {
            it->second += c;
            if (it->second.is_zero()) terms.erase(it);
        }
    }
    bool is_zero() const { return terms.empty(); }
    int degree() const {
        int d = 0;
        for (const auto& [e, c] : terms) d = std::max(d, e[0] + e[1] + e[2]);
        return d;
    }
    friend HPoly operator*(const HPoly& a, const HPoly& b) {
        HPoly out;
        for (const auto& [ea, ca] : a.terms)
            for (const auto& [eb, cb] : b.terms)
                out.add({ea[0] + eb[0], ea[1] + eb[1], ea[2] + eb[2]}, ca * cb);
        return out;
    }
    friend HPoly operator+(HPoly a, const HPoly& b) {
        for (const auto& [e, c] : b.terms) a.add(e, c);
        return a;
    }
    F eval(const std::array<F, 3>& x) const {
        F acc(0);
        for (const auto& [e, c] : terms) {
            F t = c;
            for (int v = 0; v < 3; ++v)
                for (int p = 0; p < e[static_cast<size_t>(v)]; ++p) t *= x[static_cast<size_t>(v)];
            acc += t;
        }
        return acc;
    }
    /// Restriction to one variable: substitute x[fix0]=v0, x[fix1]=v1 and
    /// keep `var` as the polynomial variable.
    Poly<F> to_univariate(int var, int fix0, const F& v0, int fix1, const F& v1) const {
        std::vector<F> coeffs(4, F(0));
        for (const auto& [e, c] : terms) {
            F t = c;
            for (int p = 0; p < e[static_cast<size_t>(fix0)]; ++p) t *= v0;
            for (int p = 0; p < e[static_cast<size_t>(fix1)]; ++p) t *= v1;
            coeffs[static_cast<size_t>(e[static_cast<size_t>(var)])] += t;
        }
        return Poly<F>(std::move(coeffs));
    }
};

/// All membership conditions [u, [v, w]] != 0 as homogeneous polynomials
/// in the hyperplane coordinates.
template <class F>
std::vector<HPoly<F>> ideal_condition_polys(const LieAlgebra<F>& L,
                                            const std::vector<Vec<HPoly<F>>>& gens) {
    int n = L.dim();
    auto bracket_h = [&](const Vec<HPoly<F>>& x, const Vec<HPoly<F>>& y) {
        Vec<HPoly<F>> out(static_cast<size_t>(n));
        for (int i = 0; i < n; ++i)
            for (int j = 0; j < n; ++j) {
                if (i == j) continue;
                if (x[static_cast<size_t>(i)].is_zero() || y[static_cast<size_t>(j)].is_zero())
                    continue;
                HPoly<F> f = x[static_cast<size_t>(i)] * y[static_cast<size_t>(j)];
                for (int k = 0; k < n; ++k) {
                    const F& c = L.c(i, j, k);
                    if (c.is_zero()) continue;
                    HPoly<F> fc;
                    for (const auto& [e, cf] : f.terms) fc.add(e, cf * c);
                    out[static_cast<size_t>(k)] = out[static_cast<size_t>(k)] + fc;
                }
            }
        return out;
    };
    std::vector<HPoly<F>> conds;
    for (const auto& v : gens)
        for (const auto& w : gens) {
            Vec<HPoly<F>> inner = bracket_h(v, w);
            bool inner_zero = true;
            for (const auto& p : inner) inner_zero = inner_zero && p.is_zero();
            if (inner_zero) continue;
            for (const auto& u : gens) {
                Vec<HPoly<F>> outer = bracket_h(u, inner);
                for (auto& p : outer)
                    if (!p.is_zero()) conds.push_back(std::move(p));
            }
        }
    return conds;
}

/// True when the homogeneous system has no common zero over the algebraic
/// closure: some power of every variable lies in the ideal.  Degree-D
/// coverage is checked by rank; generators have degree <= 3 in <= 3
/// variables, so D = 28 decides (effective Nullstellensatz exponent 27).
template <class F>
bool homogeneous_system_empty(const std::vector<HPoly<F>>& polys, int nvars) {
    std::vector<std::array<int, 3>> monos_cache;
    auto monomials = [&](int d) {
        std::vector<std::array<int, 3>> out;
        for (int a = 0; a <= d; ++a)
            for (int b = 0; a + b <= d; ++b) {
                int c = d - a - b;
                if (nvars < 3 && c > 0) continue;
                if (nvars < 2 && b > 0) continue;
                out.push_back({a, b, c});
            }
        return out;
    };
    for (int D = 1; D <= 28; ++D) {
        auto monos = monomials(D);
        std::map<std::array<int, 3>, int> mono_index;
        for (size_t i = 0; i < monos.size(); ++i) mono_index[monos[i]] = static_cast<int>(i);
        std::vector<Vec<F>> rows;
        for (const auto& f : polys) {
            int extra = D - f.degree();
            if (extra < 0) continue;
            for (const auto& shift : monomials(extra)) {
                Vec<F> row(monos.size(), F(0));
                for (const auto& [e, c] : f.terms) {
                    std::array<int, 3> m{e[0] + shift[0], e[1] + shift[1], e[2] + shift[2]};
                    row[static_cast<size_t>(mono_index.at(m))] += c;
                }
                rows.push_back(std::move(row));
            }
        }
        if (rows.empty()) continue;
        Matrix<F> m(static_cast<int>(rows.size()), static_cast<int>(monos.size()));
        for (int i = 0; i < m.rows(); ++i)
            for (int j = 0; j < m.cols(); ++j)
                m.at(i, j) = rows[static_cast<size_t>(i)][static_cast<size_t>(j)];
        if (rank(m) == static_cast<int>(monos.size())) return true;
    }
    return false;
}

/// Roots of p in the base field; for F = Rat this also reports whether a
/// quadratic factor splits over the sixth-root extension.
inline std::vector<Rat> rational_roots(const Poly<Rat>& p) {
    std::vector<Rat> out;
    if (p.is_zero() || p.degree() < 1) return out;
    // clear denominators, then try divisors of the constant / leading terms
    mpz_class lcm = 1;
    for (const auto& c : p.coeffs()) mpz_lcm(lcm.get_mpz_t(), lcm.get_mpz_t(), c.den().get_mpz_t());
    std::vector<mpz_class> z;
    for (const auto& c : p.coeffs()) z.push_back(c.num() * (lcm / c.den()));
    int low = 0;
    while (z[static_cast<size_t>(low)] == 0) {
        if (low == 0) out.push_back(Rat(0));
        ++low;
        if (low > p.degree()) return out;
    }
    mpz_class a0 = abs(z[static_cast<size_t>(low)]);
    mpz_class an = abs(z.back());
    auto divisors = [](const mpz_class& v) {
        std::vector<mpz_class> ds;
        for (mpz_class d = 1; d * d <= v; ++d)
            if (v % d == 0) {
                ds.push_back(d);
                ds.push_back(v / d);
            }
        return ds;
    };
    for (const auto& p1 : divisors(a0))
        for (const auto& q1 : divisors(an))
            for (int sgn : {1, -1}) {
                Rat cand(mpq_class(sgn * p1, q1));
                if (p.eval(cand).is_zero()) {
                    bool seen = false;
                    for (const auto& r : out) seen = seen || r == cand;
                    if (!seen) out.push_back(cand);
                }
            }
    return out;
}

template <class F>
std::vector<F> base_field_roots(const Poly<F>& p);

template <>
inline std::vector<Rat> base_field_roots<Rat>(const Poly<Rat>& p) {
    return rational_roots(p);
}

template <>
inline std::vector<QuadExt> base_field_roots<QuadExt>(const Poly<QuadExt>& p) {
    // rational-coefficient part first; then quadratics that split in Q(w)
    std::vector<QuadExt> out;
    bool rational = true;
    for (const auto& c : p.coeffs()) rational = rational && c.is_rational();
    if (rational) {
        std::vector<Rat> rc;
        for (const auto& c : p.coeffs()) rc.push_back(c.re());
        for (const auto& r : rational_roots(Poly<Rat>(rc))) out.push_back(QuadExt(r));
        // x^2 + px + r with discriminant -3 s^2 splits: root (-p + s(2w-1))/2
        Poly<Rat> q(rc);
        if (q.degree() == 2) {
            Rat a = q.coeff(2), b = q.coeff(1), c0 = q.coeff(0);
            Rat disc = b * b - Rat(4) * a * c0;
            if (disc.sign() < 0) {
                Rat m = -disc / Rat(3); // need m a square
                mpz_class num = m.num(), den = m.den();
                mpz_class sn, sd;
                if (mpz_perfect_square_p(num.get_mpz_t()) &&
                    mpz_perfect_square_p(den.get_mpz_t())) {
                    mpz_sqrt(sn.get_mpz_t(), num.get_mpz_t());
                    mpz_sqrt(sd.get_mpz_t(), den.get_mpz_t());
                    Rat s(mpq_class(sn, sd));
                    // sqrt(-3) = 2w - 1
                    QuadExt sqrt_disc = QuadExt(Rat(0), s * Rat(2)) - QuadExt(s);
                    QuadExt two_a(a * Rat(2));
                    for (int sgn : {1, -1}) {
                        QuadExt root =
                            (QuadExt(-b) + (sgn > 0 ? sqrt_disc : -sqrt_disc)) / two_a;
                        if (p.eval(root).is_zero()) out.push_back(root);
                    }
                }
            }
        }
    }
    return out;
}

} // namespace detail

/// Decides whether L has a codimension-1 ideal I containing [L,L] with
/// [I,[I,I]] = 0 and produces a witness when one exists over the base
/// field.  Hyperplanes containing [L,L] are parametrized by homogeneous
/// coordinates on the complement (complement dimension <= 3 supported,
/// which covers the catalog uses).
template <class F>
IdealRResult<F> ideal_property_R(const LieAlgebra<F>& L) {
    using detail::HPoly;
    IdealRResult<F> res;
    int n = L.dim();
    Subspace<F> D = L.derived_subalgebra();
    if (D.dim() >= n) {
        res.kind = IdealRKind::None; // [L,L] fits in no hyperplane
        return res;
    }
    std::vector<int> comp = D.complement_indices();
    int k = static_cast<int>(comp.size());

    auto make_witness = [&](const std::vector<Vec<F>>& wvecs) {
        std::vector<Vec<F>> gens = D.basis();
        gens.insert(gens.end(), wvecs.begin(), wvecs.end());
        return Subspace<F>::span(n, gens);
    };
    auto check_subspace = [&](const Subspace<F>& I) {
        if (I.dim() != n - 1) return false;
        Subspace<F> II = L.bracket_spaces(I, I);
        return L.bracket_spaces(I, II).dim() == 0;
    };

    if (k == 1) {
        Subspace<F> I = D; // the only hyperplane containing [L,L]
        if (check_subspace(I)) {
            res.kind = IdealRKind::Witness;
            res.witness = I;
        }
        return res;
    }
    if (k > 3) {
        // only reachable for very abelian algebras; any hyperplane through
        // [L,L] spanned by complement vectors works iff one of them does,
        // so test the coordinate hyperplanes directly
        for (int drop = 0; drop < k; ++drop) {
            std::vector<Vec<F>> wv;
            for (int a = 0; a < k; ++a) {
                if (a == drop) continue;
                Vec<F> v(static_cast<size_t>(n), F(0));
                v[static_cast<size_t>(comp[a])] = F(1);
                wv.push_back(std::move(v));
            }
            Subspace<F> I = make_witness(wv);
            if (check_subspace(I)) {
                res.kind = IdealRKind::Witness;
                res.witness = I;
                return res;
            }
        }
        res.kind = IdealRKind::Undecided; // beyond the coordinate hyperplanes
        res.witness.reset();
        return res;
    }

    // generators of I as vectors with entries polynomial in the hyperplane
    // coordinates l = (l_0 .. l_{k-1}): the derived algebra plus a spanning
    // set of ker(l) on the complement, linear in l
    std::vector<Vec<HPoly<F>>> gens;
    auto constant_vec = [&](const Vec<F>& v) {
        Vec<HPoly<F>> out(static_cast<size_t>(n));
        for (int i = 0; i < n; ++i)
            if (!v[static_cast<size_t>(i)].is_zero())
                out[static_cast<size_t>(i)].add({0, 0, 0}, v[static_cast<size_t>(i)]);
        return out;
    };
    for (const auto& v : D.basis()) gens.push_back(constant_vec(v));
    auto var_mono = [&](int v) {
        std::array<int, 3> e{0, 0, 0};
        e[static_cast<size_t>(v)] = 1;
        return e;
    };
    if (k == 2) {
        // ker(l0, l1) = span{ l1 e_0 - l0 e_1 }
        Vec<HPoly<F>> w(static_cast<size_t>(n));
        w[static_cast<size_t>(comp[0])].add(var_mono(1), F(1));
        w[static_cast<size_t>(comp[1])].add(var_mono(0), F(-1));
        gens.push_back(std::move(w));
    } else { // k == 3: cross products l x e_i span ker(l)
        for (int i = 0; i < 3; ++i) {
            Vec<HPoly<F>> w(static_cast<size_t>(n));
            int a = (i + 1) % 3, b = (i + 2) % 3;
            // (l x e_i) has entries: [a] = -l_b ... using the cyclic rule
            w[static_cast<size_t>(comp[a])].add(var_mono(b), F(1));
            w[static_cast<size_t>(comp[b])].add(var_mono(a), F(-1));
            gens.push_back(std::move(w));
        }
    }

    std::vector<HPoly<F>> conds = detail::ideal_condition_polys(L, gens);
    if (conds.empty()) {
        // every hyperplane through [L,L] works
        res.kind = IdealRKind::Witness;
        std::vector<Vec<F>> wv;
        for (int a = 0; a + 1 < k; ++a) {
            Vec<F> v(static_cast<size_t>(n), F(0));
            v[static_cast<size_t>(comp[a])] = F(1);
            wv.push_back(std::move(v));
        }
        res.witness = make_witness(wv);
        return res;
    }

    // explicit point search over the projective cells
    auto try_point = [&](const std::array<F, 3>& pt) -> bool {
        for (const auto& f : conds)
            if (!f.eval(pt).is_zero()) return false;
        // build the witness at this point
        std::vector<Vec<F>> wv;
        if (k == 2) {
            Vec<F> w(static_cast<size_t>(n), F(0));
            w[static_cast<size_t>(comp[0])] = pt[1];
            w[static_cast<size_t>(comp[1])] = -pt[0];
            wv.push_back(std::move(w));
        } else {
            for (int i = 0; i < 3; ++i) {
                Vec<F> w(static_cast<size_t>(n), F(0));
                int a = (i + 1) % 3, b = (i + 2) % 3;
                w[static_cast<size_t>(comp[a])] = pt[static_cast<size_t>(b)];
                w[static_cast<size_t>(comp[b])] = -pt[static_cast<size_t>(a)];
                wv.push_back(std::move(w));
            }
        }
        Subspace<F> I = make_witness(wv);
        if (!check_subspace(I)) return false;
        res.kind = IdealRKind::Witness;
        res.witness = I;
        return true;
    };

    if (k == 2) {
        // chart (x, 1): univariate gcd; boundary point (1, 0)
        Poly<F> g;
        bool all_zero = true;
        for (const auto& f : conds) {
            Poly<F> u = f.to_univariate(0, 1, F(1), 2, F(0));
            if (u.is_zero()) continue;
            all_zero = false;
            g = g.is_zero() ? u.monic() : poly_gcd(g, u);
        }
        if (all_zero) {
            try_point({F(0), F(1), F(0)});
            return res;
        }
        if (try_point({F(1), F(0), F(0)})) return res; // boundary
        if (!g.is_constant()) {
            for (const auto& r : detail::base_field_roots<F>(g))
                if (try_point({r, F(1), F(0)})) return res;
            res.kind = IdealRKind::ExistsOnly; // a root exists over the closure
            return res;
        }
        res.kind = IdealRKind::None;
        return res;
    }

    // k == 3: explicit points on the three cells, then the emptiness
    // certificate
    if (try_point({F(0), F(0), F(1)})) return res;
    {
        // cell (0, 1, x)
        Poly<F> g;
        bool all_zero = true;
        for (const auto& f : conds) {
            Poly<F> u = f.to_univariate(2, 0, F(0), 1, F(1));
            if (u.is_zero()) continue;
            all_zero = false;
            g = g.is_zero() ? u.monic() : poly_gcd(g, u);
        }
        if (all_zero) {
            if (try_point({F(0), F(1), F(0)})) return res;
        } else if (!g.is_constant()) {
            for (const auto& r : detail::base_field_roots<F>(g))
                if (try_point({F(0), F(1), r})) return res;
        }
    }
    {
        // cell (1, y, z): resultant-free scan via the univariate slices
        // along z for small rational y candidates harvested from the
        // y-restrictions
        std::vector<F> ycands{F(0), F(1), F(-1), F(2), F(-2)};
        Poly<F> gy;
        for (const auto& f : conds) {
            Poly<F> u = f.to_univariate(1, 0, F(1), 2, F(0));
            if (u.is_zero()) continue;
            gy = gy.is_zero() ? u.monic() : poly_gcd(gy, u);
        }
        if (!gy.is_zero() && !gy.is_constant())
            for (const auto& r : detail::base_field_roots<F>(gy)) ycands.push_back(r);
        for (const auto& y : ycands) {
            Poly<F> gz;
            bool all_zero = true;
            for (const auto& f : conds) {
                Poly<F> u = f.to_univariate(2, 0, F(1), 1, y);
                if (u.is_zero()) continue;
                all_zero = false;
                gz = gz.is_zero() ? u.monic() : poly_gcd(gz, u);
            }
            if (all_zero) {
                if (try_point({F(1), y, F(0)})) return res;
                continue;
            }
            if (gz.is_constant()) continue;
            for (const auto& r : detail::base_field_roots<F>(gz))
                if (try_point({F(1), y, r})) return res;
        }
    }
    if (detail::homogeneous_system_empty(conds, k)) {
        res.kind = IdealRKind::None;
        return res;
    }
    res.kind = IdealRKind::ExistsOnly;
    return res;
}

} // namespace lievar

#endif

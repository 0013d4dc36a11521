#ifndef LIEVAR_LIE_ALGEBRA_HPP
#define LIEVAR_LIE_ALGEBRA_HPP

#include "lievar/subspace.hpp"

#include <array>
#include <optional>
#include <string>
#include <vector>

namespace lievar {

struct jacobi_violation {
    int i, j, k, s; // 0-based basis indices
};

struct not_an_ideal_error : arithmetic_error {
    using arithmetic_error::arithmetic_error;
};

/// A Lie algebra given by its structure-constant table on a fixed basis.
/// Antisymmetry is enforced on write; the Jacobi identity is checked, not
/// assumed.
template <class F>
class LieAlgebra {
public:
    LieAlgebra() = default;
    explicit LieAlgebra(int n, std::string label = "")
        : n_(n), label_(std::move(label)),
          c_(static_cast<size_t>(n) * n * n, F(0)) {}

    int dim() const { return n_; }
    const std::string& label() const { return label_; }
    void set_label(std::string l) { label_ = std::move(l); }

    const F& c(int i, int j, int k) const {
        return c_[(static_cast<size_t>(i) * n_ + j) * n_ + k];
    }

    /// Sets c_{ijk} and c_{jik} = -c_{ijk}.
    void set_c(int i, int j, int k, const F& v) {
        if (i == j && !v.is_zero()) throw arithmetic_error("nonzero [x,x] coefficient");
        c_[(static_cast<size_t>(i) * n_ + j) * n_ + k] = v;
        c_[(static_cast<size_t>(j) * n_ + i) * n_ + k] = -v;
    }

    void add_c(int i, int j, int k, const F& v) { set_c(i, j, k, c(i, j, k) + v); }

    /// [e_i, e_j] as a coordinate vector.
    Vec<F> bracket_basis(int i, int j) const {
        Vec<F> out(static_cast<size_t>(n_), F(0));
        for (int k = 0; k < n_; ++k) out[static_cast<size_t>(k)] = c(i, j, k);
        return out;
    }

    Vec<F> bracket(const Vec<F>& x, const Vec<F>& y) const {
        if (static_cast<int>(x.size()) != n_ || static_cast<int>(y.size()) != n_)
            throw arithmetic_error("bracket: dimension mismatch");
        Vec<F> out(static_cast<size_t>(n_), F(0));
        for (int i = 0; i < n_; ++i) {
            if (x[static_cast<size_t>(i)].is_zero()) continue;
            for (int j = 0; j < n_; ++j) {
                if (y[static_cast<size_t>(j)].is_zero() || i == j) continue;
                F f = x[static_cast<size_t>(i)] * y[static_cast<size_t>(j)];
                for (int k = 0; k < n_; ++k) {
                    const F& ck = c(i, j, k);
                    if (!ck.is_zero()) out[static_cast<size_t>(k)] += f * ck;
                }
            }
        }
        return out;
    }

    /// Matrix of ad(x): y -> [x, y].
    Matrix<F> adjoint_matrix(const Vec<F>& x) const {
        Matrix<F> m(n_, n_);
        for (int j = 0; j < n_; ++j) {
            Vec<F> ej(static_cast<size_t>(n_), F(0));
            ej[static_cast<size_t>(j)] = F(1);
            Vec<F> col = bracket(x, ej);
            for (int i = 0; i < n_; ++i) m.at(i, j) = col[static_cast<size_t>(i)];
        }
        return m;
    }

    Matrix<F> adjoint_matrix_basis(int i) const {
        Vec<F> x(static_cast<size_t>(n_), F(0));
        x[static_cast<size_t>(i)] = F(1);
        return adjoint_matrix(x);
    }

    /// All violated Jacobi identities (i<j<k, target s); empty means ok.
    std::vector<jacobi_violation> jacobi_check() const {
        std::vector<jacobi_violation> bad;
        for (int i = 0; i < n_; ++i)
            for (int j = i + 1; j < n_; ++j)
                for (int k = j + 1; k < n_; ++k)
                    for (int s = 0; s < n_; ++s) {
                        F sum(0);
                        for (int r = 0; r < n_; ++r) {
                            sum += c(i, j, r) * c(r, k, s);
                            sum += c(j, k, r) * c(r, i, s);
                            sum += c(k, i, r) * c(r, j, s);
                        }
                        if (!sum.is_zero()) bad.push_back({i, j, k, s});
                    }
        return bad;
    }

    /// Span of [A, B].
    Subspace<F> bracket_spaces(const Subspace<F>& a, const Subspace<F>& b) const {
        std::vector<Vec<F>> gens;
        for (const auto& x : a.basis())
            for (const auto& y : b.basis()) gens.push_back(bracket(x, y));
        return Subspace<F>::span(n_, gens);
    }

    Subspace<F> derived_subalgebra() const {
        Subspace<F> g = Subspace<F>::full(n_);
        return bracket_spaces(g, g);
    }

    /// g = g^1 >= g^2 = [g,g] >= g^3 = [g,g^2] >= ..., listed until the
    /// first repetition (0 included when reached).
    std::vector<Subspace<F>> lower_central_series() const {
        std::vector<Subspace<F>> out;
        out.push_back(Subspace<F>::full(n_));
        while (true) {
            Subspace<F> next = bracket_spaces(out.front(), out.back());
            if (next.dim() == out.back().dim()) break;
            out.push_back(std::move(next));
            if (out.back().dim() == 0) break;
        }
        return out;
    }

    std::vector<Subspace<F>> derived_series() const {
        std::vector<Subspace<F>> out;
        out.push_back(Subspace<F>::full(n_));
        while (true) {
            Subspace<F> next = bracket_spaces(out.back(), out.back());
            if (next.dim() == out.back().dim()) break;
            out.push_back(std::move(next));
            if (out.back().dim() == 0) break;
        }
        return out;
    }

    /// Z(L) = kernel of the stacked adjoint maps.
    Subspace<F> center() const {
        Matrix<F> stacked(n_ * n_, n_);
        for (int i = 0; i < n_; ++i) {
            Matrix<F> ad = adjoint_matrix_basis(i);
            for (int r = 0; r < n_; ++r)
                for (int j = 0; j < n_; ++j) stacked.at(i * n_ + r, j) = ad.at(r, j);
        }
        return Subspace<F>::span(n_, kernel_basis(stacked));
    }

    /// 0 = Z^0 < Z^1 = Z(L) < Z^2 < ... increasing until stable.
    /// Z^{j+1} = {x : [x, L] in Z^j}.
    std::vector<Subspace<F>> upper_central_series() const {
        std::vector<Subspace<F>> out;
        out.push_back(Subspace<F>::span(n_, {}));
        while (true) {
            const Subspace<F>& z = out.back();
            Matrix<F> stacked(n_ * n_, n_);
            for (int i = 0; i < n_; ++i) {
                Matrix<F> ad = adjoint_matrix_basis(i);
                for (int j = 0; j < n_; ++j) {
                    Vec<F> col = z.reduce(ad.column(j));
                    // ad(e_i) e_j = [e_i, e_j]; we need [e_j, L] in Z^j, and
                    // antisymmetry makes the sign irrelevant for the kernel
                    for (int r = 0; r < n_; ++r)
                        stacked.at(i * n_ + r, j) = col[static_cast<size_t>(r)];
                }
            }
            Subspace<F> next = Subspace<F>::span(n_, kernel_basis(stacked));
            if (next.dim() == z.dim()) break;
            out.push_back(std::move(next));
            if (out.back().dim() == n_) break;
        }
        return out;
    }

    bool is_nilpotent() const {
        auto s = lower_central_series();
        return s.back().dim() == 0 || n_ == 0;
    }

    bool is_solvable() const {
        auto s = derived_series();
        return s.back().dim() == 0 || n_ == 0;
    }

    /// Nonzero terms of the lower central series; 0 for the 0-dim algebra.
    int nilpotency_class() const {
        if (n_ == 0) return 0;
        auto s = lower_central_series();
        if (s.back().dim() != 0) throw arithmetic_error("nilpotency class of a non-nilpotent algebra");
        return static_cast<int>(s.size()) - 1;
    }

    int solvability_class() const {
        if (n_ == 0) return 0;
        auto s = derived_series();
        if (s.back().dim() != 0) throw arithmetic_error("solvability class of a non-solvable algebra");
        return static_cast<int>(s.size()) - 1;
    }

    bool is_ideal(const Subspace<F>& i) const {
        Subspace<F> g = Subspace<F>::full(n_);
        return i.contains(bracket_spaces(g, i));
    }

    /// Quotient by an ideal, on the complement of the ideal's pivot
    /// coordinates.  Well-definedness is asserted by re-bracketing shifted
    /// coset representatives.
    LieAlgebra quotient(const Subspace<F>& ideal) const {
        if (!is_ideal(ideal)) throw not_an_ideal_error("quotient by a non-ideal");
        std::vector<int> comp = ideal.complement_indices();
        int m = static_cast<int>(comp.size());
        LieAlgebra q(m, label_.empty() ? "" : label_ + "/I");
        auto coords = [&](const Vec<F>& v) {
            Vec<F> out(static_cast<size_t>(m), F(0));
            for (int a = 0; a < m; ++a) out[static_cast<size_t>(a)] = v[static_cast<size_t>(comp[a])];
            return out;
        };
        for (int a = 0; a < m; ++a)
            for (int b = a + 1; b < m; ++b) {
                Vec<F> ea(static_cast<size_t>(n_), F(0)), eb(static_cast<size_t>(n_), F(0));
                ea[static_cast<size_t>(comp[a])] = F(1);
                eb[static_cast<size_t>(comp[b])] = F(1);
                Vec<F> br = coords(ideal.reduce(bracket(ea, eb)));
                // shifted representatives must give the same coset
                if (ideal.dim() > 0) {
                    Vec<F> ea2 = ea, eb2 = eb;
                    for (int j = 0; j < n_; ++j) {
                        ea2[static_cast<size_t>(j)] += ideal.basis().front()[static_cast<size_t>(j)];
                        eb2[static_cast<size_t>(j)] += ideal.basis().back()[static_cast<size_t>(j)];
                    }
                    if (coords(ideal.reduce(bracket(ea2, eb2))) != br)
                        throw not_an_ideal_error("quotient bracket not well-defined");
                }
                for (int k = 0; k < m; ++k) q.set_c(a, b, k, br[static_cast<size_t>(k)]);
            }
        return q;
    }

    LieAlgebra central_quotient() const { return quotient(center()); }

    /// L + a central abelian summand of dimension d.
    LieAlgebra direct_sum_abelian(int d) const {
        LieAlgebra out(n_ + d, label_);
        for (int i = 0; i < n_; ++i)
            for (int j = i + 1; j < n_; ++j)
                for (int k = 0; k < n_; ++k) out.set_c(i, j, k, c(i, j, k));
        return out;
    }

    /// Constants mapped into a larger scalar field.
    template <class G>
    LieAlgebra<G> map_scalars() const {
        LieAlgebra<G> out(n_, label_);
        for (int i = 0; i < n_; ++i)
            for (int j = i + 1; j < n_; ++j)
                for (int k = 0; k < n_; ++k)
                    if (!c(i, j, k).is_zero()) out.set_c(i, j, k, G(c(i, j, k)));
        return out;
    }

    friend bool operator==(const LieAlgebra& a, const LieAlgebra& b) {
        return a.n_ == b.n_ && a.c_ == b.c_;
    }

    /// First structure constant differing from `other`, as (i, j, k) with
    /// i < j, or nullopt when the tables agree.
    std::optional<std::array<int, 3>> first_difference(const LieAlgebra& other) const {
        if (n_ != other.n_) return std::array<int, 3>{-1, -1, -1};
        for (int i = 0; i < n_; ++i)
            for (int j = i + 1; j < n_; ++j)
                for (int k = 0; k < n_; ++k)
                    if (!(c(i, j, k) == other.c(i, j, k))) return std::array<int, 3>{i, j, k};
        return std::nullopt;
    }

private:
    int n_ = 0;
    std::string label_;
    std::vector<F> c_;
};

/// Abelian algebra of dimension n.
template <class F>
LieAlgebra<F> abelian(int n) {
    return LieAlgebra<F>(n, "C^" + std::to_string(n));
}

template <class F>
F matrix_trace(const Matrix<F>& m) {
    F tr(0);
    for (int i = 0; i < m.rows(); ++i) tr += m.at(i, i);
    return tr;
}

template <class F>
Matrix<F> matrix_power(const Matrix<F>& m, int e) {
    Matrix<F> acc = Matrix<F>::identity(m.rows());
    for (int k = 0; k < e; ++k) acc = acc * m;
    return acc;
}

struct c_invariant_degenerate_error : arithmetic_error {
    using arithmetic_error::arithmetic_error;
};

/// tr(ad x)^i tr(ad y)^j / tr((ad x)^i (ad y)^j) sampled at random vector
/// pairs; the common value if every sample agrees, nullopt if the samples
/// disagree (the quantity is then not an invariant of the algebra).
/// Throws when every sampled denominator vanishes.
template <class F, class Rng>
std::optional<F> c_invariant(const LieAlgebra<F>& L, int i, int j, int samples, Rng&& rng,
                             long coeff_range = 7) {
    std::optional<F> common;
    int usable = 0;
    auto random_vec = [&]() {
        Vec<F> v(static_cast<size_t>(L.dim()), F(0));
        for (auto& x : v)
            x = F(static_cast<long>(rng() % (2 * coeff_range + 1)) - coeff_range);
        return v;
    };
    for (int s = 0; s < samples; ++s) {
        Matrix<F> ax = matrix_power(L.adjoint_matrix(random_vec()), i);
        Matrix<F> ay = matrix_power(L.adjoint_matrix(random_vec()), j);
        F den = matrix_trace(ax * ay);
        if (den.is_zero()) continue;
        F val = matrix_trace(ax) * matrix_trace(ay) / den;
        ++usable;
        if (!common)
            common = val;
        else if (!(*common == val))
            return std::nullopt;
    }
    if (usable == 0)
        throw c_invariant_degenerate_error("all sampled denominators vanish");
    return common;
}

} // namespace lievar

#endif

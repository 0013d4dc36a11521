#ifndef LIEVAR_COHOMOLOGY_HPP
#define LIEVAR_COHOMOLOGY_HPP

#include "lievar/lie_algebra.hpp"

#include <map>

namespace lievar {

enum class Module { Trivial, Adjoint };

namespace detail {

inline std::vector<std::vector<int>> subsets_lex(int n, int j) {
    std::vector<std::vector<int>> out;
    if (j < 0 || j > n) return out;
    std::vector<int> cur(static_cast<size_t>(j));
    for (int i = 0; i < j; ++i) cur[static_cast<size_t>(i)] = i;
    while (true) {
        out.push_back(cur);
        int i = j - 1;
        while (i >= 0 && cur[static_cast<size_t>(i)] == n - j + i) --i;
        if (i < 0) break;
        ++cur[static_cast<size_t>(i)];
        for (int k = i + 1; k < j; ++k) cur[static_cast<size_t>(k)] = cur[static_cast<size_t>(k - 1)] + 1;
    }
    return out;
}

} // namespace detail

/// Basis bookkeeping for C^j(L, k) and C^j(L, L): lexicographic j-subsets
/// of the basis, crossed with the target index for adjoint coefficients.
class CochainBasis {
public:
    CochainBasis(int n, int j, Module kind) : n_(n), kind_(kind),
                                              subsets_(detail::subsets_lex(n, j)) {
        for (size_t r = 0; r < subsets_.size(); ++r) rank_[subsets_[r]] = static_cast<int>(r);
    }

    int dim() const {
        int s = static_cast<int>(subsets_.size());
        return kind_ == Module::Adjoint ? s * n_ : s;
    }
    int subset_count() const { return static_cast<int>(subsets_.size()); }
    const std::vector<int>& subset(int r) const { return subsets_[static_cast<size_t>(r)]; }
    int subset_rank(const std::vector<int>& s) const {
        auto it = rank_.find(s);
        return it == rank_.end() ? -1 : it->second;
    }
    /// Column/row index of the (subset, target) pair.
    int index(int subset_rank_, int target) const {
        return kind_ == Module::Adjoint ? subset_rank_ * n_ + target : subset_rank_;
    }

private:
    int n_;
    Module kind_;
    std::vector<std::vector<int>> subsets_;
    std::map<std::vector<int>, int> rank_;
};

/// Matrix of the standard differential d^j : C^j -> C^{j+1}.
///
/// (d phi)(x_0..x_j) = sum_{p<q} (-1)^{p+q} phi([x_p,x_q], ..^p..^q..)
///                     + [adjoint] sum_p (-1)^p [x_p, phi(..^p..)]
template <class F>
Matrix<F> coboundary_matrix(const LieAlgebra<F>& L, int j, Module kind) {
    int n = L.dim();
    CochainBasis dom(n, j, kind), cod(n, j + 1, kind);
    Matrix<F> d(cod.dim(), dom.dim());
    int targets = kind == Module::Adjoint ? n : 1;

    for (int tr = 0; tr < cod.subset_count(); ++tr) {
        const std::vector<int>& T = cod.subset(tr);
        int len = static_cast<int>(T.size());
        // bracket terms
        for (int p = 0; p < len; ++p)
            for (int q = p + 1; q < len; ++q) {
                int sgn_pq = ((p + q) % 2 == 0) ? 1 : -1;
                std::vector<int> rest;
                rest.reserve(static_cast<size_t>(len) - 2);
                for (int a = 0; a < len; ++a)
                    if (a != p && a != q) rest.push_back(T[static_cast<size_t>(a)]);
                for (int r = 0; r < n; ++r) {
                    const F& cc = L.c(T[static_cast<size_t>(p)], T[static_cast<size_t>(q)], r);
                    if (cc.is_zero()) continue;
                    bool dup = false;
                    int before = 0;
                    for (int x : rest) {
                        if (x == r) { dup = true; break; }
                        if (x < r) ++before;
                    }
                    if (dup) continue;
                    std::vector<int> S = rest;
                    S.insert(S.begin() + before, r);
                    int sr = dom.subset_rank(S);
                    int sgn_sort = (before % 2 == 0) ? 1 : -1;
                    F val = (sgn_pq * sgn_sort > 0) ? cc : -cc;
                    for (int m = 0; m < targets; ++m)
                        d.at(cod.index(tr, m), dom.index(sr, m)) += val;
                }
            }
        // module action terms
        if (kind == Module::Adjoint)
            for (int p = 0; p < len; ++p) {
                std::vector<int> rest;
                rest.reserve(static_cast<size_t>(len) - 1);
                for (int a = 0; a < len; ++a)
                    if (a != p) rest.push_back(T[static_cast<size_t>(a)]);
                int sr = dom.subset_rank(rest);
                int sgn_p = (p % 2 == 0) ? 1 : -1;
                int xp = T[static_cast<size_t>(p)];
                for (int m = 0; m < n; ++m)
                    for (int mp = 0; mp < n; ++mp) {
                        const F& cc = L.c(xp, m, mp);
                        if (cc.is_zero()) continue;
                        d.at(cod.index(tr, mp), dom.index(sr, m)) += sgn_p > 0 ? cc : -cc;
                    }
            }
    }
    return d;
}

/// Cocycle, coboundary and cohomology dimensions for degrees 0..n.
struct CohomologyProfile {
    Module kind = Module::Adjoint;
    std::vector<int> cdim; // dim C^j
    std::vector<int> z;    // dim Z^j = dim ker d^j
    std::vector<int> bnd;  // dim B^j = rank d^{j-1}
    std::vector<int> h;    // h_j = z_j - bnd_j
};

/// Ranks of d^0..d^n; everything in a profile is an affine function of
/// these (used by the multi-specialization merge for parametric algebras).
template <class F>
std::vector<int> coboundary_ranks(const LieAlgebra<F>& L, Module kind) {
    std::vector<int> r;
    for (int j = 0; j <= L.dim(); ++j) r.push_back(rank(coboundary_matrix(L, j, kind)));
    return r;
}

inline CohomologyProfile profile_from_ranks(int n, Module kind, const std::vector<int>& ranks) {
    CohomologyProfile p;
    p.kind = kind;
    for (int j = 0; j <= n; ++j) {
        CochainBasis b(n, j, kind);
        p.cdim.push_back(b.dim());
        p.z.push_back(b.dim() - ranks[static_cast<size_t>(j)]);
        p.bnd.push_back(j == 0 ? 0 : ranks[static_cast<size_t>(j) - 1]);
        p.h.push_back(p.z.back() - p.bnd.back());
    }
    return p;
}

template <class F>
CohomologyProfile cohomology_profile(const LieAlgebra<F>& L, Module kind) {
    return profile_from_ranks(L.dim(), kind, coboundary_ranks(L, kind));
}

/// dim Z^j(L, L), the adjoint cocycle space.
template <class F>
int adjoint_cocycle_dim(const LieAlgebra<F>& L, int j) {
    CochainBasis b(L.dim(), j, Module::Adjoint);
    return b.dim() - rank(coboundary_matrix(L, j, Module::Adjoint));
}

/// dim Der(L) = dim Z^1(L, L): solutions of D[x,y] = [Dx,y] + [x,Dy].
template <class F>
int derivation_dim(const LieAlgebra<F>& L) {
    return adjoint_cocycle_dim(L, 1);
}

template <class F>
int orbit_dim(const LieAlgebra<F>& L) {
    return L.dim() * L.dim() - derivation_dim(L);
}

} // namespace lievar

#endif

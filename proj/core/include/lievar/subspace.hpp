#ifndef LIEVAR_SUBSPACE_HPP
#define LIEVAR_SUBSPACE_HPP

#include "lievar/matrix.hpp"

namespace lievar {

/// Subspace of F^n held as a reduced-echelon basis, so equal subspaces
/// compare equal as lists.
template <class F>
class Subspace {
public:
    explicit Subspace(int ambient) : n_(ambient) {}

    static Subspace span(int ambient, const std::vector<Vec<F>>& vectors) {
        Subspace s(ambient);
        if (vectors.empty()) return s;
        Matrix<F> m(static_cast<int>(vectors.size()), ambient);
        for (int i = 0; i < m.rows(); ++i)
            for (int j = 0; j < ambient; ++j)
                m.at(i, j) = vectors[static_cast<size_t>(i)][static_cast<size_t>(j)];
        std::vector<int> pivots = m.rref();
        for (size_t r = 0; r < pivots.size(); ++r) {
            Vec<F> v(static_cast<size_t>(ambient), F(0));
            for (int j = 0; j < ambient; ++j) v[static_cast<size_t>(j)] = m.at(static_cast<int>(r), j);
            s.basis_.push_back(std::move(v));
            s.pivots_.push_back(pivots[r]);
        }
        return s;
    }

    static Subspace full(int ambient) {
        std::vector<Vec<F>> vs;
        for (int i = 0; i < ambient; ++i) {
            Vec<F> v(static_cast<size_t>(ambient), F(0));
            v[static_cast<size_t>(i)] = F(1);
            vs.push_back(std::move(v));
        }
        return span(ambient, vs);
    }

    int ambient() const { return n_; }
    int dim() const { return static_cast<int>(basis_.size()); }
    const std::vector<Vec<F>>& basis() const { return basis_; }
    const std::vector<int>& pivots() const { return pivots_; }

    /// Residual of v after clearing all pivot coordinates; zero iff v lies
    /// in the subspace.
    Vec<F> reduce(Vec<F> v) const {
        for (size_t r = 0; r < basis_.size(); ++r) {
            const F& c = v[static_cast<size_t>(pivots_[r])];
            if (c.is_zero()) continue;
            F f = c;
            for (int j = 0; j < n_; ++j)
                v[static_cast<size_t>(j)] =
                    v[static_cast<size_t>(j)] - f * basis_[r][static_cast<size_t>(j)];
        }
        return v;
    }

    bool contains(const Vec<F>& v) const {
        Vec<F> r = reduce(v);
        for (const auto& x : r)
            if (!x.is_zero()) return false;
        return true;
    }

    bool contains(const Subspace& other) const {
        for (const auto& v : other.basis_)
            if (!contains(v)) return false;
        return true;
    }

    Subspace sum(const Subspace& other) const {
        std::vector<Vec<F>> vs = basis_;
        vs.insert(vs.end(), other.basis_.begin(), other.basis_.end());
        return span(n_, vs);
    }

    /// Standard basis indices not used as pivots; they represent a
    /// complement of the subspace.
    std::vector<int> complement_indices() const {
        std::vector<bool> used(static_cast<size_t>(n_), false);
        for (int p : pivots_) used[static_cast<size_t>(p)] = true;
        std::vector<int> out;
        for (int j = 0; j < n_; ++j)
            if (!used[static_cast<size_t>(j)]) out.push_back(j);
        return out;
    }

    friend bool operator==(const Subspace& a, const Subspace& b) {
        return a.n_ == b.n_ && a.basis_ == b.basis_;
    }

private:
    int n_;
    std::vector<Vec<F>> basis_;
    std::vector<int> pivots_;
};

} // namespace lievar

#endif

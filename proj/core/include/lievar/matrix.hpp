#ifndef LIEVAR_MATRIX_HPP
#define LIEVAR_MATRIX_HPP

#include "lievar/fields.hpp"

#include <optional>
#include <vector>

namespace lievar {

struct singular_matrix_error : arithmetic_error {
    using arithmetic_error::arithmetic_error;
};

template <class F>
using Vec = std::vector<F>;

/// Dense row-major matrix over an exact field.
template <class F>
class Matrix {
public:
    Matrix() = default;
    Matrix(int rows, int cols) : r_(rows), c_(cols), e_(static_cast<size_t>(rows) * cols, F(0)) {}

    static Matrix identity(int n) {
        Matrix m(n, n);
        for (int i = 0; i < n; ++i) m.at(i, i) = F(1);
        return m;
    }

    int rows() const { return r_; }
    int cols() const { return c_; }
    F& at(int i, int j) { return e_[static_cast<size_t>(i) * c_ + j]; }
    const F& at(int i, int j) const { return e_[static_cast<size_t>(i) * c_ + j]; }

    bool is_zero() const {
        for (const auto& x : e_)
            if (!x.is_zero()) return false;
        return true;
    }

    friend bool operator==(const Matrix& a, const Matrix& b) {
        return a.r_ == b.r_ && a.c_ == b.c_ && a.e_ == b.e_;
    }

    Matrix operator*(const Matrix& o) const {
        if (c_ != o.r_) throw arithmetic_error("matrix product dimension mismatch");
        Matrix out(r_, o.c_);
        for (int i = 0; i < r_; ++i)
            for (int k = 0; k < c_; ++k) {
                const F& a = at(i, k);
                if (a.is_zero()) continue;
                for (int j = 0; j < o.c_; ++j) {
                    const F& b = o.at(k, j);
                    if (!b.is_zero()) out.at(i, j) += a * b;
                }
            }
        return out;
    }

    Vec<F> apply(const Vec<F>& v) const {
        if (static_cast<int>(v.size()) != c_) throw arithmetic_error("matrix-vector mismatch");
        Vec<F> out(static_cast<size_t>(r_), F(0));
        for (int i = 0; i < r_; ++i)
            for (int j = 0; j < c_; ++j)
                if (!at(i, j).is_zero() && !v[static_cast<size_t>(j)].is_zero())
                    out[static_cast<size_t>(i)] += at(i, j) * v[static_cast<size_t>(j)];
        return out;
    }

    Vec<F> column(int j) const {
        Vec<F> out(static_cast<size_t>(r_), F(0));
        for (int i = 0; i < r_; ++i) out[static_cast<size_t>(i)] = at(i, j);
        return out;
    }

    /// Reduced row echelon form in place; returns pivot columns.
    std::vector<int> rref() {
        std::vector<int> pivots;
        int row = 0;
        for (int col = 0; col < c_ && row < r_; ++col) {
            // pivot: lowest elimination measure among nonzero entries, then
            // lowest row index
            int best = -1;
            int best_measure = 0;
            for (int i = row; i < r_; ++i) {
                if (at(i, col).is_zero()) continue;
                int m = field_traits<F>::measure(at(i, col));
                if (best < 0 || m < best_measure) {
                    best = i;
                    best_measure = m;
                }
            }
            if (best < 0) continue;
            swap_rows(row, best);
            F inv = F(1) / at(row, col);
            for (int j = col; j < c_; ++j) at(row, j) = at(row, j) * inv;
            for (int i = 0; i < r_; ++i) {
                if (i == row || at(i, col).is_zero()) continue;
                F f = at(i, col);
                for (int j = col; j < c_; ++j) at(i, j) = at(i, j) - f * at(row, j);
            }
            pivots.push_back(col);
            ++row;
        }
        return pivots;
    }

    void swap_rows(int i, int k) {
        if (i == k) return;
        for (int j = 0; j < c_; ++j) std::swap(at(i, j), at(k, j));
    }

private:
    int r_ = 0, c_ = 0;
    std::vector<F> e_;
};

namespace detail {

inline void content_reduce(std::vector<mpz_class>& row) {
    mpz_class g = 0;
    for (const auto& x : row) {
        if (x == 0) continue;
        mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), x.get_mpz_t());
        if (g == 1) return;
    }
    if (g == 0 || g == 1) return;
    for (auto& x : row)
        if (x != 0) mpz_divexact(x.get_mpz_t(), x.get_mpz_t(), g.get_mpz_t());
}

/// Rank of an integer matrix by cross-multiplication elimination with
/// per-row content reduction.  Fast on the sparse small-entry matrices the
/// cohomology differentials produce.
inline int rank_int_rows(std::vector<std::vector<mpz_class>> m) {
    if (m.empty()) return 0;
    int rows = static_cast<int>(m.size());
    int cols = static_cast<int>(m[0].size());
    int rank = 0;
    for (int col = 0; col < cols && rank < rows; ++col) {
        int best = -1;
        size_t best_size = 0;
        for (int i = rank; i < rows; ++i) {
            if (m[static_cast<size_t>(i)][static_cast<size_t>(col)] == 0) continue;
            size_t sz = mpz_sizeinbase(
                m[static_cast<size_t>(i)][static_cast<size_t>(col)].get_mpz_t(), 2);
            if (best < 0 || sz < best_size) {
                best = i;
                best_size = sz;
            }
        }
        if (best < 0) continue;
        std::swap(m[static_cast<size_t>(rank)], m[static_cast<size_t>(best)]);
        const std::vector<mpz_class>& prow = m[static_cast<size_t>(rank)];
        const mpz_class& p = prow[static_cast<size_t>(col)];
        for (int i = rank + 1; i < rows; ++i) {
            std::vector<mpz_class>& row = m[static_cast<size_t>(i)];
            mpz_class& e = row[static_cast<size_t>(col)];
            if (e == 0) continue;
            mpz_class g;
            mpz_gcd(g.get_mpz_t(), p.get_mpz_t(), e.get_mpz_t());
            mpz_class pf = p / g, ef = e / g;
            for (int j = col; j < cols; ++j)
                row[static_cast<size_t>(j)] =
                    pf * row[static_cast<size_t>(j)] - ef * prow[static_cast<size_t>(j)];
            content_reduce(row);
        }
        ++rank;
    }
    return rank;
}

/// Row-wise clearing of denominators.
inline std::vector<std::vector<mpz_class>> to_int_rows(const Matrix<Rat>& m) {
    std::vector<std::vector<mpz_class>> out(static_cast<size_t>(m.rows()));
    for (int i = 0; i < m.rows(); ++i) {
        mpz_class l = 1;
        for (int j = 0; j < m.cols(); ++j)
            mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), m.at(i, j).den().get_mpz_t());
        auto& row = out[static_cast<size_t>(i)];
        row.resize(static_cast<size_t>(m.cols()));
        for (int j = 0; j < m.cols(); ++j)
            row[static_cast<size_t>(j)] = m.at(i, j).num() * (l / m.at(i, j).den());
    }
    return out;
}

} // namespace detail

/// Rank by classical fraction-free elimination (two-step division by the
/// previous pivot) on the cleared-denominator matrix.
inline int rank_bareiss(const Matrix<Rat>& m) {
    auto rows = detail::to_int_rows(m);
    if (rows.empty()) return 0;
    int nr = static_cast<int>(rows.size());
    int nc = static_cast<int>(rows[0].size());
    mpz_class prev = 1;
    int rank = 0;
    for (int col = 0; col < nc && rank < nr; ++col) {
        int pivot = -1;
        for (int i = rank; i < nr; ++i)
            if (rows[static_cast<size_t>(i)][static_cast<size_t>(col)] != 0) {
                pivot = i;
                break;
            }
        if (pivot < 0) continue;
        std::swap(rows[static_cast<size_t>(rank)], rows[static_cast<size_t>(pivot)]);
        const auto& prow = rows[static_cast<size_t>(rank)];
        const mpz_class& p = prow[static_cast<size_t>(col)];
        for (int i = rank + 1; i < nr; ++i) {
            auto& row = rows[static_cast<size_t>(i)];
            mpz_class e = row[static_cast<size_t>(col)];
            for (int j = col; j < nc; ++j) {
                mpz_class v = p * row[static_cast<size_t>(j)] - e * prow[static_cast<size_t>(j)];
                mpz_divexact(v.get_mpz_t(), v.get_mpz_t(), prev.get_mpz_t());
                row[static_cast<size_t>(j)] = v;
            }
        }
        prev = p;
        ++rank;
    }
    return rank;
}

/// Rank by plain field elimination (no fraction-free tricks).
template <class F>
int rank_field_gauss(Matrix<F> m) {
    return static_cast<int>(m.rref().size());
}

template <class F>
int rank(const Matrix<F>& m) {
    if constexpr (std::is_same_v<F, Rat>)
        return detail::rank_int_rows(detail::to_int_rows(m));
    else
        return rank_field_gauss(m);
}

/// Basis of the right null space; size = cols - rank.
template <class F>
std::vector<Vec<F>> kernel_basis(const Matrix<F>& m) {
    Matrix<F> r = m;
    std::vector<int> pivots = r.rref();
    std::vector<bool> is_pivot(static_cast<size_t>(m.cols()), false);
    for (int p : pivots) is_pivot[static_cast<size_t>(p)] = true;
    std::vector<Vec<F>> basis;
    for (int free = 0; free < m.cols(); ++free) {
        if (is_pivot[static_cast<size_t>(free)]) continue;
        Vec<F> v(static_cast<size_t>(m.cols()), F(0));
        v[static_cast<size_t>(free)] = F(1);
        for (size_t pi = 0; pi < pivots.size(); ++pi)
            v[static_cast<size_t>(pivots[pi])] = -r.at(static_cast<int>(pi), free);
        basis.push_back(std::move(v));
    }
    return basis;
}

/// Some solution of m x = b, or nullopt when inconsistent.
template <class F>
std::optional<Vec<F>> solve(const Matrix<F>& m, const Vec<F>& b) {
    if (static_cast<int>(b.size()) != m.rows()) throw arithmetic_error("solve: size mismatch");
    Matrix<F> aug(m.rows(), m.cols() + 1);
    for (int i = 0; i < m.rows(); ++i) {
        for (int j = 0; j < m.cols(); ++j) aug.at(i, j) = m.at(i, j);
        aug.at(i, m.cols()) = b[static_cast<size_t>(i)];
    }
    std::vector<int> pivots = aug.rref();
    if (!pivots.empty() && pivots.back() == m.cols()) return std::nullopt;
    Vec<F> x(static_cast<size_t>(m.cols()), F(0));
    for (size_t pi = 0; pi < pivots.size(); ++pi)
        x[static_cast<size_t>(pivots[pi])] = aug.at(static_cast<int>(pi), m.cols());
    return x;
}

/// Exact inverse; singular_matrix_error when not invertible.
template <class F>
Matrix<F> inverse(const Matrix<F>& m) {
    if (m.rows() != m.cols()) throw singular_matrix_error("inverse of non-square matrix");
    int n = m.rows();
    Matrix<F> aug(n, 2 * n);
    for (int i = 0; i < n; ++i) {
        for (int j = 0; j < n; ++j) aug.at(i, j) = m.at(i, j);
        aug.at(i, n + i) = F(1);
    }
    std::vector<int> pivots = aug.rref();
    if (static_cast<int>(pivots.size()) < n || pivots[static_cast<size_t>(n) - 1] != n - 1)
        throw singular_matrix_error("matrix is singular");
    Matrix<F> out(n, n);
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) out.at(i, j) = aug.at(i, n + j);
    return out;
}

} // namespace lievar

#endif

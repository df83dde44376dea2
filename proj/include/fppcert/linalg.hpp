#pragma once
// Dense exact linear algebra over a coefficient domain, plus polynomial
// matrices (Jacobians and their minors).
#include <algorithm>
#include <map>
#include <set>
#include <vector>

#include "fppcert/polynomial.hpp"

namespace fpp {

template <class D>
struct Matrix {
    using Coef = typename D::value_type;
    D dom;
    int rows = 0, cols = 0;
    std::vector<Coef> a;

    Matrix() = default;
    Matrix(D d, int r, int c) : dom(std::move(d)), rows(r), cols(c), a(static_cast<std::size_t>(r) * c, dom.zero()) {}
    Coef& at(int i, int j) { return a[static_cast<std::size_t>(i) * cols + j]; }
    const Coef& at(int i, int j) const { return a[static_cast<std::size_t>(i) * cols + j]; }
    static Matrix identity(D d, int n) {
        Matrix m(d, n, n);
        for (int i = 0; i < n; ++i) m.at(i, i) = m.dom.one();
        return m;
    }
};

template <class D>
struct RankKernel {
    int rank = 0;
    std::vector<int> pivot_cols;
    std::vector<std::vector<typename D::value_type>> kernel;  // right kernel basis
};

// Reduced row echelon form in place; pivots are chosen as the first nonzero
// entry scanning columns left to right, rows top to bottom.
template <class D>
std::vector<int> row_reduce(Matrix<D>& M) {
    const D& d = M.dom;
    std::vector<int> piv;
    int r = 0;
    for (int c = 0; c < M.cols && r < M.rows; ++c) {
        int sel = -1;
        for (int i = r; i < M.rows; ++i)
            if (!d.is_zero(M.at(i, c))) {
                sel = i;
                break;
            }
        if (sel < 0) continue;
        if (sel != r)
            for (int j = 0; j < M.cols; ++j) std::swap(M.at(sel, j), M.at(r, j));
        auto inv = d.inv(M.at(r, c));
        for (int j = c; j < M.cols; ++j) M.at(r, j) = d.mul(M.at(r, j), inv);
        for (int i = 0; i < M.rows; ++i) {
            if (i == r || d.is_zero(M.at(i, c))) continue;
            auto f = M.at(i, c);
            for (int j = c; j < M.cols; ++j)
                if (!d.is_zero(M.at(r, j))) M.at(i, j) = d.sub(M.at(i, j), d.mul(f, M.at(r, j)));
        }
        piv.push_back(c);
        ++r;
    }
    return piv;
}

template <class D>
RankKernel<D> kernel_and_rank(Matrix<D> M) {
    RankKernel<D> out;
    out.pivot_cols = row_reduce(M);
    out.rank = static_cast<int>(out.pivot_cols.size());
    std::vector<char> is_piv(M.cols, 0);
    for (int c : out.pivot_cols) is_piv[c] = 1;
    for (int free = 0; free < M.cols; ++free) {
        if (is_piv[free]) continue;
        std::vector<typename D::value_type> v(M.cols, M.dom.zero());
        v[free] = M.dom.one();
        for (int k = 0; k < out.rank; ++k) v[out.pivot_cols[k]] = M.dom.neg(M.at(k, free));
        out.kernel.push_back(std::move(v));
    }
    return out;
}

template <class D>
int matrix_rank(Matrix<D> M) {
    return static_cast<int>(row_reduce(M).size());
}

// Determinant of a square matrix by elimination over the field.
template <class D>
typename D::value_type determinant(Matrix<D> M) {
    if (M.rows != M.cols) throw IndexOutOfRange("determinant of a non-square matrix");
    const D& d = M.dom;
    auto det = d.one();
    for (int c = 0; c < M.cols; ++c) {
        int sel = -1;
        for (int i = c; i < M.rows; ++i)
            if (!d.is_zero(M.at(i, c))) {
                sel = i;
                break;
            }
        if (sel < 0) return d.zero();
        if (sel != c) {
            for (int j = 0; j < M.cols; ++j) std::swap(M.at(sel, j), M.at(c, j));
            det = d.neg(det);
        }
        det = d.mul(det, M.at(c, c));
        auto inv = d.inv(M.at(c, c));
        for (int i = c + 1; i < M.rows; ++i) {
            if (d.is_zero(M.at(i, c))) continue;
            auto f = d.mul(M.at(i, c), inv);
            for (int j = c; j < M.cols; ++j) M.at(i, j) = d.sub(M.at(i, j), d.mul(f, M.at(c, j)));
        }
    }
    return det;
}

template <class D>
using PolyMatrix = std::vector<std::vector<Polynomial<D>>>;

// Entry (i, j) is the partial derivative of gens[i] in variable j.
template <class D>
PolyMatrix<D> jacobian(const std::vector<Polynomial<D>>& gens) {
    PolyMatrix<D> J;
    if (gens.empty()) return J;
    for (auto& g : gens) {
        g.check_same_ring(gens.front());
        std::vector<Polynomial<D>> row;
        for (int j = 0; j < g.nvars(); ++j) row.push_back(g.diff(j));
        J.push_back(std::move(row));
    }
    return J;
}

// Division-free determinant by Laplace expansion along rows, memoized on the
// set of remaining columns (2^k subproblems for a k x k minor).
// `reduce` is applied to every partial determinant; pass a normal form map
// to compute the minor in a quotient ring.
template <class D, class Reduce>
Polynomial<D> minor_determinant(const PolyMatrix<D>& M, const std::vector<int>& rows, const std::vector<int>& cols,
                                const Reduce& reduce) {
    if (rows.size() != cols.size()) throw IndexOutOfRange("minor needs as many rows as columns");
    const int k = static_cast<int>(rows.size());
    if (k > 20) throw IndexOutOfRange("minor too large");
    if (M.empty()) throw IndexOutOfRange("empty matrix");
    if (std::set<int>(rows.begin(), rows.end()).size() != rows.size() ||
        std::set<int>(cols.begin(), cols.end()).size() != cols.size())
        throw IndexOutOfRange("repeated index in minor selection");
    for (int r : rows)
        if (r < 0 || r >= static_cast<int>(M.size())) throw IndexOutOfRange("row " + std::to_string(r));
    for (int c : cols)
        if (c < 0 || c >= static_cast<int>(M.front().size())) throw IndexOutOfRange("col " + std::to_string(c));
    const auto& ref = M.front().front();
    if (k == 0) return Polynomial<D>::constant(ref.domain(), ref.vars(), ref.domain().one());
    // det of rows[depth..] against the column subset `mask` (popcount = k - depth).
    std::map<unsigned, Polynomial<D>> memo;
    auto rec = [&](auto&& self, int depth, unsigned mask) -> Polynomial<D> {
        if (depth == k) return Polynomial<D>::constant(ref.domain(), ref.vars(), ref.domain().one());
        auto it = memo.find(mask);
        if (it != memo.end()) return it->second;
        Polynomial<D> acc(ref.domain(), ref.vars());
        int sign_pos = 0;
        for (int j = 0; j < k; ++j) {
            if (!(mask >> j & 1u)) continue;
            const auto& e = M[rows[depth]][cols[j]];
            if (!e.is_zero()) {
                Polynomial<D> term = e * self(self, depth + 1, mask & ~(1u << j));
                acc = (sign_pos & 1) ? acc - term : acc + term;
            }
            ++sign_pos;
        }
        acc = reduce(acc);
        memo.emplace(mask, acc);
        return acc;
    };
    return rec(rec, 0, (1u << k) - 1);
}

template <class D>
Polynomial<D> minor_determinant(const PolyMatrix<D>& M, const std::vector<int>& rows, const std::vector<int>& cols) {
    return minor_determinant(M, rows, cols, [](const Polynomial<D>& p) { return p; });
}

// Exact integer matrices (Gram matrices).
using IntMatrix = std::vector<std::vector<long>>;
// Rank via rational Gaussian elimination.
int integer_rank(const IntMatrix& M);
// Rank via Smith normal form (count of nonzero invariant factors).
int smith_rank(const IntMatrix& M);
std::vector<long> smith_invariants(const IntMatrix& M);
// Numbers of positive, negative and zero eigenvalues of a symmetric matrix.
struct Inertia {
    int positive = 0, negative = 0, zero = 0;
};
Inertia inertia(const IntMatrix& M);

}  // namespace fpp

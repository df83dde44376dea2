#include "fppcert/linalg.hpp"

#include <gmpxx.h>

#include <cstdlib>

namespace fpp {

int integer_rank(const IntMatrix& M) {
    if (M.empty()) return 0;
    int rows = static_cast<int>(M.size()), cols = static_cast<int>(M[0].size());
    std::vector<std::vector<mpq_class>> a(rows, std::vector<mpq_class>(cols));
    for (int i = 0; i < rows; ++i)
        for (int j = 0; j < cols; ++j) a[i][j] = M[i][j];
    int r = 0;
    for (int c = 0; c < cols && r < rows; ++c) {
        int sel = -1;
        for (int i = r; i < rows; ++i)
            if (sgn(a[i][c]) != 0) {
                sel = i;
                break;
            }
        if (sel < 0) continue;
        std::swap(a[sel], a[r]);
        for (int i = r + 1; i < rows; ++i) {
            if (sgn(a[i][c]) == 0) continue;
            mpq_class f = a[i][c] / a[r][c];
            for (int j = c; j < cols; ++j) a[i][j] -= f * a[r][j];
        }
        ++r;
    }
    return r;
}

std::vector<long> smith_invariants(const IntMatrix& M) {
    std::vector<long> inv;
    if (M.empty()) return inv;
    int rows = static_cast<int>(M.size()), cols = static_cast<int>(M[0].size());
    std::vector<std::vector<mpz_class>> a(rows, std::vector<mpz_class>(cols));
    for (int i = 0; i < rows; ++i)
        for (int j = 0; j < cols; ++j) a[i][j] = M[i][j];
    for (int t = 0; t < rows && t < cols; ++t) {
        for (;;) {
            // Smallest nonzero absolute value in the trailing block goes to (t, t).
            int pi = -1, pj = -1;
            for (int i = t; i < rows; ++i)
                for (int j = t; j < cols; ++j)
                    if (sgn(a[i][j]) != 0 && (pi < 0 || abs(a[i][j]) < abs(a[pi][pj]))) {
                        pi = i;
                        pj = j;
                    }
            if (pi < 0) return inv;
            std::swap(a[pi], a[t]);
            for (int i = 0; i < rows; ++i) std::swap(a[i][pj], a[i][t]);
            // Remainders strictly smaller than the pivot survive; repeat until none do.
            bool dirty = false;
            for (int i = t + 1; i < rows; ++i) {
                if (sgn(a[i][t]) == 0) continue;
                mpz_class q = a[i][t] / a[t][t];
                for (int j = t; j < cols; ++j) a[i][j] -= q * a[t][j];
                dirty |= sgn(a[i][t]) != 0;
            }
            for (int j = t + 1; j < cols; ++j) {
                if (sgn(a[t][j]) == 0) continue;
                mpz_class q = a[t][j] / a[t][t];
                for (int i = t; i < rows; ++i) a[i][j] -= q * a[i][t];
                dirty |= sgn(a[t][j]) != 0;
            }
            if (dirty) continue;
            // Divisibility of the trailing block by the pivot.
            int bad = -1;
            for (int i = t + 1; i < rows && bad < 0; ++i)
                for (int j = t + 1; j < cols; ++j)
                    if (sgn(a[i][j] % a[t][t]) != 0) {
                        bad = i;
                        break;
                    }
            if (bad < 0) break;
            for (int j = t; j < cols; ++j) a[t][j] += a[bad][j];
        }
        inv.push_back(std::labs(a[t][t].get_si()));
    }
    return inv;
}

// Symmetric elimination by congruences over Q (Sylvester's law of inertia).
Inertia inertia(const IntMatrix& M) {
    const int n = static_cast<int>(M.size());
    std::vector<std::vector<mpq_class>> a(n, std::vector<mpq_class>(n));
    for (int i = 0; i < n; ++i) {
        if (static_cast<int>(M[i].size()) != n) throw IndexOutOfRange("inertia needs a square matrix");
        for (int j = 0; j < n; ++j) a[i][j] = M[i][j];
    }
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j)
            if (a[i][j] != a[j][i]) throw ConstraintViolation("inertia needs a symmetric matrix");
    Inertia out;
    std::vector<bool> done(n, false);
    for (int step = 0; step < n; ++step) {
        int p = -1;
        for (int i = 0; i < n && p < 0; ++i)
            if (!done[i] && sgn(a[i][i]) != 0) p = i;
        if (p < 0) {
            // Zero diagonal: add row/column j to i where a[i][j] != 0.
            int pi = -1, pj = -1;
            for (int i = 0; i < n && pi < 0; ++i)
                for (int j = 0; j < n; ++j)
                    if (!done[i] && !done[j] && i != j && sgn(a[i][j]) != 0) {
                        pi = i;
                        pj = j;
                        break;
                    }
            if (pi < 0) break;
            for (int k = 0; k < n; ++k) a[pi][k] += a[pj][k];
            for (int k = 0; k < n; ++k) a[k][pi] += a[k][pj];
            p = pi;
        }
        done[p] = true;
        (sgn(a[p][p]) > 0 ? out.positive : out.negative)++;
        for (int i = 0; i < n; ++i) {
            if (done[i] || sgn(a[i][p]) == 0) continue;
            mpq_class f = a[i][p] / a[p][p];
            for (int k = 0; k < n; ++k) a[i][k] -= f * a[p][k];
            for (int k = 0; k < n; ++k) a[k][i] -= f * a[k][p];
        }
    }
    out.zero = n - out.positive - out.negative;
    return out;
}

int smith_rank(const IntMatrix& M) { return static_cast<int>(smith_invariants(M).size()); }

}  // namespace fpp

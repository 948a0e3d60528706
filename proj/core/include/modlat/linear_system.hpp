#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include "modlat/errors.hpp"

namespace modlat {

/// A x = b over an exact scalar field K (Rational, QuadExt, or RatFunc).
/// Solving never mutates the system.
template <class K>
struct LinearSystem {
    std::vector<std::vector<K>> a;
    std::vector<K> b;
    std::vector<std::string> names;

    size_t rows() const { return a.size(); }
    size_t cols() const { return a.empty() ? 0 : a.front().size(); }

    void check_shape() const {
        for (const auto& row : a)
            if (row.size() != cols())
                throw InputError("LinearSystem: ragged coefficient matrix");
        if (b.size() != rows())
            throw InputError("LinearSystem: rhs length mismatch");
        if (!names.empty() && names.size() != cols())
            throw InputError("LinearSystem: name count mismatch");
    }
};

enum class SolveOutcome { Unique, Parametrized, Inconsistent };

/// Solution report. For Parametrized systems each variable is the affine
/// expression particular[i] + sum_f free_coeff[i][f] * t_f, where t_f ranges
/// over the free variables free_cols[f].
template <class K>
struct LinearSolution {
    SolveOutcome outcome = SolveOutcome::Inconsistent;
    std::vector<K> particular;
    std::vector<size_t> free_cols;
    std::vector<std::vector<K>> free_coeff;
    std::vector<size_t> pivot_cols;

    K value(size_t var, const std::vector<K>& free_values) const {
        K v = particular[var];
        for (size_t f = 0; f < free_cols.size(); ++f) v += free_coeff[var][f] * free_values[f];
        return v;
    }
};

/// Fraction-free (Bareiss) row echelon reduction followed by back
/// substitution. Pivot choice is the first nonzero entry in row order, so the
/// output is deterministic. Every returned solution is re-checked against the
/// original system; a residual means a solver bug and throws.
template <class K>
LinearSolution<K> solve_linear_exact(const LinearSystem<K>& sys) {
    sys.check_shape();
    const size_t m = sys.rows(), n = sys.cols();
    std::vector<std::vector<K>> w(m, std::vector<K>(n + 1));
    for (size_t i = 0; i < m; ++i) {
        for (size_t j = 0; j < n; ++j) w[i][j] = sys.a[i][j];
        w[i][n] = sys.b[i];
    }

    std::vector<size_t> pivots;         // column of each pivot row
    K prev_pivot = K(1);
    size_t row = 0;
    for (size_t col = 0; col < n && row < m; ++col) {
        size_t sel = row;
        while (sel < m && w[sel][col] == K(0)) ++sel;
        if (sel == m) continue;
        if (sel != row) std::swap(w[sel], w[row]);
        const K pivot = w[row][col];
        for (size_t i = row + 1; i < m; ++i) {
            for (size_t j = col + 1; j <= n; ++j)
                w[i][j] = (w[i][j] * pivot - w[i][col] * w[row][j]) / prev_pivot;
            w[i][col] = K(0);
        }
        prev_pivot = pivot;
        pivots.push_back(col);
        ++row;
    }
    const size_t rank = row;

    LinearSolution<K> out;
    for (size_t i = rank; i < m; ++i)
        if (!(w[i][n] == K(0))) return out;  // 0 = nonzero: inconsistent

    out.pivot_cols = pivots;
    std::vector<bool> is_pivot(n, false);
    for (size_t c : pivots) is_pivot[c] = true;
    for (size_t c = 0; c < n; ++c)
        if (!is_pivot[c]) out.free_cols.push_back(c);
    const size_t nf = out.free_cols.size();
    out.outcome = nf == 0 ? SolveOutcome::Unique : SolveOutcome::Parametrized;

    // Back substitution: express each variable as affine in the free ones.
    out.particular.assign(n, K(0));
    out.free_coeff.assign(n, std::vector<K>(nf, K(0)));
    for (size_t f = 0; f < nf; ++f) out.free_coeff[out.free_cols[f]][f] = K(1);
    for (size_t r = rank; r-- > 0;) {
        const size_t pc = pivots[r];
        K part = w[r][n];
        std::vector<K> fc(nf, K(0));
        for (size_t j = pc + 1; j < n; ++j) {
            if (w[r][j] == K(0)) continue;
            part -= w[r][j] * out.particular[j];
            for (size_t f = 0; f < nf; ++f) fc[f] -= w[r][j] * out.free_coeff[j][f];
        }
        const K inv_pivot = K(1) / w[r][pc];
        out.particular[pc] = part * inv_pivot;
        for (size_t f = 0; f < nf; ++f) out.free_coeff[pc][f] = fc[f] * inv_pivot;
    }

    // Verify against the untouched input: particular solution and each
    // free-direction must satisfy A x = b and A x = 0 respectively.
    for (size_t i = 0; i < m; ++i) {
        K acc = K(0);
        for (size_t j = 0; j < n; ++j) acc += sys.a[i][j] * out.particular[j];
        if (!(acc == sys.b[i]))
            throw std::logic_error("solve_linear_exact: back-substitution check failed");
        for (size_t f = 0; f < nf; ++f) {
            K h = K(0);
            for (size_t j = 0; j < n; ++j) h += sys.a[i][j] * out.free_coeff[j][f];
            if (!(h == K(0)))
                throw std::logic_error("solve_linear_exact: homogeneous check failed");
        }
    }
    return out;
}

} // namespace modlat

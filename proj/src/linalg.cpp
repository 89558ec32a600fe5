#include "ksl/linalg.hpp"

#include <algorithm>
#include <cmath>

namespace ksl {

std::vector<cplx> ComplexMatrix::apply(const std::vector<cplx>& v) const {
    std::vector<cplx> out(rows, cplx(0.0));
    for (int r = 0; r < rows; ++r) {
        cplx acc = 0.0;
        for (int c = 0; c < cols; ++c) acc += at(r, c) * v[c];
        out[r] = acc;
    }
    return out;
}

double ComplexMatrix::max_abs() const {
    double m = 0.0;
    for (const auto& e : entries) m = std::max(m, std::abs(e));
    return m;
}

namespace {

struct Echelon {
    ComplexMatrix R;             // reduced row echelon form
    std::vector<int> pivot_cols; // one per pivot row, ascending
};

// Gauss-Jordan with partial pivoting. A pivot candidate is accepted when its
// magnitude exceeds rank_eps times the largest scale seen so far (initialized
// to the largest entry of A, so near-zero columns never become pivots).
Echelon rref(ComplexMatrix M, double rank_eps) {
    const int rows = M.rows, cols = M.cols;
    double scale = M.max_abs();
    std::vector<int> pivot_cols;
    int r = 0;
    for (int c = 0; c < cols && r < rows; ++c) {
        int p = r;
        for (int i = r + 1; i < rows; ++i)
            if (std::abs(M.at(i, c)) > std::abs(M.at(p, c))) p = i;
        double mag = std::abs(M.at(p, c));
        scale = std::max(scale, mag);
        if (mag <= rank_eps * scale) continue;
        if (p != r)
            for (int j = 0; j < cols; ++j) std::swap(M.at(p, j), M.at(r, j));
        cplx inv = 1.0 / M.at(r, c);
        for (int j = 0; j < cols; ++j) M.at(r, j) *= inv;
        M.at(r, c) = 1.0;
        for (int i = 0; i < rows; ++i) {
            if (i == r) continue;
            cplx factor = M.at(i, c);
            if (factor == cplx(0.0)) continue;
            for (int j = 0; j < cols; ++j) M.at(i, j) -= factor * M.at(r, j);
            M.at(i, c) = 0.0;
        }
        pivot_cols.push_back(c);
        ++r;
    }
    return {std::move(M), std::move(pivot_cols)};
}

// Canonical gauge: |v|_inf = 1, first largest-magnitude entry real positive.
void gauge(std::vector<cplx>& v) {
    int imax = 0;
    double best = -1.0;
    for (int i = 0; i < static_cast<int>(v.size()); ++i) {
        double a = std::abs(v[i]);
        if (a > best * (1.0 + 1e-12)) {
            best = a;
            imax = i;
        }
    }
    if (best <= 0.0) return;
    cplx s = v[imax];
    for (auto& e : v) e /= s;
    v[imax] = 1.0;
}

// Nullspace basis of A from its RREF (free variables set to unit one at a time).
std::vector<std::vector<cplx>> nullspace_from(const Echelon& E, int cols) {
    std::vector<bool> is_pivot(cols, false);
    for (int c : E.pivot_cols) is_pivot[c] = true;
    std::vector<std::vector<cplx>> basis;
    for (int j = 0; j < cols; ++j) {
        if (is_pivot[j]) continue;
        std::vector<cplx> v(cols, cplx(0.0));
        v[j] = 1.0;
        for (size_t i = 0; i < E.pivot_cols.size(); ++i) v[E.pivot_cols[i]] = -E.R.at(static_cast<int>(i), j);
        gauge(v);
        basis.push_back(std::move(v));
    }
    return basis;
}

// Solves the (small, nonsingular) square system M x = b by the same elimination.
std::vector<cplx> solve_square(ComplexMatrix M, std::vector<cplx> b) {
    const int n = M.rows;
    ComplexMatrix aug(n, n + 1);
    for (int i = 0; i < n; ++i) {
        for (int j = 0; j < n; ++j) aug.at(i, j) = M.at(i, j);
        aug.at(i, n) = b[i];
    }
    Echelon E = rref(std::move(aug), 1e-14);
    std::vector<cplx> x(n, cplx(0.0));
    for (size_t i = 0; i < E.pivot_cols.size(); ++i)
        if (E.pivot_cols[i] < n) x[E.pivot_cols[i]] = E.R.at(static_cast<int>(i), n);
    return x;
}

}  // namespace

int rank(const ComplexMatrix& A, const ToleranceProfile& tol) {
    return static_cast<int>(rref(A, tol.rank_eps).pivot_cols.size());
}

std::vector<std::vector<cplx>> nullspace(const ComplexMatrix& A, const ToleranceProfile& tol) {
    return nullspace_from(rref(A, tol.rank_eps), A.cols);
}

std::optional<AffineSolution> solve_affine(const ComplexMatrix& A, const std::vector<cplx>& b,
                                           const ToleranceProfile& tol) {
    const int rows = A.rows, cols = A.cols;
    ComplexMatrix aug(rows, cols + 1);
    for (int i = 0; i < rows; ++i) {
        for (int j = 0; j < cols; ++j) aug.at(i, j) = A.at(i, j);
        aug.at(i, cols) = b[i];
    }
    double bmax = 0.0;
    for (const auto& e : b) bmax = std::max(bmax, std::abs(e));
    const double scale = std::max({1.0, A.max_abs(), bmax});

    Echelon E = rref(std::move(aug), tol.rank_eps);

    std::vector<cplx> x(cols, cplx(0.0));
    for (size_t i = 0; i < E.pivot_cols.size(); ++i) {
        if (E.pivot_cols[i] == cols) return std::nullopt;  // pivot in the b column
        x[E.pivot_cols[i]] = E.R.at(static_cast<int>(i), cols);
    }

    AffineSolution sol;
    // Nullspace of A alone (drop the augmented column).
    ComplexMatrix Aonly(rows, cols);
    for (int i = 0; i < rows; ++i)
        for (int j = 0; j < cols; ++j) Aonly.at(i, j) = A.at(i, j);
    sol.basis = nullspace(Aonly, tol);

    // Project out the nullspace component for the minimal-norm representative.
    if (!sol.basis.empty()) {
        const int k = static_cast<int>(sol.basis.size());
        ComplexMatrix G(k, k);
        std::vector<cplx> d(k, cplx(0.0));
        for (int a = 0; a < k; ++a) {
            for (int bidx = 0; bidx < k; ++bidx) {
                cplx acc = 0.0;
                for (int j = 0; j < cols; ++j) acc += std::conj(sol.basis[a][j]) * sol.basis[bidx][j];
                G.at(a, bidx) = acc;
            }
            cplx acc = 0.0;
            for (int j = 0; j < cols; ++j) acc += std::conj(sol.basis[a][j]) * x[j];
            d[a] = acc;
        }
        std::vector<cplx> coef = solve_square(G, d);
        for (int a = 0; a < k; ++a)
            for (int j = 0; j < cols; ++j) x[j] -= coef[a] * sol.basis[a][j];
    }

    auto res = A.apply(x);
    for (int i = 0; i < rows; ++i)
        if (std::abs(res[i] - b[i]) > tol.residual_eps * scale) return std::nullopt;
    sol.particular = std::move(x);
    return sol;
}

}  // namespace ksl

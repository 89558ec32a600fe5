#pragma once

#include <complex>
#include <optional>
#include <vector>

namespace ksl {

using cplx = std::complex<double>;

struct ToleranceProfile {
    double residual_eps = 1e-9;  // absolute residual bound after input normalization
    double rank_eps = 1e-8;      // pivot threshold relative to largest pivot
};

/// Dense row-major complex matrix.
struct ComplexMatrix {
    int rows = 0, cols = 0;
    std::vector<cplx> entries;

    ComplexMatrix() = default;
    ComplexMatrix(int r, int c) : rows(r), cols(c), entries(static_cast<size_t>(r) * c) {}

    cplx& at(int r, int c) { return entries[static_cast<size_t>(r) * cols + c]; }
    const cplx& at(int r, int c) const { return entries[static_cast<size_t>(r) * cols + c]; }

    std::vector<cplx> apply(const std::vector<cplx>& v) const;
    double max_abs() const;
};

/// Numerical rank via elimination with partial pivoting; pivots below
/// rank_eps * (largest |pivot|) count as zero.
int rank(const ComplexMatrix& A, const ToleranceProfile& tol = {});

/// Basis of {v : A v ~ 0}. Each vector is gauged to |v|_inf = 1 with the
/// first largest-magnitude entry made real positive.
std::vector<std::vector<cplx>> nullspace(const ComplexMatrix& A, const ToleranceProfile& tol = {});

struct AffineSolution {
    std::vector<cplx> particular;            // minimal-norm
    std::vector<std::vector<cplx>> basis;    // nullspace of A
};

/// std::nullopt when the least-squares residual exceeds tolerance.
std::optional<AffineSolution> solve_affine(const ComplexMatrix& A, const std::vector<cplx>& b,
                                           const ToleranceProfile& tol = {});

}  // namespace ksl

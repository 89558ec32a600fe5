#include <cmath>
#include <random>

#include "doctest.h"
#include "ksl/linalg.hpp"

using namespace ksl;

namespace {

ComplexMatrix from_rows(const std::vector<std::vector<cplx>>& rows) {
    ComplexMatrix A(static_cast<int>(rows.size()), rows.empty() ? 0 : static_cast<int>(rows[0].size()));
    for (int r = 0; r < A.rows; ++r)
        for (int c = 0; c < A.cols; ++c) A.at(r, c) = rows[r][c];
    return A;
}

double residual_norm(const ComplexMatrix& A, const std::vector<cplx>& v) {
    double m = 0.0;
    for (const auto& e : A.apply(v)) m = std::max(m, std::abs(e));
    return m;
}

}  // namespace

TEST_CASE("rank basics") {
    CHECK(rank(from_rows({{1, 0}, {0, 1}})) == 2);
    CHECK(rank(from_rows({{1, 1}, {1, 1}})) == 1);
    cplx w = std::polar(1.0, 2.0 * M_PI / 3.0);
    CHECK(rank(from_rows({{1.0, w}, {w, w * w}, {w * w, 1.0}})) == 1);
    CHECK(rank(from_rows({{0, 0}, {0, 0}})) == 0);
}

TEST_CASE("rank of random low-rank products") {
    std::mt19937 rng(12345);
    std::uniform_real_distribution<double> u(-1.0, 1.0);
    for (int trial = 0; trial < 200; ++trial) {
        int m = 1 + static_cast<int>(rng() % 6), k = 1 + static_cast<int>(rng() % 6);
        int r = static_cast<int>(rng() % (std::min(m, k) + 1));
        ComplexMatrix B(m, r), C(r, k);
        for (auto& e : B.entries) e = cplx(u(rng), u(rng));
        for (auto& e : C.entries) e = cplx(u(rng), u(rng));
        ComplexMatrix A(m, k);
        for (int i = 0; i < m; ++i)
            for (int j = 0; j < k; ++j) {
                cplx acc = 0.0;
                for (int t = 0; t < r; ++t) acc += B.at(i, t) * C.at(t, j);
                A.at(i, j) = acc;
            }
        CHECK(rank(A) == r);
    }
}

TEST_CASE("nullspace basics and gauge") {
    CHECK(nullspace(from_rows({{1, 0}, {0, 1}})).empty());
    CHECK(nullspace(from_rows({{0, 0}, {0, 0}})).size() == 2);

    auto ns = nullspace(from_rows({{1, 1}, {1, 1}}));
    REQUIRE(ns.size() == 1);
    CHECK(std::abs(ns[0][0] - cplx(1.0)) < 1e-12);
    CHECK(std::abs(ns[0][1] - cplx(-1.0)) < 1e-12);
}

TEST_CASE("nullspace residual bound on random matrices") {
    std::mt19937 rng(99);
    std::uniform_real_distribution<double> u(-2.0, 2.0);
    ToleranceProfile tol;
    for (int trial = 0; trial < 100; ++trial) {
        int m = 1 + static_cast<int>(rng() % 6), k = 1 + static_cast<int>(rng() % 6);
        int r = static_cast<int>(rng() % (std::min(m, k) + 1));
        ComplexMatrix B(m, r), C(r, k);
        for (auto& e : B.entries) e = cplx(u(rng), u(rng));
        for (auto& e : C.entries) e = cplx(u(rng), u(rng));
        ComplexMatrix A(m, k);
        for (int i = 0; i < m; ++i)
            for (int j = 0; j < k; ++j) {
                cplx acc = 0.0;
                for (int t = 0; t < r; ++t) acc += B.at(i, t) * C.at(t, j);
                A.at(i, j) = acc;
            }
        auto ns = nullspace(A);
        CHECK(static_cast<int>(ns.size()) == k - r);
        for (const auto& v : ns) {
            double vmax = 0.0;
            for (const auto& e : v) vmax = std::max(vmax, std::abs(e));
            CHECK(vmax == doctest::Approx(1.0));
            CHECK(residual_norm(A, v) <= tol.residual_eps * std::max(1.0, A.max_abs()));
        }
    }
}

TEST_CASE("solve_affine basics") {
    auto s1 = solve_affine(from_rows({{1, 0}, {0, 1}}), {1.0, 2.0});
    REQUIRE(s1.has_value());
    CHECK(std::abs(s1->particular[0] - cplx(1.0)) < 1e-12);
    CHECK(std::abs(s1->particular[1] - cplx(2.0)) < 1e-12);
    CHECK(s1->basis.empty());

    auto s2 = solve_affine(from_rows({{1, 1}}), {2.0});
    REQUIRE(s2.has_value());
    CHECK(std::abs(s2->particular[0] - cplx(1.0)) < 1e-12);  // minimal norm
    CHECK(std::abs(s2->particular[1] - cplx(1.0)) < 1e-12);
    REQUIRE(s2->basis.size() == 1);
    CHECK(std::abs(s2->basis[0][0] - cplx(1.0)) < 1e-12);
    CHECK(std::abs(s2->basis[0][1] + cplx(1.0)) < 1e-12);

    CHECK_FALSE(solve_affine(from_rows({{1}, {1}}), {0.0, 1.0}).has_value());
}

TEST_CASE("solve_affine particular plus nullspace is again a solution") {
    std::mt19937 rng(7);
    std::uniform_real_distribution<double> u(-1.0, 1.0);
    ToleranceProfile tol;
    for (int trial = 0; trial < 50; ++trial) {
        int m = 2 + static_cast<int>(rng() % 4), k = 2 + static_cast<int>(rng() % 4);
        ComplexMatrix A(m, k);
        for (auto& e : A.entries) e = cplx(u(rng), u(rng));
        std::vector<cplx> x(k);
        for (auto& e : x) e = cplx(u(rng), u(rng));
        auto b = A.apply(x);  // consistent by construction
        auto sol = solve_affine(A, b);
        REQUIRE(sol.has_value());
        auto y = sol->particular;
        for (const auto& v : sol->basis)
            for (int j = 0; j < k; ++j) y[j] += cplx(0.3, -0.7) * v[j];
        auto r = A.apply(y);
        for (int i = 0; i < m; ++i)
            CHECK(std::abs(r[i] - b[i]) <= 10 * tol.residual_eps * std::max(1.0, A.max_abs()));
    }
}

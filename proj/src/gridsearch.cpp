#include "ksl/gridsearch.hpp"

#include <stdexcept>

namespace ksl {

std::vector<cplx> default_coefficient_grid() {
    return {0.0, 1.0, -1.0, cplx(0.0, 1.0), cplx(0.0, -1.0), 0.5, -0.5};
}

namespace {

std::vector<CFunction> candidate_basis(const FiniteSemigroup& S,
                                       const InvolutiveAutomorphism& sigma,
                                       const ToleranceProfile& tol) {
    std::vector<CFunction> basis;
    for (const auto& chi : enumerate_exponentials(S)) {
        basis.push_back(chi.fn);
        if (!(exponential_pullback(chi, sigma) == chi)) continue;
        auto phi = solve_sine_addition_special(S, chi, std::nullopt, {}, tol);
        if (phi)
            for (const auto& b : phi->basis) basis.push_back(b);
    }
    return basis;
}

std::vector<CFunction> solve_for_f(const FiniteSemigroup& S, const InvolutiveAutomorphism& sigma,
                                   const DiscreteMeasure& mu, EquationId eq, const CFunction& g,
                                   const ToleranceProfile& tol) {
    const double sign = eq == EquationId::KSSub ? -1.0 : 1.0;
    ComplexMatrix A(S.n * S.n, S.n);
    int r = 0;
    for (int x = 0; x < S.n; ++x)
        for (int y = 0; y < S.n; ++y, ++r) {
            int xy = S.mul(x, sigma(y));
            for (const auto& a : mu.atoms) A.at(r, S.mul(xy, a.point)) += a.weight;
            A.at(r, x) -= g(y);
            A.at(r, y) -= sign * g(x);
        }
    std::vector<CFunction> out;
    for (auto& v : nullspace(A, tol)) out.emplace_back(std::move(v));
    return out;
}

}  // namespace

std::vector<GridHit> grid_completeness_search(const FiniteSemigroup& S,
                                              const InvolutiveAutomorphism& sigma,
                                              const DiscreteMeasure& mu, EquationId eq,
                                              const std::vector<cplx>& grid,
                                              const ToleranceProfile& tol) {
    if (eq != EquationId::KSSub && eq != EquationId::KSAdd)
        throw std::invalid_argument("grid search covers the two integral sine laws only");

    auto basis = candidate_basis(S, sigma, tol);
    std::vector<cplx> nonzero;
    for (const auto& c : grid)
        if (std::abs(c) > 0.0) nonzero.push_back(c);

    std::vector<CFunction> gs;
    gs.push_back(CFunction(S.n));
    for (size_t i = 0; i < basis.size(); ++i) {
        for (const auto& c : nonzero) gs.push_back(c * basis[i]);
        for (size_t j = i + 1; j < basis.size(); ++j)
            for (const auto& c1 : nonzero)
                for (const auto& c2 : nonzero) gs.push_back(c1 * basis[i] + c2 * basis[j]);
    }

    std::vector<GridHit> hits;
    for (const auto& g : gs) {
        std::vector<CFunction> fs{CFunction(S.n)};  // f = 0 pairs with every g
        for (auto& f : solve_for_f(S, sigma, mu, eq, g, tol)) fs.push_back(std::move(f));
        for (const auto& f : fs) {
            if (!is_solution(S, sigma, &mu, eq, f, &g, tol)) continue;  // nullspace noise guard
            GridHit hit;
            hit.f = f;
            hit.g = g;
            hit.descriptor = eq == EquationId::KSSub ? classify_t36(S, sigma, mu, f, g, tol).descriptor
                                                     : classify_t44(S, sigma, mu, f, g, tol).descriptor;
            hits.push_back(std::move(hit));
        }
    }
    return hits;
}

}  // namespace ksl

#pragma once

#include "ksl/classify.hpp"

namespace ksl {

struct GridHit {
    CFunction f, g;
    FamilyDescriptor descriptor;
};

std::vector<cplx> default_coefficient_grid();

/// Exhausts g over the span (up to two terms, coefficients from the grid) of
/// the enumerated exponentials and the special-addition-law basis functions,
/// solves the resulting linear system for f, and classifies every nonzero
/// solution pair. Throws UnclassifiedSolution if a verified solution fails to
/// classify.
std::vector<GridHit> grid_completeness_search(const FiniteSemigroup& S,
                                              const InvolutiveAutomorphism& sigma,
                                              const DiscreteMeasure& mu, EquationId eq,
                                              const std::vector<cplx>& grid =
                                                  default_coefficient_grid(),
                                              const ToleranceProfile& tol = {});

}  // namespace ksl

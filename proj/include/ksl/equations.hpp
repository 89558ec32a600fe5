#pragma once

#include <string>

#include "ksl/functions.hpp"

namespace ksl {

enum class EquationId {
    SineSub,         // f(x sigma(y)) = f(x)g(y) - f(y)g(x)
    SineAdd,         // f(x sigma(y)) = f(x)g(y) + f(y)g(x)
    KSSub,           // int f(x sigma(y) t) dmu = f(x)g(y) - f(y)g(x)
    KSAdd,           // int f(x sigma(y) t) dmu = f(x)g(y) + f(y)g(x)
    CosSub,          // F(x sigma(y)) = F(x)F(y) - (F-g)(y)(F-g)(x)
    SpecialKSAdd,    // int f(x sigma(y) t) dmu = [f(x)g(y) + f(y)g(x)] int g dmu
    SpecialSineAdd,  // f(xy) = f(x)g(y) + g(x)f(y)
    KMultSigma,      // int f(x sigma(y) t) dmu = f(x)f(y)
};

bool equation_uses_measure(EquationId eq);
bool equation_is_two_function(EquationId eq);
std::string equation_name(EquationId eq);
EquationId equation_from_name(const std::string& name);

struct CheckReport {
    EquationId equation;
    double max_residual = 0.0;
    int argmax_x = 0, argmax_y = 0;
    bool verdict = false;
};

struct ArityMismatch : std::runtime_error {
    ArityMismatch() : std::runtime_error("second function required (or forbidden) by this equation") {}
};
struct MeasureMissing : std::runtime_error {
    MeasureMissing() : std::runtime_error("equation integrates but no measure was given") {}
};
struct NotAMonoid : std::runtime_error {
    NotAMonoid() : std::runtime_error("semigroup has no identity element") {}
};
struct NotASolution : std::runtime_error {
    explicit NotASolution(double r)
        : std::runtime_error("pair fails the equation, residual " + std::to_string(r)) {}
};

/// Max over (x, y) of |LHS - RHS| for the equation's defining identity.
CheckReport residual(const FiniteSemigroup& S, const InvolutiveAutomorphism& sigma,
                     const DiscreteMeasure* mu, EquationId eq, const CFunction& f,
                     const CFunction* g, const ToleranceProfile& tol = {});

bool is_solution(const FiniteSemigroup& S, const InvolutiveAutomorphism& sigma,
                 const DiscreteMeasure* mu, EquationId eq, const CFunction& f, const CFunction* g,
                 const ToleranceProfile& tol = {});

/// Reduction of the integral laws to the plain sine/cosine subtraction laws on
/// a monoid, following the identity obtained by substituting y = e:
///   g(e) f(x sigma(y)) -/+ f(e) g(x sigma(y)) = f(x)g(y) -/+ f(y)g(x).
struct MonoidReductionReport {
    int sign;                 // -1 for the subtraction law, +1 for the addition law
    double base_residual;     // the identity above, checked pointwise
    bool reduction_applicable = false;
    bool degenerate_ge = false;  // f(e) != 0 but g(e) ~ 0: reduction undefined
    double reduced_residual = 0.0;  // SineSub (sign -) or CosSub (sign +) of (F, g/g(e))
    bool pass = false;
};

MonoidReductionReport monoid_reduction_check(const FiniteSemigroup& S,
                                             const InvolutiveAutomorphism& sigma,
                                             const DiscreteMeasure& mu, const CFunction& f,
                                             const CFunction& g, int sign,
                                             const ToleranceProfile& tol = {});

}  // namespace ksl

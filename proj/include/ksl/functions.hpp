#pragma once

#include <complex>
#include <optional>
#include <stdexcept>
#include <vector>

#include "ksl/algebra.hpp"
#include "ksl/linalg.hpp"

namespace ksl {

/// Complex-valued function on the semigroup, values[x] = f(x).
struct CFunction {
    std::vector<cplx> values;

    CFunction() = default;
    explicit CFunction(int n) : values(n, cplx(0.0)) {}
    explicit CFunction(std::vector<cplx> v) : values(std::move(v)) {}

    int size() const { return static_cast<int>(values.size()); }
    cplx operator()(int x) const { return values[x]; }
    cplx& operator[](int x) { return values[x]; }

    double inf_norm() const;
    bool approx_zero(double eps) const { return inf_norm() <= eps; }

    CFunction& operator+=(const CFunction& o);
    CFunction& operator-=(const CFunction& o);
    CFunction& operator*=(cplx s);

    friend CFunction operator+(CFunction a, const CFunction& b) { return a += b; }
    friend CFunction operator-(CFunction a, const CFunction& b) { return a -= b; }
    friend CFunction operator*(cplx s, CFunction a) { return a *= s; }
};

struct MeasureAtom {
    int point;
    cplx weight;
};

/// Finitely supported complex measure, mu = sum_i weight_i * delta_{point_i}.
struct DiscreteMeasure {
    std::vector<MeasureAtom> atoms;

    static DiscreteMeasure point_mass(int z, cplx w = 1.0) { return {{{z, w}}}; }
};

/// Either 0 or the root of unity e^{2 pi i num/den}, reduced with 0 <= num < den.
struct ExactValue {
    bool is_zero = true;
    long num = 0;
    long den = 1;

    static ExactValue zero() { return {}; }
    static ExactValue root(long num, long den);
    static ExactValue one() { return root(0, 1); }

    cplx embed() const;
    ExactValue operator*(const ExactValue& o) const;
    bool operator==(const ExactValue&) const = default;
    // Zero sorts first, then roots by increasing angle in [0, 1).
    bool operator<(const ExactValue& o) const;
};

/// Nonzero multiplicative function with an exact root-of-unity representation.
struct Exponential {
    CFunction fn;
    std::vector<ExactValue> exact;

    bool operator==(const Exponential& o) const { return exact == o.exact; }
};

struct DegenerateMoment : std::runtime_error {
    DegenerateMoment() : std::runtime_error("integral of chi d(mu) vanishes") {}
};
struct SigmaMismatch : std::runtime_error {
    SigmaMismatch() : std::runtime_error("chi composed with sigma differs from chi") {}
};

cplx integrate(const DiscreteMeasure& mu, const CFunction& h);

/// K[x][y] = integral of f(x * sigma(y) * t) d(mu)(t).
std::vector<std::vector<cplx>> kannappan_transform(const FiniteSemigroup& S,
                                                   const InvolutiveAutomorphism& sigma,
                                                   const DiscreteMeasure& mu, const CFunction& f);

CFunction sigma_pullback(const CFunction& f, const InvolutiveAutomorphism& sigma);

bool is_exponential(const FiniteSemigroup& S, const CFunction& chi, const ToleranceProfile& tol = {});

/// All nonzero multiplicative functions S -> C, exactly represented, in
/// lexicographic order of exact values.
std::vector<Exponential> enumerate_exponentials(const FiniteSemigroup& S);

/// Exact pullback chi(sigma(.)) of an exponential.
Exponential exponential_pullback(const Exponential& chi, const InvolutiveAutomorphism& sigma);

struct ParityConstraint {
    InvolutiveAutomorphism sigma;
    int sign;  // +1 or -1
};

struct MomentConstraint {
    DiscreteMeasure mu;
    cplx target;
};

struct AffineFunctionSet {
    CFunction particular;
    std::vector<CFunction> basis;

    bool zero_only(double eps) const { return basis.empty() && particular.approx_zero(eps); }
};

/// Solution set of phi(xy) = phi(x)chi(y) + chi(x)phi(y) intersected with the
/// optional parity and moment constraints. std::nullopt when the moment
/// constraints are unsatisfiable.
std::optional<AffineFunctionSet> solve_sine_addition_special(
    const FiniteSemigroup& S, const Exponential& chi,
    const std::optional<ParityConstraint>& parity = std::nullopt,
    const std::vector<MomentConstraint>& moments = {}, const ToleranceProfile& tol = {});

/// Nullspace basis of f |-> K_f[x][y] - [f(x)chi(y) + f(y)chi(x)] * integral(chi dmu).
/// Throws DegenerateMoment / SigmaMismatch on violated preconditions.
std::vector<CFunction> solve_special_ks_addition(const FiniteSemigroup& S,
                                                 const InvolutiveAutomorphism& sigma,
                                                 const DiscreteMeasure& mu, const Exponential& chi,
                                                 const ToleranceProfile& tol = {});

struct FitConstraint {
    CFunction h;
    cplx target;
};

/// Minimal-norm weights on the given support matching the moment targets.
/// std::nullopt when the targets are unreachable on that support.
std::optional<DiscreteMeasure> fit_measure(const FiniteSemigroup& S,
                                           const std::vector<FitConstraint>& constraints,
                                           const std::vector<int>& support,
                                           const ToleranceProfile& tol = {});

}  // namespace ksl

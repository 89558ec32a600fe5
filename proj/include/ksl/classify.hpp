#pragma once

#include <utility>

#include "ksl/equations.hpp"

namespace ksl {

enum class FamilyTag {
    T36_1, T36_2, T36_3, T36_4, T36_5, T36_6, T36_7, T36_8,
    T44_1, T44_2, T44_3, T44_4, T44_5, T44_6,
};

std::string family_name(FamilyTag tag);
FamilyTag family_from_name(const std::string& name);
bool family_is_subtraction(FamilyTag tag);

/// Tagged union of the family payloads. Only the fields listed for the tag are
/// meaningful:
///   T36_1: g. T36_2: f, k. T36_3: chi, gamma, b, c. T36_4: chi, beta, b, c.
///   T36_5: chi, alpha, delta, b, c. T36_6: chi, phi, gamma.
///   T36_7: chi, phi, alpha, c, delta. T36_8: chi, phi, c.
///   T44_1: g. T44_2: f. T44_3: chi, delta. T44_4: chi, chi2, alpha.
///   T44_5: chi, phi. T44_6: chi, phi (phi holds the special-law solution).
struct FamilyDescriptor {
    FamilyTag tag = FamilyTag::T36_1;
    CFunction f, g;
    cplx k = 0.0;
    Exponential chi, chi2;
    CFunction phi;
    cplx gamma = 0.0, beta = 0.0, delta = 0.0, alpha = 0.0, b = 0.0, c = 0.0;
};

struct ConstraintCheck {
    std::string name;
    cplx value{};
    bool pass = false;
};

struct ValidationReport {
    std::vector<ConstraintCheck> checks;

    bool pass() const;
    std::string first_failure() const;
};

struct ConstraintViolation : std::runtime_error {
    explicit ConstraintViolation(const std::string& what) : std::runtime_error(what) {}
};
struct UnknownTag : std::runtime_error {
    UnknownTag() : std::runtime_error("unknown family tag") {}
    explicit UnknownTag(const std::string& n) : std::runtime_error("unknown family tag: " + n) {}
};
struct PreconditionViolation : std::runtime_error {
    explicit PreconditionViolation(const std::string& what) : std::runtime_error(what) {}
};
/// A consistency property that holds for every genuine solution failed; this
/// signals an implementation bug, never an unlucky input.
struct InternalContradiction : std::runtime_error {
    explicit InternalContradiction(const std::string& what) : std::runtime_error(what) {}
};
/// A verified solution did not fit any family pattern; reported, never forced.
struct UnclassifiedSolution : std::runtime_error {
    explicit UnclassifiedSolution(const std::string& what) : std::runtime_error(what) {}
};

ValidationReport validate_descriptor(const FiniteSemigroup& S, const InvolutiveAutomorphism& sigma,
                                     const DiscreteMeasure& mu, const FamilyDescriptor& desc,
                                     const ToleranceProfile& tol = {});

std::pair<CFunction, CFunction> construct_t36(const FiniteSemigroup& S,
                                              const InvolutiveAutomorphism& sigma,
                                              const DiscreteMeasure& mu,
                                              const FamilyDescriptor& desc,
                                              const ToleranceProfile& tol = {});

std::pair<CFunction, CFunction> construct_t44(const FiniteSemigroup& S,
                                              const InvolutiveAutomorphism& sigma,
                                              const DiscreteMeasure& mu,
                                              const FamilyDescriptor& desc,
                                              const ToleranceProfile& tol = {});

/// Representation of an independent solution pair of the plain sine laws.
/// TwoCharacter (subtraction): F = b(chi - chi o sigma),
///   G = (chi + chi o sigma)/2 + c(chi - chi o sigma)/2.
/// TwoCharacter (addition): F = c(chi - chi2), G = (chi + chi2)/2, both
///   sigma-invariant; chi2 is only used by the addition variant.
/// CharacterPlusPhi (subtraction): F = phi, G = chi + c*phi with
///   chi o sigma = chi, phi o sigma = -phi, phi solving the special addition
///   law against chi. The addition variant has F = phi, G = chi, phi o sigma = phi.
struct SineDecomposition {
    enum class Kind { TwoCharacter, CharacterPlusPhi, Unrepresentable } kind =
        Kind::Unrepresentable;
    Exponential chi, chi2;
    cplx b = 0.0, c = 0.0;
    CFunction phi;
    std::string note;
};

SineDecomposition decompose_sine_subtraction(const FiniteSemigroup& S,
                                             const InvolutiveAutomorphism& sigma, const CFunction& F,
                                             const CFunction& G, const ToleranceProfile& tol = {});

SineDecomposition decompose_sine_addition(const FiniteSemigroup& S,
                                          const InvolutiveAutomorphism& sigma, const CFunction& F,
                                          const CFunction& G, const ToleranceProfile& tol = {});

struct ClassificationTrace {
    bool dependent = false;
    cplx int_f = 0.0, int_g = 0.0;
    cplx M_g = 0.0, M_f = 0.0;  // double transforms: integral over (s,k) of h(sigma(s)k)
    cplx gamma = 0.0, beta = 0.0, delta = 0.0, alpha = 0.0;
    CFunction psi;
    cplx xi = 0.0;
    std::vector<std::string> steps;
};

struct Classification {
    FamilyDescriptor descriptor;
    ClassificationTrace trace;
};

Classification classify_t36(const FiniteSemigroup& S, const InvolutiveAutomorphism& sigma,
                            const DiscreteMeasure& mu, const CFunction& f, const CFunction& g,
                            const ToleranceProfile& tol = {});

Classification classify_t44(const FiniteSemigroup& S, const InvolutiveAutomorphism& sigma,
                            const DiscreteMeasure& mu, const CFunction& f, const CFunction& g,
                            const ToleranceProfile& tol = {});

struct Prop31Report {
    bool zero_function = false;
    Exponential chi;   // recovered for nonzero f
    cplx alpha = 0.0;  // integral of f over the double transform of f
    ValidationReport checks;
    bool pass = false;
};

Prop31Report verify_prop31(const FiniteSemigroup& S, const InvolutiveAutomorphism& sigma,
                           const DiscreteMeasure& mu, const CFunction& f,
                           const ToleranceProfile& tol = {});

ValidationReport lemma_suite_t36(const FiniteSemigroup& S, const InvolutiveAutomorphism& sigma,
                                 const DiscreteMeasure& mu, const CFunction& f, const CFunction& g,
                                 const ToleranceProfile& tol = {});

ValidationReport lemma_suite_t44(const FiniteSemigroup& S, const InvolutiveAutomorphism& sigma,
                                 const DiscreteMeasure& mu, const CFunction& f, const CFunction& g,
                                 const ToleranceProfile& tol = {});

}  // namespace ksl

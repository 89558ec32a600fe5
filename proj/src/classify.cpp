#include "ksl/classify.hpp"

#include <algorithm>
#include <cmath>

namespace ksl {

namespace {

const struct {
    FamilyTag tag;
    const char* name;
} kFamilies[] = {
    {FamilyTag::T36_1, "T36_1"}, {FamilyTag::T36_2, "T36_2"}, {FamilyTag::T36_3, "T36_3"},
    {FamilyTag::T36_4, "T36_4"}, {FamilyTag::T36_5, "T36_5"}, {FamilyTag::T36_6, "T36_6"},
    {FamilyTag::T36_7, "T36_7"}, {FamilyTag::T36_8, "T36_8"}, {FamilyTag::T44_1, "T44_1"},
    {FamilyTag::T44_2, "T44_2"}, {FamilyTag::T44_3, "T44_3"}, {FamilyTag::T44_4, "T44_4"},
    {FamilyTag::T44_5, "T44_5"}, {FamilyTag::T44_6, "T44_6"},
};

double measure_mass(const DiscreteMeasure& mu) {
    double m = 0.0;
    for (const auto& a : mu.atoms) m += std::abs(a.weight);
    return m;
}

/// Integral over (s, k) of h(sigma(s) * k).
cplx double_transform(const FiniteSemigroup& S, const InvolutiveAutomorphism& sigma,
                      const DiscreteMeasure& mu, const CFunction& h) {
    cplx acc = 0.0;
    for (const auto& s : mu.atoms)
        for (const auto& k : mu.atoms) acc += s.weight * k.weight * h(S.mul(sigma(s.point), k.point));
    return acc;
}

bool moment_zero(cplx v, const CFunction& fn, const ToleranceProfile& tol) {
    return std::abs(v) <= tol.residual_eps * (1.0 + fn.inf_norm());
}

bool functions_dependent(const CFunction& f, const CFunction& g, const ToleranceProfile& tol) {
    ComplexMatrix A(2, f.size());
    for (int x = 0; x < f.size(); ++x) {
        A.at(0, x) = f(x);
        A.at(1, x) = g(x);
    }
    return rank(A, tol) < 2;
}

/// Least-squares ratio r with g ~ r*f.
cplx ls_ratio(const CFunction& f, const CFunction& g) {
    cplx num = 0.0, den = 0.0;
    for (int x = 0; x < f.size(); ++x) {
        num += std::conj(f(x)) * g(x);
        den += std::conj(f(x)) * f(x);
    }
    return num / den;
}

/// Max over (x, y) of |integral of f(x*y*t) dmu| -- no sigma twist.
double max_plain_transform(const FiniteSemigroup& S, const DiscreteMeasure& mu, const CFunction& f) {
    double m = 0.0;
    for (int x = 0; x < S.n; ++x)
        for (int y = 0; y < S.n; ++y) {
            cplx acc = 0.0;
            int xy = S.mul(x, y);
            for (const auto& a : mu.atoms) acc += a.weight * f(S.mul(xy, a.point));
            m = std::max(m, std::abs(acc));
        }
    return m;
}

Exponential match_exponential(const FiniteSemigroup& S, const CFunction& fn,
                              const ToleranceProfile& tol) {
    const double match_eps = 1e3 * tol.residual_eps;
    for (const auto& e : enumerate_exponentials(S)) {
        double d = 0.0;
        for (int x = 0; x < S.n; ++x) d = std::max(d, std::abs(e.fn(x) - fn(x)));
        if (d <= match_eps) return e;
    }
    throw InternalContradiction("recovered multiplicative function matches no enumerated exponential");
}

/// Coefficients (p, q) with F ~ p*c1 + q*c2, or nullopt.
std::optional<std::pair<cplx, cplx>> in_span(const CFunction& F, const CFunction& c1,
                                             const CFunction& c2, double eps,
                                             const ToleranceProfile& tol) {
    ComplexMatrix A(F.size(), 2);
    std::vector<cplx> rhs(F.size());
    for (int x = 0; x < F.size(); ++x) {
        A.at(x, 0) = c1(x);
        A.at(x, 1) = c2(x);
        rhs[x] = F(x);
    }
    auto sol = solve_affine(A, rhs, tol);
    if (!sol) return std::nullopt;
    cplx p = sol->particular[0], q = sol->particular[1];
    for (int x = 0; x < F.size(); ++x)
        if (std::abs(p * c1(x) + q * c2(x) - F(x)) > eps) return std::nullopt;
    return std::make_pair(p, q);
}

void add_check(ValidationReport& rep, const std::string& name, cplx value, bool pass) {
    rep.checks.push_back({name, value, pass});
}

void check_pointwise(ValidationReport& rep, const std::string& name, double residual, double scale,
                     const ToleranceProfile& tol) {
    rep.checks.push_back({name, residual, residual <= tol.residual_eps * scale});
}

bool exact_fixed(const Exponential& chi, const InvolutiveAutomorphism& sigma) {
    return exponential_pullback(chi, sigma) == chi;
}

double parity_residual(const CFunction& phi, const InvolutiveAutomorphism& sigma, int sign) {
    double m = 0.0;
    for (int x = 0; x < phi.size(); ++x)
        m = std::max(m, std::abs(phi(sigma(x)) - static_cast<double>(sign) * phi(x)));
    return m;
}

void check_phi(ValidationReport& rep, const FiniteSemigroup& S, const InvolutiveAutomorphism& sigma,
               const FamilyDescriptor& d, int parity_sign, const ToleranceProfile& tol) {
    add_check(rep, "phi nonzero", d.phi.inf_norm(), !d.phi.approx_zero(tol.residual_eps));
    double par = parity_residual(d.phi, sigma, parity_sign);
    add_check(rep, parity_sign < 0 ? "phi o sigma = -phi" : "phi o sigma = phi", par,
              par <= tol.residual_eps * (1.0 + d.phi.inf_norm()));
    double r = residual(S, sigma, nullptr, EquationId::SpecialSineAdd, d.phi, &d.chi.fn, tol)
                   .max_residual;
    check_pointwise(rep, "phi solves the special addition law with chi", r,
                    (1.0 + d.phi.inf_norm()) * 2.0, tol);
}

void check_moment(ValidationReport& rep, const std::string& name, cplx value, cplx target,
                  const ToleranceProfile& tol) {
    add_check(rep, name, value, std::abs(value - target) <= tol.residual_eps * (1.0 + std::abs(target)));
}

}  // namespace

std::string family_name(FamilyTag tag) {
    for (const auto& e : kFamilies)
        if (e.tag == tag) return e.name;
    throw UnknownTag();
}

FamilyTag family_from_name(const std::string& name) {
    for (const auto& e : kFamilies)
        if (name == e.name) return e.tag;
    throw UnknownTag(name);
}

bool family_is_subtraction(FamilyTag tag) { return family_name(tag).substr(0, 3) == "T36"; }

bool ValidationReport::pass() const {
    return std::all_of(checks.begin(), checks.end(), [](const auto& c) { return c.pass; });
}

std::string ValidationReport::first_failure() const {
    for (const auto& c : checks)
        if (!c.pass) return c.name;
    return {};
}

ValidationReport validate_descriptor(const FiniteSemigroup& S, const InvolutiveAutomorphism& sigma,
                                     const DiscreteMeasure& mu, const FamilyDescriptor& d,
                                     const ToleranceProfile& tol) {
    ValidationReport rep;
    auto nonzero = [&](const std::string& name, cplx v) {
        add_check(rep, name, v, std::abs(v) > tol.residual_eps);
    };
    auto chi_distinct = [&] {
        add_check(rep, "chi != chi o sigma", 0.0, !exact_fixed(d.chi, sigma));
    };
    auto chi_fixed = [&](const Exponential& chi, const std::string& name) {
        add_check(rep, name, 0.0, exact_fixed(chi, sigma));
    };
    cplx m_chi = d.chi.fn.size() ? integrate(mu, d.chi.fn) : cplx(0.0);
    cplx m_chis = d.chi.fn.size() ? integrate(mu, exponential_pullback(d.chi, sigma).fn) : cplx(0.0);

    switch (d.tag) {
        case FamilyTag::T36_1:
        case FamilyTag::T44_1:
            break;
        case FamilyTag::T36_2:
        case FamilyTag::T44_2: {
            add_check(rep, "f nonzero", d.f.inf_norm(), !d.f.approx_zero(tol.residual_eps));
            double r = max_plain_transform(S, mu, d.f);
            check_pointwise(rep, "integral of f(xyt) dmu vanishes", r,
                            (1.0 + d.f.inf_norm()) * (1.0 + measure_mass(mu)), tol);
            break;
        }
        case FamilyTag::T36_3:
            nonzero("gamma nonzero", d.gamma);
            nonzero("b nonzero", d.b);
            add_check(rep, "c not in {1, -1}", d.c,
                      std::abs(d.c - 1.0) > tol.residual_eps && std::abs(d.c + 1.0) > tol.residual_eps);
            chi_distinct();
            check_moment(rep, "integral of chi dmu = -2b/(1+c)", m_chi, -2.0 * d.b / (1.0 + d.c), tol);
            check_moment(rep, "integral of chi o sigma dmu = 2b/(1-c)", m_chis,
                         2.0 * d.b / (1.0 - d.c), tol);
            break;
        case FamilyTag::T36_4:
            nonzero("beta nonzero", d.beta);
            nonzero("b nonzero", d.b);
            chi_distinct();
            check_moment(rep, "integral of chi dmu = 1/beta", m_chi, 1.0 / d.beta, tol);
            check_moment(rep, "integral of chi o sigma dmu = 1/beta", m_chis, 1.0 / d.beta, tol);
            break;
        case FamilyTag::T36_5: {
            nonzero("alpha nonzero", d.alpha);
            nonzero("delta nonzero", d.delta);
            nonzero("b nonzero", d.b);
            cplx excl = 2.0 * d.b * d.delta + d.alpha * d.c;
            add_check(rep, "alpha != +-(2b delta + alpha c)", excl,
                      std::abs(d.alpha - excl) > tol.residual_eps &&
                          std::abs(d.alpha + excl) > tol.residual_eps);
            chi_distinct();
            check_moment(rep, "integral of chi dmu", m_chi,
                         2.0 * d.b / (d.alpha * (1.0 + d.c) + 2.0 * d.b * d.delta), tol);
            check_moment(rep, "integral of chi o sigma dmu", m_chis,
                         2.0 * d.b / (d.alpha * (d.c - 1.0) + 2.0 * d.b * d.delta), tol);
            break;
        }
        case FamilyTag::T36_6:
            nonzero("gamma nonzero", d.gamma);
            chi_fixed(d.chi, "chi o sigma = chi");
            check_phi(rep, S, sigma, d, -1, tol);
            nonzero("integral of chi dmu nonzero", m_chi);
            check_moment(rep, "integral of phi dmu equals the squared chi moment", integrate(mu, d.phi),
                         m_chi * m_chi, tol);
            break;
        case FamilyTag::T36_7: {
            nonzero("delta nonzero", d.delta);
            cplx den = d.alpha * d.c + d.delta;
            nonzero("alpha c + delta nonzero", den);
            chi_fixed(d.chi, "chi o sigma = chi");
            check_phi(rep, S, sigma, d, -1, tol);
            check_moment(rep, "integral of chi dmu = 1/(alpha c + delta)", m_chi, 1.0 / den, tol);
            check_moment(rep, "integral of phi dmu = -alpha/(alpha c + delta)^2",
                         integrate(mu, d.phi), -d.alpha / (den * den), tol);
            break;
        }
        case FamilyTag::T36_8:
            chi_fixed(d.chi, "chi o sigma = chi");
            check_phi(rep, S, sigma, d, -1, tol);
            nonzero("integral of chi dmu nonzero", m_chi);
            check_moment(rep, "integral of phi dmu = 0", integrate(mu, d.phi), 0.0, tol);
            break;
        case FamilyTag::T44_3:
            nonzero("delta nonzero", d.delta);
            chi_fixed(d.chi, "chi o sigma = chi");
            nonzero("integral of chi dmu nonzero", m_chi);
            break;
        case FamilyTag::T44_4:
            nonzero("alpha nonzero", d.alpha);
            add_check(rep, "chi1 != chi2", 0.0, !(d.chi == d.chi2));
            chi_fixed(d.chi, "chi1 o sigma = chi1");
            chi_fixed(d.chi2, "chi2 o sigma = chi2");
            nonzero("integral of chi1 dmu nonzero", m_chi);
            nonzero("integral of chi2 dmu nonzero", integrate(mu, d.chi2.fn));
            break;
        case FamilyTag::T44_5:
            chi_fixed(d.chi, "chi o sigma = chi");
            nonzero("integral of chi dmu nonzero", m_chi);
            check_phi(rep, S, sigma, d, +1, tol);
            check_moment(rep, "integral of phi dmu = 0", integrate(mu, d.phi), 0.0, tol);
            break;
        case FamilyTag::T44_6: {
            chi_fixed(d.chi, "chi o sigma = chi");
            nonzero("integral of chi dmu nonzero", m_chi);
            add_check(rep, "Phi nonzero", d.phi.inf_norm(), !d.phi.approx_zero(tol.residual_eps));
            double r = residual(S, sigma, &mu, EquationId::SpecialKSAdd, d.phi, &d.chi.fn, tol)
                           .max_residual;
            check_pointwise(rep, "Phi solves the special integral addition law with chi", r,
                            (1.0 + d.phi.inf_norm()) * (1.0 + measure_mass(mu)) * 2.0, tol);
            break;
        }
    }
    return rep;
}

namespace {

std::pair<CFunction, CFunction> construct_impl(const FiniteSemigroup& S,
                                               const InvolutiveAutomorphism& sigma,
                                               const DiscreteMeasure& mu, const FamilyDescriptor& d,
                                               const ToleranceProfile& tol) {
    auto rep = validate_descriptor(S, sigma, mu, d, tol);
    if (!rep.pass())
        throw ConstraintViolation("descriptor " + family_name(d.tag) + " fails: " +
                                  rep.first_failure());

    const CFunction& chi = d.chi.fn;
    CFunction chis =
        d.chi.fn.size() ? exponential_pullback(d.chi, sigma).fn : CFunction();
    cplx m_chi = d.chi.fn.size() ? integrate(mu, chi) : cplx(0.0);

    switch (d.tag) {
        case FamilyTag::T36_1:
        case FamilyTag::T44_1:
            return {CFunction(S.n), d.g};
        case FamilyTag::T36_2:
            return {d.f, d.k * d.f};
        case FamilyTag::T44_2:
            return {d.f, CFunction(S.n)};
        case FamilyTag::T36_3:
            return {(0.5 / d.gamma) * (chi + chis) + (0.5 * d.c / d.gamma) * (chi - chis),
                    d.b * (chi - chis)};
        case FamilyTag::T36_4:
            return {d.b * (chi - chis),
                    (0.5 / d.beta) * (chi + chis) + (0.5 * d.c / d.beta) * (chi - chis)};
        case FamilyTag::T36_5:
            return {(0.5 * d.alpha / d.delta) * (chi + chis) +
                        (0.5 * (d.alpha * d.c + 2.0 * d.b * d.delta) / d.delta) * (chi - chis),
                    (0.5 / d.delta) * (chi + chis) + (0.5 * d.c / d.delta) * (chi - chis)};
        case FamilyTag::T36_6:
            return {(1.0 / d.gamma) * (chi - (1.0 / m_chi) * d.phi), d.phi};
        case FamilyTag::T36_7:
            return {(1.0 / d.delta) * (d.alpha * chi + (d.alpha * d.c + d.delta) * d.phi),
                    (1.0 / d.delta) * (chi + d.c * d.phi)};
        case FamilyTag::T36_8:
            return {d.phi, m_chi * (chi + d.c * d.phi)};
        case FamilyTag::T44_3:
            return {(0.5 * m_chi / d.delta) * chi, (0.5 * m_chi) * chi};
        case FamilyTag::T44_4: {
            cplx m2 = integrate(mu, d.chi2.fn);
            CFunction a = m_chi * d.chi.fn, b2 = m2 * d.chi2.fn;
            return {(0.5 / d.alpha) * (a - b2), 0.5 * (a + b2)};
        }
        case FamilyTag::T44_5:
        case FamilyTag::T44_6:
            return {d.phi, m_chi * chi};
    }
    throw UnknownTag();
}

}  // namespace

std::pair<CFunction, CFunction> construct_t36(const FiniteSemigroup& S,
                                              const InvolutiveAutomorphism& sigma,
                                              const DiscreteMeasure& mu, const FamilyDescriptor& d,
                                              const ToleranceProfile& tol) {
    if (!family_is_subtraction(d.tag)) throw UnknownTag(family_name(d.tag));
    return construct_impl(S, sigma, mu, d, tol);
}

std::pair<CFunction, CFunction> construct_t44(const FiniteSemigroup& S,
                                              const InvolutiveAutomorphism& sigma,
                                              const DiscreteMeasure& mu, const FamilyDescriptor& d,
                                              const ToleranceProfile& tol) {
    if (family_is_subtraction(d.tag)) throw UnknownTag(family_name(d.tag));
    return construct_impl(S, sigma, mu, d, tol);
}

SineDecomposition decompose_sine_subtraction(const FiniteSemigroup& S,
                                             const InvolutiveAutomorphism& sigma, const CFunction& F,
                                             const CFunction& G, const ToleranceProfile& tol) {
    auto rep = residual(S, sigma, nullptr, EquationId::SineSub, F, &G, tol);
    if (!rep.verdict) throw NotASolution(rep.max_residual);
    SineDecomposition out;
    if (functions_dependent(F, G, tol)) {
        out.note = "dependent/zero input";
        return out;
    }
    const double ceps = 1e3 * tol.residual_eps * (1.0 + F.inf_norm() + G.inf_norm());
    for (const auto& chi : enumerate_exponentials(S)) {
        Exponential chis = exponential_pullback(chi, sigma);
        if (!(chis == chi)) {
            auto pf = in_span(F, chi.fn, chis.fn, ceps, tol);
            auto pg = in_span(G, chi.fn, chis.fn, ceps, tol);
            if (!pf || !pg) continue;
            auto [p, q] = *pf;
            auto [u, v] = *pg;
            if (std::abs(p + q) > ceps || std::abs(u + v - 1.0) > ceps) continue;
            cplx b = 0.5 * (p - q);
            if (std::abs(b) <= ceps) continue;
            out.kind = SineDecomposition::Kind::TwoCharacter;
            out.chi = chi;
            out.b = b;
            out.c = u - v;
            return out;
        }
        // chi o sigma = chi: pattern F = phi, G = chi + c phi
        if (F.approx_zero(tol.residual_eps)) continue;
        if (parity_residual(F, sigma, -1) > ceps) continue;
        if (residual(S, sigma, nullptr, EquationId::SpecialSineAdd, F, &chi.fn, tol).max_residual >
            ceps)
            continue;
        cplx c = ls_ratio(F, G - chi.fn);
        bool fits = true;
        for (int x = 0; x < S.n && fits; ++x)
            fits = std::abs(G(x) - chi.fn(x) - c * F(x)) <= ceps;
        if (!fits) continue;
        out.kind = SineDecomposition::Kind::CharacterPlusPhi;
        out.chi = chi;
        out.phi = F;
        out.c = c;
        return out;
    }
    out.note = "no enumerated exponential fits";
    return out;
}

SineDecomposition decompose_sine_addition(const FiniteSemigroup& S,
                                          const InvolutiveAutomorphism& sigma, const CFunction& F,
                                          const CFunction& G, const ToleranceProfile& tol) {
    auto rep = residual(S, sigma, nullptr, EquationId::SineAdd, F, &G, tol);
    if (!rep.verdict) throw NotASolution(rep.max_residual);
    SineDecomposition out;
    if (functions_dependent(F, G, tol)) {
        out.note = "dependent/zero input";
        return out;
    }
    const double ceps = 1e3 * tol.residual_eps * (1.0 + F.inf_norm() + G.inf_norm());
    auto exps = enumerate_exponentials(S);
    for (size_t i = 0; i < exps.size(); ++i) {
        if (!exact_fixed(exps[i], sigma)) continue;
        // single-character pattern F = phi, G = chi
        bool g_is_chi = true;
        for (int x = 0; x < S.n && g_is_chi; ++x) g_is_chi = std::abs(G(x) - exps[i].fn(x)) <= ceps;
        if (g_is_chi && !F.approx_zero(tol.residual_eps) && parity_residual(F, sigma, +1) <= ceps &&
            residual(S, sigma, nullptr, EquationId::SpecialSineAdd, F, &exps[i].fn, tol)
                    .max_residual <= ceps) {
            out.kind = SineDecomposition::Kind::CharacterPlusPhi;
            out.chi = exps[i];
            out.phi = F;
            return out;
        }
        for (size_t j = i + 1; j < exps.size(); ++j) {
            if (!exact_fixed(exps[j], sigma)) continue;
            auto pf = in_span(F, exps[i].fn, exps[j].fn, ceps, tol);
            auto pg = in_span(G, exps[i].fn, exps[j].fn, ceps, tol);
            if (!pf || !pg) continue;
            auto [p, q] = *pf;
            auto [u, v] = *pg;
            if (std::abs(p + q) > ceps || std::abs(u - 0.5) > ceps || std::abs(v - 0.5) > ceps)
                continue;
            cplx c = 0.5 * (p - q);
            if (std::abs(c) <= ceps) continue;
            out.kind = SineDecomposition::Kind::TwoCharacter;
            out.chi = exps[i];
            out.chi2 = exps[j];
            out.c = c;
            return out;
        }
    }
    out.note = "no enumerated exponential fits";
    return out;
}

Prop31Report verify_prop31(const FiniteSemigroup& S, const InvolutiveAutomorphism& sigma,
                           const DiscreteMeasure& mu, const CFunction& f,
                           const ToleranceProfile& tol) {
    auto rep = residual(S, sigma, &mu, EquationId::KMultSigma, f, nullptr, tol);
    if (!rep.verdict) throw NotASolution(rep.max_residual);

    Prop31Report out;
    cplx int_f = integrate(mu, f);
    if (f.approx_zero(tol.residual_eps)) {
        out.zero_function = true;
        add_check(out.checks, "zero function has zero moment", int_f, moment_zero(int_f, f, tol));
        out.pass = out.checks.pass();
        return out;
    }
    // part (a), nonzero direction
    add_check(out.checks, "moment of f nonzero", int_f, !moment_zero(int_f, f, tol));
    cplx D = double_transform(S, sigma, mu, f);
    if (moment_zero(D, f, tol))
        throw InternalContradiction("double transform of a nonzero multiplicative-law solution vanishes");
    out.alpha = int_f / D;
    CFunction chi_fn = out.alpha * f;
    add_check(out.checks, "alpha f is an exponential", out.alpha, is_exponential(S, chi_fn, tol));
    out.chi = match_exponential(S, chi_fn, tol);
    add_check(out.checks, "chi o sigma = chi", 0.0, exact_fixed(out.chi, sigma));
    cplx m_chi = integrate(mu, out.chi.fn);
    double d = 0.0;
    for (int x = 0; x < S.n; ++x) d = std::max(d, std::abs(f(x) - m_chi * out.chi.fn(x)));
    check_pointwise(out.checks, "f equals its chi moment times chi", d, 1.0 + f.inf_norm(), tol);
    double e34 = 0.0;
    for (int x = 0; x < S.n; ++x)
        for (int y = 0; y < S.n; ++y)
            e34 = std::max(e34, std::abs(f(S.mul(x, sigma(y))) - out.alpha * f(x) * f(y)));
    check_pointwise(out.checks, "f(x sigma(y)) = alpha f(x) f(y)", e34,
                    (1.0 + f.inf_norm()) * (1.0 + f.inf_norm()), tol);
    out.pass = out.checks.pass();
    return out;
}

namespace {

void require_solution(const FiniteSemigroup& S, const InvolutiveAutomorphism& sigma,
                      const DiscreteMeasure& mu, EquationId eq, const CFunction& f,
                      const CFunction& g, const ToleranceProfile& tol) {
    auto rep = residual(S, sigma, &mu, eq, f, &g, tol);
    if (!rep.verdict) throw NotASolution(rep.max_residual);
}

void verify_round_trip(const FiniteSemigroup& S, const InvolutiveAutomorphism& sigma,
                       const DiscreteMeasure& mu, const FamilyDescriptor& desc, const CFunction& f,
                       const CFunction& g, const ToleranceProfile& tol) {
    auto [rf, rg] = construct_impl(S, sigma, mu, desc, tol);
    double d = (rf - f).inf_norm() + (rg - g).inf_norm();
    if (d > 1e3 * tol.residual_eps * (1.0 + f.inf_norm() + g.inf_norm()))
        throw InternalContradiction("classified descriptor does not reconstruct the input pair");
}

}  // namespace

Classification classify_t36(const FiniteSemigroup& S, const InvolutiveAutomorphism& sigma,
                            const DiscreteMeasure& mu, const CFunction& f, const CFunction& g,
                            const ToleranceProfile& tol) {
    require_solution(S, sigma, mu, EquationId::KSSub, f, g, tol);
    Classification out;
    auto& t = out.trace;
    auto& d = out.descriptor;

    if (f.approx_zero(tol.residual_eps)) {
        t.steps.push_back("f = 0");
        d.tag = FamilyTag::T36_1;
        d.g = g;
        return out;
    }
    if (functions_dependent(f, g, tol)) {
        t.dependent = true;
        t.steps.push_back("f, g dependent");
        cplx k = ls_ratio(f, g);
        if ((g - k * f).inf_norm() > 1e3 * tol.residual_eps * (1.0 + g.inf_norm()))
            throw InternalContradiction("dependent pair admits no ratio g = k f");
        double r = max_plain_transform(S, mu, f);
        if (r > tol.residual_eps * (1.0 + f.inf_norm()) * (1.0 + measure_mass(mu)))
            throw InternalContradiction("dependent pair with nonvanishing kernel transform");
        d.tag = FamilyTag::T36_2;
        d.f = f;
        d.k = k;
        return out;
    }

    t.int_f = integrate(mu, f);
    t.int_g = integrate(mu, g);
    if (!moment_zero(t.int_f, f, tol))
        throw InternalContradiction("independent pair with nonzero moment of f");
    t.M_g = double_transform(S, sigma, mu, g);
    t.M_f = double_transform(S, sigma, mu, f);

    SineDecomposition dec;
    if (moment_zero(t.M_g, g, tol)) {
        t.steps.push_back("M_g = 0");
        if (moment_zero(t.M_f, f, tol))
            throw InternalContradiction("both double transforms vanish on an independent pair");
        t.gamma = t.int_g / t.M_f;
        dec = decompose_sine_subtraction(S, sigma, g, t.gamma * f, tol);
        if (dec.kind == SineDecomposition::Kind::TwoCharacter) {
            d.tag = FamilyTag::T36_3;
            d.chi = dec.chi;
            d.gamma = t.gamma;
            d.b = dec.b;
            d.c = dec.c;
        } else if (dec.kind == SineDecomposition::Kind::CharacterPlusPhi) {
            d.tag = FamilyTag::T36_6;
            d.chi = dec.chi;
            d.phi = g;
            d.gamma = t.gamma;
        }
    } else if (moment_zero(t.M_f, f, tol)) {
        t.steps.push_back("M_g != 0, M_f = 0");
        t.beta = t.int_g / t.M_g;
        dec = decompose_sine_subtraction(S, sigma, f, t.beta * g, tol);
        if (dec.kind == SineDecomposition::Kind::TwoCharacter) {
            d.tag = FamilyTag::T36_4;
            d.chi = dec.chi;
            d.beta = t.beta;
            d.b = dec.b;
            d.c = dec.c;
        } else if (dec.kind == SineDecomposition::Kind::CharacterPlusPhi) {
            d.tag = FamilyTag::T36_8;
            d.chi = dec.chi;
            d.phi = f;
            d.c = dec.c;
        }
    } else {
        t.steps.push_back("M_g != 0, M_f != 0");
        t.delta = t.int_g / t.M_g;
        t.alpha = t.M_f / t.M_g;
        dec = decompose_sine_subtraction(S, sigma, f - t.alpha * g, t.delta * g, tol);
        if (dec.kind == SineDecomposition::Kind::TwoCharacter) {
            d.tag = FamilyTag::T36_5;
            d.chi = dec.chi;
            d.alpha = t.alpha;
            d.delta = t.delta;
            d.b = dec.b;
            d.c = dec.c;
        } else if (dec.kind == SineDecomposition::Kind::CharacterPlusPhi) {
            d.tag = FamilyTag::T36_7;
            d.chi = dec.chi;
            d.phi = dec.phi;
            d.alpha = t.alpha;
            d.c = dec.c;
            d.delta = t.delta;
        }
    }
    if (dec.kind == SineDecomposition::Kind::Unrepresentable)
        throw UnclassifiedSolution("sine-subtraction decomposition failed: " + dec.note);
    t.steps.push_back("decomposed as " + family_name(d.tag));
    verify_round_trip(S, sigma, mu, d, f, g, tol);
    return out;
}

Classification classify_t44(const FiniteSemigroup& S, const InvolutiveAutomorphism& sigma,
                            const DiscreteMeasure& mu, const CFunction& f, const CFunction& g,
                            const ToleranceProfile& tol) {
    require_solution(S, sigma, mu, EquationId::KSAdd, f, g, tol);
    Classification out;
    auto& t = out.trace;
    auto& d = out.descriptor;

    if (f.approx_zero(tol.residual_eps)) {
        t.steps.push_back("f = 0");
        d.tag = FamilyTag::T44_1;
        d.g = g;
        return out;
    }
    if (functions_dependent(f, g, tol)) {
        t.dependent = true;
        t.steps.push_back("f, g dependent");
        cplx dep = ls_ratio(f, g);
        if ((g - dep * f).inf_norm() > 1e3 * tol.residual_eps * (1.0 + g.inf_norm()))
            throw InternalContradiction("dependent pair admits no ratio g = delta f");
        if (std::abs(dep) <= tol.residual_eps) {
            double r = max_plain_transform(S, mu, f);
            if (r > tol.residual_eps * (1.0 + f.inf_norm()) * (1.0 + measure_mass(mu)))
                throw InternalContradiction("g = 0 but the kernel transform of f does not vanish");
            d.tag = FamilyTag::T44_2;
            d.f = f;
            return out;
        }
        t.delta = dep;
        auto p31 = verify_prop31(S, sigma, mu, (2.0 * dep) * f, tol);
        if (!p31.pass)
            throw InternalContradiction("multiplicative recovery failed on a dependent pair");
        d.tag = FamilyTag::T44_3;
        d.chi = p31.chi;
        d.delta = dep;
        verify_round_trip(S, sigma, mu, d, f, g, tol);
        return out;
    }

    t.int_f = integrate(mu, f);
    t.int_g = integrate(mu, g);
    if (moment_zero(t.int_f, f, tol)) {
        t.M_g = double_transform(S, sigma, mu, g);
        t.M_f = double_transform(S, sigma, mu, f);
        SineDecomposition dec;
        if (moment_zero(t.M_g, g, tol)) {
            t.steps.push_back("moment of f = 0, M_g = 0");
            if (moment_zero(t.M_f, f, tol))
                throw InternalContradiction("both double transforms vanish on an independent pair");
            t.beta = t.int_g / t.M_f;
            dec = decompose_sine_addition(S, sigma, g, t.beta * f, tol);
            if (dec.kind != SineDecomposition::Kind::TwoCharacter)
                throw UnclassifiedSolution("sine-addition decomposition failed: " + dec.note);
            cplx m1 = integrate(mu, dec.chi.fn), m2 = integrate(mu, dec.chi2.fn);
            if (std::abs(m1 - 2.0 * dec.c) > 1e3 * tol.residual_eps * (1.0 + std::abs(dec.c)) ||
                std::abs(m2 + 2.0 * dec.c) > 1e3 * tol.residual_eps * (1.0 + std::abs(dec.c)))
                throw InternalContradiction("recovered moments violate the two-character pattern");
            d.tag = FamilyTag::T44_4;
            d.chi = dec.chi;
            d.chi2 = dec.chi2;
            d.alpha = 2.0 * dec.c * t.beta;
        } else {
            t.steps.push_back("moment of f = 0, M_g != 0");
            t.alpha = t.int_g / t.M_g;
            double pf = parity_residual(f, sigma, +1), pg = parity_residual(g, sigma, +1);
            double peps = 1e3 * tol.residual_eps * (1.0 + f.inf_norm() + g.inf_norm());
            if (pf > peps || pg > peps)
                throw InternalContradiction("f or g is not sigma-invariant in the even branch");
            dec = decompose_sine_addition(S, sigma, f, t.alpha * g, tol);
            if (dec.kind == SineDecomposition::Kind::TwoCharacter) {
                d.tag = FamilyTag::T44_4;
                d.chi = dec.chi;
                d.chi2 = dec.chi2;
                d.alpha = 1.0 / (2.0 * dec.c * t.alpha);
            } else if (dec.kind == SineDecomposition::Kind::CharacterPlusPhi) {
                d.tag = FamilyTag::T44_5;
                d.chi = dec.chi;
                d.phi = f;
            } else {
                throw UnclassifiedSolution("sine-addition decomposition failed: " + dec.note);
            }
        }
    } else {
        t.steps.push_back("moment of f != 0");
        t.psi = CFunction(S.n);
        for (int y = 0; y < S.n; ++y) {
            cplx dd = 0.0;
            for (const auto& s : mu.atoms)
                for (const auto& k : mu.atoms)
                    dd += s.weight * k.weight * g(S.mul(S.mul(y, sigma(s.point)), k.point));
            t.psi[y] = (dd - g(y) * t.int_g) / t.int_f;
        }
        t.xi = integrate(mu, t.psi) / t.int_f;
        t.alpha = std::sqrt(t.xi);
        CFunction hp = g + t.alpha * f, hm = g - t.alpha * f;
        auto rp = residual(S, sigma, &mu, EquationId::KMultSigma, hp, nullptr, tol);
        auto rm = residual(S, sigma, &mu, EquationId::KMultSigma, hm, nullptr, tol);
        if (!rp.verdict || !rm.verdict)
            throw InternalContradiction("g +- alpha f fail the multiplicative law");
        auto p1 = verify_prop31(S, sigma, mu, hp, tol);
        auto p2 = verify_prop31(S, sigma, mu, hm, tol);
        if (!p1.pass || !p2.pass || p1.zero_function || p2.zero_function)
            throw InternalContradiction("multiplicative recovery failed in the nonzero-moment branch");
        if (p1.chi == p2.chi) {
            d.tag = FamilyTag::T44_6;
            d.chi = p1.chi;
            d.phi = f;
        } else {
            d.tag = FamilyTag::T44_4;
            d.chi = p1.chi;
            d.chi2 = p2.chi;
            d.alpha = t.alpha;
        }
    }
    t.steps.push_back("decomposed as " + family_name(d.tag));
    verify_round_trip(S, sigma, mu, d, f, g, tol);
    return out;
}

ValidationReport lemma_suite_t36(const FiniteSemigroup& S, const InvolutiveAutomorphism& sigma,
                                 const DiscreteMeasure& mu, const CFunction& f, const CFunction& g,
                                 const ToleranceProfile& tol) {
    require_solution(S, sigma, mu, EquationId::KSSub, f, g, tol);
    if (functions_dependent(f, g, tol))
        throw PreconditionViolation("lemma suite requires an independent pair");

    ValidationReport rep;
    cplx int_f = integrate(mu, f), int_g = integrate(mu, g);
    cplx M_g = double_transform(S, sigma, mu, g), M_f = double_transform(S, sigma, mu, f);
    add_check(rep, "moment of f vanishes", int_f, moment_zero(int_f, f, tol));

    double sc = (1.0 + f.inf_norm()) * (1.0 + g.inf_norm()) * (1.0 + measure_mass(mu)) *
                (1.0 + measure_mass(mu));
    double e = 0.0;
    for (int x = 0; x < S.n; ++x)
        for (int y = 0; y < S.n; ++y) {
            int xy = S.mul(x, sigma(y));
            cplx lhs = f(xy) * M_g;
            cplx rhs = (f(x) * g(y) - f(y) * g(x)) * int_g + g(xy) * M_f;
            e = std::max(e, std::abs(lhs - rhs));
        }
    check_pointwise(rep, "two-sided transform identity", e, sc, tol);
    add_check(rep, "moment of g nonzero", int_g, !moment_zero(int_g, g, tol));
    add_check(rep, "M_g = 0 implies M_f != 0", M_f,
              !moment_zero(M_g, g, tol) || !moment_zero(M_f, f, tol));
    return rep;
}

ValidationReport lemma_suite_t44(const FiniteSemigroup& S, const InvolutiveAutomorphism& sigma,
                                 const DiscreteMeasure& mu, const CFunction& f, const CFunction& g,
                                 const ToleranceProfile& tol) {
    require_solution(S, sigma, mu, EquationId::KSAdd, f, g, tol);
    if (functions_dependent(f, g, tol))
        throw PreconditionViolation("lemma suite requires an independent pair");

    ValidationReport rep;
    cplx int_f = integrate(mu, f), int_g = integrate(mu, g);
    double mass = measure_mass(mu);
    double sc = (1.0 + f.inf_norm()) * (1.0 + g.inf_norm()) * (1.0 + mass) * (1.0 + mass);

    if (moment_zero(int_f, f, tol)) {
        cplx M_g = double_transform(S, sigma, mu, g), M_f = double_transform(S, sigma, mu, f);
        double e = 0.0;
        for (int x = 0; x < S.n; ++x)
            for (int y = 0; y < S.n; ++y) {
                int xy = S.mul(x, sigma(y));
                cplx lhs = f(xy) * M_g;
                cplx rhs = (f(x) * g(y) + f(y) * g(x)) * int_g - g(xy) * M_f;
                e = std::max(e, std::abs(lhs - rhs));
            }
        check_pointwise(rep, "two-sided transform identity", e, sc, tol);
        add_check(rep, "moment of g nonzero", int_g, !moment_zero(int_g, g, tol));

        cplx T1 = 0.0, T2 = 0.0, T3 = 0.0;
        for (const auto& s : mu.atoms)
            for (const auto& k : mu.atoms) {
                cplx w = s.weight * k.weight;
                T1 += w * f(S.mul(s.point, k.point));
                T2 += w * f(S.mul(sigma(s.point), k.point));
                T3 += w * f(S.mul(k.point, sigma(s.point)));
            }
        bool triple = std::abs(T1 - T2) <= tol.residual_eps * sc &&
                      std::abs(T2 - T3) <= tol.residual_eps * sc;
        add_check(rep, "double-transform triple equality", T1, triple);
        add_check(rep, "not both double transforms zero", M_g,
                  !(moment_zero(M_g, g, tol) && moment_zero(M_f, f, tol)));
        add_check(rep, "M_g != 0 implies M_f = 0", M_f,
                  moment_zero(M_g, g, tol) || moment_zero(M_f, f, tol));
    } else {
        CFunction psi(S.n);
        for (int y = 0; y < S.n; ++y) {
            cplx dd = 0.0;
            for (const auto& s : mu.atoms)
                for (const auto& k : mu.atoms)
                    dd += s.weight * k.weight * g(S.mul(S.mul(y, sigma(s.point)), k.point));
            psi[y] = (dd - g(y) * int_g) / int_f;
        }
        cplx xi = integrate(mu, psi) / int_f;
        double e = 0.0;
        for (int x = 0; x < S.n; ++x)
            for (int y = 0; y < S.n; ++y) {
                int xy = S.mul(x, sigma(y));
                cplx lhs = 0.0;
                for (const auto& a : mu.atoms) lhs += a.weight * g(S.mul(xy, a.point));
                cplx rhs = g(x) * g(y) + xi * f(x) * f(y);
                e = std::max(e, std::abs(lhs - rhs));
            }
        check_pointwise(rep, "transform of g splits as g g + alpha^2 f f", e, sc, tol);
    }
    return rep;
}

}  // namespace ksl

#include "ksl/suite.hpp"

#include <cmath>
#include <stdexcept>

#include "ksl/equations.hpp"

namespace ksl {

namespace {

constexpr cplx kI{0.0, 1.0};

Exponential find_exp(const FiniteSemigroup& S, const std::vector<cplx>& values) {
    for (const auto& chi : enumerate_exponentials(S)) {
        double d = 0.0;
        for (int x = 0; x < S.n; ++x) d = std::max(d, std::abs(chi.fn(x) - values[x]));
        if (d <= 1e-9) return chi;
    }
    throw std::logic_error("sweep refers to a missing exponential");
}

DiscreteMeasure fit_or_throw(const FiniteSemigroup& S, const Exponential& chi,
                             const Exponential& chis, cplx t1, cplx t2) {
    std::vector<int> support(S.n);
    for (int x = 0; x < S.n; ++x) support[x] = x;
    auto mu = fit_measure(S, {{chi.fn, t1}, {chis.fn, t2}}, support);
    if (!mu) throw std::logic_error("sweep moment targets are unreachable");
    return *mu;
}

struct SweepBuilder {
    std::vector<SweepInstance> out;

    void add(const std::string& family, const std::string& semigroup_name,
             const FiniteSemigroup& S, const InvolutiveAutomorphism& sigma,
             const DiscreteMeasure& mu, FamilyDescriptor desc) {
        SweepInstance inst;
        inst.name = family + "[" + std::to_string(count(family)) + "]";
        inst.semigroup_name = semigroup_name;
        inst.S = S;
        inst.sigma = sigma;
        inst.mu = mu;
        inst.descriptor = std::move(desc);
        inst.eq = family_is_subtraction(inst.descriptor.tag) ? EquationId::KSSub
                                                             : EquationId::KSAdd;
        out.push_back(std::move(inst));
    }

    int count(const std::string& family) const {
        int c = 0;
        for (const auto& inst : out)
            if (inst.name.rfind(family + "[", 0) == 0) ++c;
        return c;
    }
};

CFunction arbitrary_function(int n, int seed) {
    CFunction g(n);
    for (int x = 0; x < n; ++x)
        g[x] = cplx(0.25 * ((seed + 3 * x) % 11) - 1.0, 0.5 * ((2 * seed + 5 * x) % 7) - 1.5);
    return g;
}

void build_t36(SweepBuilder& b) {
    auto z3 = cyclic_group(3);
    auto neg3 = negation_involution(3);
    const cplx w = std::polar(1.0, 2.0 * M_PI / 3.0);
    auto chi1 = find_exp(z3, {1.0, w, w * w});
    auto chi1s = exponential_pullback(chi1, neg3);

    auto t4 = truncated_addition(4);
    auto id4 = identity_involution(4);

    auto sq = direct_product(t4, t4);
    auto swap4 = swap_involution(4);
    std::vector<cplx> chi00_v(16, 0.0), phi0_v(16, 0.0);
    chi00_v[0] = 1.0;
    phi0_v[pair_index(t4, 1, 0)] = 1.0;
    phi0_v[pair_index(t4, 0, 1)] = -1.0;
    auto chi00 = find_exp(sq, chi00_v);
    const CFunction phi0{phi0_v};
    const int idx0 = pair_index(t4, 0, 0);
    const int idx4 = pair_index(t4, 1, 0);

    // Zero-f family: g unconstrained.
    for (int i = 0; i < 36; ++i) {
        FamilyDescriptor d;
        d.tag = FamilyTag::T36_1;
        d.g = arbitrary_function(3, i);
        b.add("T36_1", "Z3", z3, neg3, DiscreteMeasure::point_mass(0), d);
    }

    // Dependent family: the measure sits on the absorbing element, so the
    // transform of f vanishes identically.
    {
        const cplx as[] = {1.0, 2.0, kI};
        const cplx bs[] = {0.0, 1.0, -1.0};
        const cplx ks[] = {0.0, 1.0, kI, 2.0};
        for (cplx a : as)
            for (cplx bb : bs)
                for (cplx k : ks) {
                    FamilyDescriptor d;
                    d.tag = FamilyTag::T36_2;
                    d.f = CFunction{{a, bb, -1.0, 0.0}};
                    d.k = k;
                    b.add("T36_2", "Trunc4", t4, id4, DiscreteMeasure::point_mass(3), d);
                }
    }

    // Two-character families with fitted moment targets.
    {
        const cplx gammas[] = {1.0, 2.0, kI};
        const cplx bs[] = {1.0, kI, -2.0};
        const cplx cs[] = {0.0, 2.0, kI, -3.0};
        for (cplx gamma : gammas)
            for (cplx bb : bs)
                for (cplx c : cs) {
                    FamilyDescriptor d;
                    d.tag = FamilyTag::T36_3;
                    d.chi = chi1;
                    d.gamma = gamma;
                    d.b = bb;
                    d.c = c;
                    auto mu = fit_or_throw(z3, chi1, chi1s, -2.0 * bb / (1.0 + c),
                                           2.0 * bb / (1.0 - c));
                    b.add("T36_3", "Z3", z3, neg3, mu, d);
                }
    }
    {
        const cplx betas[] = {1.0, 2.0, kI};
        const cplx bs[] = {1.0, kI, -2.0};
        const cplx cs[] = {0.0, 3.0, kI, -3.0};
        for (cplx beta : betas)
            for (cplx bb : bs)
                for (cplx c : cs) {
                    FamilyDescriptor d;
                    d.tag = FamilyTag::T36_4;
                    d.chi = chi1;
                    d.beta = beta;
                    d.b = bb;
                    d.c = c;
                    auto mu = fit_or_throw(z3, chi1, chi1s, 1.0 / beta, 1.0 / beta);
                    b.add("T36_4", "Z3", z3, neg3, mu, d);
                }
    }
    {
        const cplx alphas[] = {1.0, 2.0, kI};
        const cplx deltas[] = {1.0, kI};
        const cplx bs[] = {1.0, -2.0};
        const cplx cs[] = {0.0, 3.0, kI, -2.0};
        for (cplx alpha : alphas)
            for (cplx delta : deltas)
                for (cplx bb : bs)
                    for (cplx c : cs) {
                        if (b.count("T36_5") >= 36) break;
                        cplx excl = 2.0 * bb * delta + alpha * c;
                        if (std::abs(alpha - excl) < 1e-9 || std::abs(alpha + excl) < 1e-9)
                            continue;
                        FamilyDescriptor d;
                        d.tag = FamilyTag::T36_5;
                        d.chi = chi1;
                        d.alpha = alpha;
                        d.delta = delta;
                        d.b = bb;
                        d.c = c;
                        auto mu = fit_or_throw(
                            z3, chi1, chi1s, 2.0 * bb / (alpha * (1.0 + c) + 2.0 * bb * delta),
                            2.0 * bb / (alpha * (c - 1.0) + 2.0 * bb * delta));
                        b.add("T36_5", "Z3", z3, neg3, mu, d);
                    }
    }

    // Character-plus-phi families on the product with the coordinate swap.
    {
        const cplx gammas[] = {1.0, 2.0, kI};
        const cplx w0s[] = {1.0, 2.0, -1.0};
        const cplx ts[] = {1.0, 2.0, kI, -1.0};
        for (cplx gamma : gammas)
            for (cplx w0 : w0s)
                for (cplx t : ts) {
                    FamilyDescriptor d;
                    d.tag = FamilyTag::T36_6;
                    d.chi = chi00;
                    d.phi = t * phi0;
                    d.gamma = gamma;
                    DiscreteMeasure mu{{{idx0, w0}, {idx4, w0 * w0 / t}}};
                    b.add("T36_6", "Trunc4xTrunc4", sq, swap4, mu, d);
                }
    }
    {
        const cplx alphas[] = {1.0, -1.0, 2.0};
        const cplx deltas[] = {1.0, kI, -2.0};
        const cplx cs[] = {0.0, 1.0, kI, -3.0, 2.0};
        for (cplx alpha : alphas)
            for (cplx delta : deltas)
                for (cplx c : cs) {
                    if (b.count("T36_7") >= 36) break;
                    cplx den = alpha * c + delta;
                    if (std::abs(den) < 1e-9) continue;
                    FamilyDescriptor d;
                    d.tag = FamilyTag::T36_7;
                    d.chi = chi00;
                    d.phi = phi0;
                    d.alpha = alpha;
                    d.delta = delta;
                    d.c = c;
                    DiscreteMeasure mu{{{idx0, 1.0 / den}, {idx4, -alpha / (den * den)}}};
                    b.add("T36_7", "Trunc4xTrunc4", sq, swap4, mu, d);
                }
    }
    {
        const cplx cs[] = {0.0, 1.0, kI, -2.0};
        const cplx w0s[] = {1.0, 2.0, kI};
        const cplx ts[] = {1.0, -1.0, 2.0 * kI};
        for (cplx c : cs)
            for (cplx w0 : w0s)
                for (cplx t : ts) {
                    FamilyDescriptor d;
                    d.tag = FamilyTag::T36_8;
                    d.chi = chi00;
                    d.phi = t * phi0;
                    d.c = c;
                    b.add("T36_8", "Trunc4xTrunc4", sq, swap4,
                          DiscreteMeasure::point_mass(idx0, w0), d);
                }
    }
}

void build_t44(SweepBuilder& b) {
    auto z2 = cyclic_group(2);
    auto id2 = identity_involution(2);
    auto chi0 = find_exp(z2, {1.0, 1.0});
    auto chi1 = find_exp(z2, {1.0, -1.0});

    auto t4 = truncated_addition(4);
    auto id4 = identity_involution(4);
    auto chi_t4 = find_exp(t4, {1.0, 0.0, 0.0, 0.0});

    for (int i = 0; i < 36; ++i) {
        FamilyDescriptor d;
        d.tag = FamilyTag::T44_1;
        d.g = arbitrary_function(2, i);
        b.add("T44_1", "Z2", z2, id2, DiscreteMeasure::point_mass(0), d);
    }

    {
        const cplx as[] = {1.0, 2.0, kI, -1.0};
        const cplx bs[] = {0.0, 1.0, -kI};
        const cplx es[] = {1.0, 2.0, -1.0};
        for (cplx a : as)
            for (cplx bb : bs)
                for (cplx e : es) {
                    FamilyDescriptor d;
                    d.tag = FamilyTag::T44_2;
                    d.f = CFunction{{a, bb, e, 0.0}};
                    b.add("T44_2", "Trunc4", t4, id4, DiscreteMeasure::point_mass(3), d);
                }
    }

    {
        const cplx deltas[] = {1.0, 2.0, kI, -1.0, 0.5, 2.0 * kI};
        const DiscreteMeasure mus[] = {
            {{{0, 1.0}}}, {{{0, 1.0}, {1, 2.0}}}, {{{0, kI}, {1, 1.0}}}};
        for (const auto& chi : {chi0, chi1})
            for (cplx delta : deltas)
                for (const auto& mu : mus) {
                    FamilyDescriptor d;
                    d.tag = FamilyTag::T44_3;
                    d.chi = chi;
                    d.delta = delta;
                    b.add("T44_3", "Z2", z2, id2, mu, d);
                }
    }

    {
        const cplx alphas[] = {1.0, 2.0, kI, -1.0, 0.5, 1.0 + kI, -kI, 3.0, 0.25};
        const DiscreteMeasure mus[] = {
            {{{1, 1.0}}},             // vanishing double transform of g
            {{{0, 1.0}}},             // vanishing moment of f
            {{{0, 1.0}, {1, 0.5}}},   // nonzero moment of f
            {{{0, kI}, {1, 1.0}}}};   // nonzero moment of f
        for (cplx alpha : alphas)
            for (const auto& mu : mus) {
                FamilyDescriptor d;
                d.tag = FamilyTag::T44_4;
                d.chi = chi0;
                d.chi2 = chi1;
                d.alpha = alpha;
                b.add("T44_4", "Z2", z2, id2, mu, d);
            }
    }

    {
        const cplx w0s[] = {1.0, 2.0, kI, -1.0, 0.5, 1.0 + 2.0 * kI};
        const cplx ts[] = {1.0, -1.0, kI, 2.0, -kI, 3.0};
        for (cplx w0 : w0s)
            for (cplx t : ts) {
                FamilyDescriptor d;
                d.tag = FamilyTag::T44_5;
                d.chi = chi_t4;
                d.phi = t * CFunction{{0.0, 1.0, 0.0, 0.0}};
                b.add("T44_5", "Trunc4", t4, id4, DiscreteMeasure::point_mass(0, w0), d);
            }
    }

    {
        const cplx w0s[] = {1.0, 2.0, kI};
        const cplx w1s[] = {1.0, -1.0, 0.5, 2.0 * kI};
        const cplx ts[] = {1.0, 1.0 + kI, -2.0};
        for (cplx w0 : w0s)
            for (cplx w1 : w1s)
                for (cplx t : ts) {
                    FamilyDescriptor d;
                    d.tag = FamilyTag::T44_6;
                    d.chi = chi_t4;
                    d.phi = CFunction{{t * w1, t * w0, 0.0, 0.0}};
                    DiscreteMeasure mu{{{0, w0}, {1, w1}}};
                    b.add("T44_6", "Trunc4", t4, id4, mu, d);
                }
    }
}

double round_trip_distance(const CFunction& a, const CFunction& b) {
    double d = 0.0;
    for (int x = 0; x < a.size(); ++x) d = std::max(d, std::abs(a(x) - b(x)));
    return d;
}

void run_family_suite(const std::string& suite_name, bool subtraction,
                      const std::vector<SweepInstance>& instances, const ToleranceProfile& tol,
                      std::vector<CheckRecord>& checks) {
    for (const auto& inst : instances) {
        if (family_is_subtraction(inst.descriptor.tag) != subtraction) continue;
        CheckRecord forward{suite_name, inst.name + "/forward", 0.0, false, ""};
        CheckRecord round{suite_name, inst.name + "/round-trip", 0.0, false, ""};
        try {
            auto [f, g] = subtraction
                              ? construct_t36(inst.S, inst.sigma, inst.mu, inst.descriptor, tol)
                              : construct_t44(inst.S, inst.sigma, inst.mu, inst.descriptor, tol);

            // Scale both functions and the measure into the unit ball; the
            // laws are invariant under (f, g, mu) -> (s f, l g, l mu).
            const cplx s = 1.0 / std::max(1.0, f.inf_norm());
            const cplx l = 1.0 / std::max(1.0, g.inf_norm());
            DiscreteMeasure mu_n = inst.mu;
            for (auto& atom : mu_n.atoms) atom.weight *= l;
            const CFunction fn = s * f, gn = l * g;
            auto rep = residual(inst.S, inst.sigma, &mu_n, inst.eq, fn, &gn, tol);
            forward.value = rep.max_residual;
            forward.pass = rep.max_residual <= tol.residual_eps;
            forward.detail = inst.semigroup_name;

            auto cls = subtraction ? classify_t36(inst.S, inst.sigma, inst.mu, f, g, tol)
                                   : classify_t44(inst.S, inst.sigma, inst.mu, f, g, tol);
            auto [f2, g2] =
                subtraction ? construct_t36(inst.S, inst.sigma, inst.mu, cls.descriptor, tol)
                            : construct_t44(inst.S, inst.sigma, inst.mu, cls.descriptor, tol);
            const double scale = 1.0 + f.inf_norm() + g.inf_norm();
            round.value =
                std::max(round_trip_distance(f, f2), round_trip_distance(g, g2)) / scale;
            round.pass = round.value <= tol.residual_eps;
            round.detail = family_name(cls.descriptor.tag);
        } catch (const std::exception& e) {
            if (!forward.pass) forward.detail = e.what();
            round.detail = e.what();
        }
        checks.push_back(std::move(forward));
        checks.push_back(std::move(round));
    }
}

void run_prop31_suite(const ToleranceProfile& tol, std::vector<CheckRecord>& checks) {
    for (const auto& name : catalog_names()) {
        auto entry = catalog(name);
        const auto& S = entry.semigroup;
        auto exps = enumerate_exponentials(S);
        int inv_idx = 0;
        for (const auto& sigma : entry.involutions) {
            const std::string base = name + "/inv" + std::to_string(inv_idx++);
            {
                // Zero direction: the zero function passes with a vanishing moment.
                CheckRecord rec{"prop31", base + "/zero", 0.0, false, ""};
                auto rep = verify_prop31(S, sigma, DiscreteMeasure::point_mass(0),
                                         CFunction(S.n), tol);
                rec.pass = rep.pass && rep.zero_function;
                checks.push_back(std::move(rec));
            }
            int chi_idx = 0;
            for (const auto& chi : exps) {
                const int ci = chi_idx++;
                if (!(exponential_pullback(chi, sigma) == chi)) continue;
                for (int z = 0; z < S.n; ++z) {
                    if (chi.exact[z].is_zero) continue;  // the moment must not vanish
                    CheckRecord rec{"prop31",
                                    base + "/chi" + std::to_string(ci) + "/z" + std::to_string(z),
                                    0.0, false, ""};
                    try {
                        auto mu = DiscreteMeasure::point_mass(z);
                        CFunction f = integrate(mu, chi.fn) * chi.fn;
                        auto rep = verify_prop31(S, sigma, mu, f, tol);
                        rec.value = std::abs(rep.alpha);
                        rec.pass = rep.pass && !rep.zero_function && rep.chi.exact == chi.exact;
                        rec.detail = rec.pass ? "recovered exactly" : "mismatch";
                    } catch (const std::exception& e) {
                        rec.detail = e.what();
                    }
                    checks.push_back(std::move(rec));
                }
            }
        }
    }
}

void run_lemma_suite(const std::vector<SweepInstance>& instances, const ToleranceProfile& tol,
                     std::vector<CheckRecord>& checks) {
    for (const auto& inst : instances) {
        switch (inst.descriptor.tag) {
            case FamilyTag::T36_1:
            case FamilyTag::T36_2:
            case FamilyTag::T44_1:
            case FamilyTag::T44_2:
            case FamilyTag::T44_3:
                continue;  // dependent or zero pairs sit outside the lemma preconditions
            default:
                break;
        }
        const bool subtraction = family_is_subtraction(inst.descriptor.tag);
        CheckRecord rec{"lemmas", inst.name, 0.0, false, ""};
        try {
            auto [f, g] = subtraction
                              ? construct_t36(inst.S, inst.sigma, inst.mu, inst.descriptor, tol)
                              : construct_t44(inst.S, inst.sigma, inst.mu, inst.descriptor, tol);
            auto report = subtraction ? lemma_suite_t36(inst.S, inst.sigma, inst.mu, f, g, tol)
                                      : lemma_suite_t44(inst.S, inst.sigma, inst.mu, f, g, tol);
            rec.pass = report.pass();
            rec.detail = rec.pass ? "all identities hold" : report.first_failure();
        } catch (const std::exception& e) {
            rec.detail = e.what();
        }
        checks.push_back(std::move(rec));
    }
}

}  // namespace

std::vector<SweepInstance> family_sweep() {
    SweepBuilder b;
    build_t36(b);
    build_t44(b);
    return std::move(b.out);
}

RunReport run_verification_suite(const SuiteConfig& config) {
    RunReport report;
    report.command = "verify --suite " + config.suite;

    const bool all = config.suite == "all";
    if (!all && config.suite != "t36" && config.suite != "t44" && config.suite != "prop31" &&
        config.suite != "lemmas")
        throw std::invalid_argument("unknown suite: " + config.suite);

    std::vector<SweepInstance> instances;
    if (all || config.suite != "prop31") instances = family_sweep();
    report.inputs["instances"] = std::to_string(instances.size());
    report.inputs["catalog_entries"] = std::to_string(catalog_names().size());

    if (all || config.suite == "t36")
        run_family_suite("t36", true, instances, config.tol, report.checks);
    if (all || config.suite == "t44")
        run_family_suite("t44", false, instances, config.tol, report.checks);
    if (all || config.suite == "prop31") run_prop31_suite(config.tol, report.checks);
    if (all || config.suite == "lemmas") run_lemma_suite(instances, config.tol, report.checks);

    for (const auto& c : report.checks)
        if (!c.pass) report.exit_status = 1;
    return report;
}

JsonValue report_to_json(const RunReport& report) {
    JsonValue::Object root;
    root["command"] = report.command;
    JsonValue::Object inputs;
    for (const auto& [k, v] : report.inputs) inputs[k] = v;
    root["inputs"] = std::move(inputs);
    JsonValue::Array checks;
    for (const auto& c : report.checks) {
        JsonValue::Object o;
        o["detail"] = c.detail;
        o["name"] = c.name;
        o["pass"] = c.pass;
        o["suite"] = c.suite;
        o["value"] = c.value;
        checks.push_back(std::move(o));
    }
    root["checks"] = std::move(checks);
    root["exit_status"] = report.exit_status;
    JsonValue::Object tol;
    tol["rank_eps"] = ToleranceProfile{}.rank_eps;
    tol["residual_eps"] = ToleranceProfile{}.residual_eps;
    root["tolerances"] = std::move(tol);
    return JsonValue(std::move(root));
}

}  // namespace ksl

#include <cstdio>
#include <iostream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "ksl/catalog.hpp"
#include "ksl/gridsearch.hpp"
#include "ksl/io.hpp"
#include "ksl/suite.hpp"

using namespace ksl;

namespace {

JsonValue function_json(const CFunction& f) {
    JsonValue::Array a;
    for (int x = 0; x < f.size(); ++x) a.push_back(json_complex(f(x)));
    return JsonValue(std::move(a));
}

JsonValue exponential_json(const Exponential& chi) {
    JsonValue::Object o;
    JsonValue::Array exact;
    for (const auto& v : chi.exact) {
        JsonValue::Object e;
        e["zero"] = v.is_zero;
        if (!v.is_zero) {
            e["num"] = static_cast<double>(v.num);
            e["den"] = static_cast<double>(v.den);
        }
        exact.push_back(std::move(e));
    }
    o["exact"] = std::move(exact);
    o["values"] = function_json(chi.fn);
    return JsonValue(std::move(o));
}

JsonValue descriptor_json(const FamilyDescriptor& d) {
    JsonValue::Object o;
    o["family"] = family_name(d.tag);
    switch (d.tag) {
        case FamilyTag::T36_1:
        case FamilyTag::T44_1:
            o["g"] = function_json(d.g);
            break;
        case FamilyTag::T36_2:
            o["f"] = function_json(d.f);
            o["k"] = json_complex(d.k);
            break;
        case FamilyTag::T44_2:
            o["f"] = function_json(d.f);
            break;
        case FamilyTag::T36_3:
            o["chi"] = exponential_json(d.chi);
            o["gamma"] = json_complex(d.gamma);
            o["b"] = json_complex(d.b);
            o["c"] = json_complex(d.c);
            break;
        case FamilyTag::T36_4:
            o["chi"] = exponential_json(d.chi);
            o["beta"] = json_complex(d.beta);
            o["b"] = json_complex(d.b);
            o["c"] = json_complex(d.c);
            break;
        case FamilyTag::T36_5:
            o["chi"] = exponential_json(d.chi);
            o["alpha"] = json_complex(d.alpha);
            o["delta"] = json_complex(d.delta);
            o["b"] = json_complex(d.b);
            o["c"] = json_complex(d.c);
            break;
        case FamilyTag::T36_6:
            o["chi"] = exponential_json(d.chi);
            o["phi"] = function_json(d.phi);
            o["gamma"] = json_complex(d.gamma);
            break;
        case FamilyTag::T36_7:
            o["chi"] = exponential_json(d.chi);
            o["phi"] = function_json(d.phi);
            o["alpha"] = json_complex(d.alpha);
            o["delta"] = json_complex(d.delta);
            o["c"] = json_complex(d.c);
            break;
        case FamilyTag::T36_8:
            o["chi"] = exponential_json(d.chi);
            o["phi"] = function_json(d.phi);
            o["c"] = json_complex(d.c);
            break;
        case FamilyTag::T44_3:
            o["chi"] = exponential_json(d.chi);
            o["delta"] = json_complex(d.delta);
            break;
        case FamilyTag::T44_4:
            o["chi"] = exponential_json(d.chi);
            o["chi2"] = exponential_json(d.chi2);
            o["alpha"] = json_complex(d.alpha);
            break;
        case FamilyTag::T44_5:
        case FamilyTag::T44_6:
            o["chi"] = exponential_json(d.chi);
            o["phi"] = function_json(d.phi);
            break;
    }
    return JsonValue(std::move(o));
}

void emit(const JsonValue& v) { std::cout << json_dump(v) << "\n"; }

struct CommonFiles {
    std::string semigroup, sigma, measure, f, g;
};

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"workbench for integral sine laws on finite semigroups"};
    app.require_subcommand(1);

    ToleranceProfile tol;
    app.add_option("--eps", tol.residual_eps, "absolute residual tolerance");
    app.add_option("--rank-eps", tol.rank_eps, "relative rank / pivot tolerance");

    CommonFiles files;
    std::string eq_name, suite_name = "all", dump_name;
    bool list_catalog = false;

    auto* check = app.add_subcommand("check", "verify an equation on explicit data");
    check->add_option("--eq", eq_name, "equation name")->required();
    check->add_option("--semigroup", files.semigroup)->required();
    check->add_option("--sigma", files.sigma)->required();
    check->add_option("--measure", files.measure);
    check->add_option("--f", files.f)->required();
    check->add_option("--g", files.g);

    auto* exps = app.add_subcommand("exponentials", "list the exponentials of a semigroup");
    exps->add_option("--semigroup", files.semigroup)->required();

    auto* classify = app.add_subcommand("classify", "classify a solution pair into a family");
    classify->add_option("--eq", eq_name, "kss or ksa")->required();
    classify->add_option("--semigroup", files.semigroup)->required();
    classify->add_option("--sigma", files.sigma)->required();
    classify->add_option("--measure", files.measure)->required();
    classify->add_option("--f", files.f)->required();
    classify->add_option("--g", files.g)->required();

    std::vector<int> support;
    std::vector<std::string> target_specs;
    auto* fit = app.add_subcommand("fit-measure", "fit measure weights to moment targets");
    fit->add_option("--semigroup", files.semigroup)->required();
    fit->add_option("--support", support, "support points")->required();
    fit->add_option("--target", target_specs, "constraint '<function file>:<re>:<im>'")
        ->required();

    auto* grid = app.add_subcommand("grid-search", "completeness probe over a coefficient grid");
    grid->add_option("--eq", eq_name, "kss or ksa")->required();
    grid->add_option("--semigroup", files.semigroup)->required();
    grid->add_option("--sigma", files.sigma)->required();
    grid->add_option("--measure", files.measure)->required();

    auto* verify = app.add_subcommand("verify", "run a verification suite");
    verify->add_option("--suite", suite_name, "all | t36 | t44 | prop31 | lemmas");

    auto* cat = app.add_subcommand("catalog", "inspect the built-in semigroup catalog");
    cat->add_flag("--list", list_catalog, "list entry names");
    cat->add_option("--dump", dump_name, "dump one entry");

    CLI11_PARSE(app, argc, argv);

    try {
        if (check->parsed()) {
            auto S = read_semigroup(files.semigroup);
            auto sigma = read_sigma(files.sigma, S);
            auto eq = equation_from_name(eq_name);
            std::optional<DiscreteMeasure> mu;
            if (!files.measure.empty()) mu = read_measure(files.measure, S);
            auto f = read_function(files.f, S);
            std::optional<CFunction> g;
            if (!files.g.empty()) g = read_function(files.g, S);
            auto rep = residual(S, sigma, mu ? &*mu : nullptr, eq, f, g ? &*g : nullptr, tol);
            JsonValue::Object o;
            o["command"] = "check";
            o["equation"] = equation_name(eq);
            o["max_residual"] = rep.max_residual;
            o["argmax"] = JsonValue::Array{rep.argmax_x, rep.argmax_y};
            o["pass"] = rep.verdict;
            emit(JsonValue(std::move(o)));
            return rep.verdict ? 0 : 1;
        }
        if (exps->parsed()) {
            auto S = read_semigroup(files.semigroup);
            JsonValue::Object o;
            o["command"] = "exponentials";
            JsonValue::Array a;
            for (const auto& chi : enumerate_exponentials(S)) a.push_back(exponential_json(chi));
            o["count"] = static_cast<int>(a.size());
            o["exponentials"] = std::move(a);
            emit(JsonValue(std::move(o)));
            return 0;
        }
        if (classify->parsed()) {
            if (eq_name != "kss" && eq_name != "ksa")
                throw std::invalid_argument("classify handles eq kss or ksa");
            auto S = read_semigroup(files.semigroup);
            auto sigma = read_sigma(files.sigma, S);
            auto mu = read_measure(files.measure, S);
            auto f = read_function(files.f, S);
            auto g = read_function(files.g, S);
            auto cls = eq_name == "kss" ? classify_t36(S, sigma, mu, f, g, tol)
                                        : classify_t44(S, sigma, mu, f, g, tol);
            JsonValue::Object o;
            o["command"] = "classify";
            o["descriptor"] = descriptor_json(cls.descriptor);
            JsonValue::Array steps;
            for (const auto& s : cls.trace.steps) steps.push_back(s);
            o["steps"] = std::move(steps);
            o["pass"] = true;
            emit(JsonValue(std::move(o)));
            return 0;
        }
        if (fit->parsed()) {
            auto S = read_semigroup(files.semigroup);
            std::vector<FitConstraint> constraints;
            for (const auto& spec : target_specs) {
                auto p1 = spec.find(':');
                auto p2 = spec.rfind(':');
                if (p1 == std::string::npos || p2 == p1)
                    throw std::invalid_argument("target must be '<file>:<re>:<im>'");
                FitConstraint c;
                c.h = read_function(spec.substr(0, p1), S);
                c.target = cplx(std::stod(spec.substr(p1 + 1, p2 - p1 - 1)),
                                std::stod(spec.substr(p2 + 1)));
                constraints.push_back(std::move(c));
            }
            auto mu = fit_measure(S, constraints, support, tol);
            JsonValue::Object o;
            o["command"] = "fit-measure";
            o["pass"] = mu.has_value();
            if (mu) {
                JsonValue::Array atoms;
                for (const auto& a : mu->atoms) {
                    JsonValue::Object atom;
                    atom["point"] = a.point;
                    atom["weight"] = json_complex(a.weight);
                    atoms.push_back(std::move(atom));
                }
                o["atoms"] = std::move(atoms);
            } else {
                o["detail"] = "targets unreachable on the given support";
            }
            emit(JsonValue(std::move(o)));
            return mu ? 0 : 1;
        }
        if (grid->parsed()) {
            if (eq_name != "kss" && eq_name != "ksa")
                throw std::invalid_argument("grid-search handles eq kss or ksa");
            auto S = read_semigroup(files.semigroup);
            auto sigma = read_sigma(files.sigma, S);
            auto mu = read_measure(files.measure, S);
            auto eq = eq_name == "kss" ? EquationId::KSSub : EquationId::KSAdd;
            auto hits = grid_completeness_search(S, sigma, mu, eq,
                                                 default_coefficient_grid(), tol);
            JsonValue::Object o;
            o["command"] = "grid-search";
            o["hit_count"] = static_cast<int>(hits.size());
            JsonValue::Array a;
            for (const auto& h : hits) {
                JsonValue::Object hit;
                hit["f"] = function_json(h.f);
                hit["g"] = function_json(h.g);
                hit["descriptor"] = descriptor_json(h.descriptor);
                a.push_back(std::move(hit));
            }
            o["hits"] = std::move(a);
            o["pass"] = true;
            emit(JsonValue(std::move(o)));
            return 0;
        }
        if (verify->parsed()) {
            auto rep = run_verification_suite({suite_name, tol});
            emit(report_to_json(rep));
            return rep.exit_status;
        }
        if (cat->parsed()) {
            if (list_catalog == !dump_name.empty())
                throw std::invalid_argument("catalog needs exactly one of --list or --dump");
            JsonValue::Object o;
            o["command"] = "catalog";
            if (list_catalog) {
                JsonValue::Array names;
                for (const auto& n : catalog_names()) names.push_back(n);
                o["names"] = std::move(names);
            } else {
                auto e = catalog(dump_name);
                o["name"] = e.name;
                o["notes"] = e.notes;
                o["n"] = e.semigroup.n;
                JsonValue::Array table;
                for (const auto& row : e.semigroup.table) {
                    JsonValue::Array r;
                    for (int v : row) r.push_back(v);
                    table.push_back(std::move(r));
                }
                o["table"] = std::move(table);
                if (e.semigroup.identity) o["identity"] = *e.semigroup.identity;
                JsonValue::Array invs;
                for (const auto& s : e.involutions) {
                    JsonValue::Array p;
                    for (int v : s.perm) p.push_back(v);
                    invs.push_back(std::move(p));
                }
                o["involutions"] = std::move(invs);
            }
            emit(JsonValue(std::move(o)));
            return 0;
        }
    } catch (const std::exception& e) {
        std::fprintf(stderr, "error: %s\n", e.what());
        return 2;
    }
    return 2;
}

#include "doctest.h"
#include "ksl/catalog.hpp"
#include "ksl/gridsearch.hpp"

using namespace ksl;

TEST_CASE("Z2 subtraction admits only dependent or zero families") {
    // With sigma = id, x = y forces f(x^2 * t) integrals to vanish and the
    // antisymmetric right side kills every independent candidate.
    auto S = cyclic_group(2);
    auto hits = grid_completeness_search(S, identity_involution(2),
                                         DiscreteMeasure::point_mass(0), EquationId::KSSub);
    CHECK_FALSE(hits.empty());
    for (const auto& h : hits) {
        bool dependent_or_zero =
            h.descriptor.tag == FamilyTag::T36_1 || h.descriptor.tag == FamilyTag::T36_2;
        CHECK(dependent_or_zero);
    }
}

TEST_CASE("Z3 with negation classifies into the two-character families only") {
    // No sigma-fixed character other than 1 exists and 1 admits no
    // antisymmetric phi, so the phi-based families cannot appear.
    auto S = cyclic_group(3);
    auto hits = grid_completeness_search(S, negation_involution(3),
                                         DiscreteMeasure::point_mass(0), EquationId::KSSub);
    CHECK_FALSE(hits.empty());
    bool saw_independent = false;
    for (const auto& h : hits) {
        bool expected = h.descriptor.tag == FamilyTag::T36_1 ||
                        h.descriptor.tag == FamilyTag::T36_2 ||
                        h.descriptor.tag == FamilyTag::T36_4;
        CAPTURE(family_name(h.descriptor.tag));
        CHECK(expected);
        if (h.descriptor.tag == FamilyTag::T36_4) saw_independent = true;
    }
    CHECK(saw_independent);
}

TEST_CASE("Z2 addition search finds the two-character instance") {
    auto S = cyclic_group(2);
    auto hits = grid_completeness_search(S, identity_involution(2),
                                         DiscreteMeasure::point_mass(0), EquationId::KSAdd);
    bool found = false;
    for (const auto& h : hits) {
        if (h.descriptor.tag != FamilyTag::T44_4) continue;
        if (std::abs(h.f(0)) < 1e-12 && std::abs(h.g(1)) < 1e-12 && std::abs(h.f(1)) > 0.5 &&
            std::abs(h.g(0) - 1.0) < 1e-9)
            found = true;
    }
    CHECK(found);
}

TEST_CASE("Trunc4 addition search classifies every hit") {
    auto S = truncated_addition(4);
    auto hits = grid_completeness_search(S, identity_involution(4),
                                         DiscreteMeasure::point_mass(0), EquationId::KSAdd);
    CHECK_FALSE(hits.empty());
    for (const auto& h : hits) {
        auto report = validate_descriptor(S, identity_involution(4),
                                          DiscreteMeasure::point_mass(0), h.descriptor);
        CAPTURE(family_name(h.descriptor.tag));
        CHECK(report.pass());
    }
}

TEST_CASE("grid search rejects non-integral equations") {
    auto S = cyclic_group(2);
    CHECK_THROWS_AS(grid_completeness_search(S, identity_involution(2),
                                             DiscreteMeasure::point_mass(0),
                                             EquationId::SineSub),
                    std::invalid_argument);
}

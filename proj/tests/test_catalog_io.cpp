#include <sstream>

#include "doctest.h"
#include "ksl/catalog.hpp"
#include "ksl/io.hpp"
#include "ksl/suite.hpp"

using namespace ksl;

namespace {

bool has_involution(const CatalogEntry& e, const std::vector<int>& perm) {
    for (const auto& s : e.involutions)
        if (s.perm == perm) return true;
    return false;
}

}  // namespace

TEST_CASE("catalog entries validate on load") {
    for (const auto& name : catalog_names()) {
        auto e = catalog(name);
        CHECK(e.name == name);
        CHECK(verify_associativity(e.semigroup.table).empty());
        CHECK(e.involutions.size() == enumerate_involutions(e.semigroup).size());
        for (const auto& s : e.involutions)
            CHECK(is_involutive_automorphism(e.semigroup, s.perm));
        CHECK_FALSE(e.notes.empty());
    }
}

TEST_CASE("catalog contains the documented entries") {
    auto z3 = catalog("Z3");
    CHECK(z3.semigroup.n == 3);
    CHECK(z3.semigroup.identity == 0);
    CHECK(z3.involutions.size() == 2);
    CHECK(has_involution(z3, {0, 1, 2}));
    CHECK(has_involution(z3, {0, 2, 1}));  // negation

    auto t4 = catalog("Trunc4");
    CHECK(t4.semigroup.n == 4);
    CHECK(t4.semigroup.identity == 0);
    CHECK(t4.involutions.size() == 1);
    CHECK(has_involution(t4, {0, 1, 2, 3}));

    auto lz = catalog("LeftZero2");
    CHECK_FALSE(lz.semigroup.identity.has_value());
    CHECK(lz.involutions.size() == 2);
    CHECK(has_involution(lz, {1, 0}));  // any bijection preserves x*y = x

    auto sq = catalog("TruncSq4");
    CHECK(sq.semigroup.n == 16);
    bool found_swap = has_involution(sq, swap_involution(4).perm);
    CHECK(found_swap);
}

TEST_CASE("unknown catalog names are rejected") {
    CHECK_THROWS_AS(catalog("Z9"), UnknownName);
    CHECK_THROWS_AS(catalog("Banana"), UnknownName);
    CHECK_THROWS_AS(catalog("Trunc17"), UnknownName);
}

TEST_CASE("semigroup files round-trip") {
    auto S = cyclic_group(3);
    std::ostringstream out;
    write_semigroup(out, S);
    std::istringstream in(out.str());
    auto S2 = parse_semigroup(in);
    CHECK(S2.table == S.table);
    CHECK(S2.identity == S.identity);
}

TEST_CASE("semigroup parser accepts comments and checks the header") {
    std::istringstream in(
        "# truncated addition\n"
        "n 3\n"
        "0 1 2\n"
        "1 2 2  # saturates\n"
        "2 2 2\n"
        "identity 0\n");
    auto S = parse_semigroup(in);
    CHECK(S.n == 3);
    CHECK(S.mul(1, 2) == 2);
    CHECK(S.identity == 0);
}

TEST_CASE("semigroup parser rejects bad input") {
    std::istringstream missing("n 2\n0 1\n");
    CHECK_THROWS_AS(parse_semigroup(missing), ParseError);

    std::istringstream wrong_identity("n 2\n0 1\n1 0\nidentity 1\n");
    CHECK_THROWS_AS(parse_semigroup(wrong_identity), ParseError);

    std::istringstream not_assoc("n 2\n0 1\n0 0\n");  // (1*1)*1 = 1 but 1*(1*1) = 0
    CHECK_THROWS(parse_semigroup(not_assoc));
}

TEST_CASE("sigma files round-trip and validate") {
    auto S = cyclic_group(4);
    std::istringstream in("0 3 2 1\n");
    auto sigma = parse_sigma(in, S);
    CHECK(sigma(1) == 3);

    std::ostringstream out;
    write_sigma(out, sigma);
    std::istringstream in2(out.str());
    CHECK(parse_sigma(in2, S).perm == sigma.perm);

    std::istringstream not_auto("1 2 3 0\n");  // a 4-cycle is not an involution
    CHECK_THROWS_AS(parse_sigma(not_auto, S), ParseError);

    std::istringstream short_line("0 1 2\n");
    CHECK_THROWS_AS(parse_sigma(short_line, S), ParseError);
}

TEST_CASE("measure and function files parse") {
    auto S = cyclic_group(3);
    std::istringstream min(
        "# two atoms\n"
        "0 1.0 0.0\n"
        "2 -0.5 2.0\n");
    auto mu = parse_measure(min, S);
    REQUIRE(mu.atoms.size() == 2);
    CHECK(mu.atoms[1].point == 2);
    CHECK(mu.atoms[1].weight == cplx(-0.5, 2.0));

    std::istringstream bad_point("5 1.0 0.0\n");
    CHECK_THROWS_AS(parse_measure(bad_point, S), ParseError);

    std::istringstream fin("1 0\n0 -1\n0.25 0\n");
    auto f = parse_function(fin, S);
    CHECK(f(1) == cplx(0.0, -1.0));

    std::ostringstream fout;
    write_function(fout, f);
    std::istringstream fin2(fout.str());
    auto f2 = parse_function(fin2, S);
    for (int x = 0; x < 3; ++x) CHECK(f2(x) == f(x));

    std::istringstream too_short("1 0\n");
    CHECK_THROWS_AS(parse_function(too_short, S), ParseError);
}

TEST_CASE("json dumps are canonical") {
    JsonValue::Object o;
    o["b"] = true;
    o["a"] = JsonValue::Array{1.0, JsonValue(nullptr), "x\"y"};
    o["n"] = 0.1;
    CHECK(json_dump(JsonValue(o)) ==
          "{\"a\":[1,null,\"x\\\"y\"],\"b\":true,\"n\":0.10000000000000001}");
    CHECK(json_number(1e-9) == "1.0000000000000001e-09");
    CHECK(json_dump(json_complex(cplx(1.0, -2.0))) == "{\"im\":-2,\"re\":1}");
}

TEST_CASE("family sweep covers every family with at least 36 instances") {
    auto sweep = family_sweep();
    CHECK(sweep.size() >= 500);
    for (int t = 0; t < 14; ++t) {
        auto tag = static_cast<FamilyTag>(t);
        int count = 0;
        for (const auto& inst : sweep)
            if (inst.descriptor.tag == tag) ++count;
        CAPTURE(family_name(tag));
        CHECK(count >= 36);
    }
}

TEST_CASE("suite selection controls the report contents") {
    auto prop = run_verification_suite({"prop31", {}});
    CHECK_FALSE(prop.checks.empty());
    for (const auto& c : prop.checks) CHECK(c.suite == "prop31");
    CHECK(prop.exit_status == 0);

    CHECK_THROWS_AS(run_verification_suite({"bogus", {}}), std::invalid_argument);
}

TEST_CASE("verification reports are byte-identical across runs") {
    auto a = json_dump(report_to_json(run_verification_suite({"lemmas", {}})));
    auto b = json_dump(report_to_json(run_verification_suite({"lemmas", {}})));
    CHECK(a == b);
    CHECK(a.find("\"exit_status\":0") != std::string::npos);
}

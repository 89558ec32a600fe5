#include <algorithm>
#include <numeric>

#include "doctest.h"
#include "ksl/algebra.hpp"
#include "ksl/catalog.hpp"

using namespace ksl;

namespace {

// Independent oracle: plain triple loop.
std::vector<AssocViolation> assoc_oracle(const std::vector<std::vector<int>>& t) {
    std::vector<AssocViolation> v;
    int n = static_cast<int>(t.size());
    for (int x = 0; x < n; ++x)
        for (int y = 0; y < n; ++y)
            for (int z = 0; z < n; ++z)
                if (t[t[x][y]][z] != t[x][t[y][z]]) v.push_back({x, y, z});
    return v;
}

std::vector<std::vector<int>> brute_force_involutions(const FiniteSemigroup& S) {
    std::vector<int> perm(S.n);
    std::iota(perm.begin(), perm.end(), 0);
    std::vector<std::vector<int>> out;
    do {
        if (is_involutive_automorphism(S, perm)) out.push_back(perm);
    } while (std::next_permutation(perm.begin(), perm.end()));
    return out;
}

}  // namespace

TEST_CASE("associativity verification") {
    CHECK(verify_associativity(cyclic_group(3).table).empty());
    CHECK(verify_associativity(truncated_addition(4).table).empty());

    std::vector<std::vector<int>> bad = {{0, 0}, {1, 0}};
    auto v = verify_associativity(bad);
    CHECK(v == assoc_oracle(bad));
    CHECK(std::find(v.begin(), v.end(), AssocViolation{1, 1, 1}) != v.end());
    CHECK(std::is_sorted(v.begin(), v.end(), [](auto a, auto b) {
        return std::tie(a.x, a.y, a.z) < std::tie(b.x, b.y, b.z);
    }));

    std::vector<std::vector<int>> oob = {{0, 2}, {1, 0}};
    CHECK_THROWS_AS(verify_associativity(oob), OutOfRangeEntry);
}

TEST_CASE("identity detection") {
    CHECK(find_identity(cyclic_group(3)) == 0);
    CHECK(find_identity(truncated_addition(4)) == 0);
    CHECK_FALSE(find_identity(left_zero(2)).has_value());
    CHECK_FALSE(find_identity(null_semigroup(3)).has_value());
}

TEST_CASE("index and period") {
    auto z3 = cyclic_group(3);
    CHECK(index_period(z3, 1).index == 1);
    CHECK(index_period(z3, 1).period == 3);
    CHECK(index_period(z3, 0).period == 1);

    auto t4 = truncated_addition(4);
    CHECK(index_period(t4, 1).index == 3);
    CHECK(index_period(t4, 1).period == 1);

    auto lz = left_zero(2);
    for (int x = 0; x < 2; ++x) {
        CHECK(index_period(lz, x).index == 1);
        CHECK(index_period(lz, x).period == 1);
    }
}

TEST_CASE("index_period invariant x^(i+p) = x^i on catalog") {
    for (const auto& name : catalog_names()) {
        auto e = catalog(name);
        for (int x = 0; x < e.semigroup.n; ++x) {
            auto c = index_period(e.semigroup, x);
            // direct power iteration
            std::vector<int> pw = {x};
            for (int k = 1; k < c.index + c.period; ++k)
                pw.push_back(e.semigroup.mul(pw.back(), x));
            CHECK(pw.back() == pw[c.index - 1]);  // pw holds x^1 .. x^(i+p)
            // powers x^1 .. x^(i+p-1) pairwise distinct
            std::vector<int> sorted(pw.begin(), pw.end() - 1);
            std::sort(sorted.begin(), sorted.end());
            CHECK(std::adjacent_find(sorted.begin(), sorted.end()) == sorted.end());
        }
    }
}

TEST_CASE("involution enumeration on small semigroups") {
    auto z3 = cyclic_group(3);
    auto invs = enumerate_involutions(z3);
    REQUIRE(invs.size() == 2);
    CHECK(invs[0].perm == std::vector<int>{0, 1, 2});
    CHECK(invs[1].perm == std::vector<int>{0, 2, 1});  // x -> (3 - x) mod 3

    CHECK(enumerate_involutions(truncated_addition(4)).size() == 1);

    auto lz = enumerate_involutions(left_zero(2));
    REQUIRE(lz.size() == 2);
    CHECK(lz[1].perm == std::vector<int>{1, 0});
}

TEST_CASE("involution enumeration equals brute force for n <= 5") {
    for (const auto& name : {"Z2", "Z3", "Z4", "Z5", "LeftZero2", "LeftZero3", "Null2", "Null3",
                             "Trunc2", "Trunc3", "Trunc4", "TruncSq2"}) {
        auto e = catalog(name);
        if (e.semigroup.n > 5) continue;
        auto brute = brute_force_involutions(e.semigroup);
        REQUIRE(e.involutions.size() == brute.size());
        for (size_t i = 0; i < brute.size(); ++i) CHECK(e.involutions[i].perm == brute[i]);
    }
}

TEST_CASE("backtracking enumeration matches scan and contains swap on products") {
    auto sq = catalog("TruncSq4");  // 16 elements, exercises the pruning path
    auto sw = swap_involution(4);
    bool has_swap = false, has_id = false;
    for (const auto& inv : sq.involutions) {
        CHECK(is_involutive_automorphism(sq.semigroup, inv.perm));
        has_swap = has_swap || inv.perm == sw.perm;
        has_id = has_id || inv.perm == identity_involution(16).perm;
    }
    CHECK(has_swap);
    CHECK(has_id);
    CHECK(std::is_sorted(sq.involutions.begin(), sq.involutions.end(),
                         [](const auto& a, const auto& b) { return a.perm < b.perm; }));

    // cross-check the pruning path against the plain scan on a small product
    auto sq2 = catalog("TruncSq2");
    auto brute = brute_force_involutions(sq2.semigroup);
    REQUIRE(sq2.involutions.size() == brute.size());
}

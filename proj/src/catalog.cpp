#include "ksl/catalog.hpp"

#include <numeric>

namespace ksl {

FiniteSemigroup cyclic_group(int n) {
    std::vector<std::vector<int>> t(n, std::vector<int>(n));
    for (int x = 0; x < n; ++x)
        for (int y = 0; y < n; ++y) t[x][y] = (x + y) % n;
    return make_semigroup(std::move(t));
}

FiniteSemigroup left_zero(int n) {
    std::vector<std::vector<int>> t(n, std::vector<int>(n));
    for (int x = 0; x < n; ++x)
        for (int y = 0; y < n; ++y) t[x][y] = x;
    return make_semigroup(std::move(t));
}

FiniteSemigroup null_semigroup(int n) {
    std::vector<std::vector<int>> t(n, std::vector<int>(n, 0));
    return make_semigroup(std::move(t));
}

FiniteSemigroup truncated_addition(int n) {
    std::vector<std::vector<int>> t(n, std::vector<int>(n));
    for (int x = 0; x < n; ++x)
        for (int y = 0; y < n; ++y) t[x][y] = std::min(x + y, n - 1);
    return make_semigroup(std::move(t));
}

int pair_index(const FiniteSemigroup& b, int x, int y) { return x * b.n + y; }

FiniteSemigroup direct_product(const FiniteSemigroup& a, const FiniteSemigroup& b) {
    const int n = a.n * b.n;
    std::vector<std::vector<int>> t(n, std::vector<int>(n));
    for (int x1 = 0; x1 < a.n; ++x1)
        for (int y1 = 0; y1 < b.n; ++y1)
            for (int x2 = 0; x2 < a.n; ++x2)
                for (int y2 = 0; y2 < b.n; ++y2)
                    t[x1 * b.n + y1][x2 * b.n + y2] =
                        a.table[x1][x2] * b.n + b.table[y1][y2];
    return make_semigroup(std::move(t));
}

InvolutiveAutomorphism swap_involution(int n) {
    InvolutiveAutomorphism s;
    s.perm.resize(n * n);
    for (int x = 0; x < n; ++x)
        for (int y = 0; y < n; ++y) s.perm[x * n + y] = y * n + x;
    return s;
}

InvolutiveAutomorphism negation_involution(int n) {
    InvolutiveAutomorphism s;
    s.perm.resize(n);
    for (int x = 0; x < n; ++x) s.perm[x] = (n - x) % n;
    return s;
}

InvolutiveAutomorphism identity_involution(int n) {
    InvolutiveAutomorphism s;
    s.perm.resize(n);
    std::iota(s.perm.begin(), s.perm.end(), 0);
    return s;
}

std::vector<std::string> catalog_names() {
    std::vector<std::string> names;
    for (int n = 1; n <= 6; ++n) names.push_back("Z" + std::to_string(n));
    for (int n = 2; n <= 3; ++n) names.push_back("LeftZero" + std::to_string(n));
    for (int n = 2; n <= 3; ++n) names.push_back("Null" + std::to_string(n));
    for (int n = 2; n <= 4; ++n) names.push_back("Trunc" + std::to_string(n));
    for (int n = 2; n <= 4; ++n) names.push_back("TruncSq" + std::to_string(n));
    return names;
}

CatalogEntry catalog(const std::string& name) {
    CatalogEntry e;
    e.name = name;
    auto num = [&](size_t prefix_len) { return std::stoi(name.substr(prefix_len)); };
    if (name.rfind("TruncSq", 0) == 0 && name.size() == 8) {
        int n = num(7);
        if (n < 2 || n > 4) throw UnknownName(name);
        e.semigroup = direct_product(truncated_addition(n), truncated_addition(n));
        e.notes = "Trunc" + std::to_string(n) + " x Trunc" + std::to_string(n) +
                  " with the coordinate swap involution";
    } else if (name.rfind("Trunc", 0) == 0 && name.size() == 6) {
        int n = num(5);
        if (n < 2 || n > 4) throw UnknownName(name);
        e.semigroup = truncated_addition(n);
        e.notes = "truncated addition min(x+y, " + std::to_string(n - 1) + ")";
    } else if (name.rfind("LeftZero", 0) == 0 && name.size() == 9) {
        int n = num(8);
        if (n < 2 || n > 3) throw UnknownName(name);
        e.semigroup = left_zero(n);
        e.notes = "left-zero semigroup x*y = x";
    } else if (name.rfind("Null", 0) == 0 && name.size() == 5) {
        int n = num(4);
        if (n < 2 || n > 3) throw UnknownName(name);
        e.semigroup = null_semigroup(n);
        e.notes = "null semigroup x*y = 0";
    } else if (name.rfind("Z", 0) == 0 && name.size() == 2) {
        int n = num(1);
        if (n < 1 || n > 6) throw UnknownName(name);
        e.semigroup = cyclic_group(n);
        e.notes = "cyclic group of order " + std::to_string(n);
    } else {
        throw UnknownName(name);
    }
    e.involutions = enumerate_involutions(e.semigroup);
    return e;
}

}  // namespace ksl

#include "ksl/algebra.hpp"

#include <algorithm>
#include <functional>
#include <numeric>

namespace ksl {

std::vector<AssocViolation> verify_associativity(const std::vector<std::vector<int>>& table) {
    const int n = static_cast<int>(table.size());
    for (int x = 0; x < n; ++x) {
        if (static_cast<int>(table[x].size()) != n)
            throw OutOfRangeEntry(x, static_cast<int>(table[x].size()));
        for (int y = 0; y < n; ++y)
            if (table[x][y] < 0 || table[x][y] >= n) throw OutOfRangeEntry(x, y);
    }
    std::vector<AssocViolation> out;
    for (int x = 0; x < n; ++x)
        for (int y = 0; y < n; ++y)
            for (int z = 0; z < n; ++z)
                if (table[table[x][y]][z] != table[x][table[y][z]]) out.push_back({x, y, z});
    return out;  // triple loop emits lexicographic order already
}

std::optional<int> find_identity(const FiniteSemigroup& S) {
    for (int e = 0; e < S.n; ++e) {
        bool ok = true;
        for (int x = 0; x < S.n && ok; ++x)
            ok = S.table[e][x] == x && S.table[x][e] == x;
        if (ok) return e;
    }
    return std::nullopt;
}

ElementCycle index_period(const FiniteSemigroup& S, int x) {
    std::vector<int> seen_at(S.n, -1);
    int cur = x;
    int step = 1;  // cur = x^step
    while (seen_at[cur] < 0) {
        seen_at[cur] = step;
        cur = S.table[cur][x];
        ++step;
    }
    ElementCycle c;
    c.index = seen_at[cur];
    c.period = step - seen_at[cur];
    return c;
}

bool is_involutive_automorphism(const FiniteSemigroup& S, const std::vector<int>& perm) {
    const int n = S.n;
    if (static_cast<int>(perm.size()) != n) return false;
    std::vector<bool> hit(n, false);
    for (int x = 0; x < n; ++x) {
        if (perm[x] < 0 || perm[x] >= n || hit[perm[x]]) return false;
        hit[perm[x]] = true;
    }
    for (int x = 0; x < n; ++x)
        if (perm[perm[x]] != x) return false;
    for (int x = 0; x < n; ++x)
        for (int y = 0; y < n; ++y)
            if (perm[S.table[x][y]] != S.table[perm[x]][perm[y]]) return false;
    return true;
}

namespace {

// Backtracking over images, pairing x <-> perm[x] (involution) and pruning
// on every fully assigned product.
void search_involutions(const FiniteSemigroup& S, std::vector<int>& perm,
                        std::vector<InvolutiveAutomorphism>& out, int x) {
    const int n = S.n;
    while (x < n && perm[x] >= 0) ++x;
    if (x == n) {
        out.push_back({perm});
        return;
    }
    auto consistent = [&](int) {
        for (int a = 0; a < n; ++a) {
            if (perm[a] < 0) continue;
            for (int b = 0; b < n; ++b) {
                if (perm[b] < 0) continue;
                int p = S.table[a][b];
                if (perm[p] >= 0 && perm[p] != S.table[perm[a]][perm[b]]) return false;
            }
        }
        return true;
    };
    for (int img = 0; img < n; ++img) {
        if (img == x) {
            perm[x] = x;
            if (consistent(x)) search_involutions(S, perm, out, x + 1);
            perm[x] = -1;
        } else if (perm[img] < 0) {
            perm[x] = img;
            perm[img] = x;
            if (consistent(x)) search_involutions(S, perm, out, x + 1);
            perm[x] = perm[img] = -1;
        }
    }
}

}  // namespace

std::vector<InvolutiveAutomorphism> enumerate_involutions(const FiniteSemigroup& S) {
    std::vector<InvolutiveAutomorphism> out;
    if (S.n <= 7) {
        std::vector<int> perm(S.n);
        std::iota(perm.begin(), perm.end(), 0);
        do {
            if (is_involutive_automorphism(S, perm)) out.push_back({perm});
        } while (std::next_permutation(perm.begin(), perm.end()));
        return out;  // next_permutation yields lexicographic order
    }
    std::vector<int> perm(S.n, -1);
    search_involutions(S, perm, out, 0);
    std::sort(out.begin(), out.end(),
              [](const auto& a, const auto& b) { return a.perm < b.perm; });
    return out;
}

FiniteSemigroup make_semigroup(std::vector<std::vector<int>> table) {
    auto bad = verify_associativity(table);
    if (!bad.empty()) throw std::invalid_argument("table is not associative");
    FiniteSemigroup S;
    S.n = static_cast<int>(table.size());
    S.table = std::move(table);
    S.identity = find_identity(S);
    return S;
}

}  // namespace ksl

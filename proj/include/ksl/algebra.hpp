#pragma once

#include <optional>
#include <stdexcept>
#include <vector>

namespace ksl {

/// Cayley table of an associative binary operation on {0,...,n-1}.
struct FiniteSemigroup {
    int n = 0;
    std::vector<std::vector<int>> table;  // table[x][y] = x*y
    std::optional<int> identity;

    int mul(int x, int y) const { return table[x][y]; }
};

/// Self-inverse structure-preserving permutation sigma.
struct InvolutiveAutomorphism {
    std::vector<int> perm;

    int operator()(int x) const { return perm[x]; }
};

/// Minimal (index, period) with x^(index+period) = x^index.
struct ElementCycle {
    int index = 1;
    int period = 1;
};

struct AssocViolation {
    int x, y, z;
    bool operator==(const AssocViolation&) const = default;
};

struct OutOfRangeEntry : std::runtime_error {
    int x, y;
    OutOfRangeEntry(int x_, int y_)
        : std::runtime_error("table entry out of range at (" + std::to_string(x_) + "," +
                             std::to_string(y_) + ")"),
          x(x_), y(y_) {}
};

/// Empty result means the table is associative. Violating triples are
/// reported exhaustively, sorted lexicographically.
std::vector<AssocViolation> verify_associativity(const std::vector<std::vector<int>>& table);

/// The unique two-sided identity, if one exists.
std::optional<int> find_identity(const FiniteSemigroup& S);

ElementCycle index_period(const FiniteSemigroup& S, int x);

/// True iff perm satisfies all three InvolutiveAutomorphism invariants on S.
bool is_involutive_automorphism(const FiniteSemigroup& S, const std::vector<int>& perm);

/// All involutive automorphisms of S in lexicographic order of perm.
/// Plain permutation scan for n <= 7, backtracking with partial-product
/// pruning above that.
std::vector<InvolutiveAutomorphism> enumerate_involutions(const FiniteSemigroup& S);

/// Builds a semigroup from a table, checking associativity and locating
/// the identity. Throws std::invalid_argument on a non-associative table.
FiniteSemigroup make_semigroup(std::vector<std::vector<int>> table);

}  // namespace ksl

#pragma once

#include <string>
#include <vector>

#include "ksl/algebra.hpp"

namespace ksl {

struct CatalogEntry {
    std::string name;
    FiniteSemigroup semigroup;
    std::vector<InvolutiveAutomorphism> involutions;
    std::string notes;
};

struct UnknownName : std::runtime_error {
    explicit UnknownName(const std::string& n) : std::runtime_error("unknown catalog name: " + n) {}
};

// Table builders.
FiniteSemigroup cyclic_group(int n);                       // Z_n, addition mod n
FiniteSemigroup left_zero(int n);                          // x*y = x
FiniteSemigroup null_semigroup(int n);                     // x*y = 0 (absorbing)
FiniteSemigroup truncated_addition(int n);                 // {0..n-1}, min(x+y, n-1)
FiniteSemigroup direct_product(const FiniteSemigroup& a, const FiniteSemigroup& b);

/// Pair index (x, y) -> x * b.n + y in direct products.
int pair_index(const FiniteSemigroup& b, int x, int y);

/// The coordinate-swap involution of S x S.
InvolutiveAutomorphism swap_involution(int n);

/// Negation x -> (n - x) mod n on Z_n.
InvolutiveAutomorphism negation_involution(int n);

InvolutiveAutomorphism identity_involution(int n);

std::vector<std::string> catalog_names();
CatalogEntry catalog(const std::string& name);

}  // namespace ksl

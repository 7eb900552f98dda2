#pragma once

#include <string>
#include <vector>

#include "simplicial/homology.hpp"

namespace simplicial {

/// Normalized cochain with values in Z (modulus 0) or Z/modulus, one value
/// per non-degenerate generator of its degree.
struct Cochain {
    int degree = 0;
    Integer modulus = 0;
    std::vector<Integer> values;
};

bool is_cocycle(const SimplicialSet& k, const Cochain& a);
/// The constant 0-cochain 1.
Cochain unit_cochain(const SimplicialSet& k, const Integer& modulus = 0);

/// (a u b)(sigma) = a(front_p sigma) b(back_q sigma). Throws
/// std::invalid_argument for non-cocycles or mismatched coefficients.
Cochain cup_product(const SimplicialSet& k, const Cochain& a, const Cochain& b);

struct CupEntry {
    int p = 0, q = 0;
    std::size_t i = 0, j = 0;
    /// Class of x_i u y_j in H^{p+q}, in that group's coordinates.
    std::vector<Integer> product;
};

/**
 * Products of the chosen generators of H^*(K; Z/m) in degrees through up_to,
 * with graded commutativity and associativity checked on classes.
 */
struct CupTable {
    Integer modulus = 0;
    std::vector<AbelianGroup> groups;
    std::vector<CupEntry> entries;
    bool graded_commutative = true;
    bool associative = true;

    const CupEntry& at(int p, std::size_t i, int q, std::size_t j) const;
    std::string to_text() const;
};

CupTable cohomology_ring_table(const SimplicialSet& k, const Integer& modulus = 0, int up_to = -1);

}  // namespace simplicial

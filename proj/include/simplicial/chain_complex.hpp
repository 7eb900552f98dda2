#pragma once

#include <set>
#include <string>
#include <vector>

#include "simplicial/integer_matrix.hpp"
#include "simplicial/simplicial_set.hpp"

namespace simplicial {

/**
 * Bounded chain complex of free abelian groups. boundary[n] is the matrix of
 * d_n : C_n -> C_{n-1} (rows index C_{n-1}); boundary[0] has zero rows.
 * Degrees above max_degree() are zero.
 */
struct ChainComplex {
    std::vector<std::vector<std::string>> basis;
    std::vector<IntegerMatrix> boundary;

    int max_degree() const { return static_cast<int>(basis.size()) - 1; }
    std::size_t rank(int n) const;
    /// d_n as a rank(n-1) x rank(n) matrix, zero-sized outside the range.
    IntegerMatrix differential(int n) const;
    /// d_{n-1} d_n == 0 for every n, exactly.
    bool is_complex() const;
    /// Appends a degree with the given basis and boundary.
    void push_degree(std::vector<std::string> labels, IntegerMatrix d);
};

/// Degreewise matrices; degree[n] maps C_n -> D_{n + shift}.
struct ChainMap {
    std::vector<IntegerMatrix> degree;

    /// Matrix in degree n with the given shape (zero when not stored).
    IntegerMatrix at(int n, std::size_t rows, std::size_t cols) const;
};

/// f d_C == d_D f in degrees 0..up_to.
bool is_chain_map(const ChainMap& f, const ChainComplex& source, const ChainComplex& target, int up_to);
ChainMap compose(const ChainMap& second, const ChainMap& first, const ChainComplex& source, const ChainComplex& middle,
                 const ChainComplex& target);
ChainMap identity_chain_map(const ChainComplex& c);

/// Normalized chains: basis the non-degenerate generators, degenerate faces
/// dropped from d = sum (-1)^i d_i.
ChainComplex normalized_chains(const SimplicialSet& k);
/// All simplices (degenerate ones included) through degree up_to; a negative
/// up_to means top_dim + 1.
ChainComplex unnormalized_chains(const SimplicialSet& k, int up_to = -1);
/// Relative normalized chains C(K)/C(L) on the generators outside sub.
ChainComplex relative_chains(const SimplicialSet& k, const std::set<GeneratorId>& sub);

/// f#(sigma) = f(sigma) when non-degenerate, else 0.
ChainMap induced_chain_map(const SimplicialMap& f);

ChainComplex direct_sum(const ChainComplex& a, const ChainComplex& b);

long euler_characteristic(const SimplicialSet& k);
long euler_characteristic(const ChainComplex& c);

}  // namespace simplicial

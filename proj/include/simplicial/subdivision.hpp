#pragma once

#include "simplicial/chain_complex.hpp"
#include "simplicial/ordered_complex.hpp"

namespace simplicial {

/**
 * Barycentric subdivision of an ordered complex. Sd L has one vertex b_F per
 * face F of L, ordered by decreasing face size and then lexicographically, and
 * one face per flag of faces. The chain map sd : N(L) -> N(Sd L) is given by
 * the cone formula sd(F) = b_F * sd(dF), sd(v) = b_v.
 */
struct Subdivision {
    OrderedSimplicialComplex complex;
    ChainMap sd;
    bool chain_map = false;
    /// Mapping cone of sd acyclic through dim L + 1.
    bool quasi_isomorphism = false;
};

Subdivision barycentric_subdivide(const OrderedSimplicialComplex& l);

}  // namespace simplicial

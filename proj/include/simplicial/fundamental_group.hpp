#pragma once

#include <string>
#include <vector>

#include "simplicial/abelian_group.hpp"
#include "simplicial/finite_group.hpp"
#include "simplicial/simplicial_set.hpp"

namespace simplicial {

struct Components {
    /// Component index of every vertex, numbered by smallest vertex.
    std::vector<int> component;
    /// Smallest vertex of each component.
    std::vector<int> representatives;

    std::size_t count() const { return representatives.size(); }
};

Components pi0(const SimplicialSet& k);

/// Word in a free group; letter g + 1 stands for generator g, -(g + 1) for its inverse.
using Word = std::vector<int>;

Word free_reduce(const Word& w);
Word inverse(const Word& w);

struct GroupPresentation {
    std::vector<std::string> generators;
    std::vector<Word> relators;

    std::string word_to_string(const Word& w) const;
    /// <g1, ..., gm | r1, ..., rk>
    std::string to_string() const;
};

/**
 * Edge-path presentation of pi_1(K, base). The spanning tree is grown
 * breadth-first from the base vertex, scanning edges in id order; every
 * other non-degenerate edge is a generator e<id>, and each non-degenerate
 * 2-simplex contributes word(d_2) word(d_0) word(d_1)^-1. Relators that
 * reduce to the empty word are dropped.
 */
struct EdgePathPresentation {
    GroupPresentation presentation;
    int base = 0;
    /// Generator index of every edge, -1 for tree edges.
    std::vector<int> edge_generator;
    std::vector<bool> tree_edge;
};

/// Throws std::invalid_argument for a disconnected K or a missing base vertex.
EdgePathPresentation pi1_presentation(const SimplicialSet& k, int base = 0);

/// Z^generators modulo the exponent-sum rows of the relators.
AbelianGroup abelianization(const GroupPresentation& p);

struct TietzeResult {
    GroupPresentation presentation;
    int steps = 0;
    bool budget_exhausted = false;
    /// Only a presentation without generators proves the group trivial.
    bool proven_trivial() const { return presentation.generators.empty(); }
};

/// Free and cyclic reduction, duplicate removal, and elimination of
/// generators occurring exactly once in some relator, within a step budget.
TietzeResult tietze_simplify(const GroupPresentation& p, int budget = 1000);

/// Value of a word under generator images in a finite group.
int evaluate(const Word& w, const std::vector<int>& images, const FiniteGroup& g);

}  // namespace simplicial

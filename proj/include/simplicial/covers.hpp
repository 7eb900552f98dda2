#pragma once

#include <optional>
#include <string>
#include <vector>

#include "simplicial/finite_group.hpp"
#include "simplicial/fundamental_group.hpp"
#include "simplicial/kan.hpp"

namespace simplicial {

/**
 * Group labels on the non-degenerate edges of K; degenerate edges carry the
 * identity. The cocycle condition reads label(d_1 s) = label(d_2 s) label(d_0 s)
 * for every non-degenerate 2-simplex s.
 */
struct CoverLabeling {
    SetPtr base;
    FiniteGroup group;
    std::vector<int> labels;

    int label(const SimplexRef& edge) const;
    /// Empty when the cocycle condition holds, else the first offending 2-simplex.
    std::string cocycle_violation() const;
};

/// First generator images (lexicographic) killing every relator, optionally
/// requiring the images to generate G; the trivial map is skipped.
std::optional<std::vector<int>> find_homomorphism(const GroupPresentation& p, const FiniteGroup& g, bool surjective);

/// Tree edges get the identity and generator e gets images[e]. Throws
/// std::invalid_argument naming the first relator not sent to the identity.
CoverLabeling labeling_from_hom(const SetPtr& k, const EdgePathPresentation& p, const std::vector<int>& images,
                                const FiniteGroup& g);

struct Cover {
    SetPtr set;
    SimplicialMap projection;
};

/**
 * Generators (s, g) for every generator s of K and g in G, with id
 * s.id * |G| + g. Faces: d_i (s, g) = (d_i s, g) for i >= 1 and
 * d_0 (s, g) = (d_0 s, g label(front edge of s)).
 */
Cover build_cover(const CoverLabeling& lab);

struct CoveringReport {
    bool fibers_ok = true;
    std::vector<std::string> fiber_failures;
    /// Relative lifting problems through the given dimension with exactly one lift.
    LiftingReport lifting;
    long euler_cover = 0, euler_base = 0;
    std::size_t group_order = 0;

    bool euler_ok() const { return euler_cover == static_cast<long>(group_order) * euler_base; }
    bool ok() const { return fibers_ok && lifting.ok() && euler_ok(); }
    std::string to_text() const;
};

/// Constant fiber cardinality, unique relative horn lifting, and Euler
/// characteristic multiplicativity for p : E -> B with fiber size group_order.
CoveringReport verify_covering(const SimplicialMap& p, std::size_t group_order, int up_to = 2);

}  // namespace simplicial

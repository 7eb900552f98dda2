#pragma once

#include <set>
#include <string>
#include <vector>

#include "simplicial/homology.hpp"
#include "simplicial/simplicial_set.hpp"

namespace simplicial {

/**
 * Short exact sequence 0 -> A -i-> B -j-> C -> 0 of chain complexes with a
 * degreewise splitting: lift s (j s = id) and retraction r (r i = id). The
 * splitting is what makes the connecting map constructive: lift a cycle of C,
 * take its boundary in B, pull back along i.
 */
struct ShortExactSequence {
    ChainComplex sub, total, quotient;
    ChainMap inclusion, projection;
    std::vector<IntegerMatrix> lift, retraction;
    std::string sub_name, total_name, quotient_name;

    /// Chain maps, j i = 0, r i = id, j s = id, ranks add up.
    bool is_valid(int up_to) const;
};

struct SequenceNode {
    std::string label;
    AbelianGroup group;
};

/// A long exact sequence read left to right; maps[i] : nodes[i] -> nodes[i+1].
/// exact[i] records exactness at nodes[i], including the two ends.
struct ExactSequenceReport {
    std::vector<SequenceNode> nodes;
    std::vector<GroupHom> maps;
    std::vector<bool> exact;
    /// Connecting maps H_p(quotient) -> H_{p-1}(sub), indexed by p (entry 0 unused).
    std::vector<GroupHom> connecting;

    bool all_exact() const;
    std::string to_text() const;
};

/// The long exact homology sequence from H_up_to(sub) down to H_0(quotient).
/// Exactness at the left end uses the connecting map out of H_{up_to+1}.
ExactSequenceReport long_exact_sequence(const ShortExactSequence& ses, int up_to);

/// 0 -> C(L) -> C(K) -> C(K,L) -> 0 for a face-closed generator set L.
ShortExactSequence pair_sequence(const SimplicialSet& k, const std::set<GeneratorId>& sub);
ExactSequenceReport pair_les(const SimplicialSet& k, const std::set<GeneratorId>& sub, int up_to);

/// 0 -> C(A n B) -> C(A) + C(B) -> C(K) -> 0, requiring A u B = K on generators.
ShortExactSequence mayer_vietoris_sequence(const SimplicialSet& k, const std::set<GeneratorId>& a, const std::set<GeneratorId>& b);
ExactSequenceReport mayer_vietoris(const SimplicialSet& k, const std::set<GeneratorId>& a, const std::set<GeneratorId>& b, int up_to);

}  // namespace simplicial

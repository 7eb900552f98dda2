#pragma once

#include <string>
#include <vector>

#include "simplicial/integer_matrix.hpp"
#include "simplicial/smith.hpp"

namespace simplicial {

/**
 * Finitely generated abelian group Z^betti + Z/d_1 + ... + Z/d_k in invariant
 * factor form: every d_i >= 2 and d_i | d_{i+1}.
 *
 * Chosen generators are ordered free summands first, then torsion summands
 * in divisor order; homomorphism matrices use that order.
 */
class AbelianGroup {
public:
    AbelianGroup() = default;
    /// Any list of cyclic orders (0 = infinite cyclic, 1 = trivial) is
    /// normalized to invariant factor form.
    static AbelianGroup from_cyclics(std::size_t free_rank, const std::vector<Integer>& orders);
    static AbelianGroup free(std::size_t rank) { return from_cyclics(rank, {}); }
    static AbelianGroup cyclic(const Integer& order) { return from_cyclics(0, {order}); }
    static AbelianGroup trivial() { return {}; }
    /// Parses "0", "Z", "Z^2", "Z/2", "Z^2+Z/4", "Z/2 + Z/6".
    static AbelianGroup parse(const std::string& text);

    std::size_t betti() const { return betti_; }
    const std::vector<Integer>& torsion() const { return torsion_; }
    std::size_t generator_count() const { return betti_ + torsion_.size(); }
    bool is_trivial() const { return betti_ == 0 && torsion_.empty(); }
    /// Order of generator i (0 for the free ones).
    Integer generator_order(std::size_t i) const;
    /// Relation lattice: one column d_i * e_i per torsion generator.
    IntegerMatrix relations() const;
    /// Reduces a coordinate vector modulo the torsion orders.
    std::vector<Integer> normalize(std::vector<Integer> coords) const;

    std::string to_string() const;

    friend bool operator==(const AbelianGroup&, const AbelianGroup&) = default;

private:
    std::size_t betti_ = 0;
    std::vector<Integer> torsion_;
};

AbelianGroup direct_sum(const AbelianGroup& a, const AbelianGroup& b);
AbelianGroup tensor(const AbelianGroup& a, const AbelianGroup& b);
AbelianGroup tor(const AbelianGroup& a, const AbelianGroup& b);
AbelianGroup hom(const AbelianGroup& a, const AbelianGroup& b);
AbelianGroup ext(const AbelianGroup& a, const AbelianGroup& b);

/**
 * The group cycles / boundaries for lattices boundaries <= cycles <= Z^n, with
 * explicit generators and a class map. This is the single engine behind
 * homology, cohomology, coefficient groups and abelianizations.
 */
class Subquotient {
public:
    Subquotient(LatticeBasis cycles, const IntegerMatrix& boundary_generators);

    const AbelianGroup& group() const { return group_; }
    /// Representatives in Z^n, one column per group generator.
    const IntegerMatrix& representatives() const { return representatives_; }
    /// Coordinates of the class of v (v must lie in the cycle lattice).
    std::vector<Integer> class_of(const std::vector<Integer>& v) const;
    bool is_cycle(const std::vector<Integer>& v) const { return cycles_.coordinates(v).has_value(); }
    std::size_t ambient_dim() const { return cycles_.ambient_dim(); }

private:
    LatticeBasis cycles_;
    AbelianGroup group_;
    IntegerMatrix to_class_;   // (rank' + free) x r  (rows of U' kept)
    std::size_t unit_count_ = 0;
    IntegerMatrix representatives_;
};

/// Homomorphism between groups with chosen generators; column j is the image
/// of source generator j in target coordinates.
struct GroupHom {
    AbelianGroup source;
    AbelianGroup target;
    IntegerMatrix matrix;

    bool is_zero() const;
    bool is_isomorphism() const;
};

GroupHom compose(const GroupHom& second, const GroupHom& first);

/// im(in) == ker(out) inside in.target == out.source.
bool is_exact_at(const GroupHom& in, const GroupHom& out);

}  // namespace simplicial

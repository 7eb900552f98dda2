#pragma once

#include <string>
#include <vector>

#include "simplicial/abelian_group.hpp"
#include "simplicial/chain_complex.hpp"

namespace simplicial {

/**
 * (Co)homology of a chain complex in degrees 0..up_to, with explicit cycle
 * representatives and class maps per degree. A nonzero modulus m computes
 * with Z/m coefficients: cycles are taken mod m and m C_n joins the
 * boundaries.
 */
class GradedHomology {
public:
    static GradedHomology homology(const ChainComplex& c, int up_to, const Integer& modulus = 0);
    /// Cohomology of Hom(C, Z) (or Hom(C, Z/m)).
    static GradedHomology cohomology(const ChainComplex& c, int up_to, const Integer& modulus = 0);

    int up_to() const { return static_cast<int>(degrees_.size()) - 1; }
    const Integer& modulus() const { return modulus_; }
    const Subquotient& at(int n) const { return degrees_.at(static_cast<std::size_t>(n)); }
    const AbelianGroup& group(int n) const { return at(n).group(); }
    std::vector<AbelianGroup> groups() const;
    std::vector<Integer> class_of(int n, const std::vector<Integer>& cycle) const { return at(n).class_of(cycle); }

private:
    Integer modulus_ = 0;
    std::vector<Subquotient> degrees_;
};

/// Integral homology groups of a complex, degrees 0..up_to (default: top).
/// Throws std::logic_error when d d != 0.
std::vector<AbelianGroup> homology(const ChainComplex& c, int up_to = -1);
/// Reduced homology: one Z removed from degree 0 of a non-empty complex.
std::vector<AbelianGroup> reduced_homology(const ChainComplex& c, int up_to = -1);

/// Homology with coefficients in a finitely generated abelian group,
/// assembled cyclic summand by cyclic summand.
std::vector<AbelianGroup> homology_with_coefficients(const ChainComplex& c, const AbelianGroup& coefficients, int up_to = -1);
std::vector<AbelianGroup> cohomology_with_coefficients(const ChainComplex& c, const AbelianGroup& coefficients, int up_to = -1);

/// Both sides of the universal coefficient theorems in one degree.
struct UctRow {
    int degree = 0;
    AbelianGroup homology, tensor_plus_tor;
    AbelianGroup cohomology, hom_plus_ext;
    bool ok() const { return homology == tensor_plus_tor && cohomology == hom_plus_ext; }
};

struct UctReport {
    std::vector<UctRow> rows;
    bool ok() const;
    std::string to_text() const;
};

/// H_n(C; pi) against H_n(C) (x) pi + Tor(H_{n-1}(C), pi), and H^n(C; pi)
/// against Hom(H_n(C), pi) + Ext(H_{n-1}(C), pi).
UctReport uct_check(const ChainComplex& c, const AbelianGroup& coefficients, int up_to = -1);

/// Map induced on degree-n homology (source generators -> target coordinates).
GroupHom induced_map(const ChainMap& f, const GradedHomology& source, const GradedHomology& target, int n);

/// Augmentation H_0 -> Z sending each vertex to 1.
GroupHom augmentation(const GradedHomology& h);

}  // namespace simplicial

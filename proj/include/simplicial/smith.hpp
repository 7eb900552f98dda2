#pragma once

#include <optional>
#include <vector>

#include "simplicial/integer_matrix.hpp"

namespace simplicial {

/**
 * Smith normal form U * M * V = S with U, V unimodular and the diagonal of S
 * forming a divisibility chain d_0 | d_1 | ... | d_{rank-1}, all positive.
 *
 * The inverses of U and V are maintained alongside, so kernels, images and
 * coordinates with respect to them are available without a second reduction.
 * Pivot rule: the nonzero entry of least absolute value in the remaining
 * block.
 */
struct SmithForm {
    IntegerMatrix U, U_inv;
    IntegerMatrix S;
    IntegerMatrix V, V_inv;
    std::size_t rank = 0;

    const Integer& diagonal(std::size_t i) const { return S(i, i); }
    std::vector<Integer> invariant_factors() const;
};

enum class Transforms { Track, Skip };

SmithForm smith_normal_form(const IntegerMatrix& m, Transforms transforms = Transforms::Track);

/// Rank over the integers (equivalently the rationals) via the same reduction.
std::size_t integer_rank(const IntegerMatrix& m);

/// |det| = 1 check, by exact elimination.
bool is_unimodular(const IntegerMatrix& m);

/// Integer solution of A y = b, if one exists.
std::optional<std::vector<Integer>> solve_integer(const IntegerMatrix& a, const std::vector<Integer>& b);

/**
 * Membership oracle for the lattice spanned by the columns of a matrix. The
 * reduction is computed once; each query is a matrix-vector product.
 */
class LatticeMembership {
public:
    explicit LatticeMembership(const IntegerMatrix& generators);
    bool contains(const std::vector<Integer>& v) const;
    std::optional<std::vector<Integer>> solve(const std::vector<Integer>& v) const;
    std::size_t ambient_dim() const { return form_.U.rows(); }

private:
    SmithForm form_;
};

/// True when span(cols of a) == span(cols of b) inside the same ambient Z^n.
bool same_lattice(const IntegerMatrix& a, const IntegerMatrix& b);

/**
 * A Z-basis of a sublattice of Z^n together with a coordinate map: for v in
 * the lattice, coordinate i equals (coords * v)_i / divisor_i exactly.
 */
struct LatticeBasis {
    IntegerMatrix basis;   // n x r
    IntegerMatrix coords;  // r x n
    std::vector<Integer> divisors;

    std::size_t rank() const { return basis.cols(); }
    std::size_t ambient_dim() const { return basis.rows(); }
    /// Coordinates of v; std::nullopt when v is not in the lattice.
    std::optional<std::vector<Integer>> coordinates(const std::vector<Integer>& v) const;
};

LatticeBasis lattice_basis(const IntegerMatrix& generators);
LatticeBasis kernel_basis(const IntegerMatrix& m);
/// {x : m x == 0 (mod modulus)}; modulus 0 means the plain kernel.
LatticeBasis kernel_basis_mod(const IntegerMatrix& m, const Integer& modulus);

}  // namespace simplicial

#pragma once

#include <string>
#include <vector>

#include "simplicial/constructions.hpp"
#include "simplicial/homology.hpp"

namespace simplicial {

/// Degreewise maps D_n : C_n -> D_{n+1}.
struct ChainHomotopy {
    std::vector<IntegerMatrix> degree;

    IntegerMatrix at(int n, std::size_t rows, std::size_t cols) const;
};

/// d D + D d == g - f in degrees 0..up_to, entry by entry.
bool is_chain_homotopy(const ChainHomotopy& h, const ChainMap& f, const ChainMap& g, const ChainComplex& source,
                       const ChainComplex& target, int up_to);

/// The end inclusion K -> K x Delta[1] at vertex e of the interval.
SimplicialMap cylinder_end(const Product& cylinder, int e);

struct Prism {
    ChainHomotopy homotopy;
    ChainMap start, end;  // (H i_0)# and (H i_1)#
    bool identity_holds = false;
};

/**
 * Prism operator of H : K x Delta[1] -> L,
 * D(sigma) = sum_i (-1)^i H(s_i sigma, eta_i) with eta_i sending 0..i to 0.
 * Throws std::invalid_argument when the cylinder's right factor is not
 * Delta[1] or H does not start at the cylinder.
 */
Prism prism_homotopy(const Product& cylinder, const SimplicialMap& h);

struct HomotopyReport {
    bool identity_holds = false;
    /// Per degree, f_* == g_* on homology.
    std::vector<bool> equal_on_homology;
    bool ok() const;
};

/// Checks that H restricts to f and g at the ends (throws otherwise), the
/// prism identity, and f_* == g_* in degrees 0..top_dim(K).
HomotopyReport homotopic_maps_equal_on_homology(const SimplicialMap& f, const SimplicialMap& g, const Product& cylinder,
                                                const SimplicialMap& h);

/// cone_n = C_{n-1} + D_n with d(c, d) = (-dc, f c + dd).
ChainComplex mapping_cone(const ChainMap& f, const ChainComplex& source, const ChainComplex& target);
/// Every homology group of the cone vanishes through degree up_to.
bool is_quasi_isomorphism(const ChainMap& f, const ChainComplex& source, const ChainComplex& target, int up_to);

/**
 * C (x) D with basis a_i (x) b_j ordered by p, then i, then j, and
 * d(a (x) b) = da (x) b + (-1)^p a (x) db.
 */
struct TensorComplex {
    ChainComplex complex;
    std::vector<std::size_t> left_ranks, right_ranks;
    /// offset[n][p]: position of the block C_p (x) D_{n-p} inside degree n.
    std::vector<std::vector<std::size_t>> offset;

    std::size_t index(int p, std::size_t i, int q, std::size_t j) const;
};

TensorComplex tensor_product(const ChainComplex& c, const ChainComplex& d);

/// N(K x L) -> N(K) (x) N(L), sigma -> sum_i front_i(x) (x) back_{n-i}(y).
ChainMap alexander_whitney(const Product& product, const TensorComplex& tensor);
/// N(K) (x) N(L) -> N(K x L), signed sum over (p, q)-shuffles.
ChainMap shuffle_ez(const Product& product, const TensorComplex& tensor);

/// The chain EZ(x (x) y) of N(K x L) for chains x in degree p, y in degree q.
std::vector<Integer> cross_chain(const Product& product, const std::vector<Integer>& x, int p, const std::vector<Integer>& y,
                                 int q);

struct KunnethRow {
    int degree = 0;
    AbelianGroup direct, predicted;
    bool ok() const { return direct == predicted; }
};

struct KunnethReport {
    std::vector<KunnethRow> rows;
    /// Cross products of free generators are independent in H(K x L).
    bool cross_products_injective = true;
    bool ok() const;
    std::string to_text() const;
};

/// H_n(K x L) against sum H_p(K) (x) H_q(L) + sum Tor(H_p(K), H_q(L)).
KunnethReport kunneth_check(const SetPtr& k, const SetPtr& l, int up_to = -1);

}  // namespace simplicial

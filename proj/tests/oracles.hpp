#pragma once

// Independent reference computations for tests: plain Gaussian elimination
// over the rationals and over F_p, with no Smith normal form involved.

#include <boost/multiprecision/cpp_int.hpp>
#include <boost/rational.hpp>

#include <vector>

#include "simplicial/abelian_group.hpp"
#include "simplicial/chain_complex.hpp"

namespace oracle {

using simplicial::ChainComplex;
using simplicial::IntegerMatrix;
using Rational = boost::multiprecision::cpp_rational;

inline std::size_t rank_rational(const IntegerMatrix& m) {
    std::vector<std::vector<Rational>> a(m.rows(), std::vector<Rational>(m.cols()));
    for (std::size_t r = 0; r < m.rows(); ++r)
        for (std::size_t c = 0; c < m.cols(); ++c) a[r][c] = Rational(m(r, c));
    std::size_t rank = 0;
    for (std::size_t c = 0; c < m.cols() && rank < m.rows(); ++c) {
        std::size_t p = rank;
        while (p < m.rows() && a[p][c] == 0) ++p;
        if (p == m.rows()) continue;
        std::swap(a[p], a[rank]);
        for (std::size_t r = 0; r < m.rows(); ++r) {
            if (r == rank || a[r][c] == 0) continue;
            Rational f = a[r][c] / a[rank][c];
            for (std::size_t k = c; k < m.cols(); ++k) a[r][k] -= f * a[rank][k];
        }
        ++rank;
    }
    return rank;
}

inline std::size_t rank_mod(const IntegerMatrix& m, long p) {
    std::vector<std::vector<long>> a(m.rows(), std::vector<long>(m.cols()));
    for (std::size_t r = 0; r < m.rows(); ++r)
        for (std::size_t c = 0; c < m.cols(); ++c) {
            simplicial::Integer v = m(r, c) % p;
            if (v < 0) v += p;
            a[r][c] = static_cast<long>(v);
        }
    auto inverse = [p](long x) {
        long result = 1, e = p - 2;
        for (long b = x; e > 0; e >>= 1, b = b * b % p)
            if (e & 1) result = result * b % p;
        return result;
    };
    std::size_t rank = 0;
    for (std::size_t c = 0; c < m.cols() && rank < m.rows(); ++c) {
        std::size_t q = rank;
        while (q < m.rows() && a[q][c] == 0) ++q;
        if (q == m.rows()) continue;
        std::swap(a[q], a[rank]);
        long inv = inverse(a[rank][c]);
        for (std::size_t r = 0; r < m.rows(); ++r) {
            if (r == rank || a[r][c] == 0) continue;
            long f = a[r][c] * inv % p;
            for (std::size_t k = c; k < m.cols(); ++k) a[r][k] = ((a[r][k] - f * a[rank][k]) % p + p) % p;
        }
        ++rank;
    }
    return rank;
}

/// Betti numbers over Q, degrees 0..up_to.
inline std::vector<std::size_t> betti_rational(const ChainComplex& c, int up_to) {
    std::vector<std::size_t> out;
    for (int n = 0; n <= up_to; ++n)
        out.push_back(c.rank(n) - rank_rational(c.differential(n)) - rank_rational(c.differential(n + 1)));
    return out;
}

/// Dimensions of H_n(C; F_p), degrees 0..up_to.
inline std::vector<std::size_t> betti_mod(const ChainComplex& c, int up_to, long p) {
    std::vector<std::size_t> out;
    for (int n = 0; n <= up_to; ++n)
        out.push_back(c.rank(n) - rank_mod(c.differential(n), p) - rank_mod(c.differential(n + 1), p));
    return out;
}

/// What integral groups predict for H_n(-; F_p): betti plus the p-divisible
/// torsion of degrees n and n - 1.
inline std::vector<std::size_t> predicted_mod(const std::vector<simplicial::AbelianGroup>& h, long p) {
    auto p_torsion = [p](const simplicial::AbelianGroup& g) {
        std::size_t k = 0;
        for (const auto& d : g.torsion())
            if (d % p == 0) ++k;
        return k;
    };
    std::vector<std::size_t> out;
    for (std::size_t n = 0; n < h.size(); ++n)
        out.push_back(h[n].betti() + p_torsion(h[n]) + (n > 0 ? p_torsion(h[n - 1]) : 0));
    return out;
}

inline std::vector<std::size_t> bettis(const std::vector<simplicial::AbelianGroup>& h) {
    std::vector<std::size_t> out;
    for (const auto& g : h) out.push_back(g.betti());
    return out;
}

}  // namespace oracle

#include "simplicial/smith.hpp"

#include <stdexcept>

namespace simplicial {

namespace {

class Reducer {
public:
    Reducer(const IntegerMatrix& m, bool track) : track_(track) {
        form_.S = m;
        if (track_) {
            form_.U = form_.U_inv = IntegerMatrix::identity(m.rows());
            form_.V = form_.V_inv = IntegerMatrix::identity(m.cols());
        }
    }

    SmithForm run() {
        auto& s = form_.S;
        const std::size_t limit = std::min(s.rows(), s.cols());
        std::size_t t = 0;
        for (; t < limit; ++t) {
            if (!move_min_pivot(t)) break;
            while (true) {
                if (!clear_column(t)) continue;
                if (!clear_row(t)) continue;
                if (fix_divisibility(t)) continue;
                break;
            }
            if (s(t, t) < 0) row_negate(t);
        }
        form_.rank = t;
        return std::move(form_);
    }

private:
    // Brings the least-magnitude nonzero entry of the block [t.., t..] to
    // (t, t). Returns false when the block is zero.
    bool move_min_pivot(std::size_t t) {
        auto& s = form_.S;
        std::size_t br = 0, bc = 0;
        Integer best = 0;
        for (std::size_t r = t; r < s.rows(); ++r)
            for (std::size_t c = t; c < s.cols(); ++c) {
                const auto& v = s(r, c);
                if (v == 0) continue;
                Integer a = abs(v);
                if (best == 0 || a < best) {
                    best = a;
                    br = r;
                    bc = c;
                    if (best == 1) goto found;
                }
            }
        if (best == 0) return false;
    found:
        row_swap(t, br);
        col_swap(t, bc);
        return true;
    }

    // Returns true when column t is zero below the pivot after reduction.
    bool clear_column(std::size_t t) {
        auto& s = form_.S;
        bool residue = false;
        for (std::size_t r = t + 1; r < s.rows(); ++r) {
            if (s(r, t) == 0) continue;
            Integer q = floor_div(s(r, t), s(t, t));
            row_add(r, t, -q);
            if (s(r, t) != 0) residue = true;
        }
        if (!residue) return true;
        std::size_t best_r = t;
        for (std::size_t r = t + 1; r < s.rows(); ++r)
            if (s(r, t) != 0 && abs(s(r, t)) < abs(s(best_r, t))) best_r = r;
        row_swap(t, best_r);
        return false;
    }

    bool clear_row(std::size_t t) {
        auto& s = form_.S;
        bool residue = false;
        for (std::size_t c = t + 1; c < s.cols(); ++c) {
            if (s(t, c) == 0) continue;
            Integer q = floor_div(s(t, c), s(t, t));
            col_add(c, t, -q);
            if (s(t, c) != 0) residue = true;
        }
        if (!residue) return true;
        std::size_t best_c = t;
        for (std::size_t c = t + 1; c < s.cols(); ++c)
            if (s(t, c) != 0 && abs(s(t, c)) < abs(s(t, best_c))) best_c = c;
        col_swap(t, best_c);
        return false;
    }

    // If some entry of the trailing block is not divisible by the pivot, fold
    // its row into the pivot row and report that another pass is needed.
    bool fix_divisibility(std::size_t t) {
        auto& s = form_.S;
        const auto& p = s(t, t);
        if (abs(p) == 1) return false;
        for (std::size_t r = t + 1; r < s.rows(); ++r)
            for (std::size_t c = t + 1; c < s.cols(); ++c)
                if (s(r, c) % p != 0) {
                    row_add(t, r, 1);
                    return true;
                }
        return false;
    }

    void row_add(std::size_t target, std::size_t source, const Integer& q) {
        if (q == 0) return;
        form_.S.add_row_multiple(target, source, q);
        if (!track_) return;
        form_.U.add_row_multiple(target, source, q);
        form_.U_inv.add_col_multiple(source, target, -q);
    }
    void row_swap(std::size_t a, std::size_t b) {
        if (a == b) return;
        form_.S.swap_rows(a, b);
        if (!track_) return;
        form_.U.swap_rows(a, b);
        form_.U_inv.swap_cols(a, b);
    }
    void row_negate(std::size_t r) {
        form_.S.negate_row(r);
        if (!track_) return;
        form_.U.negate_row(r);
        form_.U_inv.negate_col(r);
    }
    void col_add(std::size_t target, std::size_t source, const Integer& q) {
        if (q == 0) return;
        form_.S.add_col_multiple(target, source, q);
        if (!track_) return;
        form_.V.add_col_multiple(target, source, q);
        form_.V_inv.add_row_multiple(source, target, -q);
    }
    void col_swap(std::size_t a, std::size_t b) {
        if (a == b) return;
        form_.S.swap_cols(a, b);
        if (!track_) return;
        form_.V.swap_cols(a, b);
        form_.V_inv.swap_rows(a, b);
    }

    bool track_;
    SmithForm form_;
};

}  // namespace

std::vector<Integer> SmithForm::invariant_factors() const {
    std::vector<Integer> d;
    for (std::size_t i = 0; i < rank; ++i) d.push_back(S(i, i));
    return d;
}

SmithForm smith_normal_form(const IntegerMatrix& m, Transforms transforms) {
    return Reducer(m, transforms == Transforms::Track).run();
}

std::size_t integer_rank(const IntegerMatrix& m) {
    return smith_normal_form(m, Transforms::Skip).rank;
}

bool is_unimodular(const IntegerMatrix& m) {
    if (m.rows() != m.cols()) return false;
    auto f = smith_normal_form(m, Transforms::Skip);
    if (f.rank != m.rows()) return false;
    for (std::size_t i = 0; i < f.rank; ++i)
        if (f.S(i, i) != 1) return false;
    return true;
}

LatticeMembership::LatticeMembership(const IntegerMatrix& generators)
    : form_(smith_normal_form(generators)) {}

std::optional<std::vector<Integer>> LatticeMembership::solve(const std::vector<Integer>& v) const {
    if (v.size() != form_.U.cols()) throw std::invalid_argument("lattice membership: dimension mismatch");
    auto c = form_.U.apply(v);
    std::vector<Integer> y(form_.V.rows());
    for (std::size_t i = 0; i < c.size(); ++i) {
        if (i < form_.rank) {
            const auto& d = form_.S(i, i);
            if (c[i] % d != 0) return std::nullopt;
            y[i] = c[i] / d;
        } else if (c[i] != 0) {
            return std::nullopt;
        }
    }
    return form_.V.apply(y);
}

bool LatticeMembership::contains(const std::vector<Integer>& v) const { return solve(v).has_value(); }

std::optional<std::vector<Integer>> solve_integer(const IntegerMatrix& a, const std::vector<Integer>& b) {
    return LatticeMembership(a).solve(b);
}

bool same_lattice(const IntegerMatrix& a, const IntegerMatrix& b) {
    if (a.rows() != b.rows()) throw std::invalid_argument("same_lattice: ambient mismatch");
    LatticeMembership in_a(a), in_b(b);
    for (std::size_t c = 0; c < b.cols(); ++c)
        if (!in_a.contains(b.column(c))) return false;
    for (std::size_t c = 0; c < a.cols(); ++c)
        if (!in_b.contains(a.column(c))) return false;
    return true;
}

std::optional<std::vector<Integer>> LatticeBasis::coordinates(const std::vector<Integer>& v) const {
    if (v.size() != ambient_dim()) throw std::invalid_argument("lattice coordinates: dimension mismatch");
    auto c = coords.apply(v);
    for (std::size_t i = 0; i < c.size(); ++i) {
        if (c[i] % divisors[i] != 0) return std::nullopt;
        c[i] /= divisors[i];
    }
    if (basis.apply(c) != v) return std::nullopt;
    return c;
}

LatticeBasis lattice_basis(const IntegerMatrix& generators) {
    auto f = smith_normal_form(generators);
    LatticeBasis lb;
    const std::size_t n = generators.rows();
    lb.basis = IntegerMatrix(n, f.rank);
    lb.coords = f.U.row_range(0, f.rank);
    for (std::size_t i = 0; i < f.rank; ++i) {
        const auto& d = f.S(i, i);
        for (std::size_t r = 0; r < n; ++r) lb.basis(r, i) = f.U_inv(r, i) * d;
        lb.divisors.push_back(d);
    }
    return lb;
}

LatticeBasis kernel_basis(const IntegerMatrix& m) {
    auto f = smith_normal_form(m);
    LatticeBasis lb;
    lb.basis = f.V.col_range(f.rank, m.cols());
    lb.coords = f.V_inv.row_range(f.rank, m.cols());
    lb.divisors.assign(m.cols() - f.rank, Integer(1));
    return lb;
}

LatticeBasis kernel_basis_mod(const IntegerMatrix& m, const Integer& modulus) {
    if (modulus == 0) return kernel_basis(m);
    IntegerMatrix scaled = IntegerMatrix::identity(m.rows());
    for (std::size_t i = 0; i < m.rows(); ++i) scaled(i, i) = modulus;
    auto joint = kernel_basis(hstack(m, scaled));
    return lattice_basis(joint.basis.row_range(0, m.cols()));
}

}  // namespace simplicial

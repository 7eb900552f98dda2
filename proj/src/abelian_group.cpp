#include "simplicial/abelian_group.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

namespace simplicial {

namespace {

std::string trim(const std::string& s) {
    auto b = s.find_first_not_of(" \t");
    auto e = s.find_last_not_of(" \t");
    return b == std::string::npos ? std::string() : s.substr(b, e - b + 1);
}

// Cyclic decomposition as a list of orders, 0 for Z.
std::vector<Integer> cyclics(const AbelianGroup& g) {
    std::vector<Integer> out(g.betti(), Integer(0));
    out.insert(out.end(), g.torsion().begin(), g.torsion().end());
    return out;
}

Integer gcd_int(const Integer& a, const Integer& b) { return boost::multiprecision::gcd(a, b); }

template <typename F>
AbelianGroup pairwise(const AbelianGroup& a, const AbelianGroup& b, F cyclic_rule) {
    std::size_t free_rank = 0;
    std::vector<Integer> orders;
    for (const auto& x : cyclics(a))
        for (const auto& y : cyclics(b)) {
            // cyclic_rule returns -1 for "nothing", 0 for Z, d for Z/d.
            Integer r = cyclic_rule(x, y);
            if (r == 0) ++free_rank;
            else if (r > 1) orders.push_back(r);
        }
    return AbelianGroup::from_cyclics(free_rank, orders);
}

}  // namespace

AbelianGroup AbelianGroup::from_cyclics(std::size_t free_rank, const std::vector<Integer>& orders) {
    AbelianGroup g;
    g.betti_ = free_rank;
    std::vector<Integer> finite;
    for (const auto& o : orders) {
        if (o == 0) ++g.betti_;
        else if (abs(o) != 1) finite.push_back(abs(o));
    }
    if (finite.empty()) return g;
    IntegerMatrix diag(finite.size(), finite.size());
    for (std::size_t i = 0; i < finite.size(); ++i) diag(i, i) = finite[i];
    auto f = smith_normal_form(diag, Transforms::Skip);
    for (const auto& d : f.invariant_factors())
        if (d != 1) g.torsion_.push_back(d);
    return g;
}

AbelianGroup AbelianGroup::parse(const std::string& text) {
    std::string t = trim(text);
    if (t.empty()) throw std::invalid_argument("empty group description");
    if (t == "0") return trivial();
    std::size_t free_rank = 0;
    std::vector<Integer> orders;
    std::stringstream ss(t);
    std::string part;
    while (std::getline(ss, part, '+')) {
        part = trim(part);
        try {
            if (part == "Z") {
                ++free_rank;
            } else if (part.rfind("Z^", 0) == 0) {
                free_rank += std::stoul(part.substr(2));
            } else if (part.rfind("Z/", 0) == 0) {
                Integer d(part.substr(2));
                if (d <= 0) throw std::invalid_argument("non-positive order");
                orders.push_back(d);
            } else if (part == "0") {
            } else {
                throw std::invalid_argument("unknown summand");
            }
        } catch (const std::exception&) {
            throw std::invalid_argument("bad group summand '" + part + "' in '" + text + "'");
        }
    }
    return from_cyclics(free_rank, orders);
}

Integer AbelianGroup::generator_order(std::size_t i) const {
    return i < betti_ ? Integer(0) : torsion_.at(i - betti_);
}

IntegerMatrix AbelianGroup::relations() const {
    IntegerMatrix r(generator_count(), torsion_.size());
    for (std::size_t i = 0; i < torsion_.size(); ++i) r(betti_ + i, i) = torsion_[i];
    return r;
}

std::vector<Integer> AbelianGroup::normalize(std::vector<Integer> coords) const {
    if (coords.size() != generator_count()) throw std::invalid_argument("coordinate count mismatch");
    for (std::size_t i = 0; i < torsion_.size(); ++i) coords[betti_ + i] = mod_floor(coords[betti_ + i], torsion_[i]);
    return coords;
}

std::string AbelianGroup::to_string() const {
    std::vector<std::string> parts;
    if (betti_ == 1) parts.emplace_back("Z");
    else if (betti_ > 1) parts.push_back("Z^" + std::to_string(betti_));
    for (const auto& d : torsion_) parts.push_back("Z/" + d.str());
    if (parts.empty()) return "0";
    std::string out = parts[0];
    for (std::size_t i = 1; i < parts.size(); ++i) out += " + " + parts[i];
    return out;
}

AbelianGroup direct_sum(const AbelianGroup& a, const AbelianGroup& b) {
    auto orders = a.torsion();
    orders.insert(orders.end(), b.torsion().begin(), b.torsion().end());
    return AbelianGroup::from_cyclics(a.betti() + b.betti(), orders);
}

AbelianGroup tensor(const AbelianGroup& a, const AbelianGroup& b) {
    return pairwise(a, b, [](const Integer& x, const Integer& y) -> Integer {
        if (x == 0) return y;
        if (y == 0) return x;
        return gcd_int(x, y);
    });
}

AbelianGroup tor(const AbelianGroup& a, const AbelianGroup& b) {
    return pairwise(a, b, [](const Integer& x, const Integer& y) -> Integer {
        if (x == 0 || y == 0) return -1;
        return gcd_int(x, y);
    });
}

AbelianGroup hom(const AbelianGroup& a, const AbelianGroup& b) {
    return pairwise(a, b, [](const Integer& x, const Integer& y) -> Integer {
        if (x == 0) return y;
        if (y == 0) return -1;
        return gcd_int(x, y);
    });
}

AbelianGroup ext(const AbelianGroup& a, const AbelianGroup& b) {
    return pairwise(a, b, [](const Integer& x, const Integer& y) -> Integer {
        if (x == 0) return -1;
        if (y == 0) return x;
        return gcd_int(x, y);
    });
}

Subquotient::Subquotient(LatticeBasis cycles, const IntegerMatrix& boundary_generators)
    : cycles_(std::move(cycles)) {
    const std::size_t r = cycles_.rank();
    if (boundary_generators.rows() != cycles_.ambient_dim())
        throw std::invalid_argument("subquotient: ambient dimension mismatch");
    IntegerMatrix in_cycle_coords(r, boundary_generators.cols());
    for (std::size_t c = 0; c < boundary_generators.cols(); ++c) {
        auto x = cycles_.coordinates(boundary_generators.column(c));
        if (!x) throw std::invalid_argument("subquotient: boundary lattice not contained in cycle lattice");
        in_cycle_coords.set_column(c, *x);
    }
    auto f = smith_normal_form(in_cycle_coords);
    std::vector<Integer> torsion;
    unit_count_ = 0;
    for (std::size_t i = 0; i < f.rank; ++i) {
        if (f.S(i, i) == 1) ++unit_count_;
        else torsion.push_back(f.S(i, i));
    }
    const std::size_t free_rank = r - f.rank;
    group_ = AbelianGroup::from_cyclics(free_rank, torsion);

    std::vector<std::size_t> order;
    for (std::size_t i = f.rank; i < r; ++i) order.push_back(i);
    for (std::size_t i = unit_count_; i < f.rank; ++i) order.push_back(i);

    to_class_ = IntegerMatrix(order.size(), r);
    IntegerMatrix reps_in_cycles(r, order.size());
    for (std::size_t k = 0; k < order.size(); ++k) {
        for (std::size_t j = 0; j < r; ++j) {
            to_class_(k, j) = f.U(order[k], j);
            reps_in_cycles(j, k) = f.U_inv(j, order[k]);
        }
    }
    representatives_ = cycles_.basis * reps_in_cycles;
}

std::vector<Integer> Subquotient::class_of(const std::vector<Integer>& v) const {
    auto x = cycles_.coordinates(v);
    if (!x) throw std::invalid_argument("class_of: vector is not a cycle");
    return group_.normalize(to_class_.apply(*x));
}

bool GroupHom::is_zero() const {
    for (std::size_t c = 0; c < matrix.cols(); ++c)
        if (target.normalize(matrix.column(c)) != std::vector<Integer>(target.generator_count())) return false;
    return true;
}

bool GroupHom::is_isomorphism() const {
    GroupHom from_zero{AbelianGroup::trivial(), source, IntegerMatrix(source.generator_count(), 0)};
    GroupHom to_zero{target, AbelianGroup::trivial(), IntegerMatrix(0, target.generator_count())};
    return is_exact_at(from_zero, *this) && is_exact_at(*this, to_zero);
}

GroupHom compose(const GroupHom& second, const GroupHom& first) {
    if (!(first.target == second.source)) throw std::invalid_argument("compose: groups do not match");
    GroupHom g{first.source, second.target, second.matrix * first.matrix};
    for (std::size_t c = 0; c < g.matrix.cols(); ++c) g.matrix.set_column(c, g.target.normalize(g.matrix.column(c)));
    return g;
}

bool is_exact_at(const GroupHom& in, const GroupHom& out) {
    if (!(in.target == out.source)) throw std::invalid_argument("is_exact_at: middle groups differ");
    const auto& middle = in.target;
    const std::size_t h = middle.generator_count();
    if (h == 0) return true;
    auto rel_h = middle.relations();
    auto image = hstack(in.matrix, rel_h);
    auto joint = kernel_basis(hstack(out.matrix, out.target.relations()));
    auto kernel = hstack(joint.basis.row_range(0, h), rel_h);
    return same_lattice(image, kernel);
}

}  // namespace simplicial

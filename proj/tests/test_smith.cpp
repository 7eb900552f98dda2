#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "simplicial/abelian_group.hpp"
#include "simplicial/smith.hpp"

using namespace simplicial;

namespace {

bool is_diagonal_chain(const SmithForm& f) {
    for (std::size_t r = 0; r < f.S.rows(); ++r)
        for (std::size_t c = 0; c < f.S.cols(); ++c)
            if (r != c && f.S(r, c) != 0) return false;
    for (std::size_t i = 0; i < f.rank; ++i) {
        if (f.S(i, i) <= 0) return false;
        if (i + 1 < f.rank && f.S(i + 1, i + 1) % f.S(i, i) != 0) return false;
    }
    for (std::size_t i = f.rank; i < std::min(f.S.rows(), f.S.cols()); ++i)
        if (f.S(i, i) != 0) return false;
    return true;
}

void check_postconditions(const IntegerMatrix& m) {
    auto f = smith_normal_form(m);
    CHECK(f.U * m * f.V == f.S);
    CHECK(is_unimodular(f.U));
    CHECK(is_unimodular(f.V));
    CHECK((f.U * f.U_inv).is_identity());
    CHECK((f.V * f.V_inv).is_identity());
    CHECK(is_diagonal_chain(f));
}

}  // namespace

TEST_CASE("smith normal form of a 2x2 example") {
    // Row/column reduction by hand: [[2,4],[6,8]] -> [[2,0],[0,-4]] -> diag(2,4).
    IntegerMatrix m{{2, 4}, {6, 8}};
    auto f = smith_normal_form(m);
    CHECK(f.rank == 2);
    CHECK(f.S == IntegerMatrix{{2, 0}, {0, 4}});
    check_postconditions(m);
}

TEST_CASE("identity and zero matrices") {
    auto id = IntegerMatrix::identity(4);
    auto f = smith_normal_form(id);
    CHECK(f.S == id);
    CHECK(f.U.is_identity());
    CHECK(f.V.is_identity());

    auto z = IntegerMatrix::zero(3, 5);
    auto g = smith_normal_form(z);
    CHECK(g.rank == 0);
    CHECK(g.S.is_zero());
    CHECK(is_unimodular(g.U));
    CHECK(is_unimodular(g.V));
}

TEST_CASE("divisibility chain is enforced") {
    // diag(2, 3) has invariant factors 1, 6.
    IntegerMatrix m{{2, 0}, {0, 3}};
    auto f = smith_normal_form(m);
    CHECK(f.invariant_factors() == std::vector<Integer>{1, 6});
    check_postconditions(m);
}

TEST_CASE("entries beyond 64 bits stay exact") {
    Integer big = Integer(1) << 100;
    IntegerMatrix m(2, 2);
    m(0, 0) = big;
    m(0, 1) = big + 1;
    m(1, 0) = big - 1;
    m(1, 1) = big;
    auto f = smith_normal_form(m);
    // det = big^2 - (big^2 - 1) = 1
    CHECK(f.invariant_factors() == std::vector<Integer>{1, 1});
    check_postconditions(m);
}

TEST_CASE("property: random matrices satisfy U M V = S") {
    std::mt19937 rng(12345);
    std::uniform_int_distribution<int> size(0, 7), entry(-6, 6);
    for (int trial = 0; trial < 200; ++trial) {
        IntegerMatrix m(static_cast<std::size_t>(size(rng)), static_cast<std::size_t>(size(rng)));
        for (std::size_t r = 0; r < m.rows(); ++r)
            for (std::size_t c = 0; c < m.cols(); ++c) m(r, c) = entry(rng) * (trial % 3 == 0 ? 1000003 : 1);
        check_postconditions(m);
    }
}

TEST_CASE("integer solve and lattice comparison") {
    IntegerMatrix a{{2, 0}, {0, 3}};
    CHECK(solve_integer(a, {4, 9}) == std::vector<Integer>{2, 3});
    CHECK_FALSE(solve_integer(a, {1, 0}).has_value());
    CHECK(same_lattice(IntegerMatrix{{1, 1}, {0, 2}}, IntegerMatrix{{1, 3}, {0, 2}}));
    CHECK_FALSE(same_lattice(IntegerMatrix{{1, 1}, {0, 2}}, IntegerMatrix{{1, 0}, {1, 2}}));
    CHECK_FALSE(same_lattice(IntegerMatrix{{2}, {0}}, IntegerMatrix{{1}, {0}}));
}

TEST_CASE("kernel modulo an integer") {
    // x with 2x == 0 mod 4: x even.
    auto k = kernel_basis_mod(IntegerMatrix{{2}}, 4);
    CHECK(k.rank() == 1);
    CHECK(k.coordinates({2}).has_value());
    CHECK_FALSE(k.coordinates({1}).has_value());
}

TEST_CASE("abelian group normal form and parsing") {
    CHECK(AbelianGroup::from_cyclics(1, {2, 3}).to_string() == "Z + Z/6");
    CHECK(AbelianGroup::from_cyclics(0, {4, 2}).to_string() == "Z/2 + Z/4");
    CHECK(AbelianGroup::from_cyclics(0, {1, 1}).to_string() == "0");
    CHECK(AbelianGroup::parse("Z^2+Z/4") == AbelianGroup::from_cyclics(2, {4}));
    CHECK(AbelianGroup::parse("Z/2 + Z/3") == AbelianGroup::cyclic(6));
    CHECK_THROWS(AbelianGroup::parse("Q"));
}

TEST_CASE("tensor, tor, hom and ext of cyclic groups") {
    auto z = AbelianGroup::free(1), z2 = AbelianGroup::cyclic(2), z4 = AbelianGroup::cyclic(4), z6 = AbelianGroup::cyclic(6);
    CHECK(tensor(z4, z6) == z2);
    CHECK(tensor(z, z6) == z6);
    CHECK(tor(z4, z6) == z2);
    CHECK(tor(z, z6).is_trivial());
    CHECK(hom(z2, z).is_trivial());
    CHECK(hom(z4, z6) == z2);
    CHECK(ext(z4, z) == z4);
    CHECK(ext(z, z4).is_trivial());
}

TEST_CASE("subquotient of Z^2 by a sublattice") {
    // Z^2 / <(2, 0), (0, 3)> = Z/6
    Subquotient q(kernel_basis(IntegerMatrix::zero(0, 2)), IntegerMatrix{{2, 0}, {0, 3}});
    CHECK(q.group() == AbelianGroup::cyclic(6));
    CHECK(q.class_of({2, 0}) == std::vector<Integer>{0});
    CHECK(q.class_of({1, 1}) != std::vector<Integer>{0});
    auto reps = q.representatives();
    CHECK(q.class_of(reps.column(0)) == std::vector<Integer>{1});
}

TEST_CASE("exactness of group sequences") {
    // 0 -> Z --2--> Z -> Z/2 -> 0
    auto z = AbelianGroup::free(1), z2 = AbelianGroup::cyclic(2);
    GroupHom times2{z, z, IntegerMatrix{{2}}};
    GroupHom reduce{z, z2, IntegerMatrix{{1}}};
    GroupHom zero_in{AbelianGroup::trivial(), z, IntegerMatrix(1, 0)};
    GroupHom zero_out{z2, AbelianGroup::trivial(), IntegerMatrix(0, 1)};
    CHECK(is_exact_at(zero_in, times2));
    CHECK(is_exact_at(times2, reduce));
    CHECK(is_exact_at(reduce, zero_out));
    GroupHom times3{z, z, IntegerMatrix{{3}}};
    CHECK_FALSE(is_exact_at(times3, reduce));
    CHECK_FALSE(times2.is_isomorphism());
    CHECK(GroupHom{z2, z2, IntegerMatrix{{3}}}.is_isomorphism());
}

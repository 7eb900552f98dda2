#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "simplicial/constructions.hpp"
#include "simplicial/simplicial_set.hpp"

using namespace simplicial;

namespace {

using Counts = std::vector<std::size_t>;

SetPtr circle() { return quotient(share(std_simplex(1)), {{0, 0}, {0, 1}}).set; }

long binom(long n, long k) {
    if (k < 0 || k > n) return 0;
    long r = 1;
    for (long i = 1; i <= k; ++i) r = r * (n - k + i) / i;
    return r;
}

// Independent count of non-degenerate product simplices: for generators of
// dimensions p and q, the n-simplices come from choosing n-p repeat positions
// for the left factor and n-q disjoint ones for the right.
Counts product_counts_oracle(const SimplicialSet& k, const SimplicialSet& l) {
    Counts out(static_cast<std::size_t>(k.top_dim() + l.top_dim() + 1), 0);
    for (int p = 0; p <= k.top_dim(); ++p)
        for (int q = 0; q <= l.top_dim(); ++q)
            for (int n = std::max(p, q); n <= p + q; ++n)
                out[n] += k.count(p) * l.count(q) * static_cast<std::size_t>(binom(n, n - p) * binom(p, n - q));
    return out;
}

}  // namespace

TEST_CASE("face operator examples") {
    auto d2 = std_simplex(2);
    // edges of Delta[2] in order: 01, 02, 12
    CHECK(d2.face({2, 0, {}}, 1) == SimplexRef{1, 1, {}});
    CHECK(d2.generator(1, 1).name == "02");
    CHECK(d2.face({1, 0, {0}}, 0) == SimplexRef{1, 0, {}});     // d0 s0 = id
    CHECK(d2.face({1, 0, {1}}, 0) == SimplexRef{0, 1, {0}});    // d0 s1 = s0 d0
    CHECK(d2.face({1, 0, {1}}, 2) == SimplexRef{1, 0, {}});     // d2 s1 = id
    CHECK(d2.face({1, 0, {0}}, 2) == SimplexRef{0, 0, {0}});    // d2 s0 = s0 d1
    CHECK_THROWS_AS(d2.face({2, 0, {}}, 3), std::out_of_range);
    CHECK_THROWS(d2.face({0, 0, {}}, 0));
}

TEST_CASE("degeneracy examples") {
    CHECK(degeneracy({1, 0, {}}, 0) == SimplexRef{1, 0, {0}});
    CHECK(degeneracy({0, 3, {0}}, 0) == SimplexRef{0, 3, {1, 0}});
    CHECK(degeneracy({1, 0, {1}}, 2) == SimplexRef{1, 0, {2, 1}});
    CHECK_THROWS_AS(degeneracy({1, 0, {}}, 2), std::out_of_range);
}

TEST_CASE("standard simplices, boundaries and horns") {
    CHECK(std_simplex(2).counts() == Counts{3, 3, 1});
    CHECK(boundary(3).counts() == Counts{4, 6, 4});
    auto h = horn(2, 0);
    CHECK(h.counts() == Counts{3, 2});
    CHECK(h.generator(1, 0).name == "01");
    CHECK(h.generator(1, 1).name == "02");
    CHECK_THROWS(horn(2, 3));
    CHECK_THROWS(horn(0, 0));
    for (int n = 0; n <= 5; ++n) {
        auto d = std_simplex(n);
        for (int m = 0; m <= n; ++m) CHECK(d.count(m) == static_cast<std::size_t>(binom(n + 1, m + 1)));
        CHECK(d.validate().ok);
    }
}

TEST_CASE("products") {
    auto d0 = share(std_simplex(0)), d1 = share(std_simplex(1)), d2 = share(std_simplex(2));
    Product square(d1, d1);
    CHECK(square.set()->counts() == Counts{4, 5, 2});
    CHECK(square.set()->validate().ok);
    CHECK(square.left_projection().validate().ok);
    CHECK(square.right_projection().validate().ok);

    auto k = share(boundary(3));
    Product unit(d0, k);
    CHECK(*unit.set() == *k);

    auto s1 = circle();
    Product torus(s1, s1);
    CHECK(torus.set()->counts() == Counts{1, 3, 2});
    CHECK(torus.set()->counts() == product_counts_oracle(*s1, *s1));
    CHECK(Product(d2, d1).set()->validate().ok);

    for (int p = 0; p <= 3; ++p)
        for (int q = 0; q <= 3; ++q) {
            Product pq(share(std_simplex(p)), share(std_simplex(q)));
            CHECK(pq.set()->count(p + q) == static_cast<std::size_t>(binom(p + q, p)));
            CHECK(pq.set()->counts() == product_counts_oracle(std_simplex(p), std_simplex(q)));
        }
}

TEST_CASE("product pairs canonicalize common degeneracies") {
    auto d1 = share(std_simplex(1));
    Product square(d1, d1);
    // (s0 <01>, s0 <01>) = s0 of the diagonal
    auto diag = square.pair({1, 0, {}}, {1, 0, {}});
    CHECK(square.pair({1, 0, {0}}, {1, 0, {0}}) == degeneracy(diag, 0));
    auto [x, y] = square.components(degeneracy(diag, 1));
    CHECK(x == SimplexRef{1, 0, {1}});
    CHECK(y == SimplexRef{1, 0, {1}});
}

TEST_CASE("subcomplexes") {
    auto d2 = share(std_simplex(2));
    auto sub = subcomplex(d2, {{1, 0}, {1, 1}, {1, 2}});
    CHECK(*sub.set == boundary(2));
    CHECK(sub.inclusion.validate().ok);
    CHECK(sub.inclusion.is_embedding());
    CHECK(subcomplex(d2, {}).set->empty());
    auto bd = share(boundary(2));
    CHECK(*subcomplex(bd, {{1, 0}, {1, 1}}).set == horn(2, 0));
    CHECK_THROWS(subcomplex(d2, {{1, 0}}, Closure::Require));
    CHECK_THROWS(subcomplex(d2, {{3, 0}}));
}

TEST_CASE("quotients") {
    auto s1 = circle();
    CHECK(s1->counts() == Counts{1, 1});
    auto d = share(std_simplex(3));
    CHECK(quotient(d, all_generators(*d)).set->counts() == Counts{1});

    auto d2 = share(std_simplex(2));
    auto bd = all_generators(*share(boundary(2)));
    auto s2 = quotient(d2, bd);
    CHECK(s2.set->counts() == Counts{1, 0, 1});
    CHECK(s2.set->validate().ok);
    CHECK(s2.projection.validate().ok);
    CHECK(s2.collapse_log.size() == 3);
    // every face of the 2-cell is the doubly degenerate basepoint
    for (int i = 0; i <= 2; ++i) CHECK(s2.set->face({2, 0, {}}, i) == SimplexRef{0, 0, {0}});

    auto k = Product(s1, d2).set();
    auto same = quotient(k, {});
    CHECK(*same.set == *k);
    CHECK_THROWS(quotient(d2, {{1, 0}}));
}

TEST_CASE("skeleta, coproducts and pushouts") {
    auto d2 = share(std_simplex(2));
    CHECK(skeleton(d2, 1).set->counts() == Counts{3, 3});
    auto d0 = share(std_simplex(0));
    auto two = coproduct({d0, d0});
    CHECK(two.set->counts() == Counts{2});
    for (const auto& inj : two.injections) CHECK(inj.validate().ok);

    // attach a 2-cell to the circle along the boundary, every edge on the loop
    auto s1 = circle();
    auto bd = share(boundary(2));
    auto attach = SimplicialMap(bd, s1, {{{0, 0, {}}, {0, 0, {}}, {0, 0, {}}}, {{1, 0, {}}, {1, 0, {}}, {1, 0, {}}}});
    REQUIRE(attach.validate().ok);
    auto inc = subcomplex(d2, all_generators(*bd)).inclusion;
    auto p = pushout(attach, inc);
    CHECK(p.set->counts() == Counts{1, 1, 1});
    CHECK(p.set->validate().ok);
    CHECK(p.from_target.validate().ok);
    CHECK(p.from_ambient.validate().ok);
    for (int i = 0; i <= 2; ++i) CHECK(p.set->face({2, 0, {}}, i) == SimplexRef{1, 0, {}});

    auto collapse = terminal_map(bd);
    CHECK_THROWS(pushout(attach, collapse));
}

TEST_CASE("validation reports") {
    CHECK(std_simplex(3).validate().ok);
    CHECK(Product(share(std_simplex(2)), share(std_simplex(1))).set()->validate().ok);

    SimplicialSetBuilder b;
    for (int v = 0; v < 3; ++v) b.add(0, {});
    b.add(1, {{0, 1, {}}, {0, 0, {}}});  // 01
    b.add(1, {{0, 2, {}}, {0, 0, {}}});  // 02
    b.add(1, {{0, 2, {}}, {0, 1, {}}});  // 12
    b.add(2, {{1, 2, {}}, {1, 0, {}}, {1, 1, {}}}, "012");  // faces 1 and 2 swapped
    auto bad = std::move(b).build();
    auto r = bad.validate();
    CHECK_FALSE(r.ok);
    CHECK(r.message.find("2:0") != std::string::npos);
    CHECK(r.message.find("(i,j)=(0,1)") != std::string::npos);

    SimplicialSetBuilder dangling;
    dangling.add(0, {});
    dangling.add(1, {{0, 0, {}}, {0, 7, {}}});
    auto r2 = std::move(dangling).build().validate();
    CHECK_FALSE(r2.ok);
    CHECK(r2.message.find("0:7") != std::string::npos);
}

TEST_CASE("property: simplicial identities and canonical forms on random simplices") {
    std::vector<SetPtr> spaces{share(std_simplex(3)), circle(), Product(circle(), circle()).set(),
                               Product(share(std_simplex(2)), share(std_simplex(1))).set()};
    std::mt19937 rng(7);
    for (const auto& k : spaces) {
        for (int n = 1; n <= 4; ++n) {
            auto all = k->all_simplices(n);
            for (const auto& s : all) {
                CHECK(is_canonical_word(s.word, s.dim()));
                std::vector<int> id(static_cast<std::size_t>(n) + 1);
                for (int i = 0; i <= n; ++i) id[i] = i;
                CHECK(k->restrict(s, id) == s);  // re-canonicalizing is a no-op
                for (int j = 1; j <= n; ++j)
                    for (int i = 0; i < j && n >= 2; ++i)
                        CHECK(k->face(k->face(s, j), i) == k->face(k->face(s, i), j - 1));
                for (int i = 0; i <= n; ++i) {
                    auto up = degeneracy(s, i);
                    CHECK(k->face(up, i) == s);
                    CHECK(k->face(up, i + 1) == s);
                }
            }
            // s_i s_j = s_{j+1} s_i for i <= j
            std::uniform_int_distribution<std::size_t> pick(0, all.size() - 1);
            for (int t = 0; t < 20; ++t) {
                const auto& s = all[pick(rng)];
                for (int j = 0; j <= n; ++j)
                    for (int i = 0; i <= j; ++i) CHECK(degeneracy(degeneracy(s, j), i) == degeneracy(degeneracy(s, i), j + 1));
            }
        }
    }
}

TEST_CASE("maps from vertex data") {
    auto h = share(horn(2, 0));
    auto d2 = share(std_simplex(2));
    auto f = map_from_vertices(h, h, {0, 0, 2});
    CHECK(f.validate().ok);
    CHECK(f.image(1, 0) == SimplexRef{0, 0, {0}});
    CHECK_THROWS(map_from_vertices(d2, h, {0, 1, 2}));  // 12 spans nothing
    CHECK_THROWS(map_from_vertices(d2, d2, {2, 1, 0}));  // not monotone
}

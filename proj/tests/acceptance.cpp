// Acceptance run: one PASS/FAIL line per criterion, nonzero exit on any FAIL.

#include <chrono>
#include <cstdio>
#include <functional>
#include <iostream>
#include <sstream>

#include "oracles.hpp"
#include "simplicial/catalog.hpp"
#include "simplicial/chain_operators.hpp"
#include "simplicial/covers.hpp"
#include "simplicial/cup_product.hpp"
#include "simplicial/exact_sequences.hpp"
#include "simplicial/kan.hpp"
#include "simplicial/subdivision.hpp"

using namespace simplicial;

namespace {

const std::vector<std::string> catalog_spaces = {
    "point",     "delta:1",  "delta:2",  "delta:3", "boundary:2", "boundary:3", "boundary:4", "horn:2:0", "horn:3:1",
    "sphere:1",  "sphere:2", "sphere:3", "circle",  "torus",      "rp2",        "klein",      "discrete:1", "discrete:3"};

// Collects failed sub-checks so the criterion line can name the first one.
struct Check {
    std::vector<std::string> failures;
    std::size_t count = 0;
    void operator()(bool ok, const std::string& what) {
        ++count;
        if (!ok) failures.push_back(what);
    }
};

std::vector<std::string> strings(const std::vector<AbelianGroup>& gs) {
    std::vector<std::string> out;
    for (const auto& g : gs) out.push_back(g.to_string());
    return out;
}

std::set<GeneratorId> below(const SimplicialSet& k, int dim) {
    std::set<GeneratorId> out;
    for (const auto& g : all_generators(k))
        if (g.dim < dim) out.insert(g);
    return out;
}

SimplicialMap straight_homotopy(const Product& cylinder, const SetPtr& target, const std::vector<int>& f,
                                const std::vector<int>& g) {
    std::vector<int> images;
    for (std::size_t a = 0; a < f.size(); ++a) {
        images.push_back(f[a]);
        images.push_back(g[a]);
    }
    return map_from_vertices(cylinder.set(), target, images);
}

struct HomotopyCase {
    std::string label;
    SimplicialMap f, g;
    std::shared_ptr<Product> cylinder;
    SimplicialMap h;
};

std::vector<HomotopyCase> homotopy_corpus() {
    std::vector<HomotopyCase> out;
    auto interval = catalog("delta:1");
    auto add_straight = [&](const std::string& label, const SetPtr& k, const std::vector<int>& f, const std::vector<int>& g) {
        auto cyl = std::make_shared<Product>(k, interval);
        out.push_back({label, map_from_vertices(k, k, f), map_from_vertices(k, k, g), cyl, straight_homotopy(*cyl, k, f, g)});
    };
    add_straight("contract delta:2", catalog("delta:2"), {0, 0, 0}, {0, 1, 2});
    add_straight("contract horn:2:0", catalog("horn:2:0"), {0, 0, 0}, {0, 1, 2});
    add_straight("shift delta:3", catalog("delta:3"), {0, 1, 1, 2}, {1, 2, 3, 3});
    add_straight("contract delta:3", catalog("delta:3"), {0, 0, 0, 0}, {0, 1, 2, 3});
    for (const std::string name : {"circle", "rp2", "torus"}) {
        auto k = catalog(name);
        auto cyl = std::make_shared<Product>(k, interval);
        out.push_back({"constant on " + name, identity_map(k), identity_map(k), cyl, cyl->left_projection()});
    }
    return out;
}

std::set<GeneratorId> preimage_of_edges(const Product& p, const std::set<GeneratorId>& edges) {
    std::set<GeneratorId> out;
    for (const auto& g : all_generators(*p.set())) {
        auto image = p.right_projection().image(g.dim, g.id);
        if (edges.count({image.base_dim, image.base})) out.insert(g);
    }
    return out;
}

void criterion1(Check& check) {
    auto point = homology(normalized_chains(*catalog("point")), 3);
    check(strings(point) == std::vector<std::string>{"Z", "0", "0", "0"}, "dimension axiom");

    for (const auto& parts : std::vector<std::vector<std::string>>{{"circle", "rp2", "point"}, {"torus", "klein"}, {"boundary:3", "discrete:3", "sphere:2"}}) {
        std::vector<SetPtr> sets;
        std::vector<std::vector<AbelianGroup>> hs;
        for (const auto& name : parts) {
            sets.push_back(catalog(name));
            hs.push_back(homology(normalized_chains(*sets.back()), 3));
        }
        auto total = homology(normalized_chains(*coproduct(sets).set), 3);
        for (int n = 0; n <= 3; ++n) {
            AbelianGroup sum = AbelianGroup::trivial();
            for (const auto& h : hs) sum = direct_sum(sum, h[n]);
            check(total[n] == sum, "additivity for " + parts[0] + " + ... in degree " + std::to_string(n));
        }
    }

    for (const auto& name : catalog_spaces) {
        auto k = catalog(name);
        const int top = std::max(k->top_dim(), 0);
        for (int cut = 0; cut <= top; ++cut)
            check(pair_les(*k, below(*k, cut), top + 1).all_exact(), "pair sequence of " + name + " rel " + std::to_string(cut - 1) + "-skeleton");
    }

    for (const auto& c : homotopy_corpus()) {
        auto prism = prism_homotopy(*c.cylinder, c.h);
        check(prism.identity_holds, "prism identity: " + c.label);
        check(homotopic_maps_equal_on_homology(c.f, c.g, *c.cylinder, c.h).ok(), "induced maps: " + c.label);
    }

    auto rim = boundary(2);
    std::set<GeneratorId> a{{0, 0}, {0, 1}, {0, 2}, {1, 0}, {1, 1}}, b{{0, 1}, {0, 2}, {1, 2}};
    check(mayer_vietoris(rim, a, b, 2).all_exact(), "MV on boundary:2");
    auto circle = catalog("circle");
    check(mayer_vietoris(*circle, all_generators(*circle), {{0, 0}}, 2).all_exact(), "MV on circle");
    Product t(catalog("circle"), share(boundary(2)));
    check(mayer_vietoris(*t.set(), preimage_of_edges(t, a), preimage_of_edges(t, b), 3).all_exact(), "MV on torus cylinders");
    auto s2 = catalog("boundary:3");
    std::set<GeneratorId> upper{{2, 0}, {2, 1}}, lower{{2, 2}, {2, 3}};
    check(mayer_vietoris(*s2, face_closure(*s2, upper), face_closure(*s2, lower), 3).all_exact(), "MV on boundary:3 halves");
}

void criterion2(Check& check) {
    for (int p = 1; p <= 3; ++p) {
        const auto where = "p=" + std::to_string(p);
        auto d = std_simplex(p);
        auto rim = below(d, p);
        auto rel = homology(relative_chains(d, rim), p + 1);
        for (int n = 0; n <= p + 1; ++n) check(rel[n].to_string() == (n == p ? "Z" : "0"), where + " relative homology degree " + std::to_string(n));
        auto les = pair_les(d, rim, p);
        check(les.all_exact(), where + " exactness");
        const auto& delta = les.connecting[p];
        check(delta.source.to_string() == "Z", where + " connecting source");
        if (p > 1) {
            check(delta.is_isomorphism(), where + " connecting isomorphism");
        } else {
            // onto reduced H_0 of the two endpoints, which is Z
            auto h0 = GradedHomology::homology(pair_sequence(d, rim).sub, 0);
            check(is_exact_at(delta, augmentation(h0)) && !delta.is_zero(), where + " connecting onto reduced H_0");
        }
    }
}

void criterion3(Check& check) {
    for (const auto& name : catalog_spaces) {
        auto k = catalog(name);
        const int top = std::max(k->top_dim(), 0);
        check(homology(normalized_chains(*k), top) == homology(unnormalized_chains(*k, top + 1), top), name);
    }
}

void criterion4(Check& check) {
    const std::vector<std::pair<std::string, std::vector<std::string>>> table = {
        {"circle", {"Z", "Z"}},
        {"torus", {"Z", "Z^2", "Z"}},
        {"rp2", {"Z", "Z/2", "0"}},
        {"klein", {"Z", "Z + Z/2", "0"}},
        {"boundary:1", {"Z^2"}},
        {"boundary:2", {"Z", "Z"}},
        {"boundary:3", {"Z", "0", "Z"}},
        {"boundary:4", {"Z", "0", "0", "Z"}},
    };
    for (const auto& [name, expected] : table) {
        auto c = normalized_chains(*catalog(name));
        const int top = static_cast<int>(expected.size()) - 1;
        auto h = homology(c, top);
        check(strings(h) == expected, name + " table value");
        check(oracle::betti_rational(c, top) == oracle::bettis(h), name + " rational ranks");
        check(oracle::betti_mod(c, top, 2) == oracle::predicted_mod(h, 2), name + " mod 2 ranks");
    }
}

void criterion5(Check& check) {
    for (const auto& c : homotopy_corpus()) check(prism_homotopy(*c.cylinder, c.h).identity_holds, "prism identity: " + c.label);

    for (auto [a, b] : std::vector<std::pair<std::string, std::string>>{
             {"circle", "circle"}, {"delta:1", "delta:1"}, {"delta:2", "delta:1"}, {"rp2", "circle"}, {"klein", "delta:1"}}) {
        Product p(catalog(a), catalog(b));
        auto tp = tensor_product(normalized_chains(*p.left()), normalized_chains(*p.right()));
        auto nkl = normalized_chains(*p.set());
        auto id = compose(alexander_whitney(p, tp), shuffle_ez(p, tp), tp.complex, nkl, tp.complex);
        for (int n = 0; n <= tp.complex.max_degree(); ++n) check(id.degree[n].is_identity(), "AW o EZ on " + a + " x " + b);
    }

    std::vector<std::pair<std::string, OrderedSimplicialComplex>> complexes = {
        {"simplex 2", OrderedSimplicialComplex::simplex(2)},
        {"simplex 3", OrderedSimplicialComplex::simplex(3)},
        {"rp2", rp2_triangulation()},
        {"boundary of simplex 3", OrderedSimplicialComplex::generated_by(4, {{0, 1, 2}, {0, 1, 3}, {0, 2, 3}, {1, 2, 3}})},
        {"triangle and segment", OrderedSimplicialComplex::generated_by(5, {{0, 1}, {1, 2}, {0, 2}, {3, 4}})}};
    for (const auto& [label, l] : complexes) {
        auto sd = barycentric_subdivide(l);
        auto source = normalized_chains(complex_to_sset(l));
        auto target = normalized_chains(complex_to_sset(sd.complex));
        check(is_chain_map(sd.sd, source, target, l.dim()), "sd chain map on " + label);
        auto cone = mapping_cone(sd.sd, source, target);
        for (const auto& g : homology(cone, 3)) check(g.is_trivial(), "cone(sd) acyclic on " + label);
        check(euler_characteristic(complex_to_sset(sd.complex)) == euler_characteristic(complex_to_sset(l)), "chi(Sd) on " + label);
    }
}

void criterion6(Check& check) {
    const std::vector<std::pair<std::string, std::string>> pairs = {
        {"circle", "circle"}, {"rp2", "circle"}, {"rp2", "rp2"}, {"klein", "rp2"}, {"torus", "point"}, {"boundary:2", "sphere:2"}};
    for (const auto& [a, b] : pairs) check(kunneth_check(catalog(a), catalog(b)).ok(), "Kunneth " + a + " x " + b);
    for (const std::string name : {"circle", "torus", "rp2", "klein", "boundary:3", "sphere:3"})
        for (const std::string coeff : {"Z", "Z/2", "Z/3", "Z/4", "Z^2 + Z/6"})
            check(uct_check(normalized_chains(*catalog(name)), AbelianGroup::parse(coeff)).ok(), "UCT " + name + " with " + coeff);

    auto torus = cohomology_ring_table(*catalog("torus"));
    const auto& ab = torus.at(1, 0, 1, 1).product;
    const auto& ba = torus.at(1, 1, 1, 0).product;
    check(ab.size() == 1 && abs(ab[0]) == 1 && ba.size() == 1 && ba[0] == -ab[0], "torus a u b = -(b u a) generates H^2");
    check(torus.graded_commutative && torus.associative, "torus table laws");
    auto rp2 = cohomology_ring_table(*catalog("rp2"), 2);
    check(rp2.at(1, 0, 1, 0).product == std::vector<Integer>{1}, "RP2 mod 2 square nonzero");
}

void criterion7(Check& check) {
    for (const std::string name : {"point", "discrete:1", "discrete:3", "discrete:5"})
        check(kan_check(*catalog(name), 3).ok(), name + " is Kan through 3");
    auto d1 = kan_check(*catalog("delta:1"), 2);
    check(!d1.ok(), "delta:1 not Kan");
    check(!d1.failures.empty() && d1.failures[0].to_string() == "Lambda[2]_0 {d1=s0(0:0), d2=(1:0)}: 0 lifts",
          "delta:1 witness");
    for (const auto& name : catalog_spaces) {
        auto k = catalog(name);
        auto kan = kan_check(*k, 3);
        auto fib = fibration_check(terminal_map(k), 3);
        bool same = kan.ok() == fib.ok() && kan.problems == fib.problems && kan.failure_count == fib.failure_count &&
                    kan.failures.size() == fib.failures.size();
        for (std::size_t i = 0; same && i < kan.failures.size(); ++i)
            same = kan.failures[i].horn.to_string() == fib.failures[i].horn.to_string();
        check(same,
              "fibration over a point matches Kan for " + name);
    }
}

void criterion8(Check& check) {
    auto z2 = FiniteGroup::cyclic(2);
    for (const std::string name : {"circle", "rp2", "torus"}) {
        auto base = catalog(name);
        auto p = pi1_presentation(*base);
        auto images = find_homomorphism(p.presentation, z2, true);
        check(images.has_value(), name + " has a surjection onto Z/2");
        if (!images) continue;
        auto cover = build_cover(labeling_from_hom(base, p, *images, z2));
        auto report = verify_covering(cover.projection, 2, 2);
        check(report.fibers_ok, name + " fiber cardinality");
        check(report.lifting.ok(), name + " unique lifting through 2");
        check(report.euler_ok(), name + " euler multiplicativity");
        if (name == "rp2") check(homology(normalized_chains(*cover.set), 2)[1].is_trivial(), "H_1 of the RP2 double cover");
    }
}

void criterion9(Check& check) {
    for (const auto& name : catalog_spaces) {
        auto k = catalog(name);
        if (pi0(*k).count() != 1) continue;
        auto ab = abelianization(pi1_presentation(*k).presentation);
        check(ab == homology(normalized_chains(*k), 1)[1], name);
    }
}

}  // namespace

int main() {
    struct Criterion {
        int number;
        const char* title;
        void (*body)(Check&);
        double budget_seconds;
    };
    const std::vector<Criterion> criteria = {
        {1, "homology axioms", criterion1, 60},
        {2, "simplex rel boundary", criterion2, 0},
        {3, "normalized vs unnormalized", criterion3, 0},
        {4, "known-space table with rank oracles", criterion4, 0},
        {5, "operator identities", criterion5, 0},
        {6, "Kunneth, UCT and cup products", criterion6, 0},
        {7, "Kan and fibration checks", criterion7, 0},
        {8, "double covers", criterion8, 30},
        {9, "abelianized pi_1 vs H_1", criterion9, 0},
    };
    int failed = 0;
    for (const auto& c : criteria) {
        Check check;
        const auto start = std::chrono::steady_clock::now();
        try {
            c.body(check);
        } catch (const std::exception& e) {
            check(false, std::string("exception: ") + e.what());
        }
        const double seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
        if (c.budget_seconds > 0 && seconds > c.budget_seconds) check(false, "runtime over budget");
        const bool ok = check.failures.empty();
        failed += !ok;
        std::ostringstream line;
        line << (ok ? "PASS" : "FAIL") << " criterion " << c.number << ": " << c.title;
        char timing[32];
        std::snprintf(timing, sizeof timing, "%.2f s", seconds);
        line << " (" << check.count << " checks, " << timing;
        if (c.budget_seconds > 0) line << ", budget " << c.budget_seconds << " s";
        line << ")";
        if (!ok) line << " first failure: " << check.failures.front() << " [" << check.failures.size() << " total]";
        std::cout << line.str() << std::endl;
    }
    return failed == 0 ? 0 : 1;
}

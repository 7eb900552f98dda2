#include "simplicial/covers.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

#include "simplicial/chain_complex.hpp"

namespace simplicial {

int CoverLabeling::label(const SimplexRef& edge) const {
    if (edge.dim() != 1) throw std::invalid_argument("label: not an edge");
    return edge.is_degenerate() ? group.identity() : labels.at(static_cast<std::size_t>(edge.base));
}

std::string CoverLabeling::cocycle_violation() const {
    if (labels.size() != base->count(1)) return "label count does not match the edge count";
    for (int l : labels)
        if (l < 0 || l >= group.order()) return "label out of range";
    for (int t = 0; t < static_cast<int>(base->count(2)); ++t) {
        SimplexRef s{2, t, {}};
        int lhs = label(base->face(s, 1));
        int rhs = group.multiply(label(base->face(s, 2)), label(base->face(s, 0)));
        if (lhs != rhs) return "cocycle condition fails on 2:" + std::to_string(t) + " '" + base->generator(2, t).name + "'";
    }
    return {};
}

CoverLabeling labeling_from_hom(const SetPtr& k, const EdgePathPresentation& p, const std::vector<int>& images,
                                const FiniteGroup& g) {
    const auto& gens = p.presentation.generators;
    if (images.size() != gens.size())
        throw std::invalid_argument("labeling: expected " + std::to_string(gens.size()) + " generator images");
    for (int x : images)
        if (x < 0 || x >= g.order()) throw std::invalid_argument("labeling: image is not a group element");
    for (const auto& r : p.presentation.relators)
        if (evaluate(r, images, g) != g.identity())
            throw std::invalid_argument("labeling: relator " + p.presentation.word_to_string(r) + " is not sent to the identity");
    CoverLabeling lab{k, g, {}};
    for (int e = 0; e < static_cast<int>(k->count(1)); ++e)
        lab.labels.push_back(p.edge_generator[e] < 0 ? g.identity() : images[p.edge_generator[e]]);
    if (auto v = lab.cocycle_violation(); !v.empty()) throw std::logic_error("labeling: " + v);
    return lab;
}

namespace {

bool generates(const std::vector<int>& images, const FiniteGroup& g) {
    std::vector<bool> in(static_cast<std::size_t>(g.order()), false);
    std::vector<int> members{g.identity()};
    in[g.identity()] = true;
    for (std::size_t i = 0; i < members.size(); ++i)
        for (int x : images) {
            int y = g.multiply(members[i], x);
            if (!in[y]) {
                in[y] = true;
                members.push_back(y);
            }
        }
    return static_cast<int>(members.size()) == g.order();
}

}  // namespace

std::optional<std::vector<int>> find_homomorphism(const GroupPresentation& p, const FiniteGroup& g, bool surjective) {
    const std::size_t m = p.generators.size();
    // relators become checkable once their largest generator is assigned
    std::vector<std::vector<const Word*>> ready(m);
    for (const auto& r : p.relators) {
        int top = 0;
        for (int letter : r) top = std::max(top, std::abs(letter));
        if (top > 0) ready[static_cast<std::size_t>(top - 1)].push_back(&r);
    }
    std::vector<int> images(m, g.identity());
    std::optional<std::vector<int>> found;
    auto search = [&](auto&& self, std::size_t i) -> void {
        if (found) return;
        if (i == m) {
            bool trivial = std::all_of(images.begin(), images.end(), [&](int x) { return x == g.identity(); });
            if (!trivial && (!surjective || generates(images, g))) found = images;
            return;
        }
        for (int x = 0; x < g.order() && !found; ++x) {
            images[i] = x;
            bool ok = true;
            for (const Word* r : ready[i])
                if (evaluate(*r, images, g) != g.identity()) ok = false;
            if (ok) self(self, i + 1);
        }
    };
    search(search, 0);
    return found;
}

Cover build_cover(const CoverLabeling& lab) {
    if (auto v = lab.cocycle_violation(); !v.empty()) throw std::invalid_argument("build_cover: " + v);
    const auto& k = *lab.base;
    const int order = lab.group.order();
    SimplicialSetBuilder b;
    std::vector<std::vector<SimplexRef>> images(static_cast<std::size_t>(k.top_dim() + 1));
    for (int n = 0; n <= k.top_dim(); ++n)
        for (int id = 0; id < static_cast<int>(k.count(n)); ++id) {
            SimplexRef s{n, id, {}};
            const int shift = n == 0 ? lab.group.identity() : lab.label(k.front(s, 1));
            for (int g = 0; g < order; ++g) {
                std::vector<SimplexRef> faces;
                for (int i = 0; n > 0 && i <= n; ++i) {
                    auto f = k.face(s, i);
                    const int sheet = i == 0 ? lab.group.multiply(g, shift) : g;
                    faces.push_back({f.base_dim, f.base * order + sheet, f.word});
                }
                b.add(n, std::move(faces), k.generator(n, id).name + "." + lab.group.name(g));
                images[n].push_back(s);
            }
        }
    auto cover = share(std::move(b).build_checked());
    return {cover, SimplicialMap(cover, lab.base, std::move(images))};
}

std::string CoveringReport::to_text() const {
    std::ostringstream out;
    out << "fiber cardinality " << group_order << ": " << (fibers_ok ? "PASS" : "FAIL") << '\n';
    for (const auto& f : fiber_failures) out << "  " << f << '\n';
    out << "unique relative horn lifting: " << (lifting.ok() ? "PASS" : "FAIL") << '\n' << lifting.to_text();
    out << "euler characteristic " << euler_cover << " = " << group_order << " * " << euler_base << ": "
        << (euler_ok() ? "PASS" : "FAIL") << '\n';
    return out.str();
}

CoveringReport verify_covering(const SimplicialMap& p, std::size_t group_order, int up_to) {
    const auto& e = p.source();
    const auto& b = p.target();
    CoveringReport report;
    report.group_order = group_order;

    for (int n = 0; n <= std::max(e.top_dim(), b.top_dim()); ++n) {
        std::vector<std::size_t> fiber(b.count(n), 0);
        for (int id = 0; id < static_cast<int>(e.count(n)); ++id) {
            const auto& y = p.image(n, id);
            if (y.is_degenerate()) {
                report.fiber_failures.push_back("generator " + std::to_string(n) + ":" + std::to_string(id) + " maps to degenerate " +
                                                to_string(y));
                continue;
            }
            ++fiber[y.base];
        }
        for (int id = 0; id < static_cast<int>(b.count(n)); ++id)
            if (fiber[id] != group_order)
                report.fiber_failures.push_back("generator " + std::to_string(n) + ":" + std::to_string(id) + " has " +
                                                std::to_string(fiber[id]) + " preimages");
    }
    report.fibers_ok = report.fiber_failures.empty();

    report.lifting = relative_lifting_check(p, up_to, Lifts::ExactlyOne);

    report.euler_cover = euler_characteristic(e);
    report.euler_base = euler_characteristic(b);
    return report;
}

}  // namespace simplicial

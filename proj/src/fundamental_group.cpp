#include "simplicial/fundamental_group.hpp"

#include <algorithm>
#include <array>
#include <deque>
#include <numeric>
#include <set>
#include <stdexcept>

#include "simplicial/smith.hpp"

namespace simplicial {

namespace {

int find(std::vector<int>& parent, int x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
}

Word cyclic_reduce(Word w) {
    w = free_reduce(w);
    while (w.size() >= 2 && w.front() == -w.back()) w = Word(w.begin() + 1, w.end() - 1);
    return w;
}

// Least rotation of the word or of its inverse, so conjugate relators coincide.
Word canonical_relator(const Word& w) {
    Word best;
    for (const auto& base : {w, inverse(w)})
        for (std::size_t r = 0; r < base.size(); ++r) {
            Word rotated(base.begin() + static_cast<long>(r), base.end());
            rotated.insert(rotated.end(), base.begin(), base.begin() + static_cast<long>(r));
            if (best.empty() || rotated < best) best = std::move(rotated);
        }
    return best;
}

}  // namespace

Components pi0(const SimplicialSet& k) {
    const int n = static_cast<int>(k.count(0));
    std::vector<int> parent(n);
    std::iota(parent.begin(), parent.end(), 0);
    for (int e = 0; e < static_cast<int>(k.count(1)); ++e) {
        auto v = k.vertices({1, e, {}});
        int a = find(parent, v[0]), b = find(parent, v[1]);
        if (a != b) parent[std::max(a, b)] = std::min(a, b);
    }
    Components c;
    c.component.assign(n, -1);
    std::vector<int> index(n, -1);
    for (int v = 0; v < n; ++v) {
        int root = find(parent, v);
        if (index[root] < 0) {
            index[root] = static_cast<int>(c.representatives.size());
            c.representatives.push_back(v);
        }
        c.component[v] = index[root];
    }
    return c;
}

Word free_reduce(const Word& w) {
    Word out;
    for (int letter : w) {
        if (!out.empty() && out.back() == -letter) out.pop_back();
        else out.push_back(letter);
    }
    return out;
}

Word inverse(const Word& w) {
    Word out(w.rbegin(), w.rend());
    for (auto& letter : out) letter = -letter;
    return out;
}

std::string GroupPresentation::word_to_string(const Word& w) const {
    if (w.empty()) return "1";
    std::string out;
    for (std::size_t i = 0; i < w.size(); ++i) {
        if (i) out += ' ';
        out += generators.at(static_cast<std::size_t>(std::abs(w[i]) - 1));
        if (w[i] < 0) out += "^-1";
    }
    return out;
}

std::string GroupPresentation::to_string() const {
    std::string out = "<";
    for (std::size_t i = 0; i < generators.size(); ++i) out += (i ? ", " : "") + generators[i];
    out += " | ";
    for (std::size_t i = 0; i < relators.size(); ++i) out += (i ? ", " : "") + word_to_string(relators[i]);
    return out + ">";
}

EdgePathPresentation pi1_presentation(const SimplicialSet& k, int base) {
    if (base < 0 || base >= static_cast<int>(k.count(0))) throw std::invalid_argument("pi1: base vertex does not exist");
    if (pi0(k).count() != 1) throw std::invalid_argument("pi1: space is not connected");

    const int edges = static_cast<int>(k.count(1));
    std::vector<std::vector<int>> incident(k.count(0));
    std::vector<std::array<int, 2>> ends(edges);
    for (int e = 0; e < edges; ++e) {
        auto v = k.vertices({1, e, {}});
        ends[e] = {v[0], v[1]};
        incident[v[0]].push_back(e);
        if (v[1] != v[0]) incident[v[1]].push_back(e);
    }

    EdgePathPresentation out;
    out.base = base;
    out.tree_edge.assign(edges, false);
    std::vector<bool> seen(k.count(0), false);
    std::deque<int> queue{base};
    seen[base] = true;
    while (!queue.empty()) {
        int v = queue.front();
        queue.pop_front();
        for (int e : incident[v]) {
            int w = ends[e][0] == v ? ends[e][1] : ends[e][0];
            if (seen[w]) continue;
            seen[w] = true;
            out.tree_edge[e] = true;
            queue.push_back(w);
        }
    }

    auto& p = out.presentation;
    out.edge_generator.assign(edges, -1);
    for (int e = 0; e < edges; ++e)
        if (!out.tree_edge[e]) {
            out.edge_generator[e] = static_cast<int>(p.generators.size());
            p.generators.push_back("e" + std::to_string(e));
        }
    auto word = [&](const SimplexRef& edge) -> Word {
        if (edge.is_degenerate() || out.edge_generator[edge.base] < 0) return {};
        return {out.edge_generator[edge.base] + 1};
    };
    for (int t = 0; t < static_cast<int>(k.count(2)); ++t) {
        SimplexRef s{2, t, {}};
        Word r = word(k.face(s, 2));
        auto d0 = word(k.face(s, 0));
        r.insert(r.end(), d0.begin(), d0.end());
        auto d1 = inverse(word(k.face(s, 1)));
        r.insert(r.end(), d1.begin(), d1.end());
        r = free_reduce(r);
        if (!r.empty()) p.relators.push_back(std::move(r));
    }
    return out;
}

AbelianGroup abelianization(const GroupPresentation& p) {
    const std::size_t m = p.generators.size();
    IntegerMatrix rel(p.relators.size(), m);
    for (std::size_t r = 0; r < p.relators.size(); ++r)
        for (int letter : p.relators[r]) rel(r, static_cast<std::size_t>(std::abs(letter) - 1)) += letter > 0 ? 1 : -1;
    auto factors = smith_normal_form(rel, Transforms::Skip).invariant_factors();
    return AbelianGroup::from_cyclics(m - factors.size(), factors);
}

TietzeResult tietze_simplify(const GroupPresentation& input, int budget) {
    TietzeResult result;
    auto& p = result.presentation;
    p = input;
    auto spend = [&]() {
        if (result.steps >= budget) {
            result.budget_exhausted = true;
            return false;
        }
        ++result.steps;
        return true;
    };

    for (bool changed = true; changed;) {
        changed = false;
        // reduce and deduplicate relators
        std::vector<Word> kept;
        std::set<Word> seen;
        for (const auto& r : p.relators) {
            auto c = canonical_relator(cyclic_reduce(r));
            if (c.empty() || !seen.insert(c).second) {
                if (!spend()) return result;
                changed = true;
                continue;
            }
            kept.push_back(c);
        }
        p.relators = std::move(kept);

        // eliminate a generator that occurs exactly once in some relator
        for (std::size_t r = 0; r < p.relators.size() && !changed; ++r) {
            const auto& rel = p.relators[r];
            std::vector<int> occurrences(p.generators.size() + 1, 0);
            for (int letter : rel) ++occurrences[std::abs(letter)];
            auto at = std::find_if(rel.begin(), rel.end(), [&](int letter) { return occurrences[std::abs(letter)] == 1; });
            if (at == rel.end()) continue;
            if (!spend()) return result;
            const int g = std::abs(*at);
            // rel = u x v with x = g^{+-1}, so g^{+-1} = u^-1 v^-1 and g = its inverse when needed
            Word u(rel.begin(), at), v(at + 1, rel.end());
            Word value = inverse(u);
            auto vi = inverse(v);
            value.insert(value.end(), vi.begin(), vi.end());
            if (*at < 0) value = inverse(value);
            std::vector<Word> next;
            for (std::size_t s = 0; s < p.relators.size(); ++s) {
                if (s == r) continue;
                Word w;
                for (int letter : p.relators[s]) {
                    if (std::abs(letter) != g) w.push_back(letter);
                    else {
                        auto piece = letter > 0 ? value : inverse(value);
                        w.insert(w.end(), piece.begin(), piece.end());
                    }
                }
                next.push_back(free_reduce(w));
            }
            // renumber generators above g
            for (auto& w : next)
                for (auto& letter : w)
                    if (std::abs(letter) > g) letter += letter > 0 ? -1 : 1;
            p.generators.erase(p.generators.begin() + (g - 1));
            p.relators = std::move(next);
            changed = true;
        }
    }
    return result;
}

int evaluate(const Word& w, const std::vector<int>& images, const FiniteGroup& g) {
    int x = g.identity();
    for (int letter : w) {
        int y = images.at(static_cast<std::size_t>(std::abs(letter) - 1));
        x = g.multiply(x, letter > 0 ? y : g.inverse(y));
    }
    return x;
}

}  // namespace simplicial

#include "simplicial/ordered_complex.hpp"

#include <algorithm>
#include <set>
#include <stdexcept>

namespace simplicial {

OrderedSimplicialComplex OrderedSimplicialComplex::generated_by(int vertex_count, const std::vector<Face>& faces,
                                                                std::vector<std::string> vertex_names) {
    if (vertex_count < 0) throw std::invalid_argument("negative vertex count");
    if (vertex_names.empty())
        for (int v = 0; v < vertex_count; ++v) vertex_names.push_back(std::to_string(v));
    if (static_cast<int>(vertex_names.size()) != vertex_count)
        throw std::invalid_argument("vertex name count does not match vertex count");

    std::set<Face> closed;
    for (int v = 0; v < vertex_count; ++v) closed.insert({v});
    for (const auto& f : faces) {
        if (f.empty()) throw std::invalid_argument("empty face");
        for (std::size_t i = 0; i < f.size(); ++i) {
            if (f[i] < 0 || f[i] >= vertex_count) throw std::invalid_argument("face vertex out of range");
            if (i > 0 && f[i - 1] >= f[i]) throw std::invalid_argument("face vertices must be strictly increasing");
        }
        // every non-empty subset
        const std::size_t n = f.size();
        if (n > 20) throw std::invalid_argument("face too large");
        for (unsigned long mask = 1; mask < (1ul << n); ++mask) {
            Face sub;
            for (std::size_t i = 0; i < n; ++i)
                if (mask & (1ul << i)) sub.push_back(f[i]);
            closed.insert(std::move(sub));
        }
    }

    OrderedSimplicialComplex out;
    out.vertex_names_ = std::move(vertex_names);
    for (const auto& f : closed) {
        const std::size_t d = f.size() - 1;
        if (out.faces_.size() <= d) out.faces_.resize(d + 1);
        out.faces_[d].push_back(f);
    }
    for (auto& level : out.faces_) {
        std::sort(level.begin(), level.end());
        for (std::size_t i = 0; i < level.size(); ++i) out.index_[level[i]] = static_cast<int>(i);
    }
    return out;
}

OrderedSimplicialComplex OrderedSimplicialComplex::simplex(int n) {
    if (n < 0) throw std::invalid_argument("negative simplex dimension");
    Face top(static_cast<std::size_t>(n) + 1);
    for (int v = 0; v <= n; ++v) top[v] = v;
    return generated_by(n + 1, {top});
}

const std::vector<OrderedSimplicialComplex::Face>& OrderedSimplicialComplex::faces(int dim) const {
    static const std::vector<Face> none;
    if (dim < 0 || dim >= static_cast<int>(faces_.size())) return none;
    return faces_[dim];
}

int OrderedSimplicialComplex::index_of(const Face& f) const {
    auto it = index_.find(f);
    return it == index_.end() ? -1 : it->second;
}

std::string OrderedSimplicialComplex::face_name(const Face& f) const {
    bool short_names = std::all_of(f.begin(), f.end(), [&](int v) { return vertex_name(v).size() == 1; });
    std::string out;
    for (std::size_t i = 0; i < f.size(); ++i) {
        if (i > 0 && !short_names) out += ',';
        out += vertex_name(f[i]);
    }
    return out;
}

SimplicialSet complex_to_sset(const OrderedSimplicialComplex& l) {
    SimplicialSetBuilder b;
    for (int d = 0; d <= l.dim(); ++d) {
        for (const auto& f : l.faces(d)) {
            std::vector<SimplexRef> faces;
            for (int i = 0; d > 0 && i <= d; ++i) {
                auto g = f;
                g.erase(g.begin() + i);
                faces.push_back({d - 1, l.index_of(g), {}});
            }
            b.add(d, std::move(faces), l.face_name(f));
        }
    }
    return std::move(b).build();
}

std::optional<OrderedSimplicialComplex> as_ordered_complex(const SimplicialSet& k) {
    std::vector<OrderedSimplicialComplex::Face> faces;
    std::set<OrderedSimplicialComplex::Face> seen;
    for (int n = 0; n <= k.top_dim(); ++n)
        for (int id = 0; id < static_cast<int>(k.count(n)); ++id) {
            auto v = k.vertices({n, id, {}});
            for (std::size_t i = 1; i < v.size(); ++i)
                if (v[i - 1] >= v[i]) return std::nullopt;
            if (!seen.insert(v).second) return std::nullopt;
            faces.push_back(std::move(v));
        }
    std::vector<std::string> names;
    for (int v = 0; v < static_cast<int>(k.count(0)); ++v) names.push_back(k.generator(0, v).name.empty() ? std::to_string(v) : k.generator(0, v).name);
    auto l = OrderedSimplicialComplex::generated_by(static_cast<int>(k.count(0)), faces, std::move(names));
    // the closure must add nothing and the face maps must agree
    for (int n = 0; n <= l.dim(); ++n)
        if (l.count(n) != k.count(n)) return std::nullopt;
    for (int n = 1; n <= k.top_dim(); ++n)
        for (int id = 0; id < static_cast<int>(k.count(n)); ++id)
            for (int i = 0; i <= n; ++i) {
                auto f = k.face({n, id, {}}, i);
                if (f.is_degenerate()) return std::nullopt;
            }
    return l;
}

}  // namespace simplicial

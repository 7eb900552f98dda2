#include "simplicial/constructions.hpp"

#include <algorithm>
#include <functional>
#include <stdexcept>

namespace simplicial {

namespace {

void for_each_subset(int n, int k, const std::function<void(const std::vector<int>&)>& fn) {
    if (k < 0 || k > n) return;
    std::vector<int> idx(static_cast<std::size_t>(k));
    for (int i = 0; i < k; ++i) idx[i] = i;
    while (true) {
        fn(idx);
        int i = k - 1;
        while (i >= 0 && idx[i] == n - k + i) --i;
        if (i < 0) return;
        ++idx[i];
        for (int j = i + 1; j < k; ++j) idx[j] = idx[j - 1] + 1;
    }
}

std::string vertex_name(const std::vector<int>& vs, int n) {
    std::string out;
    for (std::size_t i = 0; i < vs.size(); ++i) {
        if (n >= 10 && i > 0) out += ",";
        out += std::to_string(vs[i]);
    }
    return out;
}

// Faces of Delta[n] (as vertex subsets) accepted by keep, assembled into a
// simplicial set. keep must describe a downward-closed family.
SimplicialSet simplex_family(int n, const std::function<bool(const std::vector<int>&)>& keep) {
    SimplicialSetBuilder b;
    std::map<std::vector<int>, int> id_of;
    for (int m = 0; m <= n; ++m)
        for_each_subset(n + 1, m + 1, [&](const std::vector<int>& vs) {
            if (!keep(vs)) return;
            std::vector<SimplexRef> faces;
            for (int i = 0; m > 0 && i <= m; ++i) {
                auto f = vs;
                f.erase(f.begin() + i);
                faces.push_back({m - 1, id_of.at(f), {}});
            }
            id_of[vs] = b.add(m, std::move(faces), vertex_name(vs, n));
        });
    return std::move(b).build();
}

DegeneracyWord full_word(int dim) {
    DegeneracyWord w;
    for (int j = dim - 1; j >= 0; --j) w.push_back(j);
    return w;
}

std::string gen_label(const SimplicialSet& k, const SimplexRef& s) {
    const auto& name = k.generator(s.base_dim, s.base).name;
    std::string out;
    for (int j : s.word) out += "s" + std::to_string(j);
    if (name.empty()) return out + "(" + std::to_string(s.base_dim) + ":" + std::to_string(s.base) + ")";
    return out + name;
}

}  // namespace

SimplicialSet std_simplex(int n) {
    if (n < 0) throw std::invalid_argument("std_simplex: negative dimension");
    return simplex_family(n, [](const std::vector<int>&) { return true; });
}

SimplicialSet boundary(int n) {
    if (n < 0) throw std::invalid_argument("boundary: negative dimension");
    return simplex_family(n, [n](const std::vector<int>& vs) { return static_cast<int>(vs.size()) <= n; });
}

SimplicialSet horn(int n, int k) {
    if (n < 1) throw std::invalid_argument("horn: dimension must be at least 1");
    if (k < 0 || k > n) throw std::out_of_range("horn: k=" + std::to_string(k) + " out of range 0.." + std::to_string(n));
    return simplex_family(n, [n, k](const std::vector<int>& vs) {
        if (static_cast<int>(vs.size()) == n + 1) return false;
        // the face opposite k is the only n-subset missing k
        if (static_cast<int>(vs.size()) == n && std::find(vs.begin(), vs.end(), k) == vs.end()) return false;
        return true;
    });
}

bool Subcomplex::contains(GeneratorId g) const {
    return g.dim >= 0 && static_cast<std::size_t>(g.dim) < index.size() && g.id >= 0 &&
           static_cast<std::size_t>(g.id) < index[g.dim].size() && index[g.dim][g.id] >= 0;
}

std::set<GeneratorId> all_generators(const SimplicialSet& k) {
    std::set<GeneratorId> ids;
    for (int n = 0; n <= k.top_dim(); ++n)
        for (int id = 0; id < static_cast<int>(k.count(n)); ++id) ids.insert({n, id});
    return ids;
}

std::set<GeneratorId> face_closure(const SimplicialSet& k, const std::set<GeneratorId>& ids) {
    std::set<GeneratorId> closed;
    std::vector<GeneratorId> stack(ids.begin(), ids.end());
    while (!stack.empty()) {
        auto g = stack.back();
        stack.pop_back();
        if (!k.has_generator(g.dim, g.id))
            throw std::invalid_argument("unknown generator id " + std::to_string(g.dim) + ":" + std::to_string(g.id));
        if (!closed.insert(g).second) continue;
        for (const auto& f : k.generator(g).faces) stack.push_back({f.base_dim, f.base});
    }
    return closed;
}

Subcomplex subcomplex(const SetPtr& k, const std::set<GeneratorId>& ids, Closure closure) {
    auto closed = face_closure(*k, ids);
    if (closure == Closure::Require && closed != ids) {
        for (const auto& g : closed)
            if (!ids.count(g))
                throw std::invalid_argument("generator set is not face-closed: missing " + std::to_string(g.dim) + ":" +
                                            std::to_string(g.id));
    }
    std::vector<std::vector<int>> index(static_cast<std::size_t>(k->top_dim() + 1));
    for (int n = 0; n <= k->top_dim(); ++n) index[n].assign(k->count(n), -1);
    SimplicialSetBuilder b;
    std::vector<std::vector<SimplexRef>> images;
    for (const auto& g : closed) {  // set order is dimension-major, id-minor
        std::vector<SimplexRef> faces;
        for (const auto& f : k->generator(g).faces) faces.push_back({f.base_dim, index[f.base_dim][f.base], f.word});
        int id = b.add(g.dim, std::move(faces), k->generator(g).name);
        index[g.dim][g.id] = id;
        if (static_cast<int>(images.size()) <= g.dim) images.resize(static_cast<std::size_t>(g.dim) + 1);
        images[g.dim].push_back(as_ref(g));
    }
    auto sub = share(std::move(b).build());
    return {sub, SimplicialMap(sub, k, std::move(images)), std::move(index)};
}

Subcomplex skeleton(const SetPtr& k, int n) {
    std::set<GeneratorId> ids;
    for (int d = 0; d <= std::min(n, k->top_dim()); ++d)
        for (int id = 0; id < static_cast<int>(k->count(d)); ++id) ids.insert({d, id});
    return subcomplex(k, ids, Closure::Require);
}

Quotient quotient(const SetPtr& k, const std::set<GeneratorId>& sub) {
    if (face_closure(*k, sub) != sub) throw std::invalid_argument("quotient: collapsed set is not a subcomplex");
    SimplicialSetBuilder b;
    const bool has_point = !sub.empty();
    if (has_point) b.add(0, {}, "*");
    std::vector<std::vector<int>> new_id(static_cast<std::size_t>(k->top_dim() + 1));
    std::vector<std::vector<SimplexRef>> images(static_cast<std::size_t>(k->top_dim() + 1));
    std::vector<std::string> log;
    for (int n = 0; n <= k->top_dim(); ++n) {
        new_id[n].assign(k->count(n), -1);
        for (int id = 0; id < static_cast<int>(k->count(n)); ++id) {
            if (sub.count({n, id})) {
                images[n].push_back({0, 0, full_word(n)});
                continue;
            }
            const auto& g = k->generator(n, id);
            std::vector<SimplexRef> faces;
            for (std::size_t i = 0; i < g.faces.size(); ++i) {
                const auto& f = g.faces[i];
                if (sub.count({f.base_dim, f.base})) {
                    faces.push_back({0, 0, full_word(f.dim())});
                    log.push_back("face " + std::to_string(i) + " of " + std::to_string(n) + ":" + std::to_string(id) +
                                  " collapsed to the basepoint");
                } else {
                    faces.push_back({f.base_dim, new_id[f.base_dim][f.base], f.word});
                }
            }
            new_id[n][id] = b.add(n, std::move(faces), g.name);
            images[n].push_back({n, new_id[n][id], {}});
        }
    }
    auto q = share(std::move(b).build());
    return {q, SimplicialMap(k, q, std::move(images)), std::move(log)};
}

Coproduct coproduct(const std::vector<SetPtr>& parts) {
    SimplicialSetBuilder b;
    int top = -1;
    for (const auto& p : parts) top = std::max(top, p->top_dim());
    std::vector<std::vector<std::vector<SimplexRef>>> images(parts.size());
    std::vector<std::vector<int>> offset(parts.size(), std::vector<int>(static_cast<std::size_t>(top + 1), 0));
    for (int n = 0; n <= top; ++n)
        for (std::size_t i = 0; i < parts.size(); ++i) {
            offset[i][n] = static_cast<int>(b.count(n));
            images[i].resize(static_cast<std::size_t>(parts[i]->top_dim() + 1));
            for (int id = 0; id < static_cast<int>(parts[i]->count(n)); ++id) {
                const auto& g = parts[i]->generator(n, id);
                std::vector<SimplexRef> faces;
                for (const auto& f : g.faces) faces.push_back({f.base_dim, f.base + offset[i][f.base_dim], f.word});
                int nid = b.add(n, std::move(faces), g.name);
                images[i][n].push_back({n, nid, {}});
            }
        }
    auto sum = share(std::move(b).build());
    Coproduct out{sum, {}};
    for (std::size_t i = 0; i < parts.size(); ++i) out.injections.emplace_back(parts[i], sum, std::move(images[i]));
    return out;
}

Pushout pushout(const SimplicialMap& f, const SimplicialMap& embedding) {
    if (!(f.source() == embedding.source())) throw std::invalid_argument("pushout: legs have different sources");
    if (!embedding.is_embedding()) throw std::invalid_argument("pushout: the embedding leg is not injective on generators");
    if (auto r = embedding.validate(); !r) throw std::invalid_argument("pushout: embedding leg is not simplicial: " + r.message);
    if (auto r = f.validate(); !r) throw std::invalid_argument("pushout: attaching map is not simplicial: " + r.message);
    const auto& k = f.target();
    const auto& m = embedding.target();
    const auto& l = f.source();

    // generator of M -> generator of L it comes from, if any
    std::map<GeneratorId, GeneratorId> preimage;
    for (int n = 0; n <= l.top_dim(); ++n)
        for (int id = 0; id < static_cast<int>(l.count(n)); ++id) {
            const auto& img = embedding.image(n, id);
            preimage[{img.base_dim, img.base}] = {n, id};
        }

    SimplicialSetBuilder b;
    std::vector<std::vector<SimplexRef>> from_k(static_cast<std::size_t>(k.top_dim() + 1));
    for (int n = 0; n <= k.top_dim(); ++n)
        for (int id = 0; id < static_cast<int>(k.count(n)); ++id) {
            b.add(n, k.generator(n, id).faces, k.generator(n, id).name);
            from_k[n].push_back({n, id, {}});
        }
    std::vector<std::vector<SimplexRef>> from_m(static_cast<std::size_t>(m.top_dim() + 1));
    for (int n = 0; n <= m.top_dim(); ++n)
        for (int id = 0; id < static_cast<int>(m.count(n)); ++id) {
            if (auto it = preimage.find({n, id}); it != preimage.end()) {
                from_m[n].push_back(f.image(it->second.dim, it->second.id));
                continue;
            }
            std::vector<SimplexRef> faces;
            for (const auto& face : m.generator(n, id).faces) {
                auto it = preimage.find({face.base_dim, face.base});
                if (it != preimage.end()) {
                    const auto& target = f.image(it->second.dim, it->second.id);
                    faces.push_back(k.restrict(target, word_to_surjection(face.word, face.dim())));
                } else {
                    const auto& base = from_m[face.base_dim][face.base];
                    faces.push_back({base.base_dim, base.base, face.word});
                }
            }
            int nid = b.add(n, std::move(faces), m.generator(n, id).name);
            from_m[n].push_back({n, nid, {}});
        }
    auto p = share(std::move(b).build());
    return {p, SimplicialMap(f.target_ptr(), p, std::move(from_k)), SimplicialMap(embedding.target_ptr(), p, std::move(from_m))};
}

struct Product::Parts {
    SetPtr left, right, set;
    std::map<Key, int> lookup;
    std::vector<std::vector<SimplexRef>> left_images, right_images;
};

namespace {

// Removes the positions k = j + 1 for each common repeat j.
std::vector<int> strip(const std::vector<int>& eta, const std::vector<bool>& common) {
    std::vector<int> out;
    for (std::size_t k = 0; k < eta.size(); ++k)
        if (k == 0 || !common[k - 1]) out.push_back(eta[k]);
    return out;
}

SimplexRef lookup_pair(const std::map<std::tuple<int, int, int, int, DegeneracyWord, DegeneracyWord>, int>& lookup,
                       const SimplexRef& x, const SimplexRef& y) {
    if (x.dim() != y.dim()) throw std::invalid_argument("product pair: dimensions differ");
    const int n = x.dim();
    auto e1 = word_to_surjection(x.word, n);
    auto e2 = word_to_surjection(y.word, n);
    std::vector<bool> common(static_cast<std::size_t>(n), false);
    DegeneracyWord shared;
    for (int j = n - 1; j >= 0; --j)
        if (e1[j] == e1[j + 1] && e2[j] == e2[j + 1]) {
            common[j] = true;
            shared.push_back(j);
        }
    auto z1 = strip(e1, common);
    auto z2 = strip(e2, common);
    auto it = lookup.find({x.base_dim, x.base, y.base_dim, y.base, surjection_to_word(z1), surjection_to_word(z2)});
    if (it == lookup.end()) throw std::logic_error("product pair: no generator for (" + to_string(x) + ", " + to_string(y) + ")");
    return {n - static_cast<int>(shared.size()), it->second, shared};
}

}  // namespace

Product::Product(SetPtr left, SetPtr right) : Product([&] {
    Parts parts;
    parts.left = left;
    parts.right = right;
    const auto& k = *left;
    const auto& l = *right;
    SimplicialSetBuilder b;
    const int top = (k.empty() || l.empty()) ? -1 : k.top_dim() + l.top_dim();
    parts.left_images.resize(static_cast<std::size_t>(top + 1));
    parts.right_images.resize(static_cast<std::size_t>(top + 1));
    for (int n = 0; n <= top; ++n)
        for (int p = 0; p <= std::min(n, k.top_dim()); ++p)
            for (int sigma = 0; sigma < static_cast<int>(k.count(p)); ++sigma)
                for (int q = std::max(0, n - p); q <= std::min(n, l.top_dim()); ++q)
                    for (int tau = 0; tau < static_cast<int>(l.count(q)); ++tau)
                        for_each_subset(n, n - p, [&](const std::vector<int>& r1) {
                            for_each_subset(n, n - q, [&](const std::vector<int>& r2) {
                                for (int j : r2)
                                    if (std::find(r1.begin(), r1.end(), j) != r1.end()) return;
                                SimplexRef x{p, sigma, DegeneracyWord(r1.rbegin(), r1.rend())};
                                SimplexRef y{q, tau, DegeneracyWord(r2.rbegin(), r2.rend())};
                                std::vector<SimplexRef> faces;
                                for (int i = 0; n > 0 && i <= n; ++i)
                                    faces.push_back(lookup_pair(parts.lookup, k.face(x, i), l.face(y, i)));
                                int id = b.add(n, std::move(faces), "(" + gen_label(k, x) + "," + gen_label(l, y) + ")");
                                parts.lookup[{p, sigma, q, tau, x.word, y.word}] = id;
                                parts.left_images[n].push_back(x);
                                parts.right_images[n].push_back(y);
                            });
                        });
    parts.set = share(std::move(b).build());
    return parts;
}()) {}

Product::Product(Parts parts)
    : left_(parts.left),
      right_(parts.right),
      set_(parts.set),
      lookup_(std::move(parts.lookup)),
      left_proj_(parts.set, parts.left, std::move(parts.left_images)),
      right_proj_(parts.set, parts.right, std::move(parts.right_images)) {}

SimplexRef Product::pair(const SimplexRef& x, const SimplexRef& y) const { return lookup_pair(lookup_, x, y); }

std::pair<SimplexRef, SimplexRef> Product::components(const SimplexRef& s) const {
    return {left_proj_.apply(s), right_proj_.apply(s)};
}

SimplicialMap product_map(const Product& from, const Product& to, const SimplicialMap& f, const SimplicialMap& g) {
    const auto& src = *from.set();
    std::vector<std::vector<SimplexRef>> images(static_cast<std::size_t>(src.top_dim() + 1));
    for (int n = 0; n <= src.top_dim(); ++n)
        for (int id = 0; id < static_cast<int>(src.count(n)); ++id) {
            auto [x, y] = from.components({n, id, {}});
            images[n].push_back(to.pair(f.apply(x), g.apply(y)));
        }
    return {from.set(), to.set(), std::move(images)};
}

SimplicialMap map_from_vertices(const SetPtr& source, const SetPtr& target, const std::vector<int>& vertex_images) {
    if (vertex_images.size() != source->count(0)) throw std::invalid_argument("map_from_vertices: one image per source vertex required");
    std::map<std::vector<int>, GeneratorId> by_vertices;
    for (int n = 0; n <= target->top_dim(); ++n)
        for (int id = 0; id < static_cast<int>(target->count(n)); ++id) {
            auto vs = target->vertices({n, id, {}});
            if (!by_vertices.emplace(vs, GeneratorId{n, id}).second)
                throw std::invalid_argument("map_from_vertices: target simplices are not determined by their vertices");
        }
    std::vector<std::vector<SimplexRef>> images(static_cast<std::size_t>(source->top_dim() + 1));
    for (int n = 0; n <= source->top_dim(); ++n)
        for (int id = 0; id < static_cast<int>(source->count(n)); ++id) {
            std::vector<int> seq;
            for (int v : source->vertices({n, id, {}})) {
                if (v < 0 || static_cast<std::size_t>(v) >= vertex_images.size()) throw std::out_of_range("map_from_vertices: bad vertex");
                seq.push_back(vertex_images[v]);
            }
            if (!std::is_sorted(seq.begin(), seq.end()))
                throw std::invalid_argument("map_from_vertices: image of " + std::to_string(n) + ":" + std::to_string(id) + " is not monotone");
            std::vector<int> distinct = seq;
            distinct.erase(std::unique(distinct.begin(), distinct.end()), distinct.end());
            auto it = by_vertices.find(distinct);
            if (it == by_vertices.end())
                throw std::invalid_argument("map_from_vertices: image of " + std::to_string(n) + ":" + std::to_string(id) + " spans no target simplex");
            std::vector<int> eta;
            for (int v : seq) eta.push_back(static_cast<int>(std::lower_bound(distinct.begin(), distinct.end(), v) - distinct.begin()));
            images[n].push_back({it->second.dim, it->second.id, surjection_to_word(eta)});
        }
    return {source, target, std::move(images)};
}

}  // namespace simplicial

#include "simplicial/simplicial_set.hpp"

#include <algorithm>
#include <functional>
#include <sstream>
#include <stdexcept>

namespace simplicial {

std::string to_string(const SimplexRef& s) {
    std::string out;
    for (int j : s.word) out += "s" + std::to_string(j);
    out += "(" + std::to_string(s.base_dim) + ":" + std::to_string(s.base) + ")";
    return out;
}

bool is_canonical_word(const DegeneracyWord& word, int dim) {
    for (std::size_t i = 0; i < word.size(); ++i) {
        if (word[i] < 0 || word[i] > dim - 1) return false;
        if (i > 0 && word[i] >= word[i - 1]) return false;
    }
    return true;
}

std::vector<int> word_to_surjection(const DegeneracyWord& word, int dim) {
    std::vector<bool> repeat(static_cast<std::size_t>(std::max(dim, 0)), false);
    for (int j : word) {
        if (j < 0 || j >= dim) throw std::invalid_argument("degeneracy index out of range");
        repeat[static_cast<std::size_t>(j)] = true;
    }
    std::vector<int> eta(static_cast<std::size_t>(dim) + 1, 0);
    for (int j = 0; j < dim; ++j) eta[j + 1] = eta[j] + (repeat[j] ? 0 : 1);
    return eta;
}

DegeneracyWord surjection_to_word(std::span<const int> surjection) {
    DegeneracyWord word;
    for (int j = static_cast<int>(surjection.size()) - 2; j >= 0; --j)
        if (surjection[j] == surjection[j + 1]) word.push_back(j);
    return word;
}

SimplexRef degeneracy(const SimplexRef& s, int i) {
    const int n = s.dim();
    if (i < 0 || i > n) throw std::out_of_range("degeneracy index " + std::to_string(i) + " out of range for dimension " + std::to_string(n));
    auto eta = word_to_surjection(s.word, n);
    std::vector<int> lifted(static_cast<std::size_t>(n) + 2);
    for (int k = 0; k <= n + 1; ++k) lifted[k] = eta[k <= i ? k : k - 1];
    return {s.base_dim, s.base, surjection_to_word(lifted)};
}

std::size_t SimplicialSet::count(int dim) const {
    if (dim < 0 || dim > top_dim()) return 0;
    return generators_[dim].size();
}

std::vector<std::size_t> SimplicialSet::counts() const {
    std::vector<std::size_t> c;
    for (const auto& g : generators_) c.push_back(g.size());
    return c;
}

std::size_t SimplicialSet::total_count() const {
    std::size_t t = 0;
    for (const auto& g : generators_) t += g.size();
    return t;
}

bool SimplicialSet::has_generator(int dim, int id) const {
    return dim >= 0 && dim <= top_dim() && id >= 0 && static_cast<std::size_t>(id) < generators_[dim].size();
}

const NonDegenSimplex& SimplicialSet::generator(int dim, int id) const {
    if (!has_generator(dim, id))
        throw std::out_of_range("no generator " + std::to_string(dim) + ":" + std::to_string(id));
    return generators_[dim][id];
}

SimplexRef SimplicialSet::restrict(const SimplexRef& s, std::span<const int> theta) const {
    const int n = s.dim();
    if (theta.empty()) throw std::invalid_argument("restrict: empty monotone map");
    for (std::size_t k = 0; k < theta.size(); ++k) {
        if (theta[k] < 0 || theta[k] > n) throw std::out_of_range("restrict: value out of range");
        if (k > 0 && theta[k] < theta[k - 1]) throw std::invalid_argument("restrict: map is not monotone");
    }
    auto eta = word_to_surjection(s.word, n);
    std::vector<int> c(theta.size());
    for (std::size_t k = 0; k < theta.size(); ++k) c[k] = eta[theta[k]];

    int d = s.base_dim;
    int base = s.base;
    std::vector<bool> hit;
    while (true) {
        hit.assign(static_cast<std::size_t>(d) + 1, false);
        for (int v : c) hit[v] = true;
        int missing = -1;
        for (int v = d; v >= 0; --v)
            if (!hit[v]) {
                missing = v;
                break;
            }
        if (missing < 0) return {d, base, surjection_to_word(c)};

        const auto& faces = generator(d, base).faces;
        if (faces.size() != static_cast<std::size_t>(d) + 1)
            throw std::logic_error("generator " + std::to_string(d) + ":" + std::to_string(base) + " has a malformed face list");
        const SimplexRef& tau = faces[missing];
        for (auto& v : c)
            if (v > missing) --v;
        auto zeta = word_to_surjection(tau.word, d - 1);
        for (auto& v : c) v = zeta[v];
        d = tau.base_dim;
        base = tau.base;
    }
}

SimplexRef SimplicialSet::face(const SimplexRef& s, int i) const {
    const int n = s.dim();
    if (n < 1) throw std::out_of_range("face of a vertex");
    if (i < 0 || i > n) throw std::out_of_range("face index " + std::to_string(i) + " out of range for dimension " + std::to_string(n));
    std::vector<int> theta;
    theta.reserve(static_cast<std::size_t>(n));
    for (int k = 0; k <= n; ++k)
        if (k != i) theta.push_back(k);
    return restrict(s, theta);
}

std::vector<int> SimplicialSet::vertices(const SimplexRef& s) const {
    std::vector<int> base_vertices;
    const SimplexRef base{s.base_dim, s.base, {}};
    for (int j = 0; j <= s.base_dim; ++j) {
        int one[1] = {j};
        base_vertices.push_back(restrict(base, one).base);
    }
    auto eta = word_to_surjection(s.word, s.dim());
    std::vector<int> out;
    for (int v : eta) out.push_back(base_vertices[v]);
    return out;
}

SimplexRef SimplicialSet::front(const SimplexRef& s, int p) const {
    if (p < 0 || p > s.dim()) throw std::out_of_range("front face dimension out of range");
    std::vector<int> theta(static_cast<std::size_t>(p) + 1);
    for (int k = 0; k <= p; ++k) theta[k] = k;
    return restrict(s, theta);
}

SimplexRef SimplicialSet::back(const SimplexRef& s, int q) const {
    const int n = s.dim();
    if (q < 0 || q > n) throw std::out_of_range("back face dimension out of range");
    std::vector<int> theta(static_cast<std::size_t>(q) + 1);
    for (int k = 0; k <= q; ++k) theta[k] = n - q + k;
    return restrict(s, theta);
}

namespace {

// All k-subsets of {0..n-1}, lexicographic, each as an increasing list.
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

}  // namespace

std::vector<SimplexRef> SimplicialSet::all_simplices(int dim) const {
    std::vector<SimplexRef> out;
    if (dim < 0) return out;
    for (int d = 0; d <= std::min(dim, top_dim()); ++d)
        for (int id = 0; id < static_cast<int>(count(d)); ++id)
            for_each_subset(dim, dim - d, [&](const std::vector<int>& repeats) {
                out.push_back({d, id, DegeneracyWord(repeats.rbegin(), repeats.rend())});
            });
    return out;
}

namespace {

std::string describe(int dim, int id, const NonDegenSimplex& g) {
    std::string out = "generator " + std::to_string(dim) + ":" + std::to_string(id);
    if (!g.name.empty()) out += " '" + g.name + "'";
    return out;
}

}  // namespace

ValidationReport SimplicialSet::validate() const {
    for (int n = 0; n <= top_dim(); ++n)
        for (int id = 0; id < static_cast<int>(count(n)); ++id) {
            const auto& g = generators_[n][id];
            const std::size_t expected = n == 0 ? 0 : static_cast<std::size_t>(n) + 1;
            if (g.faces.size() != expected)
                return {false, describe(n, id, g) + ": expected " + std::to_string(expected) + " faces, found " + std::to_string(g.faces.size())};
            for (std::size_t i = 0; i < g.faces.size(); ++i) {
                const auto& f = g.faces[i];
                const std::string where = describe(n, id, g) + ", face " + std::to_string(i);
                if (f.base_dim < 0 || f.dim() != n - 1)
                    return {false, where + ": dimension " + std::to_string(f.dim()) + " != " + std::to_string(n - 1)};
                if (!is_canonical_word(f.word, f.dim()))
                    return {false, where + ": degeneracy word is not canonical"};
                if (!has_generator(f.base_dim, f.base))
                    return {false, where + ": dangling base id " + std::to_string(f.base_dim) + ":" + std::to_string(f.base)};
            }
        }
    for (int n = 2; n <= top_dim(); ++n)
        for (int id = 0; id < static_cast<int>(count(n)); ++id) {
            const SimplexRef s{n, id, {}};
            for (int j = 1; j <= n; ++j)
                for (int i = 0; i < j; ++i) {
                    auto lhs = face(face(s, j), i);
                    auto rhs = face(face(s, i), j - 1);
                    if (lhs != rhs) {
                        std::ostringstream msg;
                        msg << describe(n, id, generators_[n][id]) << ": simplicial identity fails at (i,j)=(" << i << "," << j
                            << "): d" << i << "d" << j << " = " << to_string(lhs) << " but d" << (j - 1) << "d" << i << " = "
                            << to_string(rhs);
                        return {false, msg.str()};
                    }
                }
        }
    return {};
}

bool operator==(const SimplicialSet& a, const SimplicialSet& b) {
    if (a.counts() != b.counts()) return false;
    for (int n = 0; n <= a.top_dim(); ++n)
        for (std::size_t id = 0; id < a.count(n); ++id)
            if (a.generators_[n][id].faces != b.generators_[n][id].faces) return false;
    return true;
}

int SimplicialSetBuilder::add(int dim, std::vector<SimplexRef> faces, std::string name) {
    if (dim < 0) throw std::invalid_argument("negative generator dimension");
    auto& gens = set_.generators_;
    if (static_cast<int>(gens.size()) <= dim) gens.resize(static_cast<std::size_t>(dim) + 1);
    gens[dim].push_back({std::move(faces), std::move(name)});
    return static_cast<int>(gens[dim].size()) - 1;
}

std::size_t SimplicialSetBuilder::count(int dim) const { return set_.count(dim); }

SimplicialSet SimplicialSetBuilder::build() && {
    auto& gens = set_.generators_;
    while (!gens.empty() && gens.back().empty()) gens.pop_back();
    return std::move(set_);
}

SimplicialSet SimplicialSetBuilder::build_checked() && {
    SimplicialSet k = std::move(*this).build();
    if (auto r = k.validate(); !r) throw std::invalid_argument(r.message);
    return k;
}

SimplicialMap::SimplicialMap(SetPtr source, SetPtr target, std::vector<std::vector<SimplexRef>> images)
    : source_(std::move(source)), target_(std::move(target)), images_(std::move(images)) {
    if (!source_ || !target_) throw std::invalid_argument("simplicial map: null endpoint");
    images_.resize(static_cast<std::size_t>(source_->top_dim() + 1));
    for (int n = 0; n <= source_->top_dim(); ++n)
        if (images_[n].size() != source_->count(n))
            throw std::invalid_argument("simplicial map: image table does not match source in dimension " + std::to_string(n));
}

const SimplexRef& SimplicialMap::image(int dim, int id) const {
    if (!source_->has_generator(dim, id)) throw std::out_of_range("simplicial map: no such source generator");
    return images_[dim][id];
}

SimplexRef SimplicialMap::apply(const SimplexRef& s) const {
    const auto& img = image(s.base_dim, s.base);
    if (s.word.empty()) return img;
    auto eta = word_to_surjection(s.word, s.dim());
    return target_->restrict(img, eta);
}

ValidationReport SimplicialMap::validate() const {
    const auto& t = *target_;
    for (int n = 0; n <= source_->top_dim(); ++n)
        for (int id = 0; id < static_cast<int>(source_->count(n)); ++id) {
            const auto& img = images_[n][id];
            const std::string where = "map on generator " + std::to_string(n) + ":" + std::to_string(id);
            if (img.dim() != n) return {false, where + ": image has dimension " + std::to_string(img.dim())};
            if (!t.has_generator(img.base_dim, img.base) || !is_canonical_word(img.word, img.dim()))
                return {false, where + ": image " + to_string(img) + " is not a simplex of the target"};
            for (int i = 0; n > 0 && i <= n; ++i) {
                auto lhs = apply(source_->face({n, id, {}}, i));
                auto rhs = t.face(img, i);
                if (lhs != rhs)
                    return {false, where + ": f(d" + std::to_string(i) + ") = " + to_string(lhs) + " but d" + std::to_string(i) +
                                       "(f) = " + to_string(rhs)};
            }
        }
    return {};
}

bool SimplicialMap::is_embedding() const {
    std::vector<SimplexRef> seen;
    for (const auto& dim : images_)
        for (const auto& img : dim) {
            if (img.is_degenerate()) return false;
            seen.push_back(img);
        }
    std::sort(seen.begin(), seen.end());
    return std::adjacent_find(seen.begin(), seen.end()) == seen.end();
}

SimplicialMap compose(const SimplicialMap& second, const SimplicialMap& first) {
    if (first.target_ptr() != second.source_ptr() && !(first.target() == second.source()))
        throw std::invalid_argument("compose: maps are not composable");
    std::vector<std::vector<SimplexRef>> images(first.images().size());
    for (std::size_t n = 0; n < images.size(); ++n)
        for (const auto& img : first.images()[n]) images[n].push_back(second.apply(img));
    return {first.source_ptr(), second.target_ptr(), std::move(images)};
}

SimplicialMap identity_map(const SetPtr& k) {
    std::vector<std::vector<SimplexRef>> images(static_cast<std::size_t>(k->top_dim() + 1));
    for (int n = 0; n <= k->top_dim(); ++n)
        for (int id = 0; id < static_cast<int>(k->count(n)); ++id) images[n].push_back({n, id, {}});
    return {k, k, std::move(images)};
}

SimplicialMap terminal_map(const SetPtr& k) {
    SimplicialSetBuilder b;
    b.add(0, {}, "*");
    auto point = share(std::move(b).build());
    std::vector<std::vector<SimplexRef>> images(static_cast<std::size_t>(k->top_dim() + 1));
    for (int n = 0; n <= k->top_dim(); ++n) {
        DegeneracyWord w;
        for (int j = n - 1; j >= 0; --j) w.push_back(j);
        images[n].assign(k->count(n), SimplexRef{0, 0, w});
    }
    return {k, point, std::move(images)};
}

}  // namespace simplicial

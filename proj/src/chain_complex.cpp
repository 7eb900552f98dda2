#include "simplicial/chain_complex.hpp"

#include <map>
#include <stdexcept>

namespace simplicial {

namespace {

std::string label_of(const SimplicialSet& k, int n, int id) {
    std::string out = std::to_string(n) + ":" + std::to_string(id);
    const auto& name = k.generator(n, id).name;
    if (!name.empty()) out += " " + name;
    return out;
}

}  // namespace

std::size_t ChainComplex::rank(int n) const {
    if (n < 0 || n > max_degree()) return 0;
    return basis[n].size();
}

IntegerMatrix ChainComplex::differential(int n) const {
    if (n >= 1 && n <= max_degree()) return boundary[n];
    return IntegerMatrix(rank(n - 1), rank(n));
}

bool ChainComplex::is_complex() const {
    for (int n = 2; n <= max_degree(); ++n)
        if (!(boundary[n - 1] * boundary[n]).is_zero()) return false;
    return true;
}

void ChainComplex::push_degree(std::vector<std::string> labels, IntegerMatrix d) {
    const int n = static_cast<int>(basis.size());
    if (d.cols() != labels.size() || d.rows() != rank(n - 1)) throw std::invalid_argument("push_degree: boundary shape mismatch");
    basis.push_back(std::move(labels));
    boundary.push_back(std::move(d));
}

IntegerMatrix ChainMap::at(int n, std::size_t rows, std::size_t cols) const {
    if (n >= 0 && static_cast<std::size_t>(n) < degree.size()) {
        const auto& m = degree[n];
        if (m.rows() != rows || m.cols() != cols) throw std::invalid_argument("chain map: matrix shape mismatch in degree " + std::to_string(n));
        return m;
    }
    return IntegerMatrix(rows, cols);
}

bool is_chain_map(const ChainMap& f, const ChainComplex& source, const ChainComplex& target, int up_to) {
    for (int n = 0; n <= up_to; ++n) {
        auto fn = f.at(n, target.rank(n), source.rank(n));
        auto fm = f.at(n - 1, target.rank(n - 1), source.rank(n - 1));
        if (!(target.differential(n) * fn == fm * source.differential(n))) return false;
    }
    return true;
}

ChainMap compose(const ChainMap& second, const ChainMap& first, const ChainComplex& source, const ChainComplex& middle,
                 const ChainComplex& target) {
    ChainMap out;
    const int top = std::max({source.max_degree(), middle.max_degree(), target.max_degree()});
    for (int n = 0; n <= top; ++n)
        out.degree.push_back(second.at(n, target.rank(n), middle.rank(n)) * first.at(n, middle.rank(n), source.rank(n)));
    return out;
}

ChainMap identity_chain_map(const ChainComplex& c) {
    ChainMap out;
    for (int n = 0; n <= c.max_degree(); ++n) out.degree.push_back(IntegerMatrix::identity(c.rank(n)));
    return out;
}

ChainComplex normalized_chains(const SimplicialSet& k) {
    ChainComplex c;
    for (int n = 0; n <= k.top_dim(); ++n) {
        std::vector<std::string> labels;
        IntegerMatrix d(k.count(n - 1), k.count(n));
        for (int id = 0; id < static_cast<int>(k.count(n)); ++id) {
            labels.push_back(label_of(k, n, id));
            for (int i = 0; n > 0 && i <= n; ++i) {
                auto f = k.face({n, id, {}}, i);
                if (f.is_degenerate()) continue;
                d(f.base, id) += (i % 2 == 0) ? 1 : -1;
            }
        }
        c.push_degree(std::move(labels), std::move(d));
    }
    return c;
}

ChainComplex unnormalized_chains(const SimplicialSet& k, int up_to) {
    if (up_to < 0) up_to = k.top_dim() + 1;
    ChainComplex c;
    if (k.empty()) return c;
    std::map<SimplexRef, std::size_t> previous;
    for (int n = 0; n <= up_to; ++n) {
        auto simplices = k.all_simplices(n);
        std::map<SimplexRef, std::size_t> index;
        std::vector<std::string> labels;
        IntegerMatrix d(previous.size(), simplices.size());
        for (std::size_t col = 0; col < simplices.size(); ++col) {
            const auto& s = simplices[col];
            index[s] = col;
            labels.push_back(to_string(s));
            for (int i = 0; n > 0 && i <= n; ++i) d(previous.at(k.face(s, i)), col) += (i % 2 == 0) ? 1 : -1;
        }
        c.push_degree(std::move(labels), std::move(d));
        previous = std::move(index);
    }
    return c;
}

ChainComplex relative_chains(const SimplicialSet& k, const std::set<GeneratorId>& sub) {
    ChainComplex c;
    std::vector<int> prev_index;
    for (int n = 0; n <= k.top_dim(); ++n) {
        std::vector<int> index(k.count(n), -1);
        std::vector<int> kept;
        for (int id = 0; id < static_cast<int>(k.count(n)); ++id)
            if (!sub.count({n, id})) {
                index[id] = static_cast<int>(kept.size());
                kept.push_back(id);
            }
        std::vector<std::string> labels;
        IntegerMatrix d(c.rank(n - 1), kept.size());
        for (std::size_t col = 0; col < kept.size(); ++col) {
            labels.push_back(label_of(k, n, kept[col]));
            for (int i = 0; n > 0 && i <= n; ++i) {
                auto f = k.face({n, kept[col], {}}, i);
                if (f.is_degenerate() || prev_index[f.base] < 0) continue;
                d(prev_index[f.base], col) += (i % 2 == 0) ? 1 : -1;
            }
        }
        c.push_degree(std::move(labels), std::move(d));
        prev_index = std::move(index);
    }
    while (!c.basis.empty() && c.basis.back().empty()) {
        c.basis.pop_back();
        c.boundary.pop_back();
    }
    return c;
}

ChainMap induced_chain_map(const SimplicialMap& f) {
    const auto& s = f.source();
    const auto& t = f.target();
    ChainMap out;
    for (int n = 0; n <= s.top_dim(); ++n) {
        IntegerMatrix m(t.count(n), s.count(n));
        for (int id = 0; id < static_cast<int>(s.count(n)); ++id) {
            const auto& img = f.image(n, id);
            if (!img.is_degenerate()) m(img.base, id) = 1;
        }
        out.degree.push_back(std::move(m));
    }
    return out;
}

ChainComplex direct_sum(const ChainComplex& a, const ChainComplex& b) {
    ChainComplex c;
    const int top = std::max(a.max_degree(), b.max_degree());
    for (int n = 0; n <= top; ++n) {
        std::vector<std::string> labels;
        for (std::size_t i = 0; i < a.rank(n); ++i) labels.push_back("L " + a.basis[n][i]);
        for (std::size_t i = 0; i < b.rank(n); ++i) labels.push_back("R " + b.basis[n][i]);
        c.push_degree(std::move(labels), block_diagonal(a.differential(n), b.differential(n)));
    }
    return c;
}

long euler_characteristic(const SimplicialSet& k) {
    long chi = 0;
    for (int n = 0; n <= k.top_dim(); ++n) chi += (n % 2 == 0 ? 1 : -1) * static_cast<long>(k.count(n));
    return chi;
}

long euler_characteristic(const ChainComplex& c) {
    long chi = 0;
    for (int n = 0; n <= c.max_degree(); ++n) chi += (n % 2 == 0 ? 1 : -1) * static_cast<long>(c.rank(n));
    return chi;
}

}  // namespace simplicial

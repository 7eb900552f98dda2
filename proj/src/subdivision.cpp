#include "simplicial/subdivision.hpp"

#include <algorithm>
#include <map>

#include "simplicial/chain_operators.hpp"

namespace simplicial {

namespace {

using Face = OrderedSimplicialComplex::Face;
using Chain = std::map<Face, Integer>;

class Subdivider {
public:
    explicit Subdivider(const OrderedSimplicialComplex& l) : l_(l) {
        for (int d = l.dim(); d >= 0; --d)
            for (const auto& f : l.faces(d)) {
                barycenter_[f] = static_cast<int>(faces_.size());
                faces_.push_back(f);
            }
    }

    OrderedSimplicialComplex complex() const {
        std::vector<Face> flags;
        std::vector<int> chain;
        for (int v = 0; v < static_cast<int>(faces_.size()); ++v) {
            chain = {v};
            extend(chain, flags);
        }
        std::vector<std::string> names;
        for (const auto& f : faces_) names.push_back("b" + l_.face_name(f));
        return OrderedSimplicialComplex::generated_by(static_cast<int>(faces_.size()), flags, std::move(names));
    }

    const Chain& sd(const Face& f) {
        if (auto it = memo_.find(f); it != memo_.end()) return it->second;
        Chain out;
        const int b = barycenter_.at(f);
        if (f.size() == 1) {
            out[{b}] = 1;
        } else {
            for (std::size_t i = 0; i < f.size(); ++i) {
                auto g = f;
                g.erase(g.begin() + static_cast<long>(i));
                for (const auto& [flag, c] : sd(g)) {
                    Face coned{b};
                    coned.insert(coned.end(), flag.begin(), flag.end());
                    out[coned] += i % 2 ? -c : c;
                }
            }
            std::erase_if(out, [](const auto& term) { return term.second == 0; });
        }
        return memo_.emplace(f, std::move(out)).first->second;
    }

private:
    // Appends every flag starting with chain (largest face first).
    void extend(std::vector<int>& chain, std::vector<Face>& flags) const {
        flags.push_back(chain);
        const auto& last = faces_[chain.back()];
        for (int v = chain.back() + 1; v < static_cast<int>(faces_.size()); ++v) {
            const auto& g = faces_[v];
            if (g.size() < last.size() && std::includes(last.begin(), last.end(), g.begin(), g.end())) {
                chain.push_back(v);
                extend(chain, flags);
                chain.pop_back();
            }
        }
    }

    const OrderedSimplicialComplex& l_;
    std::vector<Face> faces_;
    std::map<Face, int> barycenter_;
    std::map<Face, Chain> memo_;
};

}  // namespace

Subdivision barycentric_subdivide(const OrderedSimplicialComplex& l) {
    Subdivider s(l);
    Subdivision out;
    out.complex = s.complex();
    for (int n = 0; n <= l.dim(); ++n) {
        IntegerMatrix m(out.complex.count(n), l.count(n));
        for (std::size_t col = 0; col < l.count(n); ++col)
            for (const auto& [flag, c] : s.sd(l.faces(n)[col])) m(out.complex.index_of(flag), col) = c;
        out.sd.degree.push_back(std::move(m));
    }
    auto source = normalized_chains(complex_to_sset(l));
    auto target = normalized_chains(complex_to_sset(out.complex));
    out.chain_map = is_chain_map(out.sd, source, target, l.dim() + 1);
    out.quasi_isomorphism = out.chain_map && is_quasi_isomorphism(out.sd, source, target, l.dim() + 1);
    return out;
}

}  // namespace simplicial

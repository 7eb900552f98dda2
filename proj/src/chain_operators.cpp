#include "simplicial/chain_operators.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

#include "simplicial/smith.hpp"

namespace simplicial {

namespace {

void paste(IntegerMatrix& into, std::size_t row, std::size_t col, const IntegerMatrix& m) {
    for (std::size_t r = 0; r < m.rows(); ++r)
        for (std::size_t c = 0; c < m.cols(); ++c) into(row + r, col + c) = m(r, c);
}

DegeneracyWord full_degeneracy(int n) {
    DegeneracyWord w;
    for (int j = n - 1; j >= 0; --j) w.push_back(j);
    return w;
}

bool is_interval(const SimplicialSet& k) {
    if (k.counts() != std::vector<std::size_t>{2, 1}) return false;
    const auto& e = k.generator(1, 0).faces;
    return e[0] == SimplexRef{0, 1, {}} && e[1] == SimplexRef{0, 0, {}};
}

// Non-degenerate terms (product generator id, sign) of EZ(sigma (x) tau).
std::vector<std::pair<int, int>> shuffle_terms(const Product& product, int p, int sigma, int q, int tau) {
    const auto& k = *product.left();
    const auto& l = *product.right();
    const int n = p + q;
    std::vector<std::pair<int, int>> out;
    // steps[s] true when step s + 1 advances the left factor
    std::vector<bool> steps(static_cast<std::size_t>(n), false);
    std::fill(steps.begin(), steps.begin() + p, true);
    std::sort(steps.begin(), steps.end());
    do {
        std::vector<int> a{0}, b{0};
        int inversions = 0, right_seen = 0;
        for (bool left_step : steps) {
            if (left_step) {
                inversions += right_seen;
                a.push_back(a.back() + 1);
                b.push_back(b.back());
            } else {
                ++right_seen;
                a.push_back(a.back());
                b.push_back(b.back() + 1);
            }
        }
        auto x = k.restrict({p, sigma, {}}, a);
        auto y = l.restrict({q, tau, {}}, b);
        auto s = product.pair(x, y);
        if (!s.is_degenerate()) out.emplace_back(s.base, inversions % 2 ? -1 : 1);
    } while (std::next_permutation(steps.begin(), steps.end()));
    return out;
}

}  // namespace

IntegerMatrix ChainHomotopy::at(int n, std::size_t rows, std::size_t cols) const {
    if (n >= 0 && static_cast<std::size_t>(n) < degree.size()) return degree[n];
    return IntegerMatrix(rows, cols);
}

bool is_chain_homotopy(const ChainHomotopy& h, const ChainMap& f, const ChainMap& g, const ChainComplex& source,
                       const ChainComplex& target, int up_to) {
    for (int n = 0; n <= up_to; ++n) {
        auto lhs = target.differential(n + 1) * h.at(n, target.rank(n + 1), source.rank(n));
        if (n > 0) lhs = lhs + h.at(n - 1, target.rank(n), source.rank(n - 1)) * source.differential(n);
        auto rhs = g.at(n, target.rank(n), source.rank(n)) - f.at(n, target.rank(n), source.rank(n));
        if (lhs != rhs) return false;
    }
    return true;
}

SimplicialMap cylinder_end(const Product& cylinder, int e) {
    if (!is_interval(*cylinder.right())) throw std::invalid_argument("cylinder_end: right factor is not Delta[1]");
    if (e != 0 && e != 1) throw std::invalid_argument("cylinder_end: end must be 0 or 1");
    const auto& k = *cylinder.left();
    std::vector<std::vector<SimplexRef>> images(static_cast<std::size_t>(k.top_dim() + 1));
    for (int n = 0; n <= k.top_dim(); ++n)
        for (int id = 0; id < static_cast<int>(k.count(n)); ++id)
            images[n].push_back(cylinder.pair({n, id, {}}, {0, e, full_degeneracy(n)}));
    return SimplicialMap(cylinder.left(), cylinder.set(), std::move(images));
}

Prism prism_homotopy(const Product& cylinder, const SimplicialMap& h) {
    if (!is_interval(*cylinder.right())) throw std::invalid_argument("prism_homotopy: right factor is not Delta[1]");
    if (!(h.source() == *cylinder.set())) throw std::invalid_argument("prism_homotopy: H is not defined on the cylinder");
    const auto& k = *cylinder.left();
    const auto& l = h.target();

    Prism out;
    for (int n = 0; n <= k.top_dim(); ++n) {
        IntegerMatrix d(l.count(n + 1), k.count(n));
        for (int id = 0; id < static_cast<int>(k.count(n)); ++id) {
            for (int i = 0; i <= n; ++i) {
                std::vector<int> eta(static_cast<std::size_t>(n) + 2);
                for (int v = 0; v <= n + 1; ++v) eta[v] = v <= i ? 0 : 1;
                SimplexRef interval{1, 0, surjection_to_word(eta)};
                auto image = h.apply(cylinder.pair(degeneracy({n, id, {}}, i), interval));
                if (!image.is_degenerate()) d(image.base, id) += i % 2 ? -1 : 1;
            }
        }
        out.homotopy.degree.push_back(std::move(d));
    }
    out.start = induced_chain_map(compose(h, cylinder_end(cylinder, 0)));
    out.end = induced_chain_map(compose(h, cylinder_end(cylinder, 1)));
    out.identity_holds =
        is_chain_homotopy(out.homotopy, out.start, out.end, normalized_chains(k), normalized_chains(l), k.top_dim());
    return out;
}

bool HomotopyReport::ok() const {
    if (!identity_holds) return false;
    for (bool e : equal_on_homology)
        if (!e) return false;
    return true;
}

HomotopyReport homotopic_maps_equal_on_homology(const SimplicialMap& f, const SimplicialMap& g, const Product& cylinder,
                                                const SimplicialMap& h) {
    if (compose(h, cylinder_end(cylinder, 0)).images() != f.images())
        throw std::invalid_argument("homotopy does not restrict to f at the 0 end");
    if (compose(h, cylinder_end(cylinder, 1)).images() != g.images())
        throw std::invalid_argument("homotopy does not restrict to g at the 1 end");
    auto prism = prism_homotopy(cylinder, h);
    const int top = f.source().top_dim();
    auto source = GradedHomology::homology(normalized_chains(f.source()), top);
    auto target = GradedHomology::homology(normalized_chains(f.target()), top);
    HomotopyReport report;
    report.identity_holds = prism.identity_holds;
    for (int n = 0; n <= top; ++n)
        report.equal_on_homology.push_back(induced_map(prism.start, source, target, n).matrix ==
                                           induced_map(prism.end, source, target, n).matrix);
    return report;
}

ChainComplex mapping_cone(const ChainMap& f, const ChainComplex& source, const ChainComplex& target) {
    const int top = std::max(source.max_degree() + 1, target.max_degree());
    if (!is_chain_map(f, source, target, top)) throw std::invalid_argument("mapping_cone: not a chain map");
    ChainComplex cone;
    for (int n = 0; n <= top; ++n) {
        std::vector<std::string> labels;
        if (n >= 1)
            for (const auto& s : source.basis[n - 1]) labels.push_back("C " + s);
        if (n <= target.max_degree())
            for (const auto& s : target.basis[n]) labels.push_back("D " + s);
        const std::size_t c_rows = source.rank(n - 2), c_cols = source.rank(n - 1);
        IntegerMatrix d(n == 0 ? 0 : c_rows + target.rank(n - 1), c_cols + target.rank(n));
        if (n >= 1) {
            paste(d, 0, 0, -source.differential(n - 1));
            paste(d, c_rows, 0, f.at(n - 1, target.rank(n - 1), c_cols));
            paste(d, c_rows, c_cols, target.differential(n));
        }
        cone.push_degree(std::move(labels), std::move(d));
    }
    return cone;
}

bool is_quasi_isomorphism(const ChainMap& f, const ChainComplex& source, const ChainComplex& target, int up_to) {
    auto cone = mapping_cone(f, source, target);
    for (const auto& g : homology(cone, std::min(up_to, cone.max_degree())))
        if (!g.is_trivial()) return false;
    return true;
}

std::size_t TensorComplex::index(int p, std::size_t i, int q, std::size_t j) const {
    return offset.at(static_cast<std::size_t>(p + q)).at(static_cast<std::size_t>(p)) + i * right_ranks.at(q) + j;
}

TensorComplex tensor_product(const ChainComplex& c, const ChainComplex& d) {
    TensorComplex t;
    for (int p = 0; p <= c.max_degree(); ++p) t.left_ranks.push_back(c.rank(p));
    for (int q = 0; q <= d.max_degree(); ++q) t.right_ranks.push_back(d.rank(q));
    if (c.max_degree() < 0 || d.max_degree() < 0) return t;
    const int top = c.max_degree() + d.max_degree();
    std::vector<std::size_t> ranks;
    for (int n = 0; n <= top; ++n) {
        std::vector<std::size_t> offsets;
        std::size_t at = 0;
        for (int p = 0; p <= n; ++p) {
            offsets.push_back(at);
            at += c.rank(p) * d.rank(n - p);
        }
        t.offset.push_back(std::move(offsets));
        ranks.push_back(at);
    }
    for (int n = 0; n <= top; ++n) {
        std::vector<std::string> labels;
        IntegerMatrix m(n == 0 ? 0 : ranks[n - 1], ranks[n]);
        for (int p = 0; p <= n; ++p) {
            const int q = n - p;
            const auto dc = c.differential(p);
            const auto dd = d.differential(q);
            for (std::size_t i = 0; i < c.rank(p); ++i)
                for (std::size_t j = 0; j < d.rank(q); ++j) {
                    labels.push_back(c.basis[p][i] + " x " + d.basis[q][j]);
                    const auto col = t.index(p, i, q, j);
                    for (std::size_t r = 0; p > 0 && r < dc.rows(); ++r)
                        if (dc(r, i) != 0) m(t.index(p - 1, r, q, j), col) += dc(r, i);
                    for (std::size_t r = 0; q > 0 && r < dd.rows(); ++r)
                        if (dd(r, j) != 0) m(t.index(p, i, q - 1, r), col) += p % 2 ? -dd(r, j) : dd(r, j);
                }
        }
        t.complex.push_degree(std::move(labels), std::move(m));
    }
    return t;
}

ChainMap alexander_whitney(const Product& product, const TensorComplex& tensor) {
    const auto& k = *product.left();
    const auto& l = *product.right();
    const auto& kl = *product.set();
    ChainMap aw;
    for (int n = 0; n <= kl.top_dim(); ++n) {
        IntegerMatrix m(tensor.complex.rank(n), kl.count(n));
        for (int id = 0; id < static_cast<int>(kl.count(n)); ++id) {
            auto [x, y] = product.components({n, id, {}});
            for (int i = 0; i <= n; ++i) {
                auto a = k.front(x, i);
                auto b = l.back(y, n - i);
                if (!a.is_degenerate() && !b.is_degenerate()) m(tensor.index(i, a.base, n - i, b.base), id) += 1;
            }
        }
        aw.degree.push_back(std::move(m));
    }
    return aw;
}

ChainMap shuffle_ez(const Product& product, const TensorComplex& tensor) {
    const auto& k = *product.left();
    const auto& l = *product.right();
    const auto& kl = *product.set();
    ChainMap ez;
    for (int n = 0; n <= tensor.complex.max_degree(); ++n) {
        IntegerMatrix m(kl.count(n), tensor.complex.rank(n));
        for (int p = std::max(0, n - l.top_dim()); p <= std::min(n, k.top_dim()); ++p)
            for (int sigma = 0; sigma < static_cast<int>(k.count(p)); ++sigma)
                for (int tau = 0; tau < static_cast<int>(l.count(n - p)); ++tau)
                    for (auto [id, sign] : shuffle_terms(product, p, sigma, n - p, tau))
                        m(id, tensor.index(p, sigma, n - p, tau)) += sign;
        ez.degree.push_back(std::move(m));
    }
    return ez;
}

std::vector<Integer> cross_chain(const Product& product, const std::vector<Integer>& x, int p, const std::vector<Integer>& y,
                                 int q) {
    std::vector<Integer> out(product.set()->count(p + q));
    for (std::size_t i = 0; i < x.size(); ++i) {
        if (x[i] == 0) continue;
        for (std::size_t j = 0; j < y.size(); ++j) {
            if (y[j] == 0) continue;
            for (auto [id, sign] : shuffle_terms(product, p, static_cast<int>(i), q, static_cast<int>(j)))
                out[id] += sign * x[i] * y[j];
        }
    }
    return out;
}

bool KunnethReport::ok() const {
    if (!cross_products_injective) return false;
    for (const auto& r : rows)
        if (!r.ok()) return false;
    return true;
}

std::string KunnethReport::to_text() const {
    std::ostringstream out;
    for (const auto& r : rows)
        out << "H_" << r.degree << "(K x L) = " << r.direct.to_string() << " vs " << r.predicted.to_string()
            << (r.ok() ? "  PASS\n" : "  FAIL\n");
    out << "cross products of free classes independent: " << (cross_products_injective ? "PASS" : "FAIL") << '\n';
    return out.str();
}

KunnethReport kunneth_check(const SetPtr& k, const SetPtr& l, int up_to) {
    Product product(k, l);
    const auto& kl = *product.set();
    if (up_to < 0) up_to = kl.top_dim();
    auto hk = GradedHomology::homology(normalized_chains(*k), std::max(k->top_dim(), 0));
    auto hl = GradedHomology::homology(normalized_chains(*l), std::max(l->top_dim(), 0));
    auto group = [](const GradedHomology& h, int n) { return n <= h.up_to() ? h.group(n) : AbelianGroup::trivial(); };
    const auto chains = normalized_chains(kl);
    const auto direct = homology(chains, up_to);
    // Representatives are only needed in degrees with free classes on both sides.
    int tracked = -1;
    for (int n = 0; n <= up_to; ++n)
        for (int p = 0; p <= n; ++p)
            if (group(hk, p).betti() > 0 && group(hl, n - p).betti() > 0) tracked = n;
    auto hkl = GradedHomology::homology(chains, tracked);

    KunnethReport report;
    for (int n = 0; n <= up_to; ++n) {
        KunnethRow row;
        row.degree = n;
        row.direct = direct[n];
        for (int p = 0; p <= n; ++p) {
            row.predicted = direct_sum(row.predicted, tensor(group(hk, p), group(hl, n - p)));
            if (p <= n - 1) row.predicted = direct_sum(row.predicted, tor(group(hk, p), group(hl, n - 1 - p)));
        }

        std::vector<std::vector<Integer>> columns;
        for (int p = 0; p <= n && p <= hk.up_to(); ++p) {
            const int q = n - p;
            if (q > hl.up_to()) continue;
            const auto& rk = hk.at(p).representatives();
            const auto& rl = hl.at(q).representatives();
            for (std::size_t i = 0; i < hk.group(p).betti(); ++i)
                for (std::size_t j = 0; j < hl.group(q).betti(); ++j) {
                    auto cls = hkl.class_of(n, cross_chain(product, rk.column(i), p, rl.column(j), q));
                    cls.resize(direct[n].betti());
                    columns.push_back(std::move(cls));
                }
        }
        if (!columns.empty()) {
            IntegerMatrix m(direct[n].betti(), columns.size());
            for (std::size_t c = 0; c < columns.size(); ++c) m.set_column(c, columns[c]);
            if (integer_rank(m) != columns.size()) report.cross_products_injective = false;
        }
        report.rows.push_back(std::move(row));
    }
    return report;
}

}  // namespace simplicial

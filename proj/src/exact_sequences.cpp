#include "simplicial/exact_sequences.hpp"

#include <sstream>
#include <stdexcept>

#include "simplicial/constructions.hpp"

namespace simplicial {

namespace {

IntegerMatrix at(const std::vector<IntegerMatrix>& ms, int n, std::size_t rows, std::size_t cols) {
    if (n >= 0 && static_cast<std::size_t>(n) < ms.size()) return ms[n];
    return IntegerMatrix(rows, cols);
}

// Generators of a face-closed set, listed per dimension in id order, with
// the position of each inside that list.
struct Enumeration {
    std::vector<std::vector<int>> ids;
    std::vector<std::vector<int>> position;  // ambient id -> index or -1
};

Enumeration enumerate(const SimplicialSet& k, const std::set<GeneratorId>& gens) {
    Enumeration e;
    e.ids.resize(static_cast<std::size_t>(k.top_dim() + 1));
    e.position.resize(static_cast<std::size_t>(k.top_dim() + 1));
    for (int n = 0; n <= k.top_dim(); ++n) e.position[n].assign(k.count(n), -1);
    for (const auto& g : gens) {
        e.position[g.dim][g.id] = static_cast<int>(e.ids[g.dim].size());
        e.ids[g.dim].push_back(g.id);
    }
    return e;
}

// Normalized chains of the subcomplex spanned by gens, in ambient labels.
ChainComplex sub_chains(const SimplicialSet& k, const std::set<GeneratorId>& gens, const Enumeration& e) {
    std::set<GeneratorId> complement;
    for (int n = 0; n <= k.top_dim(); ++n)
        for (int id = 0; id < static_cast<int>(k.count(n)); ++id)
            if (!gens.count({n, id})) complement.insert({n, id});
    // C(L) = C(K)/C(K - L) only when K - L is a subcomplex, so build directly.
    ChainComplex c;
    int top = -1;
    for (const auto& g : gens) top = std::max(top, g.dim);
    auto full = normalized_chains(k);
    for (int n = 0; n <= top; ++n) {
        std::vector<std::string> labels;
        IntegerMatrix d(n == 0 ? 0 : e.ids[n - 1].size(), e.ids[n].size());
        for (std::size_t col = 0; col < e.ids[n].size(); ++col) {
            labels.push_back(full.basis[n][e.ids[n][col]]);
            for (std::size_t row = 0; n > 0 && row < e.ids[n - 1].size(); ++row)
                d(row, col) = full.boundary[n](e.ids[n - 1][row], e.ids[n][col]);
        }
        c.push_degree(std::move(labels), std::move(d));
    }
    return c;
}

// Basis inclusion of the enumerated generators into all generators of K.
IntegerMatrix inclusion_matrix(const SimplicialSet& k, const Enumeration& e, int n) {
    std::size_t cols = (n >= 0 && n < static_cast<int>(e.ids.size())) ? e.ids[n].size() : 0;
    IntegerMatrix m(k.count(n), cols);
    for (std::size_t c = 0; c < cols; ++c) m(e.ids[n][c], c) = 1;
    return m;
}

void check_closed(const SimplicialSet& k, const std::set<GeneratorId>& s, const char* what) {
    if (face_closure(k, s) != s) throw std::invalid_argument(std::string(what) + " is not a subcomplex");
}

}  // namespace

bool ShortExactSequence::is_valid(int up_to) const {
    if (!is_chain_map(inclusion, sub, total, up_to) || !is_chain_map(projection, total, quotient, up_to)) return false;
    for (int n = 0; n <= up_to; ++n) {
        auto i = inclusion.at(n, total.rank(n), sub.rank(n));
        auto j = projection.at(n, quotient.rank(n), total.rank(n));
        auto s = at(lift, n, total.rank(n), quotient.rank(n));
        auto r = at(retraction, n, sub.rank(n), total.rank(n));
        if (!(j * i).is_zero()) return false;
        if (!(r * i).is_identity() && sub.rank(n) > 0) return false;
        if (!(j * s).is_identity() && quotient.rank(n) > 0) return false;
        if (sub.rank(n) + quotient.rank(n) != total.rank(n)) return false;
    }
    return true;
}

bool ExactSequenceReport::all_exact() const {
    for (bool e : exact)
        if (!e) return false;
    return true;
}

std::string ExactSequenceReport::to_text() const {
    std::ostringstream out;
    for (std::size_t i = 0; i < nodes.size(); ++i) {
        out << nodes[i].label << " = " << nodes[i].group.to_string() << "  [" << (exact[i] ? "exact" : "NOT EXACT") << "]\n";
    }
    return out.str();
}

ExactSequenceReport long_exact_sequence(const ShortExactSequence& ses, int up_to) {
    if (!ses.is_valid(up_to + 1)) throw std::invalid_argument("long_exact_sequence: not a split short exact sequence");
    auto ha = GradedHomology::homology(ses.sub, up_to + 1);
    auto hb = GradedHomology::homology(ses.total, up_to + 1);
    auto hc = GradedHomology::homology(ses.quotient, up_to + 1);

    ExactSequenceReport report;
    report.connecting.resize(static_cast<std::size_t>(up_to) + 2);
    for (int p = 1; p <= up_to + 1; ++p) {
        const auto& src = hc.at(p);
        const auto& dst = ha.at(p - 1);
        auto s = at(ses.lift, p, ses.total.rank(p), ses.quotient.rank(p));
        auto r = at(ses.retraction, p - 1, ses.sub.rank(p - 1), ses.total.rank(p - 1));
        auto i = ses.inclusion.at(p - 1, ses.total.rank(p - 1), ses.sub.rank(p - 1));
        auto d = ses.total.differential(p);
        const auto& reps = src.representatives();
        IntegerMatrix m(dst.group().generator_count(), src.group().generator_count());
        for (std::size_t c = 0; c < reps.cols(); ++c) {
            auto boundary = d.apply(s.apply(reps.column(c)));
            auto pulled = r.apply(boundary);
            if (i.apply(pulled) != boundary) throw std::logic_error("connecting map: boundary of the lift is not in the subcomplex");
            m.set_column(c, dst.class_of(pulled));
        }
        report.connecting[p] = GroupHom{src.group(), dst.group(), std::move(m)};
    }

    auto label = [](const std::string& name, int p) { return "H_" + std::to_string(p) + "(" + name + ")"; };
    for (int p = up_to; p >= 0; --p) {
        report.nodes.push_back({label(ses.sub_name, p), ha.group(p)});
        report.nodes.push_back({label(ses.total_name, p), hb.group(p)});
        report.nodes.push_back({label(ses.quotient_name, p), hc.group(p)});
        report.maps.push_back(induced_map(ses.inclusion, ha, hb, p));
        report.maps.push_back(induced_map(ses.projection, hb, hc, p));
        if (p > 0) report.maps.push_back(report.connecting[p]);
    }
    const auto& first = report.nodes.front().group;
    const auto& last = report.nodes.back().group;
    GroupHom incoming = report.connecting[up_to + 1];
    GroupHom outgoing{last, AbelianGroup::trivial(), IntegerMatrix(0, last.generator_count())};
    (void)first;
    for (std::size_t k = 0; k < report.nodes.size(); ++k) {
        const GroupHom& in = k == 0 ? incoming : report.maps[k - 1];
        const GroupHom& out = k + 1 == report.nodes.size() ? outgoing : report.maps[k];
        report.exact.push_back(is_exact_at(in, out));
    }
    return report;
}

ShortExactSequence pair_sequence(const SimplicialSet& k, const std::set<GeneratorId>& sub) {
    check_closed(k, sub, "L");
    auto e = enumerate(k, sub);
    ShortExactSequence ses;
    ses.sub = sub_chains(k, sub, e);
    ses.total = normalized_chains(k);
    ses.quotient = relative_chains(k, sub);
    ses.sub_name = "L";
    ses.total_name = "K";
    ses.quotient_name = "K,L";

    std::set<GeneratorId> rest;
    for (int n = 0; n <= k.top_dim(); ++n)
        for (int id = 0; id < static_cast<int>(k.count(n)); ++id)
            if (!sub.count({n, id})) rest.insert({n, id});
    auto q = enumerate(k, rest);
    for (int n = 0; n <= k.top_dim(); ++n) {
        auto i = inclusion_matrix(k, e, n);
        auto s = inclusion_matrix(k, q, n);
        ses.inclusion.degree.push_back(i);
        ses.retraction.push_back(i.transpose());
        ses.projection.degree.push_back(s.transpose());
        ses.lift.push_back(s);
    }
    return ses;
}

ExactSequenceReport pair_les(const SimplicialSet& k, const std::set<GeneratorId>& sub, int up_to) {
    return long_exact_sequence(pair_sequence(k, sub), up_to);
}

ShortExactSequence mayer_vietoris_sequence(const SimplicialSet& k, const std::set<GeneratorId>& a, const std::set<GeneratorId>& b) {
    check_closed(k, a, "A");
    check_closed(k, b, "B");
    std::set<GeneratorId> both, either;
    for (const auto& g : a) {
        either.insert(g);
        if (b.count(g)) both.insert(g);
    }
    either.insert(b.begin(), b.end());
    if (either != all_generators(k)) throw std::invalid_argument("mayer_vietoris: A u B does not cover K");

    auto ea = enumerate(k, a), eb = enumerate(k, b), eab = enumerate(k, both);
    ShortExactSequence ses;
    ses.sub = sub_chains(k, both, eab);
    ses.total = direct_sum(sub_chains(k, a, ea), sub_chains(k, b, eb));
    ses.quotient = normalized_chains(k);
    ses.sub_name = "A n B";
    ses.total_name = "A + B";
    ses.quotient_name = "K";

    for (int n = 0; n <= k.top_dim(); ++n) {
        auto ia = inclusion_matrix(k, ea, n), ib = inclusion_matrix(k, eb, n), iab = inclusion_matrix(k, eab, n);
        // A n B -> A (+) B, x -> (x, -x)
        auto to_a = ia.transpose() * iab;
        auto to_b = ib.transpose() * iab;
        ses.inclusion.degree.push_back(vstack(to_a, -to_b));
        // A (+) B -> K, (a, b) -> a + b
        ses.projection.degree.push_back(hstack(ia, ib));
        // lift a generator to A when it lies there, otherwise to B
        IntegerMatrix s(ia.cols() + ib.cols(), k.count(n));
        for (int id = 0; id < static_cast<int>(k.count(n)); ++id) {
            if (ea.position[n][id] >= 0) s(ea.position[n][id], id) = 1;
            else s(ia.cols() + eb.position[n][id], id) = 1;
        }
        ses.lift.push_back(std::move(s));
        // read the A-coordinates of generators in A n B
        ses.retraction.push_back(hstack(to_a.transpose(), IntegerMatrix(iab.cols(), ib.cols())));
    }
    return ses;
}

ExactSequenceReport mayer_vietoris(const SimplicialSet& k, const std::set<GeneratorId>& a, const std::set<GeneratorId>& b, int up_to) {
    return long_exact_sequence(mayer_vietoris_sequence(k, a, b), up_to);
}

}  // namespace simplicial

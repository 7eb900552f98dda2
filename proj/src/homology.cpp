#include "simplicial/homology.hpp"

#include <stdexcept>

namespace simplicial {

namespace {

IntegerMatrix scalar(std::size_t n, const Integer& m) {
    IntegerMatrix s(n, n);
    for (std::size_t i = 0; i < n; ++i) s(i, i) = m;
    return s;
}

// in: C' -> C_n (image = boundaries), out: C_n -> C'' (kernel = cycles).
Subquotient subquotient_at(const IntegerMatrix& in, const IntegerMatrix& out, const Integer& modulus) {
    auto cycles = kernel_basis_mod(out, modulus);
    IntegerMatrix boundaries = modulus == 0 ? in : hstack(in, scalar(in.rows(), modulus));
    return Subquotient(std::move(cycles), boundaries);
}

void require_complex(const ChainComplex& c) {
    if (!c.is_complex()) throw std::logic_error("corrupted chain complex: d d != 0");
}

}  // namespace

GradedHomology GradedHomology::homology(const ChainComplex& c, int up_to, const Integer& modulus) {
    require_complex(c);
    GradedHomology h;
    h.modulus_ = modulus;
    for (int n = 0; n <= up_to; ++n) h.degrees_.push_back(subquotient_at(c.differential(n + 1), c.differential(n), modulus));
    return h;
}

GradedHomology GradedHomology::cohomology(const ChainComplex& c, int up_to, const Integer& modulus) {
    require_complex(c);
    GradedHomology h;
    h.modulus_ = modulus;
    for (int n = 0; n <= up_to; ++n)
        h.degrees_.push_back(subquotient_at(c.differential(n).transpose(), c.differential(n + 1).transpose(), modulus));
    return h;
}

std::vector<AbelianGroup> GradedHomology::groups() const {
    std::vector<AbelianGroup> g;
    for (const auto& d : degrees_) g.push_back(d.group());
    return g;
}

std::vector<AbelianGroup> homology(const ChainComplex& c, int up_to) {
    if (up_to < 0) up_to = c.max_degree();
    require_complex(c);
    // Groups only: ranks and invariant factors of untracked reductions.
    std::vector<SmithForm> forms;
    for (int n = 0; n <= up_to + 1; ++n) forms.push_back(smith_normal_form(c.differential(n), Transforms::Skip));
    std::vector<AbelianGroup> out;
    for (int n = 0; n <= up_to; ++n) {
        const auto& next = forms[n + 1];
        std::vector<Integer> torsion;
        for (std::size_t i = 0; i < next.rank; ++i)
            if (next.S(i, i) != 1) torsion.push_back(next.S(i, i));
        out.push_back(AbelianGroup::from_cyclics(c.rank(n) - forms[n].rank - next.rank, torsion));
    }
    return out;
}

std::vector<AbelianGroup> reduced_homology(const ChainComplex& c, int up_to) {
    auto h = homology(c, up_to);
    if (c.rank(0) > 0 && !h.empty()) {
        if (h[0].betti() == 0) throw std::logic_error("reduced homology: H_0 of a non-empty complex has no free part");
        h[0] = AbelianGroup::from_cyclics(h[0].betti() - 1, h[0].torsion());
    }
    return h;
}

namespace {

std::vector<AbelianGroup> with_coefficients(const ChainComplex& c, const AbelianGroup& pi, int up_to, bool co) {
    if (up_to < 0) up_to = c.max_degree();
    std::vector<AbelianGroup> total(static_cast<std::size_t>(std::max(up_to + 1, 0)));
    auto add = [&](const Integer& modulus, std::size_t copies) {
        if (copies == 0) return;
        auto h = co ? GradedHomology::cohomology(c, up_to, modulus) : GradedHomology::homology(c, up_to, modulus);
        for (int n = 0; n <= up_to; ++n)
            for (std::size_t i = 0; i < copies; ++i) total[n] = direct_sum(total[n], h.group(n));
    };
    add(0, pi.betti());
    for (const auto& d : pi.torsion()) add(d, 1);
    return total;
}

}  // namespace

std::vector<AbelianGroup> homology_with_coefficients(const ChainComplex& c, const AbelianGroup& coefficients, int up_to) {
    return with_coefficients(c, coefficients, up_to, false);
}

std::vector<AbelianGroup> cohomology_with_coefficients(const ChainComplex& c, const AbelianGroup& coefficients, int up_to) {
    return with_coefficients(c, coefficients, up_to, true);
}

GroupHom induced_map(const ChainMap& f, const GradedHomology& source, const GradedHomology& target, int n) {
    const auto& s = source.at(n);
    const auto& t = target.at(n);
    auto fn = f.at(n, t.ambient_dim(), s.ambient_dim());
    const auto& reps = s.representatives();
    IntegerMatrix m(t.group().generator_count(), s.group().generator_count());
    for (std::size_t j = 0; j < reps.cols(); ++j) {
        auto image = fn.apply(reps.column(j));
        if (target.modulus() != 0)
            for (auto& v : image) v = mod_floor(v, target.modulus());
        m.set_column(j, t.class_of(image));
    }
    return {s.group(), t.group(), std::move(m)};
}

GroupHom augmentation(const GradedHomology& h) {
    const auto& h0 = h.at(0);
    const auto& reps = h0.representatives();
    IntegerMatrix m(1, reps.cols());
    for (std::size_t j = 0; j < reps.cols(); ++j) {
        Integer total = 0;
        for (std::size_t r = 0; r < reps.rows(); ++r) total += reps(r, j);
        m(0, j) = total;
    }
    return {h0.group(), AbelianGroup::free(1), std::move(m)};
}

}  // namespace simplicial

namespace simplicial {

bool UctReport::ok() const {
    for (const auto& r : rows)
        if (!r.ok()) return false;
    return true;
}

std::string UctReport::to_text() const {
    std::string out;
    for (const auto& r : rows) {
        const auto n = std::to_string(r.degree);
        out += "H_" + n + " = " + r.homology.to_string() + " vs " + r.tensor_plus_tor.to_string() + ", H^" + n + " = " +
               r.cohomology.to_string() + " vs " + r.hom_plus_ext.to_string() + (r.ok() ? "  PASS\n" : "  FAIL\n");
    }
    return out;
}

UctReport uct_check(const ChainComplex& c, const AbelianGroup& coefficients, int up_to) {
    if (up_to < 0) up_to = c.max_degree();
    auto h = homology(c, up_to);
    auto hc = homology_with_coefficients(c, coefficients, up_to);
    auto cc = cohomology_with_coefficients(c, coefficients, up_to);
    UctReport report;
    for (int n = 0; n <= up_to; ++n) {
        UctRow row;
        row.degree = n;
        row.homology = hc[n];
        row.cohomology = cc[n];
        auto previous = n > 0 ? h[n - 1] : AbelianGroup::trivial();
        row.tensor_plus_tor = direct_sum(tensor(h[n], coefficients), tor(previous, coefficients));
        row.hom_plus_ext = direct_sum(hom(h[n], coefficients), ext(previous, coefficients));
        report.rows.push_back(std::move(row));
    }
    return report;
}

}  // namespace simplicial

#include "simplicial/cup_product.hpp"

#include <array>
#include <iomanip>
#include <sstream>
#include <stdexcept>

namespace simplicial {

namespace {

Integer reduce(const Integer& v, const Integer& modulus) { return modulus == 0 ? v : mod_floor(v, modulus); }

std::string coords(const std::vector<Integer>& v) {
    std::string out = "(";
    for (std::size_t i = 0; i < v.size(); ++i) out += (i ? "," : "") + v[i].str();
    return out + ")";
}

}  // namespace

bool is_cocycle(const SimplicialSet& k, const Cochain& a) {
    if (a.values.size() != k.count(a.degree)) return false;
    const int n = a.degree + 1;
    for (int id = 0; id < static_cast<int>(k.count(n)); ++id) {
        Integer sum = 0;
        for (int i = 0; i <= n; ++i) {
            auto f = k.face({n, id, {}}, i);
            if (!f.is_degenerate()) sum += i % 2 ? -a.values[f.base] : a.values[f.base];
        }
        if (reduce(sum, a.modulus) != 0) return false;
    }
    return true;
}

Cochain unit_cochain(const SimplicialSet& k, const Integer& modulus) {
    return Cochain{0, modulus, std::vector<Integer>(k.count(0), modulus == 1 ? 0 : 1)};
}

Cochain cup_product(const SimplicialSet& k, const Cochain& a, const Cochain& b) {
    if (a.modulus != b.modulus) throw std::invalid_argument("cup_product: coefficient rings differ");
    if (!is_cocycle(k, a)) throw std::invalid_argument("cup_product: left factor is not a cocycle");
    if (!is_cocycle(k, b)) throw std::invalid_argument("cup_product: right factor is not a cocycle");
    const int n = a.degree + b.degree;
    Cochain out{n, a.modulus, std::vector<Integer>(k.count(n))};
    for (int id = 0; id < static_cast<int>(k.count(n)); ++id) {
        auto front = k.front({n, id, {}}, a.degree);
        auto back = k.back({n, id, {}}, b.degree);
        if (!front.is_degenerate() && !back.is_degenerate())
            out.values[id] = reduce(a.values[front.base] * b.values[back.base], a.modulus);
    }
    return out;
}

const CupEntry& CupTable::at(int p, std::size_t i, int q, std::size_t j) const {
    for (const auto& e : entries)
        if (e.p == p && e.q == q && e.i == i && e.j == j) return e;
    throw std::out_of_range("cup table entry not computed");
}

std::string CupTable::to_text() const {
    std::ostringstream out;
    out << "coefficients " << (modulus == 0 ? std::string("Z") : "Z/" + modulus.str()) << '\n';
    for (std::size_t n = 0; n < groups.size(); ++n) out << "H^" << n << " = " << groups[n].to_string() << '\n';
    std::vector<std::array<std::string, 3>> rows;
    std::size_t w0 = 0, w1 = 0;
    for (const auto& e : entries) {
        std::array<std::string, 3> r{"x" + std::to_string(e.p) + "_" + std::to_string(e.i),
                                     "x" + std::to_string(e.q) + "_" + std::to_string(e.j), coords(e.product)};
        w0 = std::max(w0, r[0].size());
        w1 = std::max(w1, r[1].size());
        rows.push_back(std::move(r));
    }
    for (const auto& r : rows)
        out << std::left << std::setw(static_cast<int>(w0)) << r[0] << " u " << std::setw(static_cast<int>(w1)) << r[1]
            << " = " << r[2] << '\n';
    out << "graded commutative: " << (graded_commutative ? "PASS" : "FAIL") << '\n';
    out << "associative: " << (associative ? "PASS" : "FAIL") << '\n';
    return out.str();
}

CupTable cohomology_ring_table(const SimplicialSet& k, const Integer& modulus, int up_to) {
    if (up_to < 0 || up_to > k.top_dim()) up_to = k.top_dim();
    auto h = GradedHomology::cohomology(normalized_chains(k), up_to, modulus);
    CupTable table;
    table.modulus = modulus;
    table.groups = h.groups();

    auto generator = [&](int p, std::size_t i) {
        return Cochain{p, modulus, h.at(p).representatives().column(i)};
    };
    auto class_of = [&](const Cochain& c) { return h.class_of(c.degree, c.values); };
    auto rank = [&](int p) { return h.group(p).generator_count(); };

    for (int p = 0; p <= up_to; ++p)
        for (int q = 0; p + q <= up_to; ++q)
            for (std::size_t i = 0; i < rank(p); ++i)
                for (std::size_t j = 0; j < rank(q); ++j)
                    table.entries.push_back({p, q, i, j, class_of(cup_product(k, generator(p, i), generator(q, j)))});

    for (const auto& e : table.entries) {
        const auto& swapped = table.at(e.q, e.j, e.p, e.i);
        std::vector<Integer> expected = swapped.product;
        if ((e.p * e.q) % 2)
            for (auto& x : expected) x = -x;
        if (h.group(e.p + e.q).normalize(expected) != e.product) table.graded_commutative = false;
    }

    for (int p = 0; p <= up_to; ++p)
        for (int q = 0; p + q <= up_to; ++q)
            for (int r = 0; p + q + r <= up_to; ++r)
                for (std::size_t i = 0; i < rank(p); ++i)
                    for (std::size_t j = 0; j < rank(q); ++j)
                        for (std::size_t l = 0; l < rank(r); ++l) {
                            auto x = generator(p, i), y = generator(q, j), z = generator(r, l);
                            auto left = cup_product(k, cup_product(k, x, y), z);
                            auto right = cup_product(k, x, cup_product(k, y, z));
                            if (class_of(left) != class_of(right)) table.associative = false;
                        }
    return table;
}

}  // namespace simplicial

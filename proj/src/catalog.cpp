#include "simplicial/catalog.hpp"

#include <charconv>
#include <stdexcept>

#include "embedded_spaces.hpp"
#include "simplicial/constructions.hpp"
#include "simplicial/space_format.hpp"

namespace simplicial {

namespace {

std::vector<std::string> split_colon(const std::string& s) {
    std::vector<std::string> out;
    std::size_t start = 0;
    for (;;) {
        auto end = s.find(':', start);
        out.push_back(s.substr(start, end - start));
        if (end == std::string::npos) return out;
        start = end + 1;
    }
}

int parameter(const std::string& token, const std::string& name) {
    int value = -1;
    auto [ptr, ec] = std::from_chars(token.data(), token.data() + token.size(), value);
    if (ec != std::errc() || ptr != token.data() + token.size() || value < 0)
        throw std::invalid_argument("bad parameter '" + token + "' in space name '" + name + "'");
    return value;
}

SetPtr sphere(int n) {
    if (n < 1) throw std::invalid_argument("sphere:n needs n >= 1");
    auto d = share(std_simplex(n));
    std::set<GeneratorId> rim;
    for (const auto& g : all_generators(*d))
        if (g.dim < n) rim.insert(g);
    return quotient(d, rim).set;
}

}  // namespace

OrderedSimplicialComplex rp2_triangulation() {
    return OrderedSimplicialComplex::generated_by(6, {{0, 1, 2}, {0, 2, 3}, {0, 3, 4}, {0, 4, 5}, {0, 1, 5},
                                                      {1, 2, 4}, {2, 3, 5}, {1, 3, 4}, {2, 4, 5}, {1, 3, 5}});
}

const std::vector<CatalogEntry>& catalog_entries() {
    static const std::vector<CatalogEntry> entries = {
        {"delta:n", "standard n-simplex"},
        {"boundary:n", "boundary of the standard n-simplex"},
        {"horn:n:k", "horn of the n-simplex missing face k"},
        {"sphere:n", "n-simplex with its boundary collapsed (n >= 1)"},
        {"circle", "1-simplex with both ends identified"},
        {"torus", "circle x circle"},
        {"rp2", "6-vertex triangulation of the projective plane"},
        {"klein", "one-vertex Klein bottle"},
        {"point", "standard 0-simplex"},
        {"discrete:m", "m isolated points"},
    };
    return entries;
}

SetPtr catalog(const std::string& name) {
    auto parts = split_colon(name);
    const auto& head = parts[0];
    auto arity = [&](std::size_t n) {
        if (parts.size() != n + 1) throw std::invalid_argument("space '" + name + "' takes " + std::to_string(n) + " parameter(s)");
    };
    if (head == "delta") {
        arity(1);
        return share(std_simplex(parameter(parts[1], name)));
    }
    if (head == "boundary") {
        arity(1);
        return share(boundary(parameter(parts[1], name)));
    }
    if (head == "horn") {
        arity(2);
        return share(horn(parameter(parts[1], name), parameter(parts[2], name)));
    }
    if (head == "sphere") {
        arity(1);
        return sphere(parameter(parts[1], name));
    }
    if (head == "discrete") {
        arity(1);
        SimplicialSetBuilder b;
        const int m = parameter(parts[1], name);
        for (int i = 0; i < m; ++i) b.add(0, {}, std::to_string(i));
        return share(std::move(b).build());
    }
    arity(0);
    if (head == "point") return share(std_simplex(0));
    if (head == "circle") return sphere(1);
    if (head == "torus") return Product(sphere(1), sphere(1)).set();
    if (head == "rp2") return share(complex_to_sset(rp2_triangulation()));
    if (head == "klein") return share(parse_space(embedded::klein_document));
    throw std::invalid_argument("unknown space '" + name + "'");
}

}  // namespace simplicial

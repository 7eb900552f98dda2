#include "simplicial/finite_group.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>
#include <stdexcept>

namespace simplicial {

FiniteGroup FiniteGroup::from_table(std::vector<std::vector<int>> table, std::vector<std::string> names) {
    const int n = static_cast<int>(table.size());
    if (n == 0) throw std::invalid_argument("group: empty table");
    for (const auto& row : table) {
        if (static_cast<int>(row.size()) != n) throw std::invalid_argument("group: table is not square");
        for (int x : row)
            if (x < 0 || x >= n) throw std::invalid_argument("group: table entry out of range");
    }
    FiniteGroup g;
    g.identity_ = -1;
    for (int e = 0; e < n && g.identity_ < 0; ++e) {
        bool ok = true;
        for (int a = 0; a < n && ok; ++a) ok = table[e][a] == a && table[a][e] == a;
        if (ok) g.identity_ = e;
    }
    if (g.identity_ < 0) throw std::invalid_argument("group: no identity element");
    for (int a = 0; a < n; ++a)
        for (int b = 0; b < n; ++b)
            for (int c = 0; c < n; ++c)
                if (table[table[a][b]][c] != table[a][table[b][c]])
                    throw std::invalid_argument("group: associativity fails at (" + std::to_string(a) + "," + std::to_string(b) +
                                                "," + std::to_string(c) + ")");
    g.inverse_.assign(n, -1);
    for (int a = 0; a < n; ++a) {
        for (int b = 0; b < n; ++b)
            if (table[a][b] == g.identity_ && table[b][a] == g.identity_) g.inverse_[a] = b;
        if (g.inverse_[a] < 0) throw std::invalid_argument("group: element " + std::to_string(a) + " has no inverse");
    }
    if (names.empty())
        for (int a = 0; a < n; ++a) names.push_back(std::to_string(a));
    if (static_cast<int>(names.size()) != n) throw std::invalid_argument("group: name count does not match order");
    g.table_ = std::move(table);
    g.names_ = std::move(names);
    return g;
}

FiniteGroup FiniteGroup::cyclic(int n) {
    if (n < 1) throw std::invalid_argument("cyclic group order must be positive");
    std::vector<std::vector<int>> t(n, std::vector<int>(n));
    for (int a = 0; a < n; ++a)
        for (int b = 0; b < n; ++b) t[a][b] = (a + b) % n;
    return from_table(std::move(t));
}

FiniteGroup FiniteGroup::symmetric(int n) {
    if (n < 1 || n > 5) throw std::invalid_argument("symmetric group degree must lie in 1..5");
    std::vector<std::vector<int>> perms;
    std::vector<int> p(n);
    std::iota(p.begin(), p.end(), 0);
    do perms.push_back(p);
    while (std::next_permutation(p.begin(), p.end()));
    std::vector<std::vector<int>> t(perms.size(), std::vector<int>(perms.size()));
    std::vector<std::string> names;
    for (std::size_t a = 0; a < perms.size(); ++a) {
        std::string name;
        for (int x : perms[a]) name += std::to_string(x);
        names.push_back(name);
        for (std::size_t b = 0; b < perms.size(); ++b) {
            std::vector<int> c(n);
            for (int x = 0; x < n; ++x) c[x] = perms[a][perms[b][x]];
            t[a][b] = static_cast<int>(std::lower_bound(perms.begin(), perms.end(), c) - perms.begin());
        }
    }
    return from_table(std::move(t), std::move(names));
}

FiniteGroup FiniteGroup::parse(std::string_view text) {
    std::istringstream in{std::string(text)};
    std::string word, version;
    if (!(in >> word >> version) || word != "GROUP" || version != "1") throw std::invalid_argument("group: expected header 'GROUP 1'");
    int n = 0;
    if (!(in >> word >> n) || word != "order" || n < 1) throw std::invalid_argument("group: expected 'order <n>'");
    std::vector<std::vector<int>> t(n, std::vector<int>(n));
    for (auto& row : t)
        for (auto& x : row)
            if (!(in >> x)) throw std::invalid_argument("group: table too short");
    if (!(in >> word) || word != "end") throw std::invalid_argument("group: expected 'end' after the table");
    if (in >> word) throw std::invalid_argument("group: content after 'end'");
    return from_table(std::move(t));
}

std::string FiniteGroup::to_text() const {
    std::ostringstream out;
    out << "GROUP 1\norder " << order() << '\n';
    for (const auto& row : table_) {
        for (std::size_t i = 0; i < row.size(); ++i) out << (i ? " " : "") << row[i];
        out << '\n';
    }
    out << "end\n";
    return out.str();
}

bool FiniteGroup::is_abelian() const {
    for (int a = 0; a < order(); ++a)
        for (int b = 0; b < a; ++b)
            if (multiply(a, b) != multiply(b, a)) return false;
    return true;
}

}  // namespace simplicial

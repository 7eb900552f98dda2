#pragma once

#include <string>
#include <string_view>
#include <vector>

namespace simplicial {

/**
 * Finite group on elements 0..n-1 given by its multiplication table. The
 * group axioms are verified on construction.
 */
class FiniteGroup {
public:
    /// Throws std::invalid_argument naming the first failed axiom.
    static FiniteGroup from_table(std::vector<std::vector<int>> table, std::vector<std::string> names = {});
    static FiniteGroup trivial() { return cyclic(1); }
    static FiniteGroup cyclic(int n);
    /// Permutations of 0..n-1 in lexicographic order, (a b)(x) = a(b(x)).
    static FiniteGroup symmetric(int n);
    /// "GROUP 1" document: order line, one table row per element, "end".
    static FiniteGroup parse(std::string_view text);
    std::string to_text() const;

    int order() const { return static_cast<int>(table_.size()); }
    int identity() const { return identity_; }
    int multiply(int a, int b) const { return table_.at(a).at(b); }
    int inverse(int a) const { return inverse_.at(a); }
    const std::string& name(int a) const { return names_.at(a); }
    bool is_abelian() const;

private:
    std::vector<std::vector<int>> table_;
    std::vector<int> inverse_;
    std::vector<std::string> names_;
    int identity_ = 0;
};

}  // namespace simplicial

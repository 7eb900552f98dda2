#pragma once

#include <optional>
#include <string>
#include <vector>

#include "simplicial/simplicial_set.hpp"

namespace simplicial {

/// Map Lambda[n]_k -> K: faces[i] for i != k, faces[k] empty.
struct HornMap {
    int n = 1;
    int k = 0;
    std::vector<std::optional<SimplexRef>> faces;

    /// d_i faces[j] == d_{j-1} faces[i] for i < j, both different from k.
    bool is_compatible(const SimplicialSet& target) const;
    std::string to_string() const;
};

/// Every n-simplex of K, degenerate ones included, extending the horn.
/// Throws std::invalid_argument for malformed or incompatible horn data.
std::vector<SimplexRef> fill_horn(const SimplicialSet& k, const HornMap& h);

/// Calls visit on every horn Lambda[n]_k -> K, in order of k and then of the
/// faces in K's simplex order. Stops early when visit returns false.
template <class Visit>
void for_each_horn(const SimplicialSet& k, int n, Visit&& visit) {
    const auto candidates = k.all_simplices(n - 1);
    for (int missing = 0; missing <= n; ++missing) {
        HornMap h{n, missing, std::vector<std::optional<SimplexRef>>(static_cast<std::size_t>(n) + 1)};
        bool stop = false;
        auto place = [&](auto&& self, int i) -> void {
            if (stop) return;
            if (i > n) {
                if (!visit(static_cast<const HornMap&>(h))) stop = true;
                return;
            }
            if (i == missing) return self(self, i + 1);
            for (const auto& c : candidates) {
                bool fits = true;
                for (int j = 0; j < i && fits; ++j)
                    if (j != missing) fits = k.face(c, j) == k.face(*h.faces[j], i - 1);
                if (!fits) continue;
                h.faces[i] = c;
                self(self, i + 1);
                if (stop) return;
            }
            h.faces[i].reset();
        };
        place(place, 0);
        if (stop) return;
    }
}

struct LiftingFailure {
    HornMap horn;
    /// For relative problems, the simplex of the base to be lifted.
    std::optional<SimplexRef> target;
    std::size_t lifts = 0;
    std::string to_string() const;
};

struct LiftingReport {
    int up_to = 0;
    std::size_t problems = 0;
    std::size_t failure_count = 0;
    /// The first failures in enumeration order.
    std::vector<LiftingFailure> failures;

    bool ok() const { return failure_count == 0; }
    std::string to_text() const;
};

/// Every horn into K in dimensions 1..up_to has a filler.
LiftingReport kan_check(const SimplicialSet& k, int up_to = 3);
/// Every horn into the source whose image extends to an n-simplex y of the
/// target lifts to an n-simplex over y.
LiftingReport fibration_check(const SimplicialMap& f, int up_to = 3);

enum class Lifts { AtLeastOne, ExactlyOne };
/// Relative horn-lifting problems along f through up_to; a problem fails
/// when its lift count violates the requirement.
LiftingReport relative_lifting_check(const SimplicialMap& f, int up_to, Lifts requirement);

/// The lifts of y along f extending the horn.
std::vector<SimplexRef> relative_lifts(const SimplicialMap& f, const HornMap& h, const SimplexRef& y);

}  // namespace simplicial

#pragma once

#include <compare>
#include <memory>
#include <optional>
#include <span>
#include <string>
#include <vector>

namespace simplicial {

/// Degeneracy word s_{j1} s_{j2} ... s_{jk} stored as {j1, ..., jk}; canonical
/// words are strictly decreasing.
using DegeneracyWord = std::vector<int>;

/**
 * Handle for an arbitrary simplex: a non-degenerate generator (identified by
 * its dimension and its dense per-dimension id) together with a canonical
 * degeneracy word. Two refs denote the same simplex iff they compare equal.
 */
struct SimplexRef {
    int base_dim = 0;
    int base = 0;
    DegeneracyWord word;

    int dim() const { return base_dim + static_cast<int>(word.size()); }
    bool is_degenerate() const { return !word.empty(); }

    auto operator<=>(const SimplexRef&) const = default;
    bool operator==(const SimplexRef&) const = default;
};

std::string to_string(const SimplexRef& s);

/// Generator address (dimension, id).
struct GeneratorId {
    int dim = 0;
    int id = 0;
    auto operator<=>(const GeneratorId&) const = default;
    bool operator==(const GeneratorId&) const = default;
};

inline SimplexRef as_ref(GeneratorId g) { return {g.dim, g.id, {}}; }

/// True for a strictly decreasing word whose letters lie in [0, dim - 1].
bool is_canonical_word(const DegeneracyWord& word, int dim);

/// Monotone surjection [n] -> [n - k] whose repeat positions are the word.
std::vector<int> word_to_surjection(const DegeneracyWord& word, int dim);
/// Inverse of word_to_surjection for a monotone surjection.
DegeneracyWord surjection_to_word(std::span<const int> surjection);

/// s_i applied to s; needs no face data.
SimplexRef degeneracy(const SimplexRef& s, int i);

struct NonDegenSimplex {
    std::vector<SimplexRef> faces;  // dim + 1 entries, empty in dimension 0
    std::string name;
};

struct ValidationReport {
    bool ok = true;
    std::string message;

    explicit operator bool() const { return ok; }
};

/**
 * Finitely presented simplicial set: non-degenerate generators per dimension
 * with their codimension-one faces. Every simplex is a canonical SimplexRef;
 * deeper faces, vertices and all simplicial operators are computed by
 * composing monotone maps against the face table.
 *
 * Values are immutable once built (see SimplicialSetBuilder).
 */
class SimplicialSet {
public:
    SimplicialSet() = default;

    int top_dim() const { return static_cast<int>(generators_.size()) - 1; }
    bool empty() const { return generators_.empty(); }
    std::size_t count(int dim) const;
    std::vector<std::size_t> counts() const;
    std::size_t total_count() const;
    const NonDegenSimplex& generator(int dim, int id) const;
    const NonDegenSimplex& generator(GeneratorId g) const { return generator(g.dim, g.id); }
    bool has_generator(int dim, int id) const;

    /// d_i s.
    SimplexRef face(const SimplexRef& s, int i) const;
    /// The simplex s o theta for a monotone theta: [m] -> [dim s], given as
    /// its value list.
    SimplexRef restrict(const SimplexRef& s, std::span<const int> theta) const;
    /// Vertex ids of s, in order (repeats for degenerate s).
    std::vector<int> vertices(const SimplexRef& s) const;
    SimplexRef front(const SimplexRef& s, int p) const;
    SimplexRef back(const SimplexRef& s, int q) const;

    /// Every simplex of the given dimension, degenerate ones included, in a
    /// fixed order (base dimension, base id, then repeat sets lexicographic).
    std::vector<SimplexRef> all_simplices(int dim) const;

    /// Structural checks, canonical faces and d_i d_j = d_{j-1} d_i.
    ValidationReport validate() const;

    /// Same face tables generator by generator; names are ignored.
    friend bool operator==(const SimplicialSet&, const SimplicialSet&);

private:
    friend class SimplicialSetBuilder;
    std::vector<std::vector<NonDegenSimplex>> generators_;
};

class SimplicialSetBuilder {
public:
    /// Appends a generator of the given dimension and returns its id.
    int add(int dim, std::vector<SimplexRef> faces, std::string name = {});
    std::size_t count(int dim) const;
    /// Face operator over the generators added so far.
    const SimplicialSet& peek() const { return set_; }
    SimplicialSet build() &&;
    /// Throws std::invalid_argument with the validation message on failure.
    SimplicialSet build_checked() &&;

private:
    SimplicialSet set_;
};

using SetPtr = std::shared_ptr<const SimplicialSet>;
inline SetPtr share(SimplicialSet k) { return std::make_shared<const SimplicialSet>(std::move(k)); }

/**
 * Simplicial map given on generators. Degenerate simplices map by
 * f(sigma o eta) = f(sigma) o eta.
 */
class SimplicialMap {
public:
    SimplicialMap(SetPtr source, SetPtr target, std::vector<std::vector<SimplexRef>> images);

    const SimplicialSet& source() const { return *source_; }
    const SimplicialSet& target() const { return *target_; }
    const SetPtr& source_ptr() const { return source_; }
    const SetPtr& target_ptr() const { return target_; }
    const SimplexRef& image(int dim, int id) const;
    const std::vector<std::vector<SimplexRef>>& images() const { return images_; }

    SimplexRef apply(const SimplexRef& s) const;
    /// Dimensions, targets, and f(d_i sigma) = d_i f(sigma) on every generator.
    ValidationReport validate() const;
    /// Injective on generators with non-degenerate images.
    bool is_embedding() const;

private:
    SetPtr source_;
    SetPtr target_;
    std::vector<std::vector<SimplexRef>> images_;
};

SimplicialMap compose(const SimplicialMap& second, const SimplicialMap& first);
SimplicialMap identity_map(const SetPtr& k);
/// The unique map to the one-point set.
SimplicialMap terminal_map(const SetPtr& k);

}  // namespace simplicial

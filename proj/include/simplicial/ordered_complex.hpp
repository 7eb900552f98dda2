#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "simplicial/simplicial_set.hpp"

namespace simplicial {

/**
 * Finite simplicial complex on the totally ordered vertex set 0..n-1. Faces
 * are strictly increasing vertex lists, grouped by dimension and sorted
 * lexicographically within a dimension.
 */
class OrderedSimplicialComplex {
public:
    using Face = std::vector<int>;

    OrderedSimplicialComplex() = default;
    /// Downward closure of the given faces. Vertex names default to the index.
    static OrderedSimplicialComplex generated_by(int vertex_count, const std::vector<Face>& faces,
                                                 std::vector<std::string> vertex_names = {});
    /// The full simplex on n + 1 vertices.
    static OrderedSimplicialComplex simplex(int n);

    int vertex_count() const { return static_cast<int>(vertex_names_.size()); }
    int dim() const { return static_cast<int>(faces_.size()) - 1; }
    const std::vector<Face>& faces(int dim) const;
    std::size_t count(int dim) const { return faces(dim).size(); }
    /// Position of a face within its dimension, or -1.
    int index_of(const Face& f) const;
    const std::string& vertex_name(int v) const { return vertex_names_.at(static_cast<std::size_t>(v)); }
    std::string face_name(const Face& f) const;

private:
    std::vector<std::string> vertex_names_;
    std::vector<std::vector<Face>> faces_;
    std::map<Face, int> index_;
};

/// One generator per face, d_i deleting the i-th vertex.
SimplicialSet complex_to_sset(const OrderedSimplicialComplex& l);

/// The ordered complex presented by K when every generator has distinct,
/// increasing vertices that determine it; std::nullopt otherwise.
std::optional<OrderedSimplicialComplex> as_ordered_complex(const SimplicialSet& k);

}  // namespace simplicial

#pragma once

#include <string>
#include <vector>

#include "simplicial/ordered_complex.hpp"
#include "simplicial/simplicial_set.hpp"

namespace simplicial {

struct CatalogEntry {
    std::string pattern;
    std::string description;
};

/**
 * Named model spaces: delta:n, boundary:n, horn:n:k, sphere:n, circle, torus,
 * rp2, klein, point, discrete:m. Throws std::invalid_argument for unknown
 * names or out-of-range parameters.
 */
SetPtr catalog(const std::string& name);
const std::vector<CatalogEntry>& catalog_entries();

/// The 6-vertex triangulation of the projective plane.
OrderedSimplicialComplex rp2_triangulation();

}  // namespace simplicial

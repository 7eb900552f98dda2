#pragma once

#include <map>
#include <set>
#include <string>
#include <tuple>
#include <vector>

#include "simplicial/simplicial_set.hpp"

namespace simplicial {

/// Delta[n]: one generator per (m+1)-subset of {0..n}, lexicographic within
/// each dimension, named by its vertex digits.
SimplicialSet std_simplex(int n);
/// Boundary of Delta[n] (Delta[n] without its top generator).
SimplicialSet boundary(int n);
/// Horn Lambda[n]_k: the boundary without the face opposite vertex k.
SimplicialSet horn(int n, int k);

/// A subobject together with its inclusion.
struct Subcomplex {
    SetPtr set;
    SimplicialMap inclusion;
    /// For every generator of the ambient set, its id in the subcomplex or -1.
    std::vector<std::vector<int>> index;

    bool contains(GeneratorId g) const;
};

enum class Closure { Auto, Require };

/// Generated subcomplex. With Closure::Require a set that is not already
/// face-closed is rejected.
Subcomplex subcomplex(const SetPtr& k, const std::set<GeneratorId>& ids, Closure closure = Closure::Auto);
std::set<GeneratorId> face_closure(const SimplicialSet& k, const std::set<GeneratorId>& ids);
Subcomplex skeleton(const SetPtr& k, int n);
std::set<GeneratorId> all_generators(const SimplicialSet& k);

struct Quotient {
    SetPtr set;
    SimplicialMap projection;
    /// Faces redirected onto the collapsed basepoint, one line each.
    std::vector<std::string> collapse_log;
};

/// K/L: the generators of L are collapsed to one basepoint (id 0 in
/// dimension 0, present only when L is non-empty).
Quotient quotient(const SetPtr& k, const std::set<GeneratorId>& sub);

struct Coproduct {
    SetPtr set;
    std::vector<SimplicialMap> injections;
};
Coproduct coproduct(const std::vector<SetPtr>& parts);

struct Pushout {
    SetPtr set;
    SimplicialMap from_target;   // K -> P
    SimplicialMap from_ambient;  // M -> P
};
/// The pushout of K <-f- L -i-> M; i must be an embedding.
Pushout pushout(const SimplicialMap& f, const SimplicialMap& embedding);

/**
 * K x L. Non-degenerate n-simplices are pairs (sigma o eta1, tau o eta2) with
 * (eta1, eta2) jointly injective; faces are computed componentwise and
 * canonicalized by stripping common repeat positions.
 */
class Product {
public:
    Product(SetPtr left, SetPtr right);

    const SetPtr& left() const { return left_; }
    const SetPtr& right() const { return right_; }
    const SetPtr& set() const { return set_; }
    const SimplicialMap& left_projection() const { return left_proj_; }
    const SimplicialMap& right_projection() const { return right_proj_; }
    /// The simplex (x, y) of the product, canonical; x and y of equal dimension.
    SimplexRef pair(const SimplexRef& x, const SimplexRef& y) const;
    /// Components of a product simplex.
    std::pair<SimplexRef, SimplexRef> components(const SimplexRef& s) const;

private:
    using Key = std::tuple<int, int, int, int, DegeneracyWord, DegeneracyWord>;
    struct Parts;
    explicit Product(Parts parts);
    SetPtr left_, right_;
    SetPtr set_;
    std::map<Key, int> lookup_;
    SimplicialMap left_proj_, right_proj_;
};

/// Induced map f x g : K x L -> K' x L'.
SimplicialMap product_map(const Product& from, const Product& to, const SimplicialMap& f, const SimplicialMap& g);

/**
 * Simplicial map between sets whose simplices are determined by their vertex
 * lists (ordered complexes, products of them), given on vertices. Throws when
 * an image vertex list is not monotone or spans no simplex of the target.
 */
SimplicialMap map_from_vertices(const SetPtr& source, const SetPtr& target, const std::vector<int>& vertex_images);

}  // namespace simplicial

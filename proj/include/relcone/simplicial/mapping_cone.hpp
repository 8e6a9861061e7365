#pragma once

#include <map>
#include <set>
#include <utility>

#include "relcone/algebra/abelian_group.hpp"
#include "relcone/simplicial/map.hpp"

namespace relcone {

/// Cone_f = (X × [0,1] ⊔ Y) / (x,1) ~ f(x), X × {0} ~ apex, as a normalized Δ-complex.
///
/// X × [0,1] is decomposed into ordered prisms. Over an m-cell σ of X the cells kept are
/// the flat m-simplices with the first j vertices at level 0 (1 <= j <= m) and the m+1
/// prism (m+1)-simplices. Cells are numbered per dimension: Y first, then the apex (in
/// dimension 0), then flats by X cell, then prisms by X cell.
struct TopologicalCone {
    DeltaComplex complex;
    std::size_t apex = 0;
};

TopologicalCone topological_mapping_cone(const SimplicialMap& f);

/// Unreduced suspension: the cone of the map to a point.
DeltaComplex suspension(const DeltaComplex& x);

/// K / A for a nonempty subcomplex A, given as (dimension, cell) pairs closed under faces.
/// The collapsed point is the last vertex of the quotient.
std::pair<DeltaComplex, SimplicialMap> collapse_subcomplex(const DeltaComplex& k,
                                                           const std::set<std::pair<int, std::size_t>>& a);
/// All cells of dimension <= d.
std::set<std::pair<int, std::size_t>> skeleton_cells(const DeltaComplex& k, int d);

struct ConeComparison {
    std::map<int, AbelianGroupPresentation> algebraic;   // H_n(f)
    std::map<int, AbelianGroupPresentation> topological; // reduced H_n(Cone_f)
    long euler_cone = 0;
    long euler_expected = 0; // χ(Y) + 1 - χ(X)
    bool isomorphic = false;
    std::size_t cone_cells = 0;
};

/// Computes both sides in every degree. Throws ComputationError when they disagree.
ConeComparison cone_comparison(const SimplicialMap& f);

} // namespace relcone

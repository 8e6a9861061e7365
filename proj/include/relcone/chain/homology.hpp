#pragma once

#include <functional>
#include <map>

#include "relcone/algebra/lattice.hpp"
#include "relcone/chain/cone.hpp"

namespace relcone {

/// H_n(C) = ker d_n / im d_in. Over ℚ only the Betti number is reported.
/// Throws DimensionError when n is outside the degree range.
AbelianGroupPresentation homology(const ChainComplex& c, int n);
/// Every degree of the range.
std::map<int, AbelianGroupPresentation> homology_all(const ChainComplex& c);

/// Cyclic generators and coordinates of H_n(C) over ℤ (any n; outside the range it is trivial).
Subquotient homology_basis(const ChainComplex& c, int n);

AbelianGroupPresentation relative_homology(const ChainMap& f, int n);
bool is_quasi_iso(const ChainMap& f);

/// Homomorphism ℤ^k / diag(source_orders) -> ℤ^l / diag(target_orders); order 0 = free.
struct GroupHom {
    IntegerMatrix matrix;
    IntegerVector source_orders;
    IntegerVector target_orders;
};

/// Map on classes induced by a chain-level map that sends cycles to cycles.
GroupHom induced_hom(const Subquotient& source, const Subquotient& target,
                     const std::function<IntegerVector(const IntegerVector&)>& on_chains);
GroupHom induced_map(const ChainMap& f, int n);

bool is_isomorphism(const GroupHom& h);

struct ConnectingMapCheck {
    IntegerVector image;       // f(γ), a cycle of Y
    IntegerVector coordinates; // its class in H_{n-1}(Y)
    bool agrees = false;       // equal to the snake-lemma connecting image
};

/// γ a cycle of X in degree n-1. Compares [f(γ)] with the connecting homomorphism of
/// 0 -> Y -> Cone(f) -> X[-1] -> 0 computed by lifting and pulling back.
ConnectingMapCheck connecting_map_check(const ChainMap& f, int n, const IntegerVector& gamma);

} // namespace relcone

#pragma once

#include <set>

#include "relcone/cech/nerve.hpp"
#include "relcone/lie/root_system.hpp"

namespace relcone {

/// Basis data for Λ* (weights) and Λ (coroots) of the simply connected group.
struct WeightLattice {
    std::vector<RationalVector> weights; // fundamental weights
    std::vector<RationalVector> coroots; // simple coroots, a ℤ-basis of Λ
    IntegerMatrix pairing;               // ⟨ω_i, α_j^∨⟩, the identity

    /// Integer coordinates in the fundamental-weight basis, by exact solve.
    bool contains(const RationalVector& lambda) const;
    /// Coordinates in the fundamental-weight basis (rational).
    RationalVector coordinates(const RationalVector& lambda) const;
};

WeightLattice weight_lattice(const RootSystem& rs);

/// 𝔄 = {ξ : ⟨α_i, ξ⟩ >= 0, ⟨α_0, ξ⟩ >= -1}, vertices μ_0 = 0 and μ_j = ω_j^∨ / m_j.
struct Alcove {
    std::vector<RationalVector> vertices;

    bool contains(const RootSystem& rs, const RationalVector& xi) const;
};

Alcove alcove_vertices(const RootSystem& rs);

/// Values of the d+1 defining functionals: index 0 is ⟨α_0, ξ⟩ + 1, index j is ⟨α_j, ξ⟩.
RationalVector alcove_functionals(const RootSystem& rs, const RationalVector& xi);

/// Smallest k >= 1 with k·B(μ_j) ∈ Λ* for every vertex.
Integer min_vertex_level(const RootSystem& rs);

/// k·ω_ξ integral: ξ ∈ 𝔄 and k·B(ξ) ∈ Λ*. False outside the alcove. Throws for k < 1.
bool conjugacy_prequant(const RootSystem& rs, const RationalVector& xi, const Integer& k);

/// Representative of ξ in 𝔄 under the affine Weyl group (reflections in the simple roots
/// and in the affine wall ⟨θ, ξ⟩ = 1).
RationalVector reduce_to_alcove(const RootSystem& rs, const RationalVector& xi);

/// {j : ξ ∈ 𝔄_j}, 𝔄_j the complement in 𝔄 of the closed face opposite μ_j.
/// Throws ValidationError when ξ ∉ 𝔄.
std::set<std::size_t> alcove_membership(const RootSystem& rs, const RationalVector& xi);

/// Nerve of the cover {𝔄_j}, built from the membership pattern of the barycenters of all
/// vertex subsets.
Nerve alcove_cover_nerve(const RootSystem& rs);

} // namespace relcone

#pragma once

#include <optional>
#include <vector>

#include "relcone/algebra/abelian_group.hpp"
#include "relcone/simplicial/map.hpp"

namespace relcone {

/// Relative cocycle of degree n for Φ: M -> N: a rational (n-1)-cochain on M and a rational
/// n-cochain on N with d(target) = 0 and Φ*(target) = d(source).
///
/// Slots are fixed by degree: the source cochain pairs with chains on M, the target cochain
/// with chains on N.
class RelativeCochainPair {
public:
    RelativeCochainPair(SimplicialMap map, int degree, RationalVector source, RationalVector target);

    const SimplicialMap& map() const { return map_; }
    int degree() const { return degree_; }
    const RationalVector& source() const { return source_; }
    const RationalVector& target() const { return target_; }

    /// (source, target) as one vector of Cone^n of the dual map.
    RationalVector joined() const;
    RelativeCochainPair scaled(const Rational& k) const;
    /// Adds the relative coboundary of (u on M in degree n-2, v on N in degree n-1).
    RelativeCochainPair shifted(const RationalVector& u, const RationalVector& v) const;

private:
    SimplicialMap map_;
    int degree_;
    RationalVector source_, target_;
};

/// Integral relative cycle (θ, B): θ an (n-1)-cycle on M, B an n-chain on N with ∂B = Φ_*θ.
struct RelativeCycle {
    IntegerVector source;
    IntegerVector target;

    friend bool operator==(const RelativeCycle& a, const RelativeCycle& b)
    {
        return a.source == b.source && a.target == b.target;
    }
};

/// Throws ValidationError unless z is a relative cycle of degree n.
void validate_relative_cycle(const SimplicialMap& map, int n, const RelativeCycle& z);

/// ⟨c, (θ, B)⟩ = ⟨source, θ⟩ - ⟨target, B⟩.
Rational kronecker_pair(const RelativeCochainPair& c, const RelativeCycle& z);

/// Raw form on the cone of a chain map: cone_cochain ∈ Cone^n(f'), cone_chain ∈ Cone_n(f).
Rational kronecker_pair(const ChainMap& f, int n, const RationalVector& cone_cochain, const IntegerVector& cone_chain);

struct RelativeGenerator {
    RelativeCycle cycle;
    Integer order; // 0 for free generators
};

/// Cyclic generators of H_n(Φ; ℤ), torsion first.
std::vector<RelativeGenerator> relative_homology_generators(const SimplicialMap& map, int n);

struct GeneratorPairing {
    RelativeCycle cycle;
    Rational value;
};

/// Verdict plus certificate: the pairing table over free generators, and a violating cycle
/// when the verdict is false.
struct IntegralityCertificate {
    bool integral = false;
    std::vector<GeneratorPairing> table;
    std::optional<RelativeCycle> violating;
    /// Smallest k >= 1 with k·c integral: the lcm of the pairing denominators.
    Integer minimal_level = 1;
};

/// Integral iff the pairing with every free generator of H_n(Φ; ℤ) is an integer. Torsion
/// generators pair to zero with any relative cocycle; this is checked, not assumed.
IntegralityCertificate is_integral(const RelativeCochainPair& c);

/// ω a closed 2-cochain on N with Φ*ω = 0; the verdict for the pair (0, ω).
IntegralityCertificate bohr_sommerfeld_check(const SimplicialMap& map, const RationalVector& omega);

struct PrequantizationReport {
    Integer level = 1;
    IntegralityCertificate direct; // for level·(ω, η)
    AbelianGroupPresentation h2;   // H_2(M; ℤ)
    bool eta_integral = false;     // η integral on H_3(N; ℤ)
    /// H_2(M) is r-torsion (r = torsion_exponent, 1 when H_2 = 0), r | level and η is integral.
    bool shortcut_applies = false;
    Integer torsion_exponent = 0; // 0 when H_2(M) has a free part
};

/// Ψ: M -> N, ω a 2-cochain on M, η a closed 3-cochain on N with dω = Ψ*η.
/// Throws ComputationError if the shortcut applies and disagrees with the direct verdict.
PrequantizationReport prequantization_check(const SimplicialMap& psi, const RationalVector& omega,
                                            const RationalVector& eta, const Integer& level = 1);

} // namespace relcone

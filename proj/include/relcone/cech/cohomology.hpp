#pragma once

#include "relcone/algebra/abelian_group.hpp"
#include "relcone/cech/cochain.hpp"
#include "relcone/chain/cone.hpp"

namespace relcone {

/// Cohomology with constant coefficients.
///
/// For ℤ and ℤ/m `group` is the full answer; over ℚ only group.free_rank is meaningful.
/// With angle coefficients the group is (ℚ/ℤ)^divisible_rank ⊕ group.torsion.
struct CohomologyGroup {
    Coefficients coefficients;
    AbelianGroupPresentation group;
    std::size_t divisible_rank = 0;

    bool is_trivial() const { return group.is_trivial() && divisible_rank == 0; }
    std::string to_string() const;
    std::string to_ascii() const;

    friend bool operator==(const CohomologyGroup& a, const CohomologyGroup& b)
    {
        return a.coefficients == b.coefficients && a.group == b.group && a.divisible_rank == b.divisible_rank;
    }
};

/// H^q of an integral cochain complex tensored with the coefficients. Any q; zero outside the range.
CohomologyGroup cochain_cohomology(const ChainComplex& c, const Coefficients& coeff, int q);

/// Ȟ^q(nerve; coeff).
CohomologyGroup cech_cohomology(const Nerve& nerve, const Coefficients& coeff, int q);

/// The relative Čech complex: the cocone of Φ*, Cone^q = C^{q-1}(source) ⊕ C^q(target),
/// d(s, t) = (Φ*t - δs, δt).
ConeComplex relative_cech_complex(const CoverMap& m);

/// H^q(Φ; coeff), the cohomology of the cocone of the pullback.
CohomologyGroup relative_cech_cohomology(const CoverMap& m, const Coefficients& coeff, int q);

/// A class in an integral cohomology group, with coordinates on canonical cyclic generators.
struct CohomologyClass {
    int degree = 0;
    AbelianGroupPresentation group;
    IntegerVector cocycle;     // representative
    IntegerVector coordinates; // torsion coordinates reduced, free ones exact
    IntegerVector orders;      // order of each generator, 0 = infinite

    bool is_zero() const { return relcone::is_zero(coordinates); }
};

/// Class of an integer cocycle of a cochain complex; throws ValidationError if not a cocycle.
CohomologyClass class_of(const ChainComplex& c, int q, const IntegerVector& cocycle);

} // namespace relcone

#pragma once

#include "relcone/cech/cohomology.hpp"

namespace relcone {

/// Angle-valued Čech cocycle data a of degree p whose lift has integral coboundary.
/// Degree 2 is a gerbe (t = exp(2πi a)); degree 1 is a line bundle.
///
/// Cochains are alternating, so a_{i'i} = -a_{ii'} in the angle picture; for degree 1 this is
/// the transition relation L_{i'i} ≅ L_{ii'}^{-1}.
class AngleCocycle {
public:
    AngleCocycle(Nerve nerve, CechCochain a);

    const Nerve& nerve() const { return nerve_; }
    const CechCochain& data() const { return a_; }
    int degree() const { return a_.degree(); }
    /// The integer cocycle δ(lift a) of degree p + 1.
    const IntegerVector& integer_cocycle() const { return c_; }

private:
    Nerve nerve_;
    CechCochain a_;
    IntegerVector c_;
};

using GerbeCocycle = AngleCocycle;

/// Relative data for Φ: M -> N: target angle cochain a of degree p and source angle
/// cochain b of degree p - 1 with δa and Φ*a - δb integral (δs = Φ*t multiplicatively).
class RelativeAngleCocycle {
public:
    RelativeAngleCocycle(CoverMap map, CechCochain target_data, CechCochain source_data);

    const CoverMap& map() const { return map_; }
    const CechCochain& target_data() const { return a_; }
    const CechCochain& source_data() const { return b_; }
    int degree() const { return a_.degree(); }
    /// (Φ*ã - δb̃, δã) in Cone^{p+1} of the relative complex.
    const IntegerVector& integer_cocycle() const { return c_; }

private:
    CoverMap map_;
    CechCochain a_, b_;
    IntegerVector c_;
};

using RelativeGerbeCocycle = RelativeAngleCocycle;

/// Log-lift connecting map H^p(U(1)) -> H^{p+1}(ℤ): the class of δ(lift a).
CohomologyClass bockstein_class(const AngleCocycle& a);
/// Same for degree-2 data, named for gerbes.
CohomologyClass dixmier_douady_class(const GerbeCocycle& g);

/// Class of (Φ*ã - δb̃, δã) in H^{p+1}(Φ; ℤ).
CohomologyClass relative_class(const RelativeAngleCocycle& g);
CohomologyClass relative_gerbe_class(const RelativeGerbeCocycle& g);

/// The integer cocycle is a coboundary, checked by solving d x = c over ℤ directly.
bool is_trivializable(const AngleCocycle& a);
bool is_trivializable(const RelativeAngleCocycle& g);

/// Image of a relative class in H^{p+1}(target; ℤ): the t-part.
CohomologyClass target_part(const RelativeAngleCocycle& g);

} // namespace relcone

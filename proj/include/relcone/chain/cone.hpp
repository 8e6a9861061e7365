#pragma once

#include "relcone/chain/map.hpp"

namespace relcone {

/// Mapping cone of a chain map f: X -> Y, or cocone of a cochain map f: X^• -> Y^•.
///
/// Chain grading:   Cone_n = X_{n-1} ⊕ Y_n,  ∂(θ, η) = (∂θ, f(θ) - ∂η).
/// Cochain grading: Cone^n = Y^{n-1} ⊕ X^n,  d(α, β) = (f(β) - dα, dβ).
///
/// In both cases the summand that comes from the shifted complex is stored first.
class ConeComplex {
public:
    explicit ConeComplex(ChainMap f);

    const ChainComplex& complex() const& { return complex_; }
    ChainComplex complex() && { return std::move(complex_); }
    const ChainMap& map() const { return map_; }
    Grading grading() const { return complex_.grading(); }

    /// Degree of the shifted summand inside Cone in degree n (n-1 in both gradings).
    static int shifted_degree(int n) { return n - 1; }
    /// Size of the first (shifted) summand: X_{n-1} or Y^{n-1}.
    std::size_t first_dim(int n) const;
    /// Size of the second summand: Y_n or X^n.
    std::size_t second_dim(int n) const;

    IntegerVector join(int n, const IntegerVector& first, const IntegerVector& second) const;
    IntegerVector first(int n, const IntegerVector& v) const;
    IntegerVector second(int n, const IntegerVector& v) const;

private:
    ChainMap map_;
    ChainComplex complex_;
};

inline ConeComplex mapping_cone(const ChainMap& f) { return ConeComplex(f); }
/// Same construction, named for cochain input.
ConeComplex mapping_cocone(const ChainMap& f);

/// Cone(f) -> Cone(g), (α, β) ↦ (α, β - h(α)); validated as a chain map.
ChainMap homotopy_cone_iso(const HomotopyOperator& h);
/// Inverse (α, β) ↦ (α, β + h(α)).
ChainMap homotopy_cone_iso_inverse(const HomotopyOperator& h);

} // namespace relcone

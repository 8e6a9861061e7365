#pragma once

#include "relcone/chain/cone.hpp"

namespace relcone {

/// Hom(-, ℤ) of a chain complex: C^n = (C_n)^*, d^n = (∂_{n+1})^T. Same degrees.
ChainComplex dual_complex(const ChainComplex& c);

/// f: X -> Y (chain) becomes f': Y' -> X' (cochain) with f'^n = f_n^T.
ChainMap dualize(const ChainMap& f);

/// Kronecker pairing Cone^n(f') x Cone_n(f) -> ℚ, ⟨(α, β), (θ, η)⟩ = ⟨α, θ⟩ - ⟨β, η⟩.
/// α ∈ X'^{n-1} pairs with θ ∈ X_{n-1}; β ∈ Y'^n with η ∈ Y_n.
Rational cone_pairing(const ConeComplex& cone, int n, const RationalVector& cochain, const IntegerVector& chain);

/// diag(I, -I) on Cone_n: the Gram matrix of the pairing.
IntegerMatrix pairing_form(const ConeComplex& cone, int n);

/// With the differentials fixed as above, the cocone of the dual map and the transposed cone
/// differential satisfy d^{n} = -P (∂_{n+1})^T P, P = pairing_form; hence
/// ⟨d c, z⟩ = -⟨c, ∂ z⟩. Returns true when the matrices agree in every degree.
bool check_cocone_duality(const ChainMap& f);

} // namespace relcone

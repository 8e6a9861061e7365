#pragma once

#include "relcone/algebra/matrix.hpp"

namespace relcone {

/// U * A * V = D with U, V unimodular and D diagonal, d_1 | d_2 | ... | d_r.
struct SmithDecomposition {
    IntegerMatrix left;          // U
    IntegerMatrix diagonal;      // D, same shape as A
    IntegerMatrix right;         // V
    IntegerMatrix left_inverse;  // U^-1
    IntegerMatrix right_inverse; // V^-1
    std::size_t rank = 0;

    /// Nonzero diagonal entries d_1 .. d_r.
    IntegerVector invariant_factors() const;
};

SmithDecomposition smith_normal_form(const IntegerMatrix& a);

/// Invariant factors only (no transforms); cheaper, used for plain homology.
struct SmithInvariants {
    IntegerVector factors; // the r nonzero diagonal entries, in divisibility order
    std::size_t rank() const { return factors.size(); }
};

SmithInvariants smith_invariants(const IntegerMatrix& a);

} // namespace relcone

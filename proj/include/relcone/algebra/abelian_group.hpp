#pragma once

#include <string>

#include "relcone/algebra/matrix.hpp"

namespace relcone {

/// Finitely generated abelian group ℤ^free_rank ⊕ ℤ/t_1 ⊕ ... with t_i | t_{i+1}, t_i >= 2.
struct AbelianGroupPresentation {
    std::size_t free_rank = 0;
    IntegerVector torsion;

    bool is_trivial() const { return free_rank == 0 && torsion.empty(); }

    /// Builds the canonical form from arbitrary cyclic orders (0 = infinite, 1 dropped).
    static AbelianGroupPresentation from_orders(const IntegerVector& orders);

    /// Canonical text: "0", "ℤ", "ℤ^2 ⊕ ℤ/2 ⊕ ℤ/6".
    std::string to_string() const;
    /// ASCII variant: "0", "Z", "Z^2 + Z/2".
    std::string to_ascii() const;

    friend bool operator==(const AbelianGroupPresentation& a, const AbelianGroupPresentation& b)
    {
        return a.free_rank == b.free_rank && a.torsion == b.torsion;
    }
    friend bool operator!=(const AbelianGroupPresentation& a, const AbelianGroupPresentation& b)
    {
        return !(a == b);
    }
};

std::ostream& operator<<(std::ostream& os, const AbelianGroupPresentation& g);

AbelianGroupPresentation direct_sum(const AbelianGroupPresentation& a, const AbelianGroupPresentation& b);

} // namespace relcone

#pragma once

#include <map>
#include <string>
#include <vector>

#include "relcone/chain/homology.hpp"

namespace relcone {

/// im g = ker h for A -g-> B -h-> C, computed with the actual maps.
bool exact_at(const GroupHom& g, const GroupHom& h);

struct ExactnessSlot {
    std::string group; // e.g. "H_2(f)"
    int degree = 0;
    AbelianGroupPresentation value;
    bool exact = false;
};

struct ExactnessReport {
    std::vector<ExactnessSlot> slots; // in sequence order
    bool rank_balanced = false;       // alternating sum of free ranks vanishes
    bool all_exact() const;
};

/// … -> H_n(Y) -> H_n(f) -> H_{n-1}(X) -> H_{n-1}(Y) -> … for a chain map f: X -> Y.
ExactnessReport long_exact_sequence(const ChainMap& f);

/// Homology of the degreewise kernel complex of f, in the coordinates of X_n.
Subquotient kernel_homology_basis(const ChainMap& f, int n);
/// Homology of the degreewise cokernel complex Y_n / f(X_n), in the coordinates of Y_n.
Subquotient cokernel_homology_basis(const ChainMap& f, int n);

struct KerCokerReport {
    std::map<int, AbelianGroupPresentation> kernel, cokernel, relative;
    ExactnessReport sequence; // … -> H_{n-1}(ker f) -> H_n(f) -> H_n(coker f) -> H_{n-2}(ker f) -> …
    bool injective = false;
    bool surjective = false;
    /// H_n(f) ≅ H_n(coker f) when injective; H_n(f) ≅ H_{n-1}(ker f) when surjective.
    bool special_case_holds = true;
};

KerCokerReport ker_coker_sequence(const ChainMap& f);

} // namespace relcone

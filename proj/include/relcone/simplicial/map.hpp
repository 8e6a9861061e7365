#pragma once

#include "relcone/chain/map.hpp"
#include "relcone/simplicial/delta_complex.hpp"

namespace relcone {

/// Map of normalized Δ-complexes: every cell of the source goes to a simplex of the same
/// dimension in the target, possibly degenerate. Compatibility with faces is validated.
class SimplicialMap {
public:
    SimplicialMap() = default;
    /// images[d][c] is the image of cell c of dimension d.
    SimplicialMap(DeltaComplex source, DeltaComplex target, std::vector<std::vector<SimplexRef>> images);

    /// Determined by a vertex map: each cell goes to the unique target simplex spanned by the
    /// image vertices (consecutive repeats collapse). Throws when no or several cells qualify.
    static SimplicialMap from_vertex_map(const DeltaComplex& source, const DeltaComplex& target,
                                         const std::vector<std::size_t>& vertex_map);
    static SimplicialMap identity(const DeltaComplex& k);
    /// Constant map to a vertex of the target.
    static SimplicialMap constant(const DeltaComplex& source, const DeltaComplex& target, std::size_t vertex = 0);

    const DeltaComplex& source() const { return source_; }
    const DeltaComplex& target() const { return target_; }
    const SimplexRef& image(int d, std::size_t cell) const;
    /// Image of an arbitrary (possibly degenerate) source simplex.
    SimplexRef image(const SimplexRef& s) const;
    std::vector<std::size_t> vertex_map() const;

    ChainMap induced_chain_map() const;

private:
    DeltaComplex source_, target_;
    std::vector<std::vector<SimplexRef>> images_;
};

inline ChainMap induced_chain_map(const SimplicialMap& f) { return f.induced_chain_map(); }

} // namespace relcone

#pragma once

#include <map>
#include <vector>

#include "relcone/chain/complex.hpp"
#include "relcone/simplicial/simplex.hpp"

namespace relcone {

/// Finite normalized Δ-complex.
///
/// Cells of dimension d >= 1 list their d+1 faces d_0 .. d_d in order. A face is a
/// (d-1)-simplex given as a SimplexRef, so it may be a degenerate image of a lower cell;
/// for an ordinary Δ-complex every face is a nondegenerate cell of dimension d-1.
/// The constructor validates the simplicial identities d_i d_j = d_{j-1} d_i (i < j).
class DeltaComplex {
public:
    using FaceList = std::vector<SimplexRef>;

    DeltaComplex() = default;
    /// cells[k] lists the cells of dimension k+1.
    DeltaComplex(std::size_t vertices, std::vector<std::vector<FaceList>> cells);

    /// Ordinary Δ-complex: faces given as indices of cells one dimension down.
    static DeltaComplex from_face_indices(std::size_t vertices,
                                          const std::vector<std::vector<std::vector<std::size_t>>>& cells);
    /// Ordered simplicial complex generated by facets (vertex lists); faces are sorted subsets.
    static DeltaComplex from_facets(std::size_t vertices, const std::vector<std::vector<std::size_t>>& facets);

    int dimension() const; // -1 when empty
    std::size_t count(int d) const;
    std::size_t total_cells() const;
    const FaceList& faces(int d, std::size_t cell) const;

    /// Face i of an arbitrary simplex.
    SimplexRef face(const SimplexRef& s, int i) const;
    /// Vertex indices v_0 .. v_n of a simplex.
    std::vector<std::size_t> vertices(const SimplexRef& s) const;
    std::vector<std::size_t> vertices(int d, std::size_t cell) const
    {
        return vertices(SimplexRef::nondegenerate(d, cell));
    }

    /// Cellular chains; degenerate faces contribute 0. Degrees [0, dimension()].
    ChainComplex chain_complex() const;
    /// Augmented chains: extra ℤ in degree -1, ε = sum of vertex coefficients.
    ChainComplex reduced_chain_complex() const;

    long euler_characteristic() const;

    friend bool operator==(const DeltaComplex& a, const DeltaComplex& b)
    {
        return a.vertices_ == b.vertices_ && a.cells_ == b.cells_;
    }

private:
    void validate() const;
    IntegerMatrix boundary_matrix(int d) const;

    std::size_t vertices_ = 0;
    std::vector<std::vector<FaceList>> cells_;
};

} // namespace relcone

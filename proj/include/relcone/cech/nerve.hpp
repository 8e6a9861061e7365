#pragma once

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "relcone/chain/map.hpp"
#include "relcone/simplicial/delta_complex.hpp"

namespace relcone {

using IndexTuple = std::vector<std::size_t>;

/// Intersection pattern of a cover indexed by 0 .. size()-1.
///
/// Built from the intersecting families; the downward closure is taken and every singleton
/// is included. Simplices of each dimension are kept as sorted tuples in lexicographic order.
class Nerve {
public:
    Nerve() = default;
    Nerve(std::size_t indices, const std::vector<IndexTuple>& families, std::vector<std::string> labels = {});

    /// Every subset of size <= k + 1 of {0..n-1}: the k-skeleton of the full simplex.
    static Nerve skeleton_of_simplex(std::size_t n, int k);

    std::size_t size() const { return indices_; }
    int dimension() const { return static_cast<int>(simplices_.size()) - 1; }
    std::size_t count(int p) const;
    const std::vector<IndexTuple>& simplices(int p) const;
    const std::vector<std::string>& labels() const { return labels_; }

    bool contains(IndexTuple family) const;

    /// Position and orientation sign of an ordered tuple. Nullopt when an index repeats;
    /// throws ValidationError when the family does not intersect.
    std::optional<std::pair<std::size_t, int>> locate(const IndexTuple& ordered) const;

    /// Alternating Čech cochains with integer entries: C^p = ℤ^{count(p)},
    /// (dg)(i_0..i_{p+1}) = Σ (-1)^k g(i_0..î_k..i_{p+1}).
    ChainComplex cochain_complex() const;

    /// The same nerve as an ordered simplicial complex.
    DeltaComplex delta_complex() const;

    friend bool operator==(const Nerve& a, const Nerve& b)
    {
        return a.indices_ == b.indices_ && a.simplices_ == b.simplices_;
    }

private:
    std::size_t indices_ = 0;
    std::vector<std::vector<IndexTuple>> simplices_;
    std::vector<std::string> labels_;
};

/// Refinement r: I -> J from a cover of M to a cover of N.
class CoverMap {
public:
    CoverMap() = default;
    /// Throws ValidationError unless r carries intersecting families to intersecting families.
    CoverMap(Nerve source, Nerve target, std::vector<std::size_t> refinement);

    static CoverMap identity(const Nerve& n);

    const Nerve& source() const { return source_; }
    const Nerve& target() const { return target_; }
    const std::vector<std::size_t>& refinement() const { return r_; }

    /// Φ*: C(target) -> C(source), (Φ*g)(i_0..i_p) = g(r(i_0)..r(i_p)).
    ChainMap pullback() const;

private:
    Nerve source_, target_;
    std::vector<std::size_t> r_;
};

} // namespace relcone

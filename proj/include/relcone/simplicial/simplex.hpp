#pragma once

#include <cstddef>
#include <string>
#include <vector>

namespace relcone {

/// An n-simplex of a normalized Δ-complex: a nondegenerate cell of dimension `dim`
/// precomposed with a monotone surjection [n] -> [dim], stored as its value list.
struct SimplexRef {
    int dim = 0;
    std::size_t cell = 0;
    std::vector<int> degeneracy;

    static SimplexRef nondegenerate(int dim, std::size_t cell);
    /// The constant n-simplex on a vertex.
    static SimplexRef constant(std::size_t vertex, int n);

    int size() const { return static_cast<int>(degeneracy.size()) - 1; }
    bool is_degenerate() const { return size() != dim; }

    /// Precompose with another monotone surjection t: [k] -> [size()].
    SimplexRef compose(const std::vector<int>& t) const;

    std::string to_string() const;

    friend bool operator==(const SimplexRef& a, const SimplexRef& b)
    {
        return a.dim == b.dim && a.cell == b.cell && a.degeneracy == b.degeneracy;
    }
    friend bool operator!=(const SimplexRef& a, const SimplexRef& b) { return !(a == b); }
    friend bool operator<(const SimplexRef& a, const SimplexRef& b)
    {
        if (a.dim != b.dim)
            return a.dim < b.dim;
        if (a.cell != b.cell)
            return a.cell < b.cell;
        return a.degeneracy < b.degeneracy;
    }
};

std::vector<int> identity_surjection(int n);
bool is_monotone_surjection(const std::vector<int>& s);

} // namespace relcone

#include "relcone/chain/homology.hpp"

namespace relcone {

AbelianGroupPresentation homology(const ChainComplex& c, int n)
{
    if (!c.in_range(n))
        throw DimensionError("degree " + std::to_string(n) + " outside the range [" + std::to_string(c.min_degree()) +
                             ", " + std::to_string(c.max_degree()) + "]");
    const auto out = smith_invariants(c.differential(n));
    const auto in = smith_invariants(c.incoming(n));
    AbelianGroupPresentation g;
    g.free_rank = c.dim(n) - out.rank() - in.rank();
    if (c.ring() == Ring::integers)
        for (const auto& d : in.factors)
            if (d != 1)
                g.torsion.push_back(d);
    return g;
}

std::map<int, AbelianGroupPresentation> homology_all(const ChainComplex& c)
{
    std::map<int, AbelianGroupPresentation> out;
    for (int n = c.min_degree(); n <= c.max_degree(); ++n)
        out[n] = homology(c, n);
    return out;
}

Subquotient homology_basis(const ChainComplex& c, int n)
{
    return Subquotient(c.dim(n), integer_kernel_basis(c.differential(n)), c.incoming(n));
}

AbelianGroupPresentation relative_homology(const ChainMap& f, int n)
{
    return homology(mapping_cone(f).complex(), n);
}

bool is_quasi_iso(const ChainMap& f)
{
    const auto& c = mapping_cone(f).complex();
    for (int n = c.min_degree(); n <= c.max_degree(); ++n)
        if (!homology(c, n).is_trivial())
            return false;
    return true;
}

GroupHom induced_hom(const Subquotient& source, const Subquotient& target,
                     const std::function<IntegerVector(const IntegerVector&)>& on_chains)
{
    GroupHom h;
    h.source_orders = source.orders();
    h.target_orders = target.orders();
    h.matrix = IntegerMatrix(target.size(), source.size());
    for (std::size_t j = 0; j < source.size(); ++j) {
        const auto image = target.coordinates(on_chains(source.generators()[j]));
        for (std::size_t i = 0; i < target.size(); ++i)
            h.matrix(i, j) = image[i];
    }
    return h;
}

GroupHom induced_map(const ChainMap& f, int n)
{
    return induced_hom(homology_basis(f.source(), n), homology_basis(f.target(), n),
                       [&](const IntegerVector& v) { return f.apply(n, v); });
}

bool is_isomorphism(const GroupHom& h)
{
    // Surjective onto the target presentation, and source ≅ target; f.g. abelian groups are Hopfian.
    const IntegerMatrix rel = IntegerMatrix::diagonal(h.target_orders);
    if (!cokernel_presentation(hstack(h.matrix, rel)).is_trivial())
        return false;
    return AbelianGroupPresentation::from_orders(h.source_orders) ==
           AbelianGroupPresentation::from_orders(h.target_orders);
}

ConnectingMapCheck connecting_map_check(const ChainMap& f, int n, const IntegerVector& gamma)
{
    if (f.grading() != Grading::chain)
        throw ValidationError("connecting_map_check expects a chain map");
    const auto& x = f.source();
    const auto& y = f.target();
    if (gamma.size() != x.dim(n - 1))
        throw DimensionError("γ has the wrong length for degree " + std::to_string(n - 1));
    if (!is_zero(x.differential(n - 1).apply(gamma)))
        throw ValidationError("γ is not a cycle");

    const ConeComplex cone(f);
    const auto& c = cone.complex();

    // Lift γ along the projection Cone_n -> X_{n-1}: any preimage works.
    IntegerMatrix proj(x.dim(n - 1), c.dim(n));
    for (std::size_t i = 0; i < x.dim(n - 1); ++i)
        proj(i, i) = 1;
    auto lift = integer_solve(proj, gamma);
    if (!lift)
        throw ComputationError("projection from the cone is not surjective");
    const IntegerVector boundary = c.differential(n).apply(*lift);
    // Pull back along the inclusion Y_{n-1} -> Cone_{n-1}.
    IntegerMatrix incl(c.dim(n - 1), y.dim(n - 1));
    for (std::size_t i = 0; i < y.dim(n - 1); ++i)
        incl(cone.first_dim(n - 1) + i, i) = 1;
    auto pulled = integer_solve(incl, boundary);
    if (!pulled)
        throw ComputationError("boundary of the lift does not lie in the target summand");

    ConnectingMapCheck out;
    out.image = f.apply(n - 1, gamma);
    const auto hy = homology_basis(y, n - 1);
    out.coordinates = hy.coordinates(out.image);
    out.agrees = hy.coordinates(*pulled) == out.coordinates;
    return out;
}

} // namespace relcone

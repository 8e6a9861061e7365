#include "relcone/cech/cohomology.hpp"

#include "relcone/chain/homology.hpp"
#include "relcone/errors.hpp"

namespace relcone {

std::string CohomologyGroup::to_string() const
{
    switch (coefficients.kind) {
    case Coefficients::Kind::rationals:
        return group.free_rank == 0 ? "0"
               : group.free_rank == 1 ? "ℚ"
                                       : "ℚ^" + std::to_string(group.free_rank);
    case Coefficients::Kind::angle: {
        std::string head;
        if (divisible_rank == 1)
            head = "ℚ/ℤ";
        else if (divisible_rank > 1)
            head = "(ℚ/ℤ)^" + std::to_string(divisible_rank);
        if (group.is_trivial())
            return head.empty() ? "0" : head;
        return head.empty() ? group.to_string() : head + " ⊕ " + group.to_string();
    }
    default:
        return group.to_string();
    }
}

std::string CohomologyGroup::to_ascii() const
{
    switch (coefficients.kind) {
    case Coefficients::Kind::rationals:
        return group.free_rank == 0 ? "0"
               : group.free_rank == 1 ? "Q"
                                       : "Q^" + std::to_string(group.free_rank);
    case Coefficients::Kind::angle: {
        std::string head;
        if (divisible_rank == 1)
            head = "Q/Z";
        else if (divisible_rank > 1)
            head = "(Q/Z)^" + std::to_string(divisible_rank);
        if (group.is_trivial())
            return head.empty() ? "0" : head;
        return head.empty() ? group.to_ascii() : head + " + " + group.to_ascii();
    }
    default:
        return group.to_ascii();
    }
}

CohomologyGroup cochain_cohomology(const ChainComplex& c, const Coefficients& coeff, int q)
{
    if (c.grading() != Grading::cochain)
        throw ValidationError("cochain_cohomology expects a cochain complex");
    CohomologyGroup out;
    out.coefficients = coeff;
    auto integral = [&](int n) { return c.in_range(n) ? homology(c, n) : AbelianGroupPresentation{}; };
    switch (coeff.kind) {
    case Coefficients::Kind::integers:
        out.group = integral(q);
        break;
    case Coefficients::Kind::rationals:
        out.group.free_rank = integral(q).free_rank;
        break;
    case Coefficients::Kind::modular: {
        const std::size_t n = c.dim(q);
        if (n == 0)
            break;
        const IntegerMatrix d = c.differential(q);
        const IntegerMatrix z = kernel_modulo(d, IntegerVector(d.rows(), coeff.modulus));
        const IntegerMatrix b = hstack(c.incoming(q), coeff.modulus * IntegerMatrix::identity(n));
        out.group = Subquotient(n, z, b).presentation();
        break;
    }
    case Coefficients::Kind::angle:
        out.divisible_rank = integral(q).free_rank;
        out.group.torsion = integral(q + 1).torsion;
        break;
    }
    return out;
}

CohomologyGroup cech_cohomology(const Nerve& nerve, const Coefficients& coeff, int q)
{
    return cochain_cohomology(nerve.cochain_complex(), coeff, q);
}

ConeComplex relative_cech_complex(const CoverMap& m) { return mapping_cocone(m.pullback()); }

CohomologyGroup relative_cech_cohomology(const CoverMap& m, const Coefficients& coeff, int q)
{
    return cochain_cohomology(relative_cech_complex(m).complex(), coeff, q);
}

CohomologyClass class_of(const ChainComplex& c, int q, const IntegerVector& cocycle)
{
    if (cocycle.size() != c.dim(q))
        throw DimensionError("cocycle has " + std::to_string(cocycle.size()) + " entries, expected " +
                             std::to_string(c.dim(q)));
    if (!is_zero(c.differential(q).apply(cocycle)))
        throw ValidationError("not a cocycle");
    const Subquotient h = homology_basis(c, q);
    CohomologyClass out;
    out.degree = q;
    out.group = h.presentation();
    out.cocycle = cocycle;
    out.coordinates = h.coordinates(cocycle);
    out.orders = h.orders();
    return out;
}

} // namespace relcone

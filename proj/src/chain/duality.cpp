#include "relcone/chain/duality.hpp"

#include <algorithm>

namespace relcone {

ChainComplex dual_complex(const ChainComplex& c)
{
    if (c.grading() != Grading::chain)
        throw ValidationError("dual_complex expects a chain complex");
    std::vector<IntegerMatrix> diffs;
    for (int n = c.min_degree(); n <= c.max_degree(); ++n)
        diffs.push_back(c.differential(n + 1).transpose());
    return ChainComplex(Grading::cochain, c.min_degree(), c.dims(), std::move(diffs), c.ring());
}

ChainMap dualize(const ChainMap& f)
{
    if (f.grading() != Grading::chain)
        throw ValidationError("dualize expects a chain map");
    std::vector<IntegerMatrix> comps;
    for (int n = f.min_degree(); n <= f.max_degree(); ++n)
        comps.push_back(f.component(n).transpose());
    return ChainMap(dual_complex(f.target()), dual_complex(f.source()), f.min_degree(), std::move(comps));
}

IntegerMatrix pairing_form(const ConeComplex& cone, int n)
{
    const std::size_t a = cone.first_dim(n), b = cone.second_dim(n);
    IntegerMatrix p(a + b, a + b);
    for (std::size_t i = 0; i < a; ++i)
        p(i, i) = 1;
    for (std::size_t i = 0; i < b; ++i)
        p(a + i, a + i) = -1;
    return p;
}

Rational cone_pairing(const ConeComplex& cone, int n, const RationalVector& cochain, const IntegerVector& chain)
{
    const std::size_t a = cone.first_dim(n), b = cone.second_dim(n);
    if (cochain.size() != a + b || chain.size() != a + b)
        throw DimensionError("pairing arguments do not live in degree " + std::to_string(n));
    Rational acc = 0;
    for (std::size_t i = 0; i < a; ++i)
        acc += cochain[i] * chain[i];
    for (std::size_t i = a; i < a + b; ++i)
        acc -= cochain[i] * chain[i];
    return acc;
}

bool check_cocone_duality(const ChainMap& f)
{
    const ConeComplex cone(f);
    const ConeComplex cocone(dualize(f));
    const auto& c = cone.complex();
    const auto& d = cocone.complex();
    for (int n = std::min(c.min_degree(), d.min_degree()); n <= std::max(c.max_degree(), d.max_degree()); ++n) {
        if (c.dim(n) != d.dim(n) || cone.first_dim(n) != cocone.first_dim(n))
            return false;
        const IntegerMatrix p = pairing_form(cone, n);
        const IntegerMatrix q = pairing_form(cone, n + 1);
        if (d.differential(n) != -(q * c.differential(n + 1).transpose() * p))
            return false;
    }
    return true;
}

} // namespace relcone

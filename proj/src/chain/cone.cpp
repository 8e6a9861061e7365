#include "relcone/chain/cone.hpp"

#include <algorithm>

namespace relcone {

namespace {

ChainComplex build_cone(const ChainMap& f)
{
    const auto& x = f.source();
    const auto& y = f.target();
    const bool chain = f.grading() == Grading::chain;
    // The shifted complex: X for chains, Y for cochains.
    const ChainComplex& a = chain ? x : y;
    const ChainComplex& b = chain ? y : x;

    int lo = 0, hi = -1;
    bool any = false;
    if (!a.empty_range()) {
        lo = a.min_degree() + 1;
        hi = a.max_degree() + 1;
        any = true;
    }
    if (!b.empty_range()) {
        lo = any ? std::min(lo, b.min_degree()) : b.min_degree();
        hi = any ? std::max(hi, b.max_degree()) : b.max_degree();
        any = true;
    }
    const Ring ring = (x.ring() == Ring::rationals || y.ring() == Ring::rationals) ? Ring::rationals : Ring::integers;
    if (!any)
        return ChainComplex(f.grading(), 0, {}, {}, ring);

    std::vector<std::size_t> dims;
    std::vector<IntegerMatrix> diffs;
    for (int n = lo; n <= hi; ++n)
        dims.push_back(a.dim(n - 1) + b.dim(n));
    for (int n = lo; n <= hi; ++n) {
        if (chain) {
            // [[∂X_{n-1}, 0], [f_{n-1}, -∂Y_n]] : X_{n-1} ⊕ Y_n -> X_{n-2} ⊕ Y_{n-1}
            diffs.push_back(block_matrix(x.differential(n - 1), IntegerMatrix(x.dim(n - 2), y.dim(n)),
                                         f.component(n - 1), -y.differential(n)));
        } else {
            // [[-dY_{n-1}, f_n], [0, dX_n]] : Y^{n-1} ⊕ X^n -> Y^n ⊕ X^{n+1}
            diffs.push_back(block_matrix(-y.differential(n - 1), f.component(n),
                                         IntegerMatrix(x.dim(n + 1), y.dim(n - 1)), x.differential(n)));
        }
    }
    return ChainComplex(f.grading(), lo, std::move(dims), std::move(diffs), ring);
}

} // namespace

ConeComplex::ConeComplex(ChainMap f) : map_(std::move(f)), complex_(build_cone(map_)) {}

std::size_t ConeComplex::first_dim(int n) const
{
    return map_.grading() == Grading::chain ? map_.source().dim(n - 1) : map_.target().dim(n - 1);
}

std::size_t ConeComplex::second_dim(int n) const
{
    return map_.grading() == Grading::chain ? map_.target().dim(n) : map_.source().dim(n);
}

IntegerVector ConeComplex::join(int n, const IntegerVector& first, const IntegerVector& second) const
{
    if (first.size() != first_dim(n) || second.size() != second_dim(n))
        throw DimensionError("cone component sizes do not match degree " + std::to_string(n));
    IntegerVector v = first;
    v.insert(v.end(), second.begin(), second.end());
    return v;
}

IntegerVector ConeComplex::first(int n, const IntegerVector& v) const
{
    if (v.size() != complex_.dim(n))
        throw DimensionError("vector is not a cone element of degree " + std::to_string(n));
    return IntegerVector(v.begin(), v.begin() + static_cast<std::ptrdiff_t>(first_dim(n)));
}

IntegerVector ConeComplex::second(int n, const IntegerVector& v) const
{
    if (v.size() != complex_.dim(n))
        throw DimensionError("vector is not a cone element of degree " + std::to_string(n));
    return IntegerVector(v.begin() + static_cast<std::ptrdiff_t>(first_dim(n)), v.end());
}

ConeComplex mapping_cocone(const ChainMap& f)
{
    if (f.grading() != Grading::cochain)
        throw ValidationError("mapping_cocone expects a cochain map");
    return ConeComplex(f);
}

namespace {

ChainMap cone_shear(const HomotopyOperator& h, int sign)
{
    if (h.f().grading() != Grading::chain)
        throw ValidationError("homotopy cone isomorphism is defined for chain maps");
    const ConeComplex cf(h.f()), cg(h.g());
    const auto& c = cf.complex();
    std::vector<IntegerMatrix> comps;
    for (int n = c.min_degree(); n <= c.max_degree(); ++n) {
        const std::size_t a = cf.first_dim(n), b = cf.second_dim(n);
        IntegerMatrix m = IntegerMatrix::identity(a + b);
        const IntegerMatrix hn = h.component(n - 1);
        m.set_block(a, 0, Integer(sign) * hn);
        comps.push_back(std::move(m));
    }
    if (sign < 0)
        return ChainMap(cf.complex(), cg.complex(), c.min_degree(), std::move(comps));
    return ChainMap(cg.complex(), cf.complex(), c.min_degree(), std::move(comps));
}

} // namespace

ChainMap homotopy_cone_iso(const HomotopyOperator& h) { return cone_shear(h, -1); }
ChainMap homotopy_cone_iso_inverse(const HomotopyOperator& h) { return cone_shear(h, +1); }

} // namespace relcone

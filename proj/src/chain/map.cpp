#include "relcone/chain/map.hpp"

#include <algorithm>
#include <functional>

#include "relcone/algebra/lattice.hpp"

namespace relcone {

namespace {

int lowest(const ChainComplex& a, const ChainComplex& b)
{
    if (a.empty_range())
        return b.min_degree();
    if (b.empty_range())
        return a.min_degree();
    return std::min(a.min_degree(), b.min_degree());
}

int highest(const ChainComplex& a, const ChainComplex& b)
{
    if (a.empty_range())
        return b.max_degree();
    if (b.empty_range())
        return a.max_degree();
    return std::max(a.max_degree(), b.max_degree());
}

} // namespace

ChainMap::ChainMap(ChainComplex source, ChainComplex target, int min_degree, std::vector<IntegerMatrix> components)
    : source_(std::move(source)), target_(std::move(target)), lo_(min_degree), components_(std::move(components))
{
    if (source_.grading() != target_.grading())
        throw ValidationError("chain map between complexes of different grading");
    for (int n = lo_; n <= max_degree(); ++n) {
        const auto& m = components_[static_cast<std::size_t>(n - lo_)];
        if (m.rows() != target_.dim(n) || m.cols() != source_.dim(n))
            throw DimensionError("map component in degree " + std::to_string(n) + " has shape " + m.shape() +
                                 ", expected " + std::to_string(target_.dim(n)) + "x" +
                                 std::to_string(source_.dim(n)));
    }
    const int lo = lowest(source_, target_), hi = highest(source_, target_);
    for (int n = lo; n <= hi; ++n) {
        const int t = source_.target_degree(n);
        if (!(target_.differential(n) * component(n) == component(t) * source_.differential(n)))
            throw ValidationError("map does not commute with the differentials at degree " + std::to_string(n));
    }
}

ChainMap ChainMap::identity(const ChainComplex& c)
{
    std::vector<IntegerMatrix> comps;
    for (int n = c.min_degree(); n <= c.max_degree(); ++n)
        comps.push_back(IntegerMatrix::identity(c.dim(n)));
    return ChainMap(c, c, c.min_degree(), std::move(comps));
}

ChainMap ChainMap::zero(const ChainComplex& source, const ChainComplex& target)
{
    return ChainMap(source, target, 0, {});
}

IntegerMatrix ChainMap::component(int n) const
{
    if (n < lo_ || n > max_degree())
        return IntegerMatrix(target_.dim(n), source_.dim(n));
    return components_[static_cast<std::size_t>(n - lo_)];
}

bool ChainMap::is_injective() const
{
    for (int n = source_.min_degree(); n <= source_.max_degree(); ++n)
        if (rank(component(n)) != source_.dim(n))
            return false;
    return true;
}

bool ChainMap::is_surjective() const
{
    for (int n = target_.min_degree(); n <= target_.max_degree(); ++n)
        if (!cokernel_presentation(component(n)).is_trivial())
            return false;
    return true;
}

ChainMap operator-(const ChainMap& f, const ChainMap& g)
{
    if (!(f.source_ == g.source_) || !(f.target_ == g.target_))
        throw ValidationError("difference of maps with different source or target");
    const int lo = lowest(f.source_, f.target_), hi = highest(f.source_, f.target_);
    std::vector<IntegerMatrix> comps;
    for (int n = lo; n <= hi; ++n)
        comps.push_back(f.component(n) - g.component(n));
    return ChainMap(f.source_, f.target_, lo, std::move(comps));
}

ChainMap compose(const ChainMap& g, const ChainMap& f)
{
    if (!(f.target_ == g.source_))
        throw ValidationError("composition of non-composable maps");
    const int lo = lowest(f.source_, g.target_), hi = highest(f.source_, g.target_);
    std::vector<IntegerMatrix> comps;
    for (int n = lo; n <= hi; ++n)
        comps.push_back(g.component(n) * f.component(n));
    return ChainMap(f.source_, g.target_, lo, std::move(comps));
}

namespace {

// h d + d h evaluated at degree n, in the given grading.
IntegerMatrix homotopy_defect(const ChainComplex& x, const ChainComplex& y, int n,
                              const std::function<IntegerMatrix(int)>& h)
{
    // h_n : X_n -> Y_{s(n)} where s is the source-degree shift of the grading
    const int up = x.source_degree(n); // degree h_n lands in
    const int down = x.target_degree(n);
    return y.differential(up) * h(n) + h(down) * x.differential(n);
}

} // namespace

HomotopyOperator::HomotopyOperator(const ChainMap& f, const ChainMap& g, int min_degree,
                                   std::vector<IntegerMatrix> components)
    : f_(f), g_(g), lo_(min_degree), components_(std::move(components))
{
    if (!(f.source() == g.source()) || !(f.target() == g.target()))
        throw ValidationError("homotopy between maps with different source or target");
    const auto& x = f.source();
    const auto& y = f.target();
    for (std::size_t k = 0; k < components_.size(); ++k) {
        const int n = lo_ + static_cast<int>(k);
        if (components_[k].rows() != y.dim(x.source_degree(n)) || components_[k].cols() != x.dim(n))
            throw DimensionError("homotopy component in degree " + std::to_string(n) + " has shape " +
                                 components_[k].shape());
    }
    const int lo = lowest(x, y) - 1, hi = highest(x, y) + 1;
    for (int n = lo; n <= hi; ++n) {
        auto defect = homotopy_defect(x, y, n, [this](int m) { return component(m); });
        if (defect != f.component(n) - g.component(n))
            throw ValidationError("h d + d h differs from f - g at degree " + std::to_string(n));
    }
}

IntegerMatrix HomotopyOperator::component(int n) const
{
    const auto& x = f_.source();
    const auto& y = f_.target();
    const std::size_t k = static_cast<std::size_t>(n - lo_);
    if (n < lo_ || k >= components_.size())
        return IntegerMatrix(y.dim(x.source_degree(n)), x.dim(n));
    return components_[k];
}

ChainMap HomotopyOperator::shifted(const ChainMap& f, int min_degree, const std::vector<IntegerMatrix>& components)
{
    const auto& x = f.source();
    const auto& y = f.target();
    auto h = [&](int m) {
        const std::size_t k = static_cast<std::size_t>(m - min_degree);
        if (m < min_degree || k >= components.size())
            return IntegerMatrix(y.dim(x.source_degree(m)), x.dim(m));
        return components[k];
    };
    const int lo = lowest(x, y), hi = highest(x, y);
    std::vector<IntegerMatrix> comps;
    for (int n = lo; n <= hi; ++n)
        comps.push_back(f.component(n) - homotopy_defect(x, y, n, h));
    return ChainMap(x, y, lo, std::move(comps));
}

} // namespace relcone

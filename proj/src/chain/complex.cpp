#include "relcone/chain/complex.hpp"

#include <algorithm>

namespace relcone {

const char* to_string(Grading g) { return g == Grading::chain ? "chain" : "cochain"; }
const char* to_string(Ring r) { return r == Ring::integers ? "Z" : "Q"; }

ChainComplex::ChainComplex(Grading grading, int min_degree, std::vector<std::size_t> dims,
                           std::vector<IntegerMatrix> differentials, Ring ring)
    : grading_(grading), ring_(ring), min_degree_(min_degree), dims_(std::move(dims)), diffs_(std::move(differentials))
{
    if (diffs_.size() != dims_.size())
        throw DimensionError("expected one differential per degree (" + std::to_string(dims_.size()) + "), got " +
                             std::to_string(diffs_.size()));
    for (int n = min_degree_; n <= max_degree(); ++n) {
        const auto& d = diffs_[static_cast<std::size_t>(n - min_degree_)];
        if (d.rows() != dim(target_degree(n)) || d.cols() != dim(n))
            throw DimensionError("differential leaving degree " + std::to_string(n) + " has shape " + d.shape() +
                                 ", expected " + std::to_string(dim(target_degree(n))) + "x" +
                                 std::to_string(dim(n)));
    }
    for (int n = min_degree_; n <= max_degree(); ++n) {
        const int t = target_degree(n);
        if (!in_range(t))
            continue;
        if (!(differential(t) * differential(n)).is_zero())
            throw ValidationError("differential squares to a nonzero map at degree " + std::to_string(n));
    }
}

ChainComplex ChainComplex::concentrated(Grading grading, int degree, std::size_t dim, Ring ring)
{
    return ChainComplex(grading, degree, {dim}, {IntegerMatrix(0, dim)}, ring);
}

std::size_t ChainComplex::dim(int n) const
{
    return in_range(n) ? dims_[static_cast<std::size_t>(n - min_degree_)] : 0;
}

std::size_t ChainComplex::total_dim() const
{
    std::size_t s = 0;
    for (auto d : dims_)
        s += d;
    return s;
}

IntegerMatrix ChainComplex::differential(int n) const
{
    if (!in_range(n))
        return IntegerMatrix(dim(target_degree(n)), 0);
    return diffs_[static_cast<std::size_t>(n - min_degree_)];
}

ChainComplex ChainComplex::with_ring(Ring ring) const
{
    ChainComplex c = *this;
    c.ring_ = ring;
    return c;
}

ChainComplex ChainComplex::widened(int lo, int hi) const
{
    if (!empty_range()) {
        lo = std::min(lo, min_degree_);
        hi = std::max(hi, max_degree());
    }
    std::vector<std::size_t> dims;
    std::vector<IntegerMatrix> diffs;
    for (int n = lo; n <= hi; ++n) {
        dims.push_back(dim(n));
        diffs.push_back(IntegerMatrix(dim(target_degree(n)), dim(n)));
        if (in_range(n))
            diffs.back() = differential(n);
    }
    ChainComplex c;
    c.grading_ = grading_;
    c.ring_ = ring_;
    c.min_degree_ = lo;
    c.dims_ = std::move(dims);
    c.diffs_ = std::move(diffs);
    return c;
}

long ChainComplex::euler_characteristic() const
{
    long chi = 0;
    for (int n = min_degree_; n <= max_degree(); ++n)
        chi += (n % 2 == 0 ? 1 : -1) * static_cast<long>(dim(n));
    return chi;
}

bool operator==(const ChainComplex& a, const ChainComplex& b)
{
    if (a.grading_ != b.grading_ || a.ring_ != b.ring_)
        return false;
    const int lo = std::min(a.min_degree(), b.min_degree());
    const int hi = std::max(a.max_degree(), b.max_degree());
    for (int n = lo; n <= hi; ++n)
        if (a.dim(n) != b.dim(n) || a.differential(n) != b.differential(n))
            return false;
    return true;
}

ChainComplex regrade(const ChainComplex& c)
{
    const Grading g = c.grading() == Grading::chain ? Grading::cochain : Grading::chain;
    if (c.empty_range())
        return ChainComplex(g, 0, {}, {}, c.ring());
    std::vector<std::size_t> dims;
    std::vector<IntegerMatrix> diffs;
    for (int n = -c.max_degree(); n <= -c.min_degree(); ++n) {
        dims.push_back(c.dim(-n));
        diffs.push_back(c.differential(-n));
    }
    return ChainComplex(g, -c.max_degree(), std::move(dims), std::move(diffs), c.ring());
}

} // namespace relcone

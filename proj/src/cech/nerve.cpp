#include "relcone/cech/nerve.hpp"

#include <algorithm>
#include <set>

#include "relcone/chain/map.hpp"
#include "relcone/errors.hpp"

namespace relcone {

Nerve::Nerve(std::size_t indices, const std::vector<IndexTuple>& families, std::vector<std::string> labels)
    : indices_(indices), labels_(std::move(labels))
{
    if (!labels_.empty() && labels_.size() != indices_)
        throw ValidationError("nerve has " + std::to_string(indices_) + " indices but " +
                              std::to_string(labels_.size()) + " labels");
    std::vector<std::set<IndexTuple>> by_dim;
    auto insert = [&](const IndexTuple& s) {
        if (by_dim.size() < s.size())
            by_dim.resize(s.size());
        by_dim[s.size() - 1].insert(s);
    };
    for (std::size_t i = 0; i < indices_; ++i)
        insert({i});
    for (auto f : families) {
        std::sort(f.begin(), f.end());
        f.erase(std::unique(f.begin(), f.end()), f.end());
        if (f.empty())
            continue;
        if (f.back() >= indices_)
            throw ValidationError("family index " + std::to_string(f.back()) + " out of range");
        if (f.size() > 20)
            throw ValidationError("intersecting family too large");
        const std::size_t n = f.size();
        for (std::size_t mask = 1; mask < (std::size_t{1} << n); ++mask) {
            IndexTuple sub;
            for (std::size_t i = 0; i < n; ++i)
                if (mask & (std::size_t{1} << i))
                    sub.push_back(f[i]);
            insert(sub);
        }
    }
    for (const auto& level : by_dim)
        simplices_.emplace_back(level.begin(), level.end());
}

Nerve Nerve::skeleton_of_simplex(std::size_t n, int k)
{
    std::vector<IndexTuple> families;
    const auto size = static_cast<std::size_t>(k + 1);
    for (std::size_t mask = 1; mask < (std::size_t{1} << n); ++mask) {
        IndexTuple f;
        for (std::size_t i = 0; i < n; ++i)
            if (mask & (std::size_t{1} << i))
                f.push_back(i);
        if (f.size() == std::min(size, n))
            families.push_back(f);
    }
    return Nerve(n, families);
}

std::size_t Nerve::count(int p) const
{
    return p < 0 || p > dimension() ? 0 : simplices_[static_cast<std::size_t>(p)].size();
}

const std::vector<IndexTuple>& Nerve::simplices(int p) const
{
    static const std::vector<IndexTuple> none;
    return p < 0 || p > dimension() ? none : simplices_[static_cast<std::size_t>(p)];
}

bool Nerve::contains(IndexTuple family) const
{
    std::sort(family.begin(), family.end());
    family.erase(std::unique(family.begin(), family.end()), family.end());
    if (family.empty())
        return true;
    const auto& level = simplices(static_cast<int>(family.size()) - 1);
    return std::binary_search(level.begin(), level.end(), family);
}

std::optional<std::pair<std::size_t, int>> Nerve::locate(const IndexTuple& ordered) const
{
    IndexTuple sorted = ordered;
    int sign = 1;
    // insertion sort, counting transpositions
    for (std::size_t i = 1; i < sorted.size(); ++i)
        for (std::size_t j = i; j > 0 && sorted[j - 1] > sorted[j]; --j) {
            std::swap(sorted[j - 1], sorted[j]);
            sign = -sign;
        }
    if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end())
        return std::nullopt;
    const auto& level = simplices(static_cast<int>(sorted.size()) - 1);
    auto it = std::lower_bound(level.begin(), level.end(), sorted);
    if (it == level.end() || *it != sorted)
        throw ValidationError("family does not intersect in the nerve");
    return std::make_pair(static_cast<std::size_t>(it - level.begin()), sign);
}

ChainComplex Nerve::cochain_complex() const
{
    const int top = dimension();
    std::vector<std::size_t> dims;
    std::vector<IntegerMatrix> diffs;
    for (int p = 0; p <= top; ++p) {
        dims.push_back(count(p));
        IntegerMatrix d(count(p + 1), count(p));
        const auto& up = simplices(p + 1);
        for (std::size_t r = 0; r < up.size(); ++r)
            for (std::size_t k = 0; k < up[r].size(); ++k) {
                IndexTuple face = up[r];
                face.erase(face.begin() + static_cast<std::ptrdiff_t>(k));
                const auto loc = locate(face);
                d(r, loc->first) += k % 2 == 0 ? 1 : -1;
            }
        diffs.push_back(std::move(d));
    }
    return ChainComplex(Grading::cochain, 0, std::move(dims), std::move(diffs));
}

DeltaComplex Nerve::delta_complex() const
{
    std::vector<std::vector<std::size_t>> facets;
    for (int p = 1; p <= dimension(); ++p)
        for (const auto& s : simplices(p))
            facets.push_back(s);
    return DeltaComplex::from_facets(indices_, facets);
}

CoverMap::CoverMap(Nerve source, Nerve target, std::vector<std::size_t> refinement)
    : source_(std::move(source)), target_(std::move(target)), r_(std::move(refinement))
{
    if (r_.size() != source_.size())
        throw ValidationError("refinement map has " + std::to_string(r_.size()) + " entries for " +
                              std::to_string(source_.size()) + " source indices");
    for (auto j : r_)
        if (j >= target_.size())
            throw ValidationError("refinement index " + std::to_string(j) + " out of range");
    for (int p = 1; p <= source_.dimension(); ++p)
        for (const auto& s : source_.simplices(p)) {
            IndexTuple image;
            for (auto i : s)
                image.push_back(r_[i]);
            if (!target_.contains(image))
                throw ValidationError("refinement condition violated: an intersecting family of the source "
                                      "maps to a non-intersecting family of the target");
        }
}

CoverMap CoverMap::identity(const Nerve& n)
{
    std::vector<std::size_t> r(n.size());
    for (std::size_t i = 0; i < r.size(); ++i)
        r[i] = i;
    return CoverMap(n, n, r);
}

ChainMap CoverMap::pullback() const
{
    const int top = std::min(source_.dimension(), target_.dimension());
    std::vector<IntegerMatrix> comps;
    for (int p = 0; p <= top; ++p) {
        IntegerMatrix m(source_.count(p), target_.count(p));
        const auto& simplices = source_.simplices(p);
        for (std::size_t r = 0; r < simplices.size(); ++r) {
            IndexTuple image;
            for (auto i : simplices[r])
                image.push_back(r_[i]);
            if (const auto loc = target_.locate(image))
                m(r, loc->first) = loc->second;
        }
        comps.push_back(std::move(m));
    }
    return ChainMap(target_.cochain_complex(), source_.cochain_complex(), 0, std::move(comps));
}

} // namespace relcone

#include "relcone/simplicial/map.hpp"

#include <map>

#include "relcone/errors.hpp"

namespace relcone {

SimplicialMap::SimplicialMap(DeltaComplex source, DeltaComplex target, std::vector<std::vector<SimplexRef>> images)
    : source_(std::move(source)), target_(std::move(target)), images_(std::move(images))
{
    const int top = source_.dimension();
    images_.resize(static_cast<std::size_t>(std::max(top + 1, 0)));
    for (int d = 0; d <= top; ++d) {
        const auto& row = images_[static_cast<std::size_t>(d)];
        if (row.size() != source_.count(d))
            throw ValidationError("expected " + std::to_string(source_.count(d)) + " images in dimension " +
                                  std::to_string(d) + ", got " + std::to_string(row.size()));
        for (std::size_t c = 0; c < row.size(); ++c) {
            const auto& im = row[c];
            if (im.size() != d || !is_monotone_surjection(im.degeneracy) || im.degeneracy.back() != im.dim ||
                im.cell >= target_.count(im.dim))
                throw ValidationError("invalid image " + im.to_string() + " for cell " + std::to_string(c) +
                                      " of dimension " + std::to_string(d));
        }
    }
    for (int d = 1; d <= top; ++d)
        for (std::size_t c = 0; c < source_.count(d); ++c)
            for (int i = 0; i <= d; ++i)
                if (target_.face(image(d, c), i) != image(source_.faces(d, c)[static_cast<std::size_t>(i)]))
                    throw ValidationError("map is not compatible with face " + std::to_string(i) + " of cell " +
                                          std::to_string(c) + " of dimension " + std::to_string(d));
}

const SimplexRef& SimplicialMap::image(int d, std::size_t cell) const
{
    if (d < 0 || d > source_.dimension() || cell >= source_.count(d))
        throw DimensionError("no source cell " + std::to_string(cell) + " in dimension " + std::to_string(d));
    return images_[static_cast<std::size_t>(d)][cell];
}

SimplexRef SimplicialMap::image(const SimplexRef& s) const { return image(s.dim, s.cell).compose(s.degeneracy); }

std::vector<std::size_t> SimplicialMap::vertex_map() const
{
    std::vector<std::size_t> out;
    for (std::size_t v = 0; v < source_.count(0); ++v)
        out.push_back(image(0, v).cell);
    return out;
}

SimplicialMap SimplicialMap::from_vertex_map(const DeltaComplex& source, const DeltaComplex& target,
                                             const std::vector<std::size_t>& vertex_map)
{
    if (vertex_map.size() != source.count(0))
        throw ValidationError("vertex map has " + std::to_string(vertex_map.size()) + " entries, source has " +
                              std::to_string(source.count(0)) + " vertices");
    for (auto v : vertex_map)
        if (v >= target.count(0))
            throw ValidationError("vertex map sends a vertex to " + std::to_string(v) + ", target has " +
                                  std::to_string(target.count(0)));
    // index target cells by vertex tuple
    std::vector<std::map<std::vector<std::size_t>, std::vector<std::size_t>>> by_vertices(
        static_cast<std::size_t>(std::max(target.dimension() + 1, 0)));
    for (int d = 0; d <= target.dimension(); ++d)
        for (std::size_t c = 0; c < target.count(d); ++c)
            by_vertices[static_cast<std::size_t>(d)][target.vertices(d, c)].push_back(c);

    std::vector<std::vector<SimplexRef>> images(static_cast<std::size_t>(std::max(source.dimension() + 1, 0)));
    for (int d = 0; d <= source.dimension(); ++d)
        for (std::size_t c = 0; c < source.count(d); ++c) {
            std::vector<std::size_t> distinct;
            std::vector<int> surj;
            for (auto v : source.vertices(d, c)) {
                const auto w = vertex_map[v];
                if (distinct.empty() || distinct.back() != w)
                    distinct.push_back(w);
                surj.push_back(static_cast<int>(distinct.size()) - 1);
            }
            const int m = static_cast<int>(distinct.size()) - 1;
            const std::string where = "cell " + std::to_string(c) + " of dimension " + std::to_string(d);
            if (m >= static_cast<int>(by_vertices.size()))
                throw ValidationError("non-simplicial vertex map: image of " + where + " has no target cell");
            auto it = by_vertices[static_cast<std::size_t>(m)].find(distinct);
            if (it == by_vertices[static_cast<std::size_t>(m)].end())
                throw ValidationError("non-simplicial vertex map: image of " + where + " has no target cell");
            if (it->second.size() != 1)
                throw ValidationError("vertex map is ambiguous on " + where + ": several target cells share its vertices");
            images[static_cast<std::size_t>(d)].push_back({m, it->second.front(), surj});
        }
    return SimplicialMap(source, target, std::move(images));
}

SimplicialMap SimplicialMap::identity(const DeltaComplex& k)
{
    std::vector<std::vector<SimplexRef>> images(static_cast<std::size_t>(std::max(k.dimension() + 1, 0)));
    for (int d = 0; d <= k.dimension(); ++d)
        for (std::size_t c = 0; c < k.count(d); ++c)
            images[static_cast<std::size_t>(d)].push_back(SimplexRef::nondegenerate(d, c));
    return SimplicialMap(k, k, std::move(images));
}

SimplicialMap SimplicialMap::constant(const DeltaComplex& source, const DeltaComplex& target, std::size_t vertex)
{
    if (vertex >= target.count(0))
        throw ValidationError("constant map to a missing vertex");
    std::vector<std::vector<SimplexRef>> images(static_cast<std::size_t>(std::max(source.dimension() + 1, 0)));
    for (int d = 0; d <= source.dimension(); ++d)
        for (std::size_t c = 0; c < source.count(d); ++c)
            images[static_cast<std::size_t>(d)].push_back(SimplexRef::constant(vertex, d));
    return SimplicialMap(source, target, std::move(images));
}

ChainMap SimplicialMap::induced_chain_map() const
{
    const ChainComplex x = source_.chain_complex();
    const ChainComplex y = target_.chain_complex();
    std::vector<IntegerMatrix> comps;
    for (int d = 0; d <= source_.dimension(); ++d) {
        IntegerMatrix m(target_.count(d), source_.count(d));
        for (std::size_t c = 0; c < source_.count(d); ++c) {
            const auto& im = image(d, c);
            if (!im.is_degenerate())
                m(im.cell, c) = 1;
        }
        comps.push_back(std::move(m));
    }
    return ChainMap(x, y, 0, std::move(comps));
}

} // namespace relcone

#include "relcone/simplicial/delta_complex.hpp"

#include <algorithm>
#include <set>

#include "relcone/errors.hpp"

namespace relcone {

DeltaComplex::DeltaComplex(std::size_t vertices, std::vector<std::vector<FaceList>> cells)
    : vertices_(vertices), cells_(std::move(cells))
{
    while (!cells_.empty() && cells_.back().empty())
        cells_.pop_back();
    validate();
}

DeltaComplex DeltaComplex::from_face_indices(std::size_t vertices,
                                             const std::vector<std::vector<std::vector<std::size_t>>>& cells)
{
    std::vector<std::vector<FaceList>> refs(cells.size());
    for (std::size_t k = 0; k < cells.size(); ++k) {
        const int d = static_cast<int>(k) + 1;
        for (const auto& face_indices : cells[k]) {
            FaceList faces;
            for (auto idx : face_indices)
                faces.push_back(SimplexRef::nondegenerate(d - 1, idx));
            refs[k].push_back(std::move(faces));
        }
    }
    return DeltaComplex(vertices, std::move(refs));
}

DeltaComplex DeltaComplex::from_facets(std::size_t vertices, const std::vector<std::vector<std::size_t>>& facets)
{
    std::vector<std::set<std::vector<std::size_t>>> by_dim;
    for (auto f : facets) {
        std::sort(f.begin(), f.end());
        if (std::adjacent_find(f.begin(), f.end()) != f.end())
            throw ValidationError("facet with a repeated vertex");
        for (auto v : f)
            if (v >= vertices)
                throw ValidationError("facet vertex " + std::to_string(v) + " out of range");
        // every nonempty subset
        const std::size_t n = f.size();
        for (std::size_t mask = 1; mask < (std::size_t{1} << n); ++mask) {
            std::vector<std::size_t> sub;
            for (std::size_t i = 0; i < n; ++i)
                if (mask & (std::size_t{1} << i))
                    sub.push_back(f[i]);
            if (by_dim.size() < sub.size())
                by_dim.resize(sub.size());
            by_dim[sub.size() - 1].insert(sub);
        }
    }
    std::vector<std::map<std::vector<std::size_t>, std::size_t>> index(by_dim.size());
    for (std::size_t d = 0; d < by_dim.size(); ++d) {
        std::size_t i = 0;
        for (const auto& s : by_dim[d])
            index[d][s] = d == 0 ? s[0] : i++;
    }
    std::vector<std::vector<std::vector<std::size_t>>> cells(by_dim.empty() ? 0 : by_dim.size() - 1);
    for (std::size_t d = 1; d < by_dim.size(); ++d)
        for (const auto& s : by_dim[d]) {
            std::vector<std::size_t> faces;
            for (std::size_t i = 0; i < s.size(); ++i) {
                auto sub = s;
                sub.erase(sub.begin() + static_cast<std::ptrdiff_t>(i));
                faces.push_back(index[d - 1].at(sub));
            }
            cells[d - 1].push_back(std::move(faces));
        }
    return from_face_indices(vertices, cells);
}

int DeltaComplex::dimension() const
{
    if (!cells_.empty())
        return static_cast<int>(cells_.size());
    return vertices_ > 0 ? 0 : -1;
}

std::size_t DeltaComplex::count(int d) const
{
    if (d == 0)
        return vertices_;
    if (d < 0 || d > static_cast<int>(cells_.size()))
        return 0;
    return cells_[static_cast<std::size_t>(d - 1)].size();
}

std::size_t DeltaComplex::total_cells() const
{
    std::size_t s = vertices_;
    for (const auto& c : cells_)
        s += c.size();
    return s;
}

const DeltaComplex::FaceList& DeltaComplex::faces(int d, std::size_t cell) const
{
    if (d < 1 || cell >= count(d))
        throw DimensionError("no cell " + std::to_string(cell) + " in dimension " + std::to_string(d));
    return cells_[static_cast<std::size_t>(d - 1)][cell];
}

SimplexRef DeltaComplex::face(const SimplexRef& s, int i) const
{
    const int n = s.size();
    if (n < 1 || i < 0 || i > n)
        throw DimensionError("face " + std::to_string(i) + " of a " + std::to_string(n) + "-simplex");
    const int k = s.degeneracy[static_cast<std::size_t>(i)];
    std::vector<int> t = s.degeneracy;
    t.erase(t.begin() + i);
    if (std::find(t.begin(), t.end(), k) != t.end())
        return {s.dim, s.cell, std::move(t)};
    // s∘δ_i misses k: it factors as δ_k ∘ t', so the face is (d_k cell) ∘ t'.
    for (auto& v : t)
        if (v > k)
            --v;
    return faces(s.dim, s.cell)[static_cast<std::size_t>(k)].compose(t);
}

std::vector<std::size_t> DeltaComplex::vertices(const SimplexRef& s) const
{
    std::vector<std::size_t> cell_vertices;
    if (s.dim == 0) {
        cell_vertices.push_back(s.cell);
    } else {
        // v_0..v_{d-1} from the last face, v_d from the first face
        const auto& fs = faces(s.dim, s.cell);
        cell_vertices = vertices(fs.back());
        cell_vertices.push_back(vertices(fs.front()).back());
    }
    std::vector<std::size_t> out;
    for (int v : s.degeneracy)
        out.push_back(cell_vertices[static_cast<std::size_t>(v)]);
    return out;
}

void DeltaComplex::validate() const
{
    for (int d = 1; d <= static_cast<int>(cells_.size()); ++d) {
        for (std::size_t c = 0; c < count(d); ++c) {
            const auto& fs = cells_[static_cast<std::size_t>(d - 1)][c];
            const std::string where = "cell " + std::to_string(c) + " of dimension " + std::to_string(d);
            if (fs.size() != static_cast<std::size_t>(d + 1))
                throw ValidationError(where + " has " + std::to_string(fs.size()) + " faces, expected " +
                                      std::to_string(d + 1));
            for (const auto& f : fs) {
                if (f.size() != d - 1 || !is_monotone_surjection(f.degeneracy) || f.degeneracy.back() != f.dim ||
                    f.dim > d - 1 || f.cell >= count(f.dim))
                    throw ValidationError(where + " has an invalid face " + f.to_string());
            }
        }
    }
    for (int d = 2; d <= static_cast<int>(cells_.size()); ++d)
        for (std::size_t c = 0; c < count(d); ++c) {
            const SimplexRef s = SimplexRef::nondegenerate(d, c);
            for (int j = 1; j <= d; ++j)
                for (int i = 0; i < j; ++i)
                    if (face(face(s, j), i) != face(face(s, i), j - 1))
                        throw ValidationError("simplicial identity d_" + std::to_string(i) + " d_" +
                                              std::to_string(j) + " fails on cell " + std::to_string(c) +
                                              " of dimension " + std::to_string(d));
        }
}

IntegerMatrix DeltaComplex::boundary_matrix(int d) const
{
    IntegerMatrix m(count(d - 1), count(d));
    if (d < 1)
        return m;
    for (std::size_t c = 0; c < count(d); ++c) {
        const auto& fs = faces(d, c);
        for (int i = 0; i <= d; ++i) {
            const auto& f = fs[static_cast<std::size_t>(i)];
            if (f.is_degenerate())
                continue;
            m(f.cell, c) += (i % 2 == 0) ? 1 : -1;
        }
    }
    return m;
}

ChainComplex DeltaComplex::chain_complex() const
{
    const int top = dimension();
    if (top < 0)
        return ChainComplex(Grading::chain, 0, {}, {});
    std::vector<std::size_t> dims;
    std::vector<IntegerMatrix> diffs;
    for (int d = 0; d <= top; ++d) {
        dims.push_back(count(d));
        diffs.push_back(boundary_matrix(d));
    }
    return ChainComplex(Grading::chain, 0, std::move(dims), std::move(diffs));
}

ChainComplex DeltaComplex::reduced_chain_complex() const
{
    const int top = std::max(dimension(), 0);
    std::vector<std::size_t> dims{1};
    std::vector<IntegerMatrix> diffs{IntegerMatrix(0, 1)};
    for (int d = 0; d <= top; ++d) {
        dims.push_back(count(d));
        if (d == 0) {
            IntegerMatrix eps(1, count(0));
            for (std::size_t v = 0; v < count(0); ++v)
                eps(0, v) = 1;
            diffs.push_back(eps);
        } else {
            diffs.push_back(boundary_matrix(d));
        }
    }
    return ChainComplex(Grading::chain, -1, std::move(dims), std::move(diffs));
}

long DeltaComplex::euler_characteristic() const
{
    long chi = 0;
    for (int d = 0; d <= dimension(); ++d)
        chi += (d % 2 == 0 ? 1 : -1) * static_cast<long>(count(d));
    return chi;
}

} // namespace relcone

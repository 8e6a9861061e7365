#include "relcone/simplicial/mapping_cone.hpp"

#include <algorithm>

#include "relcone/chain/homology.hpp"
#include "relcone/errors.hpp"

namespace relcone {

namespace {

enum class Kind { flat, prism };

struct PrismCell {
    Kind kind;
    int dim; // dimension of the X cell underneath
    std::size_t cell;
    int j;
};

class ConeBuilder {
public:
    explicit ConeBuilder(const SimplicialMap& f) : f_(f), x_(f.source()), y_(f.target()) {}

    TopologicalCone build()
    {
        const int top = std::max(y_.dimension(), x_.dimension() + 1);
        const std::size_t apex = y_.count(0);
        std::vector<std::vector<DeltaComplex::FaceList>> cells(static_cast<std::size_t>(std::max(top, 0)));
        for (int d = 1; d <= top; ++d) {
            auto& out = cells[static_cast<std::size_t>(d - 1)];
            for (std::size_t c = 0; c < y_.count(d); ++c)
                out.push_back(y_.faces(d, c));
            for (std::size_t c = 0; c < x_.count(d); ++c)
                for (int j = 1; j <= d; ++j)
                    out.push_back(faces_of({Kind::flat, d, c, j}));
            for (std::size_t c = 0; c < x_.count(d - 1); ++c)
                for (int j = 0; j <= d - 1; ++j)
                    out.push_back(faces_of({Kind::prism, d - 1, c, j}));
        }
        return {DeltaComplex(apex + 1, std::move(cells)), apex};
    }

private:
    DeltaComplex::FaceList faces_of(const PrismCell& p)
    {
        const int m = p.dim;
        std::vector<int> deg, level;
        if (p.kind == Kind::flat) {
            deg = identity_surjection(m);
            for (int k = 0; k <= m; ++k)
                level.push_back(k < p.j ? 0 : 1);
        } else {
            for (int k = 0; k <= m + 1; ++k) {
                deg.push_back(k <= p.j ? k : k - 1);
                level.push_back(k <= p.j ? 0 : 1);
            }
        }
        const SimplexRef x{m, p.cell, deg};
        const int n = x.size();
        DeltaComplex::FaceList faces;
        for (int i = 0; i <= n; ++i) {
            auto lv = level;
            lv.erase(lv.begin() + i);
            faces.push_back(glue(x_.face(x, i), lv));
        }
        return faces;
    }

    // A simplex of X × Δ[1] given by an X-simplex and a level sequence, mapped into the cone.
    SimplexRef glue(const SimplexRef& x, const std::vector<int>& level)
    {
        std::vector<std::pair<int, int>> chain;
        std::vector<int> t;
        for (std::size_t k = 0; k < level.size(); ++k) {
            const std::pair<int, int> pt{x.degeneracy[k], level[k]};
            if (chain.empty() || chain.back() != pt)
                chain.push_back(pt);
            t.push_back(static_cast<int>(chain.size()) - 1);
        }
        const int p = x.dim;
        const int len = static_cast<int>(chain.size()) - 1;
        if (len == p) {
            int j = 0;
            for (const auto& e : chain)
                j += e.second == 0;
            if (j == 0)
                return f_.image(p, x.cell).compose(t);
            if (j == p + 1)
                return SimplexRef::constant(y_.count(0), static_cast<int>(t.size()) - 1);
            return SimplexRef{p, flat_index(p, x.cell, j), identity_surjection(p)}.compose(t);
        }
        int j = 0;
        while (chain[static_cast<std::size_t>(j)].first != chain[static_cast<std::size_t>(j) + 1].first)
            ++j;
        return SimplexRef{p + 1, prism_index(p, x.cell, j), identity_surjection(p + 1)}.compose(t);
    }

    std::size_t flat_index(int p, std::size_t cell, int j) const
    {
        return y_.count(p) + cell * static_cast<std::size_t>(p) + static_cast<std::size_t>(j - 1);
    }

    std::size_t prism_index(int p, std::size_t cell, int j) const
    {
        const int d = p + 1;
        return y_.count(d) + x_.count(d) * static_cast<std::size_t>(d) + cell * static_cast<std::size_t>(d) +
               static_cast<std::size_t>(j);
    }

    const SimplicialMap& f_;
    const DeltaComplex& x_;
    const DeltaComplex& y_;
};

} // namespace

TopologicalCone topological_mapping_cone(const SimplicialMap& f) { return ConeBuilder(f).build(); }

DeltaComplex suspension(const DeltaComplex& x)
{
    const DeltaComplex pt(1, {});
    return topological_mapping_cone(SimplicialMap::constant(x, pt)).complex;
}

std::set<std::pair<int, std::size_t>> skeleton_cells(const DeltaComplex& k, int d)
{
    std::set<std::pair<int, std::size_t>> out;
    for (int e = 0; e <= std::min(d, k.dimension()); ++e)
        for (std::size_t c = 0; c < k.count(e); ++c)
            out.insert({e, c});
    return out;
}

std::pair<DeltaComplex, SimplicialMap> collapse_subcomplex(const DeltaComplex& k,
                                                           const std::set<std::pair<int, std::size_t>>& a)
{
    if (a.empty())
        throw ValidationError("cannot collapse an empty subcomplex");
    for (const auto& [d, c] : a) {
        if (c >= k.count(d))
            throw ValidationError("subcomplex cell out of range");
        if (d > 0)
            for (const auto& f : k.faces(d, c))
                if (!a.count({f.dim, f.cell}))
                    throw ValidationError("subcomplex is not closed under faces");
    }
    const int top = k.dimension();
    std::vector<std::vector<std::size_t>> index(static_cast<std::size_t>(top + 1));
    std::vector<std::size_t> kept(static_cast<std::size_t>(top + 1), 0);
    for (int d = 0; d <= top; ++d)
        for (std::size_t c = 0; c < k.count(d); ++c)
            index[static_cast<std::size_t>(d)].push_back(a.count({d, c}) ? SIZE_MAX : kept[static_cast<std::size_t>(d)]++);
    const std::size_t base = kept[0];

    auto translate = [&](const SimplexRef& s) {
        if (a.count({s.dim, s.cell}))
            return SimplexRef::constant(base, s.size());
        return SimplexRef{s.dim, index[static_cast<std::size_t>(s.dim)][s.cell], s.degeneracy};
    };

    std::vector<std::vector<DeltaComplex::FaceList>> cells(static_cast<std::size_t>(std::max(top, 0)));
    for (int d = 1; d <= top; ++d)
        for (std::size_t c = 0; c < k.count(d); ++c) {
            if (a.count({d, c}))
                continue;
            DeltaComplex::FaceList faces;
            for (const auto& f : k.faces(d, c))
                faces.push_back(translate(f));
            cells[static_cast<std::size_t>(d - 1)].push_back(std::move(faces));
        }
    DeltaComplex quotient(base + 1, std::move(cells));

    std::vector<std::vector<SimplexRef>> images(static_cast<std::size_t>(top + 1));
    for (int d = 0; d <= top; ++d)
        for (std::size_t c = 0; c < k.count(d); ++c)
            images[static_cast<std::size_t>(d)].push_back(translate(SimplexRef::nondegenerate(d, c)));
    SimplicialMap q(k, quotient, std::move(images));
    return {std::move(quotient), std::move(q)};
}

ConeComparison cone_comparison(const SimplicialMap& f)
{
    ConeComparison r;
    const ChainMap chain_map = f.induced_chain_map();
    const ConeComplex algebraic(chain_map);
    const auto& ac = algebraic.complex();
    const TopologicalCone cone = topological_mapping_cone(f);
    const ChainComplex reduced = cone.complex.reduced_chain_complex();
    r.cone_cells = cone.complex.total_cells();
    r.euler_cone = cone.complex.euler_characteristic();
    r.euler_expected = f.target().euler_characteristic() + 1 - f.source().euler_characteristic();

    const int lo = std::min(reduced.min_degree(), ac.empty_range() ? 0 : ac.min_degree());
    const int hi = std::max(reduced.max_degree(), ac.empty_range() ? 0 : ac.max_degree());
    r.isomorphic = r.euler_cone == r.euler_expected;
    for (int n = lo; n <= hi; ++n) {
        r.algebraic[n] = ac.in_range(n) ? homology(ac, n) : AbelianGroupPresentation{};
        r.topological[n] = reduced.in_range(n) ? homology(reduced, n) : AbelianGroupPresentation{};
        if (r.algebraic[n] != r.topological[n])
            r.isomorphic = false;
    }
    if (!r.isomorphic) {
        std::string msg = "mapping cone comparison failed:";
        for (const auto& [n, g] : r.algebraic)
            msg += " H_" + std::to_string(n) + "(f)=" + g.to_string() + " vs " + r.topological[n].to_string() + ";";
        msg += " χ " + std::to_string(r.euler_cone) + " vs " + std::to_string(r.euler_expected);
        throw ComputationError(msg);
    }
    return r;
}

} // namespace relcone

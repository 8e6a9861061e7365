#include "relcone/simplicial/builtins.hpp"

#include <functional>
#include <map>

#include "relcone/errors.hpp"
#include "relcone/simplicial/mapping_cone.hpp"

namespace relcone::builtins {

DeltaComplex point() { return DeltaComplex(1, {}); }
DeltaComplex s0() { return DeltaComplex(2, {}); }

DeltaComplex circle(std::size_t m)
{
    if (m == 0)
        throw ValidationError("circle needs at least one vertex");
    std::vector<std::vector<std::size_t>> edges;
    for (std::size_t i = 0; i < m; ++i)
        edges.push_back({(i + 1) % m, i}); // faces d_0 = head, d_1 = tail
    return DeltaComplex::from_face_indices(m, {edges});
}

DeltaComplex simplex(int n)
{
    if (n < 0)
        throw ValidationError("simplex dimension must be nonnegative");
    std::vector<std::size_t> all;
    for (int i = 0; i <= n; ++i)
        all.push_back(static_cast<std::size_t>(i));
    return DeltaComplex::from_facets(all.size(), {all});
}

DeltaComplex sphere(int n)
{
    if (n < 0)
        throw ValidationError("sphere dimension must be nonnegative");
    std::vector<std::vector<std::size_t>> facets;
    for (int skip = 0; skip <= n + 1; ++skip) {
        std::vector<std::size_t> f;
        for (int i = 0; i <= n + 1; ++i)
            if (i != skip)
                f.push_back(static_cast<std::size_t>(i));
        facets.push_back(f);
    }
    return DeltaComplex::from_facets(static_cast<std::size_t>(n + 2), facets);
}

DeltaComplex disk() { return simplex(2); }

DeltaComplex rp2()
{
    // edges: a = [v0 v1], b = [v0 v1], c = [v0 v0]
    // T1 = (d0, d1, d2) = (b, a, c), T2 = (a, b, c)
    return DeltaComplex::from_face_indices(2, {{{1, 0}, {1, 0}, {0, 0}}, {{1, 0, 2}, {0, 1, 2}}});
}

DeltaComplex rp2_six_vertex()
{
    return DeltaComplex::from_facets(6, {{0, 1, 3}, {0, 1, 5}, {0, 2, 4}, {0, 2, 5}, {0, 3, 4},
                                         {1, 2, 3}, {1, 2, 4}, {1, 4, 5}, {2, 3, 5}, {3, 4, 5}});
}

DeltaComplex torus()
{
    // edges a, b, c loops at v0; U = (b, c, a), L = (a, c, b) with c the diagonal
    return DeltaComplex::from_face_indices(1, {{{0, 0}, {0, 0}, {0, 0}}, {{1, 2, 0}, {0, 2, 1}}});
}

DeltaComplex grid(std::size_t n)
{
    if (n == 0)
        throw ValidationError("grid needs at least one square");
    const std::size_t w = n + 1;
    std::vector<std::vector<std::size_t>> facets;
    for (std::size_t r = 0; r < n; ++r)
        for (std::size_t c = 0; c < n; ++c) {
            const std::size_t v00 = r * w + c, v01 = v00 + 1, v10 = v00 + w, v11 = v10 + 1;
            facets.push_back({v00, v01, v11});
            facets.push_back({v00, v10, v11});
        }
    return DeltaComplex::from_facets(w * w, facets);
}

namespace {

std::vector<std::string> split(const std::string& s, char sep)
{
    std::vector<std::string> out;
    std::size_t start = 0;
    for (;;) {
        auto pos = s.find(sep, start);
        out.push_back(s.substr(start, pos - start));
        if (pos == std::string::npos)
            break;
        start = pos + 1;
    }
    return out;
}

long parse_count(const std::string& text, const std::string& name)
{
    try {
        std::size_t used = 0;
        long v = std::stol(text, &used);
        if (used == text.size() && v >= 0)
            return v;
    } catch (const std::exception&) {
    }
    throw ValidationError("bad numeric parameter '" + text + "' in '" + name + "'");
}

} // namespace

DeltaComplex space(const std::string& name)
{
    const auto parts = split(name, ':');
    const std::string& head = parts[0];
    auto param = [&](long fallback) {
        if (parts.size() == 1)
            return fallback;
        if (parts.size() != 2)
            throw ValidationError("unknown built-in space '" + name + "'");
        return parse_count(parts[1], name);
    };
    if (head == "point" && parts.size() == 1)
        return point();
    if (head == "s0" && parts.size() == 1)
        return s0();
    if (head == "circle")
        return circle(static_cast<std::size_t>(param(3)));
    if (head == "disk" && parts.size() == 1)
        return disk();
    if (head == "simplex")
        return simplex(static_cast<int>(param(2)));
    if (head == "sphere")
        return sphere(static_cast<int>(param(2)));
    if (head == "s2" && parts.size() == 1)
        return sphere(2);
    if (head == "s3" && parts.size() == 1)
        return sphere(3);
    if (head == "rp2" && parts.size() == 1)
        return rp2();
    if (head == "rp2-6" && parts.size() == 1)
        return rp2_six_vertex();
    if (head == "torus" && parts.size() == 1)
        return torus();
    if (head == "grid")
        return grid(static_cast<std::size_t>(param(2)));
    throw ValidationError("unknown built-in space '" + name + "'");
}

SimplicialMap circle_walk(std::size_t k, const std::vector<int>& steps, std::size_t start)
{
    long forward = 0;
    for (int s : steps) {
        if (s != 0 && s != 1)
            throw ValidationError("circle walk steps must be 0 or 1");
        forward += s;
    }
    if (k == 0 || forward % static_cast<long>(k) != 0)
        throw ValidationError("circle walk does not close up");
    std::vector<std::size_t> vm;
    std::size_t pos = start % k;
    for (int s : steps) {
        vm.push_back(pos);
        pos = (pos + static_cast<std::size_t>(s)) % k;
    }
    return SimplicialMap::from_vertex_map(circle(steps.size()), circle(k), vm);
}

SimplicialMap map(const std::string& name)
{
    const auto parts = split(name, ':');
    const std::string& head = parts[0];
    if (name == "deg2-circle-map")
        return SimplicialMap::from_vertex_map(circle(6), circle(3), {0, 1, 2, 0, 1, 2});
    if (name == "s0-in-circle")
        return SimplicialMap::from_vertex_map(s0(), circle(3), {0, 1});
    if (name == "vertex-in-disk")
        return SimplicialMap::from_vertex_map(point(), disk(), {0});
    if (name == "boundary-in-disk")
        return SimplicialMap::from_vertex_map(sphere(1), disk(), {0, 1, 2});
    if (name == "loop-in-rp2") {
        // the loop edge c of the two-vertex projective plane
        return SimplicialMap(circle(1), rp2(), {{SimplexRef::nondegenerate(0, 0)}, {SimplexRef::nondegenerate(1, 2)}});
    }
    if (name == "square-loop-in-grid") {
        // 4-cycle a0 a1 a3 a2 onto the boundary of the first square of grid:2
        const auto loop = DeltaComplex::from_facets(4, {{0, 1}, {1, 3}, {2, 3}, {0, 2}});
        return SimplicialMap::from_vertex_map(loop, grid(2), {0, 1, 3, 4});
    }
    if (name == "tetrahedron-in-s3")
        return SimplicialMap::from_vertex_map(simplex(3), sphere(3), {0, 1, 2, 3});
    if (name == "suspended-rp2-collapse") {
        // ΣRP² -> ΣRP² / Σ(1-skeleton): keep only the cells lying over the two triangles
        const DeltaComplex m = suspension(rp2());
        auto a = skeleton_cells(m, 1);
        for (std::size_t c = 2 * rp2().count(2); c < m.count(2); ++c)
            a.insert({2, c});
        return collapse_subcomplex(m, a).second;
    }
    if (head == "circle-cover" && parts.size() == 3) {
        const auto k = static_cast<std::size_t>(parse_count(parts[1], name));
        const auto d = static_cast<std::size_t>(parse_count(parts[2], name));
        if (k == 0 || d == 0)
            throw ValidationError("circle-cover needs positive parameters");
        std::vector<std::size_t> vm;
        for (std::size_t i = 0; i < k * d; ++i)
            vm.push_back(i % k);
        return SimplicialMap::from_vertex_map(circle(k * d), circle(k), vm);
    }
    const auto colon = name.find(':');
    if (colon != std::string::npos) {
        const std::string rest = name.substr(colon + 1);
        if (head == "identity")
            return SimplicialMap::identity(space(rest));
        if (head == "constant")
            return SimplicialMap::constant(space(rest), point());
    }
    throw ValidationError("unknown built-in map '" + name + "'");
}

std::vector<std::string> space_names()
{
    return {"point", "s0", "circle:m", "disk", "simplex:n", "sphere:n", "s2", "s3", "rp2", "rp2-6", "torus", "grid:n"};
}

std::vector<std::string> map_names()
{
    return {"deg2-circle-map", "s0-in-circle",     "vertex-in-disk", "boundary-in-disk",
            "loop-in-rp2",     "square-loop-in-grid", "tetrahedron-in-s3", "suspended-rp2-collapse",
            "circle-cover:k:d", "identity:<space>", "constant:<space>"};
}

} // namespace relcone::builtins

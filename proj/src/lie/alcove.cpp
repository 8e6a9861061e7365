#include "relcone/lie/alcove.hpp"

#include "relcone/algebra/lattice.hpp"
#include "relcone/errors.hpp"

namespace relcone {

namespace {

void require_vector(const RootSystem& rs, const RationalVector& xi)
{
    if (xi.size() != rs.ambient_dim())
        throw DimensionError("vector has " + std::to_string(xi.size()) + " coordinates, " + rs.name() +
                             " needs " + std::to_string(rs.ambient_dim()));
    if (!rs.in_cartan(xi))
        throw ValidationError("vector is not in the span of the simple roots of " + rs.name());
}

// B(ξ) = ⟨ξ, ·⟩ under the identification 𝔱 = 𝔱* given by the basic inner product
RationalVector basic_dual(const RationalVector& xi) { return xi; }

} // namespace

bool WeightLattice::contains(const RationalVector& lambda) const { return is_integral(coordinates(lambda)); }

RationalVector WeightLattice::coordinates(const RationalVector& lambda) const
{
    const auto c = rational_solve(RationalMatrix::from_columns(lambda.size(), weights), lambda);
    if (!c)
        throw ValidationError("vector is not in the span of the fundamental weights");
    return *c;
}

WeightLattice weight_lattice(const RootSystem& rs)
{
    WeightLattice w;
    w.weights = rs.fundamental_weights();
    for (const auto& a : rs.simple_roots())
        w.coroots.push_back(rs.coroot(a));
    const std::size_t d = w.weights.size();
    w.pairing = IntegerMatrix(d, d);
    for (std::size_t i = 0; i < d; ++i)
        for (std::size_t j = 0; j < d; ++j) {
            const Rational v = rs.inner(w.weights[i], w.coroots[j]);
            if (v != (i == j ? 1 : 0))
                throw ComputationError("fundamental weights are not dual to the simple coroots");
            w.pairing(i, j) = v.get_num();
        }
    return w;
}

RationalVector alcove_functionals(const RootSystem& rs, const RationalVector& xi)
{
    require_vector(rs, xi);
    RationalVector out;
    out.push_back(rs.inner(rs.lowest_root(), xi) + 1);
    for (const auto& a : rs.simple_roots())
        out.push_back(rs.inner(a, xi));
    return out;
}

bool Alcove::contains(const RootSystem& rs, const RationalVector& xi) const
{
    for (const auto& v : alcove_functionals(rs, xi))
        if (v < 0)
            return false;
    return true;
}

Alcove alcove_vertices(const RootSystem& rs)
{
    Alcove a;
    a.vertices.push_back(RationalVector(rs.ambient_dim()));
    const auto cw = rs.fundamental_coweights();
    const auto& m = rs.marks();
    for (std::size_t j = 0; j < cw.size(); ++j)
        a.vertices.push_back(scale(Rational(1, m[j]), cw[j]));
    return a;
}

Integer min_vertex_level(const RootSystem& rs)
{
    const WeightLattice w = weight_lattice(rs);
    Integer level = 1;
    for (const auto& v : alcove_vertices(rs).vertices)
        for (const auto& c : w.coordinates(basic_dual(v)))
            level = lcm(level, Integer(c.get_den()));
    return level;
}

bool conjugacy_prequant(const RootSystem& rs, const RationalVector& xi, const Integer& k)
{
    if (k < 1)
        throw ValidationError("level must be a positive integer, got " + k.get_str());
    if (!alcove_vertices(rs).contains(rs, xi))
        return false;
    return weight_lattice(rs).contains(scale(Rational(k), basic_dual(xi)));
}

RationalVector reduce_to_alcove(const RootSystem& rs, const RationalVector& xi)
{
    require_vector(rs, xi);
    const auto& simple = rs.simple_roots();
    std::vector<RationalVector> coroots;
    for (const auto& a : simple)
        coroots.push_back(rs.coroot(a));
    const RationalVector theta = rs.highest_root();
    const RationalVector theta_v = rs.coroot(theta);

    // translate by the coroot lattice into the fundamental parallelepiped first
    const auto c = rational_solve(RationalMatrix::from_columns(rs.ambient_dim(), coroots), xi);
    RationalVector x = xi;
    for (std::size_t i = 0; i < coroots.size(); ++i) {
        Integer f;
        mpz_fdiv_q(f.get_mpz_t(), (*c)[i].get_num_mpz_t(), (*c)[i].get_den_mpz_t());
        if (f != 0)
            x = subtract(x, scale(Rational(f), coroots[i]));
    }
    for (;;) {
        bool moved = false;
        for (std::size_t i = 0; i < simple.size(); ++i) {
            const Rational p = rs.inner(simple[i], x);
            if (p < 0) {
                x = subtract(x, scale(p, coroots[i]));
                moved = true;
            }
        }
        if (moved)
            continue;
        const Rational t = rs.inner(theta, x);
        if (t <= 1)
            return x;
        x = subtract(x, scale(Rational(t - 1), theta_v));
    }
}

std::set<std::size_t> alcove_membership(const RootSystem& rs, const RationalVector& xi)
{
    const RationalVector f = alcove_functionals(rs, xi);
    std::set<std::size_t> out;
    for (std::size_t j = 0; j < f.size(); ++j) {
        if (f[j] < 0)
            throw ValidationError("point is outside the fundamental alcove of " + rs.name());
        if (f[j] > 0)
            out.insert(j);
    }
    return out;
}

Nerve alcove_cover_nerve(const RootSystem& rs)
{
    const auto verts = alcove_vertices(rs).vertices;
    const std::size_t n = verts.size();
    std::vector<std::vector<std::size_t>> families;
    for (unsigned long mask = 1; mask < (1UL << n); ++mask) {
        RationalVector bary(rs.ambient_dim());
        Integer count = 0;
        for (std::size_t j = 0; j < n; ++j)
            if (mask & (1UL << j)) {
                bary = add(bary, verts[j]);
                ++count;
            }
        bary = scale(Rational(1, count), bary);
        const auto m = alcove_membership(rs, bary);
        families.emplace_back(m.begin(), m.end());
    }
    return Nerve(n, families);
}

} // namespace relcone

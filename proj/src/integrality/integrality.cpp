#include "relcone/integrality/integrality.hpp"

#include "relcone/chain/duality.hpp"
#include "relcone/chain/homology.hpp"
#include "relcone/errors.hpp"

namespace relcone {

namespace {

RationalVector join(const RationalVector& a, const RationalVector& b)
{
    RationalVector out = a;
    out.insert(out.end(), b.begin(), b.end());
    return out;
}

IntegerVector join(const IntegerVector& a, const IntegerVector& b)
{
    IntegerVector out = a;
    out.insert(out.end(), b.begin(), b.end());
    return out;
}

Integer lcm_of_denominators(const std::vector<GeneratorPairing>& table)
{
    Integer l = 1;
    for (const auto& g : table)
        l = lcm(l, Integer(g.value.get_den()));
    return l;
}

} // namespace

RelativeCochainPair::RelativeCochainPair(SimplicialMap map, int degree, RationalVector source, RationalVector target)
    : map_(std::move(map)), degree_(degree), source_(std::move(source)), target_(std::move(target))
{
    if (degree_ < 1)
        throw ValidationError("relative cochain degree must be at least 1");
    const auto x = map_.source().chain_complex();
    const auto y = map_.target().chain_complex();
    if (source_.size() != x.dim(degree_ - 1) || target_.size() != y.dim(degree_))
        throw DimensionError("relative cochain of degree " + std::to_string(degree_) + " needs " +
                             std::to_string(x.dim(degree_ - 1)) + " source and " + std::to_string(y.dim(degree_)) +
                             " target values");
    const ConeComplex cocone(dualize(map_.induced_chain_map()));
    const RationalVector d = to_rational(cocone.complex().differential(degree_)).apply(joined());
    if (!is_zero(d))
        throw ValidationError("not a relative cocycle: d(target) = 0 and Φ*(target) = d(source) must hold exactly");
}

RationalVector RelativeCochainPair::joined() const { return join(source_, target_); }

RelativeCochainPair RelativeCochainPair::scaled(const Rational& k) const
{
    return RelativeCochainPair(map_, degree_, scale(k, source_), scale(k, target_));
}

RelativeCochainPair RelativeCochainPair::shifted(const RationalVector& u, const RationalVector& v) const
{
    const ConeComplex cocone(dualize(map_.induced_chain_map()));
    const RationalVector d = to_rational(cocone.complex().differential(degree_ - 1)).apply(join(u, v));
    const std::size_t a = source_.size();
    return RelativeCochainPair(map_, degree_, add(source_, RationalVector(d.begin(), d.begin() + a)),
                               add(target_, RationalVector(d.begin() + a, d.end())));
}

void validate_relative_cycle(const SimplicialMap& map, int n, const RelativeCycle& z)
{
    const ConeComplex cone(map.induced_chain_map());
    if (z.source.size() != cone.first_dim(n) || z.target.size() != cone.second_dim(n))
        throw DimensionError("relative cycle does not live in degree " + std::to_string(n));
    if (!is_zero(cone.complex().differential(n).apply(join(z.source, z.target))))
        throw ValidationError("not a relative cycle: ∂θ = 0 and Φ_*θ = ∂B must hold");
}

Rational kronecker_pair(const RelativeCochainPair& c, const RelativeCycle& z)
{
    validate_relative_cycle(c.map(), c.degree(), z);
    const ConeComplex cone(c.map().induced_chain_map());
    return cone_pairing(cone, c.degree(), c.joined(), join(z.source, z.target));
}

Rational kronecker_pair(const ChainMap& f, int n, const RationalVector& cone_cochain, const IntegerVector& cone_chain)
{
    return cone_pairing(ConeComplex(f), n, cone_cochain, cone_chain);
}

std::vector<RelativeGenerator> relative_homology_generators(const SimplicialMap& map, int n)
{
    const ConeComplex cone(map.induced_chain_map());
    const Subquotient h = homology_basis(cone.complex(), n);
    std::vector<RelativeGenerator> out;
    for (std::size_t i = 0; i < h.size(); ++i)
        out.push_back({{cone.first(n, h.generators()[i]), cone.second(n, h.generators()[i])}, h.orders()[i]});
    return out;
}

IntegralityCertificate is_integral(const RelativeCochainPair& c)
{
    const ConeComplex cone(c.map().induced_chain_map());
    const RationalVector cochain = c.joined();
    IntegralityCertificate cert;
    cert.integral = true;
    for (const auto& g : relative_homology_generators(c.map(), c.degree())) {
        const Rational value = cone_pairing(cone, c.degree(), cochain, join(g.cycle.source, g.cycle.target));
        if (g.order != 0) {
            if (value != 0)
                throw ComputationError("a relative cocycle paired nontrivially with a torsion class");
            continue;
        }
        cert.table.push_back({g.cycle, value});
        if (!is_integral(value) && cert.integral) {
            cert.integral = false;
            cert.violating = g.cycle;
        }
    }
    cert.minimal_level = lcm_of_denominators(cert.table);
    return cert;
}

IntegralityCertificate bohr_sommerfeld_check(const SimplicialMap& map, const RationalVector& omega)
{
    const std::size_t m1 = map.source().chain_complex().dim(1);
    return is_integral(RelativeCochainPair(map, 2, RationalVector(m1), omega));
}

PrequantizationReport prequantization_check(const SimplicialMap& psi, const RationalVector& omega,
                                            const RationalVector& eta, const Integer& level)
{
    if (level < 1)
        throw ValidationError("level must be positive");
    PrequantizationReport r;
    r.level = level;
    const RelativeCochainPair pair(psi, 3, omega, eta);
    r.direct = is_integral(pair.scaled(Rational(level)));

    const auto m = psi.source().chain_complex();
    r.h2 = m.in_range(2) ? homology(m, 2) : AbelianGroupPresentation{};
    if (r.h2.free_rank == 0)
        r.torsion_exponent = r.h2.torsion.empty() ? Integer(1) : r.h2.torsion.back();

    // η is closed (checked by the pair), so it pairs to zero with torsion; test the free generators.
    const auto n = psi.target().chain_complex();
    r.eta_integral = true;
    if (n.in_range(3)) {
        const Subquotient h3 = homology_basis(n, 3);
        for (std::size_t i = 0; i < h3.size(); ++i)
            if (h3.orders()[i] == 0 && !is_integral(dot(eta, to_rational(h3.generators()[i]))))
                r.eta_integral = false;
    }
    r.shortcut_applies = r.torsion_exponent != 0 && level % r.torsion_exponent == 0 && r.eta_integral;
    if (r.shortcut_applies && !r.direct.integral)
        throw ComputationError("H_2 torsion shortcut predicts a pre-quantization but the pairing is not integral");
    return r;
}

} // namespace relcone

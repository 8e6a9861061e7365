#include "relcone/cech/gerbe.hpp"

#include "relcone/algebra/lattice.hpp"
#include "relcone/errors.hpp"

namespace relcone {

namespace {

IntegerVector integral_or_throw(const RationalVector& v, const char* what)
{
    IntegerVector out;
    for (const auto& x : v) {
        if (!is_integral(x))
            throw ValidationError(std::string(what) + ": value " + x.get_str() + " is not an integer");
        out.push_back(x.get_num());
    }
    return out;
}

void require_angle(const CechCochain& c, const char* what)
{
    if (c.coefficients().kind != Coefficients::Kind::angle)
        throw ValidationError(std::string(what) + " must have angle coefficients");
}

} // namespace

AngleCocycle::AngleCocycle(Nerve nerve, CechCochain a) : nerve_(std::move(nerve)), a_(std::move(a))
{
    require_angle(a_, "cocycle data");
    if (a_.values().size() != nerve_.count(a_.degree()))
        throw DimensionError("cocycle data does not live on this nerve");
    c_ = integral_or_throw(lifted_coboundary(nerve_, a_), "not an angle cocycle: δa");
}

RelativeAngleCocycle::RelativeAngleCocycle(CoverMap map, CechCochain target_data, CechCochain source_data)
    : map_(std::move(map)), a_(std::move(target_data)), b_(std::move(source_data))
{
    require_angle(a_, "target data");
    require_angle(b_, "source data");
    if (b_.degree() + 1 != a_.degree())
        throw DimensionError("source data must have degree one less than target data");
    if (a_.values().size() != map_.target().count(a_.degree()) ||
        b_.values().size() != map_.source().count(b_.degree()))
        throw DimensionError("relative cocycle data does not match the nerves");
    const IntegerVector t = integral_or_throw(lifted_coboundary(map_.target(), a_), "not an angle cocycle: δa");
    const auto phi = to_rational(map_.pullback().component(a_.degree()));
    const RationalVector s_rational = subtract(phi.apply(a_.values()), lifted_coboundary(map_.source(), b_));
    const IntegerVector s = integral_or_throw(s_rational, "δs = Φ*t fails: Φ*a - δb");
    c_ = s;
    c_.insert(c_.end(), t.begin(), t.end());
}

CohomologyClass bockstein_class(const AngleCocycle& a)
{
    return class_of(a.nerve().cochain_complex(), a.degree() + 1, a.integer_cocycle());
}

CohomologyClass dixmier_douady_class(const GerbeCocycle& g)
{
    if (g.degree() != 2)
        throw DimensionError("gerbe data is an angle 2-cochain");
    return bockstein_class(g);
}

CohomologyClass relative_class(const RelativeAngleCocycle& g)
{
    return class_of(relative_cech_complex(g.map()).complex(), g.degree() + 1, g.integer_cocycle());
}

CohomologyClass relative_gerbe_class(const RelativeGerbeCocycle& g)
{
    if (g.degree() != 2)
        throw DimensionError("relative gerbe data: angle 2-cochain on the target, 1-cochain on the source");
    return relative_class(g);
}

bool is_trivializable(const AngleCocycle& a)
{
    const ChainComplex c = a.nerve().cochain_complex();
    return integer_solve(c.incoming(a.degree() + 1), a.integer_cocycle()).has_value();
}

bool is_trivializable(const RelativeAngleCocycle& g)
{
    const ConeComplex cone = relative_cech_complex(g.map());
    return integer_solve(cone.complex().incoming(g.degree() + 1), g.integer_cocycle()).has_value();
}

CohomologyClass target_part(const RelativeAngleCocycle& g)
{
    const auto& c = g.integer_cocycle();
    const std::size_t skip = g.map().source().count(g.degree());
    const IntegerVector t(c.begin() + static_cast<std::ptrdiff_t>(skip), c.end());
    return class_of(g.map().target().cochain_complex(), g.degree() + 1, t);
}

} // namespace relcone

#include "relcone/cech/cochain.hpp"

#include "relcone/chain/map.hpp"
#include "relcone/errors.hpp"

namespace relcone {

namespace {

Rational floor_mod(const Rational& q, const Integer& m)
{
    // q - m * floor(q / m)
    Rational ratio = q / Rational(m);
    Integer fl;
    mpz_fdiv_q(fl.get_mpz_t(), ratio.get_num_mpz_t(), ratio.get_den_mpz_t());
    return q - Rational(fl * m);
}

} // namespace

Coefficients Coefficients::modular(const Integer& m)
{
    if (m < 2)
        throw ValidationError("modulus must be at least 2");
    return {Kind::modular, m};
}

Coefficients Coefficients::parse(const std::string& text)
{
    if (text == "Z" || text == "ℤ")
        return integers();
    if (text == "Q" || text == "ℚ")
        return rationals();
    if (text == "angle" || text == "U(1)" || text == "Q/Z")
        return angle();
    for (const std::string prefix : {"Z/", "ℤ/"})
        if (text.rfind(prefix, 0) == 0) {
            Integer m;
            if (m.set_str(text.substr(prefix.size()), 10) != 0)
                break;
            return modular(m);
        }
    throw ValidationError("unknown coefficients '" + text + "'");
}

std::string Coefficients::to_string() const
{
    switch (kind) {
    case Kind::integers:
        return "Z";
    case Kind::rationals:
        return "Q";
    case Kind::modular:
        return "Z/" + modulus.get_str();
    case Kind::angle:
        return "angle";
    }
    return "";
}

Rational Coefficients::normalize(const Rational& value) const
{
    switch (kind) {
    case Kind::integers:
        if (!is_integral(value))
            throw ValidationError("non-integral value " + value.get_str() + " for integer coefficients");
        return value;
    case Kind::rationals:
        return value;
    case Kind::modular:
        if (!is_integral(value))
            throw ValidationError("non-integral value " + value.get_str() + " for Z/" + modulus.get_str());
        return floor_mod(value, modulus);
    case Kind::angle:
        return floor_mod(value, 1);
    }
    return value;
}

CechCochain::CechCochain(const Nerve& nerve, Coefficients coefficients, int degree, RationalVector values)
    : coeff_(std::move(coefficients)), degree_(degree), values_(std::move(values))
{
    if (degree_ < 0)
        throw ValidationError("negative cochain degree");
    if (values_.size() != nerve.count(degree_))
        throw DimensionError("cochain of degree " + std::to_string(degree_) + " needs " +
                             std::to_string(nerve.count(degree_)) + " values, got " + std::to_string(values_.size()));
    for (auto& v : values_)
        v = coeff_.normalize(v);
}

CechCochain CechCochain::zero(const Nerve& nerve, Coefficients coefficients, int degree)
{
    return CechCochain(nerve, std::move(coefficients), degree, RationalVector(nerve.count(degree)));
}

CechCochain CechCochain::from_entries(const Nerve& nerve, Coefficients coefficients, int degree,
                                      const std::map<IndexTuple, Rational>& entries)
{
    RationalVector values(nerve.count(degree));
    std::vector<bool> seen(values.size(), false);
    for (const auto& [tuple, value] : entries) {
        if (tuple.size() != static_cast<std::size_t>(degree) + 1)
            throw DimensionError("entry has " + std::to_string(tuple.size()) + " indices for a degree-" +
                                 std::to_string(degree) + " cochain");
        for (auto i : tuple)
            if (i >= nerve.size())
                throw ValidationError("entry index out of range");
        const auto loc = nerve.locate(tuple);
        if (!loc) {
            if (value != 0)
                throw ValidationError("nonzero value on a tuple with a repeated index");
            continue;
        }
        const Rational v = loc->second > 0 ? value : Rational(-value);
        if (seen[loc->first] && coefficients.normalize(values[loc->first]) != coefficients.normalize(v))
            throw ValidationError("conflicting values for one simplex");
        seen[loc->first] = true;
        values[loc->first] = v;
    }
    return CechCochain(nerve, std::move(coefficients), degree, std::move(values));
}

CechCochain CechCochain::from_integers(const Nerve& nerve, Coefficients coefficients, int degree,
                                       const IntegerVector& values)
{
    return CechCochain(nerve, std::move(coefficients), degree, to_rational(values));
}

Rational CechCochain::at(const Nerve& nerve, const IndexTuple& ordered) const
{
    if (ordered.size() != static_cast<std::size_t>(degree_) + 1)
        throw DimensionError("tuple length does not match the cochain degree");
    const auto loc = nerve.locate(ordered);
    if (!loc)
        return 0;
    const Rational& v = values_.at(loc->first);
    return coeff_.normalize(loc->second > 0 ? v : Rational(-v));
}

IntegerVector CechCochain::integer_values() const
{
    IntegerVector out;
    for (const auto& v : values_) {
        if (!is_integral(v))
            throw ValidationError("cochain value " + v.get_str() + " is not an integer");
        out.push_back(v.get_num());
    }
    return out;
}

CechCochain CechCochain::with_coefficients(Coefficients c) const
{
    CechCochain out = *this;
    out.coeff_ = std::move(c);
    for (auto& v : out.values_)
        v = out.coeff_.normalize(v);
    return out;
}

namespace {

void require_compatible(const CechCochain& a, const CechCochain& b)
{
    if (!(a.coefficients() == b.coefficients()) || a.degree() != b.degree() || a.values().size() != b.values().size())
        throw ValidationError("cochains with different coefficients, degrees or nerves");
}

} // namespace

CechCochain operator+(const CechCochain& a, const CechCochain& b)
{
    require_compatible(a, b);
    CechCochain out = a;
    for (std::size_t i = 0; i < out.values_.size(); ++i)
        out.values_[i] = out.coeff_.normalize(a.values_[i] + b.values_[i]);
    return out;
}

CechCochain operator-(const CechCochain& a, const CechCochain& b)
{
    require_compatible(a, b);
    CechCochain out = a;
    for (std::size_t i = 0; i < out.values_.size(); ++i)
        out.values_[i] = out.coeff_.normalize(a.values_[i] - b.values_[i]);
    return out;
}

CechCochain operator*(const Integer& k, const CechCochain& a)
{
    CechCochain out = a;
    for (auto& v : out.values_)
        v = out.coeff_.normalize(Rational(k) * v);
    return out;
}

RationalVector lifted_coboundary(const Nerve& nerve, const CechCochain& c)
{
    if (c.values().size() != nerve.count(c.degree()))
        throw DimensionError("cochain does not belong to this nerve");
    const auto d = to_rational(nerve.cochain_complex().differential(c.degree()));
    return d.apply(c.values());
}

CechCochain coboundary(const Nerve& nerve, const CechCochain& c)
{
    return CechCochain(nerve, c.coefficients(), c.degree() + 1, lifted_coboundary(nerve, c));
}

CechCochain pullback(const CoverMap& m, const CechCochain& c)
{
    if (c.values().size() != m.target().count(c.degree()))
        throw DimensionError("cochain does not live on the target nerve");
    const auto phi = to_rational(m.pullback().component(c.degree()));
    return CechCochain(m.source(), c.coefficients(), c.degree(), phi.apply(c.values()));
}

} // namespace relcone

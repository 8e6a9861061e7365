#pragma once

#include <map>
#include <string>

#include "relcone/cech/nerve.hpp"

namespace relcone {

/// Constant coefficients for Čech cochains. Angles are ℚ mod ℤ, standing for exp(2πi·a) in U(1).
struct Coefficients {
    enum class Kind { integers, rationals, modular, angle };
    Kind kind = Kind::integers;
    Integer modulus = 0;

    static Coefficients integers() { return {Kind::integers, 0}; }
    static Coefficients rationals() { return {Kind::rationals, 0}; }
    static Coefficients modular(const Integer& m);
    static Coefficients angle() { return {Kind::angle, 0}; }

    /// "Z", "Q", "Z/m", "angle" (also "U(1)").
    static Coefficients parse(const std::string& text);
    std::string to_string() const;

    /// Canonical representative: integers must be integral, ℤ/m reduced to [0, m), angles to [0, 1).
    Rational normalize(const Rational& value) const;

    friend bool operator==(const Coefficients& a, const Coefficients& b)
    {
        return a.kind == b.kind && a.modulus == b.modulus;
    }
};

/// Alternating cochain stored on sorted tuples of a nerve; the sign of the sorting permutation
/// is applied on access.
class CechCochain {
public:
    CechCochain() = default;
    /// Values in the nerve's order for degree p.
    CechCochain(const Nerve& nerve, Coefficients coefficients, int degree, RationalVector values);

    static CechCochain zero(const Nerve& nerve, Coefficients coefficients, int degree);
    /// Sparse input keyed by ordered tuples (any order; sign applied). Unlisted simplices are 0.
    static CechCochain from_entries(const Nerve& nerve, Coefficients coefficients, int degree,
                                    const std::map<IndexTuple, Rational>& entries);
    /// Integer vector in the nerve order, viewed with the given coefficients.
    static CechCochain from_integers(const Nerve& nerve, Coefficients coefficients, int degree,
                                     const IntegerVector& values);

    const Coefficients& coefficients() const { return coeff_; }
    int degree() const { return degree_; }
    const RationalVector& values() const { return values_; }

    /// Value on an ordered tuple; 0 on tuples with a repeated index.
    Rational at(const Nerve& nerve, const IndexTuple& ordered) const;

    /// Integer representatives; throws ValidationError when a value is not integral.
    IntegerVector integer_values() const;

    CechCochain with_coefficients(Coefficients c) const;

    friend bool operator==(const CechCochain& a, const CechCochain& b)
    {
        return a.coeff_ == b.coeff_ && a.degree_ == b.degree_ && a.values_ == b.values_;
    }
    friend CechCochain operator+(const CechCochain& a, const CechCochain& b);
    friend CechCochain operator-(const CechCochain& a, const CechCochain& b);
    friend CechCochain operator*(const Integer& k, const CechCochain& a);

private:
    Coefficients coeff_;
    int degree_ = 0;
    RationalVector values_;
};

/// δ with the same coefficients. For angles the result is reduced mod ℤ.
CechCochain coboundary(const Nerve& nerve, const CechCochain& c);

/// δ of the canonical rational lift: for angle cochains this is the integer-valued log-lift
/// coboundary whenever c is an angle cocycle.
RationalVector lifted_coboundary(const Nerve& nerve, const CechCochain& c);

CechCochain pullback(const CoverMap& m, const CechCochain& c);

} // namespace relcone

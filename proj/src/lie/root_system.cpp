#include "relcone/lie/root_system.hpp"

#include <algorithm>
#include <map>
#include <regex>
#include <set>

#include "relcone/algebra/lattice.hpp"
#include "relcone/errors.hpp"

namespace relcone {

namespace {

RationalVector unit(std::size_t n, std::size_t i, const Rational& s = 1)
{
    RationalVector v(n);
    v[i] = s;
    return v;
}

RationalVector diff(std::size_t n, std::size_t i, std::size_t j)
{
    RationalVector v(n);
    v[i] = 1;
    v[j] = -1;
    return v;
}

std::vector<RationalVector> e8_simple_roots()
{
    const Rational h(1, 2);
    std::vector<RationalVector> s;
    s.push_back({h, -h, -h, -h, -h, -h, -h, h});
    s.push_back({1, 1, 0, 0, 0, 0, 0, 0});
    for (std::size_t i = 0; i < 6; ++i) {
        RationalVector v(8);
        v[i] = -1;
        v[i + 1] = 1;
        s.push_back(v);
    }
    return s;
}

RationalMatrix columns(const std::vector<RationalVector>& vs, std::size_t rows)
{
    return RationalMatrix::from_columns(rows, vs);
}

} // namespace

RootSystem::RootSystem(char family, int rank) : family_(family), rank_(rank)
{
    const auto d = static_cast<std::size_t>(rank);
    auto bad = [&]() {
        return ValidationError("no root system " + std::string(1, family) + std::to_string(rank));
    };
    switch (family) {
    case 'A':
        if (rank < 1)
            throw bad();
        gram_ = RationalMatrix::identity(d + 1);
        for (std::size_t i = 0; i < d; ++i)
            simple_.push_back(diff(d + 1, i, i + 1));
        break;
    case 'B':
        if (rank < 2)
            throw bad();
        gram_ = RationalMatrix::identity(d);
        for (std::size_t i = 0; i + 1 < d; ++i)
            simple_.push_back(diff(d, i, i + 1));
        simple_.push_back(unit(d, d - 1));
        break;
    case 'C':
        if (rank < 2)
            throw bad();
        gram_ = Rational(1, 2) * RationalMatrix::identity(d);
        for (std::size_t i = 0; i + 1 < d; ++i)
            simple_.push_back(diff(d, i, i + 1));
        simple_.push_back(unit(d, d - 1, 2));
        break;
    case 'D':
        if (rank < 4)
            throw bad();
        gram_ = RationalMatrix::identity(d);
        for (std::size_t i = 0; i + 1 < d; ++i)
            simple_.push_back(diff(d, i, i + 1));
        {
            RationalVector v(d);
            v[d - 2] = 1;
            v[d - 1] = 1;
            simple_.push_back(v);
        }
        break;
    case 'E':
        if (rank < 6 || rank > 8)
            throw bad();
        gram_ = RationalMatrix::identity(8);
        simple_ = e8_simple_roots();
        simple_.resize(d);
        break;
    case 'F':
        if (rank != 4)
            throw bad();
        gram_ = RationalMatrix::identity(4);
        simple_.push_back(diff(4, 1, 2));
        simple_.push_back(diff(4, 2, 3));
        simple_.push_back(unit(4, 3));
        simple_.push_back({Rational(1, 2), Rational(-1, 2), Rational(-1, 2), Rational(-1, 2)});
        break;
    case 'G':
        if (rank != 2)
            throw bad();
        gram_ = Rational(1, 3) * RationalMatrix::identity(3);
        simple_.push_back(diff(3, 0, 1));
        simple_.push_back({-2, 1, 1});
        break;
    default:
        throw bad();
    }
    generate_positive_roots();
}

Rational RootSystem::inner(const RationalVector& x, const RationalVector& y) const
{
    return dot(x, gram_.apply(y));
}

RationalVector RootSystem::coroot(const RationalVector& alpha) const
{
    return scale(Rational(Rational(2) / norm2(alpha)), alpha);
}

IntegerMatrix RootSystem::cartan_matrix() const
{
    IntegerMatrix a(simple_.size(), simple_.size());
    for (std::size_t i = 0; i < simple_.size(); ++i)
        for (std::size_t j = 0; j < simple_.size(); ++j) {
            const Rational v = inner(simple_[i], coroot(simple_[j]));
            if (!is_integral(v))
                throw ComputationError("non-integral Cartan entry");
            a(i, j) = v.get_num();
        }
    return a;
}

void RootSystem::generate_positive_roots()
{
    const IntegerMatrix a = cartan_matrix();
    const std::size_t d = simple_.size();
    std::set<IntegerVector> roots;
    std::vector<IntegerVector> layer;
    for (std::size_t i = 0; i < d; ++i) {
        IntegerVector c(d);
        c[i] = 1;
        layer.push_back(c);
        roots.insert(c);
    }
    std::vector<IntegerVector> all = layer;
    while (!layer.empty()) {
        std::set<IntegerVector> next;
        for (const auto& beta : layer)
            for (std::size_t i = 0; i < d; ++i) {
                // α_i-string through β: β - pα_i, ..., β + qα_i with p - q = ⟨β, α_i^∨⟩
                Integer pairing = 0;
                for (std::size_t k = 0; k < d; ++k)
                    pairing += beta[k] * a(k, i);
                long p = 0;
                IntegerVector down = beta;
                for (;;) {
                    down[i] -= 1;
                    if (!roots.count(down))
                        break;
                    ++p;
                }
                if (p - pairing > 0) {
                    IntegerVector up = beta;
                    up[i] += 1;
                    if (!roots.count(up))
                        next.insert(up);
                }
            }
        layer.assign(next.begin(), next.end());
        for (const auto& r : layer) {
            roots.insert(r);
            all.push_back(r);
        }
    }
    positive_ = std::move(all);
    // the highest root is the unique root of maximal height, produced last
    Integer top = 0;
    for (const auto& x : positive_.back())
        top += x;
    for (const auto& r : positive_) {
        Integer h = 0;
        for (const auto& x : r)
            h += x;
        if (h == top && r != positive_.back())
            throw ComputationError("highest root is not unique");
    }
}

RationalVector RootSystem::from_simple_coordinates(const IntegerVector& c) const
{
    RationalVector v(ambient_dim());
    for (std::size_t i = 0; i < c.size(); ++i)
        if (c[i] != 0)
            v = add(v, scale(Rational(c[i]), simple_[i]));
    return v;
}

std::vector<RationalVector> RootSystem::positive_roots() const
{
    std::vector<RationalVector> out;
    for (const auto& c : positive_)
        out.push_back(from_simple_coordinates(c));
    return out;
}

RationalVector RootSystem::highest_root() const { return from_simple_coordinates(marks()); }

RationalVector RootSystem::lowest_root() const { return scale(Rational(-1), highest_root()); }

std::vector<RationalVector> RootSystem::fundamental_coweights() const
{
    const std::size_t d = simple_.size();
    RationalMatrix s(d, d);
    for (std::size_t i = 0; i < d; ++i)
        for (std::size_t j = 0; j < d; ++j)
            s(i, j) = inner(simple_[i], simple_[j]);
    const RationalMatrix inv = rational_inverse(s);
    const RationalMatrix basis = columns(simple_, ambient_dim());
    std::vector<RationalVector> out;
    for (std::size_t j = 0; j < d; ++j)
        out.push_back(basis.apply(inv.column(j)));
    return out;
}

std::vector<RationalVector> RootSystem::fundamental_weights() const
{
    auto cw = fundamental_coweights();
    for (std::size_t j = 0; j < cw.size(); ++j)
        cw[j] = scale(Rational(norm2(simple_[j]) / 2), cw[j]);
    return cw;
}

RationalVector RootSystem::dynkin_coordinates(const RationalVector& xi) const
{
    if (xi.size() != ambient_dim())
        throw DimensionError("vector has " + std::to_string(xi.size()) + " coordinates, " + name() + " needs " +
                             std::to_string(ambient_dim()));
    RationalVector out;
    for (const auto& a : simple_)
        out.push_back(inner(xi, coroot(a)));
    return out;
}

bool RootSystem::in_cartan(const RationalVector& xi) const
{
    if (xi.size() != ambient_dim())
        return false;
    return rational_solve(columns(simple_, ambient_dim()), xi).has_value();
}

RootSystem parse_group(const std::string& name)
{
    static const std::regex plain("([ABCDEFG])([0-9]+)");
    static const std::regex classical("(SU|Sp|Spin)\\(([0-9]+)\\)");
    std::smatch m;
    if (std::regex_match(name, m, plain))
        return RootSystem(m[1].str()[0], std::stoi(m[2].str()));
    if (std::regex_match(name, m, classical)) {
        const int n = std::stoi(m[2].str());
        if (m[1] == "SU")
            return RootSystem('A', n - 1);
        if (m[1] == "Sp") {
            if (n % 2 != 0)
                throw ValidationError("Sp(n) needs even n");
            return RootSystem('C', n / 2);
        }
        if (n % 2 == 1)
            return RootSystem('B', (n - 1) / 2);
        return RootSystem('D', n / 2);
    }
    throw ValidationError("unrecognized group '" + name + "'");
}

} // namespace relcone

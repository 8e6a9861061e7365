#include "relcone/lie/sun.hpp"

#include <algorithm>
#include <functional>

#include "relcone/errors.hpp"

namespace relcone {

namespace {

void require_index(std::size_t n, std::size_t i, std::size_t lo)
{
    if (n < 2)
        throw ValidationError("SU(n) needs n >= 2");
    if (i < lo || i > n)
        throw ValidationError("index " + std::to_string(i) + " out of range for SU(" + std::to_string(n) + ")");
}

Rational floor_frac(const Rational& q)
{
    Integer f;
    mpz_fdiv_q(f.get_mpz_t(), q.get_num_mpz_t(), q.get_den_mpz_t());
    return q - Rational(f);
}

} // namespace

RationalVector sun_nu(std::size_t n, std::size_t i)
{
    require_index(n, i, 1);
    RationalVector v(n, Rational(-1, static_cast<long>(n)));
    v[i - 1] += 1;
    return v;
}

RationalVector sun_mu(std::size_t n, std::size_t i)
{
    require_index(n, i, 0);
    RationalVector v(n);
    for (std::size_t k = 1; k <= i; ++k)
        v = add(v, sun_nu(n, k));
    return v;
}

RationalVector sun_normalize_eigenphases(const RationalVector& phases)
{
    const std::size_t n = phases.size();
    if (n < 2)
        throw ValidationError("SU(n) needs n >= 2");
    RationalVector p;
    Rational sum = 0;
    for (const auto& x : phases) {
        p.push_back(floor_frac(x));
        sum += p.back();
    }
    if (!is_integral(sum))
        throw ValidationError("eigenphases sum to " + sum.get_str() + ", not an integer");
    std::sort(p.begin(), p.end(), std::greater<>());
    const std::size_t s = sum.get_num().get_ui();
    RationalVector lambda(p.begin() + s, p.end());
    for (std::size_t i = 0; i < s; ++i)
        lambda.push_back(p[i] - 1);
    return lambda;
}

RationalVector sun_gerbe_weight(std::size_t n, std::size_t i, std::size_t j)
{
    require_index(n, i, 1);
    require_index(n, j, 1);
    if (i >= j)
        throw ValidationError("gerbe weight needs i < j");
    const RationalVector w = subtract(sun_mu(n, j), sun_mu(n, i));
    RationalVector telescoped(n);
    for (std::size_t k = i + 1; k <= j; ++k)
        telescoped = add(telescoped, sun_nu(n, k));
    if (w != telescoped)
        throw ComputationError("μ_j - μ_i differs from the sum of the ν_k");
    return w;
}

} // namespace relcone

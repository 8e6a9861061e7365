#pragma once

#include <optional>
#include <random>

#include "relcone/algebra/lattice.hpp"
#include "relcone/chain/map.hpp"
#include "support/random_matrices.hpp"

namespace relcone::testing {

inline IntegerMatrix integer_inverse(const IntegerMatrix& u)
{
    const RationalMatrix inv = rational_inverse(to_rational(u));
    IntegerMatrix out(u.rows(), u.cols());
    for (std::size_t i = 0; i < u.rows(); ++i)
        for (std::size_t j = 0; j < u.cols(); ++j)
            out(i, j) = inv(i, j).get_num();
    return out;
}

/// Chain complex in degrees [0, top] built from elementary pieces ℤ -d-> ℤ and free ℤ,
/// then conjugated by random unimodular changes of basis in every degree.
inline ChainComplex random_complex(std::mt19937& rng, int top, std::size_t max_dim = 5)
{
    std::uniform_int_distribution<std::size_t> dim_dist(0, max_dim);
    std::uniform_int_distribution<int> factor(0, 5);
    const int levels = top + 1;
    std::vector<std::size_t> dims(levels);
    for (auto& d : dims)
        d = dim_dist(rng);
    // rank of ∂_n : C_n -> C_{n-1}
    std::vector<std::size_t> rk(levels + 1, 0);
    for (int n = 1; n < levels; ++n) {
        const std::size_t free_above = dims[n];
        const std::size_t free_below = dims[n - 1] - std::min(dims[n - 1], rk[n - 1]);
        std::uniform_int_distribution<std::size_t> r(0, std::min(free_above, free_below));
        rk[n] = r(rng);
    }
    std::vector<IntegerMatrix> elem(levels);
    elem[0] = IntegerMatrix(0, dims[0]);
    for (int n = 1; n < levels; ++n) {
        IntegerMatrix d(dims[n - 1], dims[n]);
        for (std::size_t i = 0; i < rk[n]; ++i) {
            // top basis vector i hits the tail of C_{n-1}, away from the part ∂_{n-1} uses
            static const int choices[] = {1, 1, 1, 2, 3, -2};
            d(dims[n - 1] - 1 - i, i) = choices[factor(rng)];
        }
        elem[n] = d;
    }
    std::vector<IntegerMatrix> p(levels), p_inv(levels);
    for (int n = 0; n < levels; ++n) {
        p[n] = random_unimodular(rng, dims[n]);
        p_inv[n] = integer_inverse(p[n]);
    }
    std::vector<IntegerMatrix> diffs(levels);
    diffs[0] = IntegerMatrix(0, dims[0]);
    for (int n = 1; n < levels; ++n)
        diffs[n] = p[n - 1] * elem[n] * p_inv[n];
    return ChainComplex(Grading::chain, 0, dims, diffs);
}

/// Solve F * a = r for an integer matrix F (rows(r) x rows(a)), adding a random kernel element.
inline std::optional<IntegerMatrix> solve_right(std::mt19937& rng, const IntegerMatrix& a, const IntegerMatrix& r)
{
    // vec(F a) = (a^T ⊗ I) vec(F) with column-major vec
    const std::size_t p = r.rows(), q = a.rows(), m = a.cols();
    IntegerMatrix sys(p * m, p * q);
    for (std::size_t j = 0; j < m; ++j)
        for (std::size_t k = 0; k < q; ++k)
            if (a(k, j) != 0)
                for (std::size_t i = 0; i < p; ++i)
                    sys(j * p + i, k * p + i) = a(k, j);
    IntegerVector rhs(p * m);
    for (std::size_t j = 0; j < m; ++j)
        for (std::size_t i = 0; i < p; ++i)
            rhs[j * p + i] = r(i, j);
    const IntegerSolver solver(sys);
    auto x = solver.solve(rhs);
    if (!x)
        return std::nullopt;
    const auto& snf = solver.smith();
    std::uniform_int_distribution<int> coef(-1, 1);
    for (std::size_t c = snf.rank; c < sys.cols(); ++c) {
        const int t = coef(rng);
        if (t != 0)
            *x = add(*x, scale(Integer(t), snf.right.column(c)));
    }
    IntegerMatrix f(p, q);
    for (std::size_t k = 0; k < q; ++k)
        for (std::size_t i = 0; i < p; ++i)
            f(i, k) = (*x)[k * p + i];
    return f;
}

/// A random chain map X -> Y: free choice in the top degree, then each lower component
/// solved from the commuting square. Returns nullopt when a square has no integer solution.
inline std::optional<ChainMap> try_random_map(std::mt19937& rng, const ChainComplex& x, const ChainComplex& y,
                                              int bound = 2)
{
    const int top = std::max(x.max_degree(), y.max_degree());
    const int bottom = std::min(x.min_degree(), y.min_degree());
    std::vector<IntegerMatrix> comps(static_cast<std::size_t>(top - bottom + 1));
    auto at = [&](int n) -> IntegerMatrix& { return comps[static_cast<std::size_t>(n - bottom)]; };
    at(top) = random_matrix(rng, y.dim(top), x.dim(top), bound);
    for (int n = top; n > bottom; --n) {
        const IntegerMatrix rhs = y.differential(n) * at(n);
        auto f = solve_right(rng, x.differential(n), rhs);
        if (!f)
            return std::nullopt;
        at(n - 1) = *f;
    }
    try {
        return ChainMap(x, y, bottom, comps);
    } catch (const ValidationError&) {
        return std::nullopt;
    }
}

inline ChainMap random_map(std::mt19937& rng, const ChainComplex& x, const ChainComplex& y, int bound = 2)
{
    for (;;) {
        if (auto f = try_random_map(rng, x, y, bound))
            return *f;
    }
}

/// Random (X, Y, f) with small dimensions.
inline ChainMap random_chain_map(std::mt19937& rng, int top = 3, std::size_t max_dim = 4)
{
    for (;;) {
        const ChainComplex x = random_complex(rng, top, max_dim);
        const ChainComplex y = random_complex(rng, top, max_dim);
        for (int attempt = 0; attempt < 20; ++attempt)
            if (auto f = try_random_map(rng, x, y))
                return *f;
    }
}

/// Random homotopy components h_n : X_n -> Y_{n+1}.
inline std::vector<IntegerMatrix> random_homotopy(std::mt19937& rng, const ChainMap& f, int bound = 2)
{
    const auto& x = f.source();
    const auto& y = f.target();
    std::vector<IntegerMatrix> h;
    for (int n = x.min_degree(); n <= x.max_degree(); ++n)
        h.push_back(random_matrix(rng, y.dim(n + 1), x.dim(n), bound));
    return h;
}

} // namespace relcone::testing

#pragma once

#include <random>

#include "relcone/algebra/matrix.hpp"

namespace relcone::testing {

inline IntegerMatrix random_matrix(std::mt19937& rng, std::size_t rows, std::size_t cols, int bound)
{
    std::uniform_int_distribution<int> dist(-bound, bound);
    IntegerMatrix m(rows, cols);
    for (std::size_t i = 0; i < rows; ++i)
        for (std::size_t j = 0; j < cols; ++j)
            m(i, j) = dist(rng);
    return m;
}

/// Product of random elementary operations; determinant ±1 by construction.
inline IntegerMatrix random_unimodular(std::mt19937& rng, std::size_t n, int steps = 0)
{
    IntegerMatrix u = IntegerMatrix::identity(n);
    if (n < 2)
        return u;
    if (steps == 0)
        steps = static_cast<int>(3 * n);
    std::uniform_int_distribution<std::size_t> idx(0, n - 1);
    std::uniform_int_distribution<int> coef(-2, 2);
    for (int s = 0; s < steps; ++s) {
        std::size_t a = idx(rng), b = idx(rng);
        if (a == b)
            continue;
        u.add_row_multiple(a, b, Integer(coef(rng)));
        if (coef(rng) == 0)
            u.swap_rows(a, b);
    }
    return u;
}

} // namespace relcone::testing

#pragma once

#include "relcone/algebra/matrix.hpp"

namespace relcone {

/// ν_i = e_i - (1/n)(1, ..., 1), 1 <= i <= n.
RationalVector sun_nu(std::size_t n, std::size_t i);
/// μ_i = Σ_{k <= i} ν_k, 0 <= i <= n (μ_0 = μ_n = 0).
RationalVector sun_mu(std::size_t n, std::size_t i);

/// Sum-zero λ with λ_1 >= ... >= λ_n >= λ_1 - 1 and λ_i ≡ phases (mod ℤ) as a multiset.
/// The phases must sum to an integer. Throws ValidationError otherwise.
RationalVector sun_normalize_eigenphases(const RationalVector& phases);

/// μ_j - μ_i, checked against Σ_{k=i+1}^{j} ν_k; 1 <= i < j <= n.
RationalVector sun_gerbe_weight(std::size_t n, std::size_t i, std::size_t j);

} // namespace relcone

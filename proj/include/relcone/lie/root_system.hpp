#pragma once

#include <string>
#include <vector>

#include "relcone/algebra/matrix.hpp"

namespace relcone {

/// Root system of a compact simple simply connected group, in a standard Euclidean model.
///
/// Vectors live in an ambient ℚ^n; the inner product is gram() and is normalized so that
/// long roots have norm² 2 (the basic inner product). The Cartan subalgebra is the span of
/// the simple roots; 𝔱 and 𝔱* are identified through the same inner product.
class RootSystem {
public:
    /// family in {A, B, C, D, E, F, G}. Throws ValidationError on an invalid rank.
    RootSystem(char family, int rank);

    char family() const { return family_; }
    int rank() const { return rank_; }
    std::string name() const { return std::string(1, family_) + std::to_string(rank_); }
    std::size_t ambient_dim() const { return gram_.rows(); }

    const std::vector<RationalVector>& simple_roots() const { return simple_; }
    const RationalMatrix& gram() const { return gram_; }
    Rational inner(const RationalVector& x, const RationalVector& y) const;
    Rational norm2(const RationalVector& x) const { return inner(x, x); }

    /// α^∨ = 2α / (α, α).
    RationalVector coroot(const RationalVector& alpha) const;

    /// a_ij = ⟨α_i, α_j^∨⟩, recomputed from the stored roots.
    IntegerMatrix cartan_matrix() const;

    /// Positive roots in simple-root coordinates, ordered by height; the simple roots come first.
    const std::vector<IntegerVector>& positive_root_coordinates() const { return positive_; }
    RationalVector from_simple_coordinates(const IntegerVector& c) const;
    std::vector<RationalVector> positive_roots() const;

    RationalVector highest_root() const;
    /// α_0 = -(highest root).
    RationalVector lowest_root() const;
    /// Coefficients of the highest root in the simple roots.
    const IntegerVector& marks() const { return positive_.back(); }

    /// ω_j^∨ with ⟨α_i, ω_j^∨⟩ = δ_ij.
    std::vector<RationalVector> fundamental_coweights() const;
    /// ω_j with ⟨ω_j, α_i^∨⟩ = δ_ij.
    std::vector<RationalVector> fundamental_weights() const;

    /// ⟨ξ, α_i^∨⟩ for each simple root.
    RationalVector dynkin_coordinates(const RationalVector& xi) const;

    /// ξ lies in the span of the simple roots.
    bool in_cartan(const RationalVector& xi) const;

private:
    void generate_positive_roots();

    char family_;
    int rank_;
    std::vector<RationalVector> simple_;
    RationalMatrix gram_;
    std::vector<IntegerVector> positive_;
};

/// "A3", "E8", "SU(4)", "Sp(6)", "Spin(7)", "Spin(8)". Throws ValidationError.
RootSystem parse_group(const std::string& name);

} // namespace relcone

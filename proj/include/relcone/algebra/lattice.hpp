#pragma once

#include <optional>

#include "relcone/algebra/abelian_group.hpp"
#include "relcone/algebra/smith.hpp"

namespace relcone {

/// Presentation of ℤ^rows / im(A).
AbelianGroupPresentation cokernel_presentation(const IntegerMatrix& a);

/// Some integer x with A x = b, or nullopt when none exists over ℤ.
std::optional<IntegerVector> integer_solve(const IntegerMatrix& a, const IntegerVector& b);

/// Reusable solver: one Smith decomposition, many right-hand sides.
class IntegerSolver {
public:
    explicit IntegerSolver(const IntegerMatrix& a);
    std::optional<IntegerVector> solve(const IntegerVector& b) const;
    const SmithDecomposition& smith() const { return snf_; }
    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }

private:
    std::size_t rows_, cols_;
    SmithDecomposition snf_;
};

/// Columns form a ℤ-basis of ker(A) ⊂ ℤ^cols.
IntegerMatrix integer_kernel_basis(const IntegerMatrix& a);

/// Columns form a ℤ-basis of the lattice spanned by the columns of A.
IntegerMatrix image_basis(const IntegerMatrix& a);

std::size_t rank(const IntegerMatrix& a);
std::size_t rank(const RationalMatrix& a);

/// Bareiss fraction-free determinant.
Integer determinant(const IntegerMatrix& a);

std::optional<RationalVector> rational_solve(const RationalMatrix& a, const RationalVector& b);
/// Columns span ker(A) over ℚ.
RationalMatrix rational_kernel(const RationalMatrix& a);
RationalMatrix rational_inverse(const RationalMatrix& a);

/// The subquotient Z / B of ℤ^n, where B ⊆ Z are given by spanning columns.
/// Provides a canonical cyclic decomposition plus coordinates of elements of Z.
class Subquotient {
public:
    Subquotient(std::size_t ambient, const IntegerMatrix& z_span, const IntegerMatrix& b_span);

    std::size_t ambient() const { return ambient_; }
    /// Number of nontrivial cyclic summands.
    std::size_t size() const { return generators_.size(); }
    /// Representatives in ℤ^ambient, torsion summands first, then free ones.
    const std::vector<IntegerVector>& generators() const& { return generators_; }
    std::vector<IntegerVector> generators() && { return std::move(generators_); }
    /// Order of each generator; 0 means infinite.
    const IntegerVector& orders() const& { return orders_; }
    IntegerVector orders() && { return std::move(orders_); }
    AbelianGroupPresentation presentation() const;

    bool contains(const IntegerVector& v) const;
    /// Coordinates of [v] in terms of generators(); torsion coordinates reduced to [0, order).
    IntegerVector coordinates(const IntegerVector& v) const;
    bool is_zero_class(const IntegerVector& v) const { return is_zero(coordinates(v)); }

private:
    std::size_t ambient_;
    IntegerMatrix z_basis_;
    std::optional<IntegerSolver> z_solver_;
    IntegerMatrix change_;              // U from the Smith form of B in Z-coordinates
    std::vector<std::size_t> kept_;     // indices of nontrivial summands
    std::vector<IntegerVector> generators_;
    IntegerVector orders_;
};

/// ℤ-basis of { x : A x ∈ diag(moduli) ℤ^rows }; a modulus of 0 means no reduction in that row.
IntegerMatrix kernel_modulo(const IntegerMatrix& a, const IntegerVector& moduli);

} // namespace relcone

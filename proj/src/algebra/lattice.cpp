#include "relcone/algebra/lattice.hpp"

namespace relcone {

AbelianGroupPresentation cokernel_presentation(const IntegerMatrix& a)
{
    const auto inv = smith_invariants(a);
    AbelianGroupPresentation g;
    g.free_rank = a.rows() - inv.rank();
    for (const auto& d : inv.factors)
        if (d != 1)
            g.torsion.push_back(d);
    return g;
}

IntegerSolver::IntegerSolver(const IntegerMatrix& a) : rows_(a.rows()), cols_(a.cols()), snf_(smith_normal_form(a)) {}

std::optional<IntegerVector> IntegerSolver::solve(const IntegerVector& b) const
{
    if (b.size() != rows_)
        throw DimensionError("right-hand side has length " + std::to_string(b.size()) + ", expected " +
                             std::to_string(rows_));
    const IntegerVector ub = snf_.left.apply(b);
    IntegerVector y(cols_);
    for (std::size_t i = 0; i < rows_; ++i) {
        if (i < snf_.rank) {
            const Integer& d = snf_.diagonal(i, i);
            if (!mpz_divisible_p(ub[i].get_mpz_t(), d.get_mpz_t()))
                return std::nullopt;
            mpz_divexact(y[i].get_mpz_t(), ub[i].get_mpz_t(), d.get_mpz_t());
        } else if (ub[i] != 0) {
            return std::nullopt;
        }
    }
    return snf_.right.apply(y);
}

std::optional<IntegerVector> integer_solve(const IntegerMatrix& a, const IntegerVector& b)
{
    return IntegerSolver(a).solve(b);
}

IntegerMatrix integer_kernel_basis(const IntegerMatrix& a)
{
    const auto snf = smith_normal_form(a);
    return snf.right.block(0, snf.rank, a.cols(), a.cols() - snf.rank);
}

IntegerMatrix image_basis(const IntegerMatrix& a)
{
    const auto snf = smith_normal_form(a);
    IntegerMatrix out(a.rows(), snf.rank);
    for (std::size_t j = 0; j < snf.rank; ++j)
        for (std::size_t i = 0; i < a.rows(); ++i)
            out(i, j) = snf.left_inverse(i, j) * snf.diagonal(j, j);
    return out;
}

IntegerMatrix kernel_modulo(const IntegerMatrix& a, const IntegerVector& moduli)
{
    if (moduli.size() != a.rows())
        throw DimensionError("one modulus per row required");
    IntegerMatrix neg_mod(a.rows(), a.rows());
    for (std::size_t i = 0; i < a.rows(); ++i)
        neg_mod(i, i) = -moduli[i];
    const IntegerMatrix k = integer_kernel_basis(hstack(a, neg_mod));
    return image_basis(k.block(0, 0, a.cols(), k.cols()));
}

namespace {

// In-place reduced row echelon form; returns pivot columns.
std::vector<std::size_t> rref(RationalMatrix& m, std::size_t col_limit)
{
    std::vector<std::size_t> pivots;
    std::size_t r = 0;
    for (std::size_t c = 0; c < col_limit && r < m.rows(); ++c) {
        std::size_t p = r;
        while (p < m.rows() && m(p, c) == 0)
            ++p;
        if (p == m.rows())
            continue;
        m.swap_rows(r, p);
        const Rational inv = 1 / m(r, c);
        for (std::size_t j = 0; j < m.cols(); ++j)
            m(r, j) *= inv;
        for (std::size_t i = 0; i < m.rows(); ++i)
            if (i != r && m(i, c) != 0)
                m.add_row_multiple(i, r, -m(i, c));
        pivots.push_back(c);
        ++r;
    }
    return pivots;
}

} // namespace

std::size_t rank(const RationalMatrix& a)
{
    RationalMatrix m = a;
    return rref(m, m.cols()).size();
}

std::size_t rank(const IntegerMatrix& a) { return smith_invariants(a).rank(); }

Integer determinant(const IntegerMatrix& a)
{
    if (a.rows() != a.cols())
        throw DimensionError("determinant of non-square matrix " + a.shape());
    const std::size_t n = a.rows();
    if (n == 0)
        return 1;
    IntegerMatrix m = a;
    Integer sign = 1, prev = 1;
    for (std::size_t k = 0; k + 1 < n; ++k) {
        if (m(k, k) == 0) {
            std::size_t p = k + 1;
            while (p < n && m(p, k) == 0)
                ++p;
            if (p == n)
                return 0;
            m.swap_rows(k, p);
            sign = -sign;
        }
        for (std::size_t i = k + 1; i < n; ++i)
            for (std::size_t j = k + 1; j < n; ++j) {
                Integer t = m(i, j) * m(k, k) - m(i, k) * m(k, j);
                mpz_divexact(m(i, j).get_mpz_t(), t.get_mpz_t(), prev.get_mpz_t());
            }
        prev = m(k, k);
    }
    return sign * m(n - 1, n - 1);
}

std::optional<RationalVector> rational_solve(const RationalMatrix& a, const RationalVector& b)
{
    if (b.size() != a.rows())
        throw DimensionError("right-hand side length mismatch");
    RationalMatrix m(a.rows(), a.cols() + 1);
    m.set_block(0, 0, a);
    for (std::size_t i = 0; i < a.rows(); ++i)
        m(i, a.cols()) = b[i];
    const auto pivots = rref(m, a.cols());
    for (std::size_t i = pivots.size(); i < m.rows(); ++i)
        if (m(i, a.cols()) != 0)
            return std::nullopt;
    RationalVector x(a.cols());
    for (std::size_t r = 0; r < pivots.size(); ++r)
        x[pivots[r]] = m(r, a.cols());
    return x;
}

RationalMatrix rational_kernel(const RationalMatrix& a)
{
    RationalMatrix m = a;
    const auto pivots = rref(m, m.cols());
    std::vector<bool> is_pivot(a.cols(), false);
    for (auto p : pivots)
        is_pivot[p] = true;
    std::vector<RationalVector> cols;
    for (std::size_t f = 0; f < a.cols(); ++f) {
        if (is_pivot[f])
            continue;
        RationalVector v(a.cols());
        v[f] = 1;
        for (std::size_t r = 0; r < pivots.size(); ++r)
            v[pivots[r]] = -m(r, f);
        cols.push_back(std::move(v));
    }
    return RationalMatrix::from_columns(a.cols(), cols);
}

RationalMatrix rational_inverse(const RationalMatrix& a)
{
    if (a.rows() != a.cols())
        throw DimensionError("inverse of non-square matrix " + a.shape());
    const std::size_t n = a.rows();
    RationalMatrix m = hstack(a, RationalMatrix::identity(n));
    if (rref(m, n).size() != n)
        throw ValidationError("matrix is singular");
    return m.block(0, n, n, n);
}

Subquotient::Subquotient(std::size_t ambient, const IntegerMatrix& z_span, const IntegerMatrix& b_span)
    : ambient_(ambient)
{
    if (z_span.rows() != ambient || b_span.rows() != ambient)
        throw DimensionError("subquotient spans must live in the ambient lattice");
    z_basis_ = image_basis(z_span);
    z_solver_.emplace(z_basis_);
    const std::size_t k = z_basis_.cols();

    IntegerMatrix b_coords(k, b_span.cols());
    for (std::size_t j = 0; j < b_span.cols(); ++j) {
        auto c = z_solver_->solve(b_span.column(j));
        if (!c)
            throw ComputationError("subquotient: a relation does not lie in the subgroup");
        for (std::size_t i = 0; i < k; ++i)
            b_coords(i, j) = (*c)[i];
    }

    auto snf = smith_normal_form(b_coords);
    change_ = std::move(snf.left);
    const IntegerMatrix gens = z_basis_ * snf.left_inverse;
    for (std::size_t i = 0; i < k; ++i) {
        const Integer order = i < snf.rank ? snf.diagonal(i, i) : Integer(0);
        if (order == 1)
            continue;
        kept_.push_back(i);
        orders_.push_back(order);
        generators_.push_back(gens.column(i));
    }
}

AbelianGroupPresentation Subquotient::presentation() const { return AbelianGroupPresentation::from_orders(orders_); }

bool Subquotient::contains(const IntegerVector& v) const { return z_solver_->solve(v).has_value(); }

IntegerVector Subquotient::coordinates(const IntegerVector& v) const
{
    auto c = z_solver_->solve(v);
    if (!c)
        throw ValidationError("element does not lie in the cycle subgroup");
    const IntegerVector y = change_.apply(*c);
    IntegerVector out(kept_.size());
    for (std::size_t t = 0; t < kept_.size(); ++t) {
        out[t] = y[kept_[t]];
        if (orders_[t] != 0)
            mpz_fdiv_r(out[t].get_mpz_t(), out[t].get_mpz_t(), orders_[t].get_mpz_t());
    }
    return out;
}

} // namespace relcone

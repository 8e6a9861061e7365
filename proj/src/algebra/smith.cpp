#include "relcone/algebra/smith.hpp"

#include <optional>
#include <utility>

namespace relcone {

namespace {

int cmpabs(const Integer& a, const Integer& b) { return mpz_cmpabs(a.get_mpz_t(), b.get_mpz_t()); }

// Records every elementary operation applied to the working matrix so the
// unimodular factors (and their inverses) can be accumulated alongside.
struct Tracker {
    bool enabled;
    IntegerMatrix u, u_inv, v, v_inv;

    Tracker(std::size_t m, std::size_t n, bool on) : enabled(on)
    {
        if (on) {
            u = IntegerMatrix::identity(m);
            u_inv = IntegerMatrix::identity(m);
            v = IntegerMatrix::identity(n);
            v_inv = IntegerMatrix::identity(n);
        }
    }

    void swap_rows(std::size_t a, std::size_t b)
    {
        if (!enabled || a == b)
            return;
        u.swap_rows(a, b);
        u_inv.swap_cols(a, b);
    }
    void swap_cols(std::size_t a, std::size_t b)
    {
        if (!enabled || a == b)
            return;
        v.swap_cols(a, b);
        v_inv.swap_rows(a, b);
    }
    // row dst += q * row src
    void add_row(std::size_t dst, std::size_t src, const Integer& q)
    {
        if (!enabled)
            return;
        u.add_row_multiple(dst, src, q);
        u_inv.add_col_multiple(src, dst, -q);
    }
    // col dst += q * col src
    void add_col(std::size_t dst, std::size_t src, const Integer& q)
    {
        if (!enabled)
            return;
        v.add_col_multiple(dst, src, q);
        v_inv.add_row_multiple(src, dst, -q);
    }
    void negate_row(std::size_t r)
    {
        if (!enabled)
            return;
        u.negate_row(r);
        u_inv.negate_col(r);
    }
};

class Reducer {
public:
    Reducer(const IntegerMatrix& a, bool track) : m_(a), t_(a.rows(), a.cols(), track) {}

    std::size_t run()
    {
        const std::size_t rows = m_.rows(), cols = m_.cols();
        std::size_t t = 0;
        for (; t < rows && t < cols; ++t) {
            if (!place_min_pivot(t))
                break;
            for (;;) {
                if (!clear_column(t) || !clear_row(t))
                    continue;
                auto bad = find_non_divisible(t);
                if (!bad)
                    break;
                // Pull the offending row into the pivot row; the next pass lowers the pivot.
                add_row(t, *bad, 1);
            }
            if (m_(t, t) < 0) {
                m_.negate_row(t);
                t_.negate_row(t);
            }
        }
        return t;
    }

    IntegerMatrix& matrix() { return m_; }
    Tracker& tracker() { return t_; }

private:
    bool place_min_pivot(std::size_t t)
    {
        std::size_t bi = 0, bj = 0;
        bool found = false;
        Integer best;
        for (std::size_t i = t; i < m_.rows(); ++i)
            for (std::size_t j = t; j < m_.cols(); ++j) {
                const Integer& x = m_(i, j);
                if (x == 0)
                    continue;
                if (!found || cmpabs(x, best) < 0) {
                    best = x;
                    bi = i;
                    bj = j;
                    found = true;
                    if (best == 1 || best == -1)
                        goto done;
                }
            }
    done:
        if (!found)
            return false;
        swap_rows(t, bi);
        swap_cols(t, bj);
        return true;
    }

    // Returns true when column t below the pivot is zero; otherwise moves a
    // smaller remainder into the pivot position and returns false.
    bool clear_column(std::size_t t)
    {
        Integer q;
        for (std::size_t i = t + 1; i < m_.rows(); ++i) {
            if (m_(i, t) == 0)
                continue;
            mpz_fdiv_q(q.get_mpz_t(), m_(i, t).get_mpz_t(), m_(t, t).get_mpz_t());
            add_row(i, t, -q);
        }
        std::size_t best = t;
        for (std::size_t i = t + 1; i < m_.rows(); ++i)
            if (m_(i, t) != 0 && (best == t || cmpabs(m_(i, t), m_(best, t)) < 0))
                best = i;
        if (best == t)
            return true;
        swap_rows(t, best);
        return false;
    }

    bool clear_row(std::size_t t)
    {
        Integer q;
        for (std::size_t j = t + 1; j < m_.cols(); ++j) {
            if (m_(t, j) == 0)
                continue;
            mpz_fdiv_q(q.get_mpz_t(), m_(t, j).get_mpz_t(), m_(t, t).get_mpz_t());
            add_col(j, t, -q);
        }
        std::size_t best = t;
        for (std::size_t j = t + 1; j < m_.cols(); ++j)
            if (m_(t, j) != 0 && (best == t || cmpabs(m_(t, j), m_(t, best)) < 0))
                best = j;
        if (best == t)
            return true;
        swap_cols(t, best);
        return false;
    }

    std::optional<std::size_t> find_non_divisible(std::size_t t) const
    {
        const Integer& p = m_(t, t);
        if (p == 1 || p == -1)
            return std::nullopt;
        for (std::size_t i = t + 1; i < m_.rows(); ++i)
            for (std::size_t j = t + 1; j < m_.cols(); ++j)
                if (m_(i, j) != 0 && !mpz_divisible_p(m_(i, j).get_mpz_t(), p.get_mpz_t()))
                    return i;
        return std::nullopt;
    }

    void swap_rows(std::size_t a, std::size_t b)
    {
        m_.swap_rows(a, b);
        t_.swap_rows(a, b);
    }
    void swap_cols(std::size_t a, std::size_t b)
    {
        m_.swap_cols(a, b);
        t_.swap_cols(a, b);
    }
    void add_row(std::size_t dst, std::size_t src, const Integer& q)
    {
        if (q == 0)
            return;
        m_.add_row_multiple(dst, src, q);
        t_.add_row(dst, src, q);
    }
    void add_col(std::size_t dst, std::size_t src, const Integer& q)
    {
        if (q == 0)
            return;
        m_.add_col_multiple(dst, src, q);
        t_.add_col(dst, src, q);
    }

    IntegerMatrix m_;
    Tracker t_;
};

} // namespace

IntegerVector SmithDecomposition::invariant_factors() const
{
    IntegerVector out;
    for (std::size_t i = 0; i < rank; ++i)
        out.push_back(diagonal(i, i));
    return out;
}

SmithDecomposition smith_normal_form(const IntegerMatrix& a)
{
    Reducer r(a, true);
    const std::size_t rank = r.run();
    SmithDecomposition out;
    out.rank = rank;
    out.diagonal = std::move(r.matrix());
    out.left = std::move(r.tracker().u);
    out.left_inverse = std::move(r.tracker().u_inv);
    out.right = std::move(r.tracker().v);
    out.right_inverse = std::move(r.tracker().v_inv);
    return out;
}

SmithInvariants smith_invariants(const IntegerMatrix& a)
{
    Reducer r(a, false);
    const std::size_t rank = r.run();
    SmithInvariants out;
    out.factors.reserve(rank);
    for (std::size_t i = 0; i < rank; ++i)
        out.factors.push_back(r.matrix()(i, i));
    return out;
}

} // namespace relcone

#pragma once

#include "relcone/chain/complex.hpp"

namespace relcone {

/// Degree-preserving map of complexes with the same grading.
/// component(n) has shape target.dim(n) x source.dim(n); commuting squares are validated.
class ChainMap {
public:
    ChainMap() = default;
    /// `components` cover degrees [min_degree, min_degree + size); other degrees are zero.
    ChainMap(ChainComplex source, ChainComplex target, int min_degree, std::vector<IntegerMatrix> components);

    static ChainMap identity(const ChainComplex& c);
    static ChainMap zero(const ChainComplex& source, const ChainComplex& target);

    const ChainComplex& source() const { return source_; }
    const ChainComplex& target() const { return target_; }
    Grading grading() const { return source_.grading(); }
    int min_degree() const { return lo_; }
    int max_degree() const { return lo_ + static_cast<int>(components_.size()) - 1; }

    IntegerMatrix component(int n) const;
    IntegerVector apply(int n, const IntegerVector& v) const { return component(n).apply(v); }

    bool is_injective() const;  // degreewise
    bool is_surjective() const; // degreewise, over ℤ

    friend ChainMap operator-(const ChainMap& f, const ChainMap& g);
    friend ChainMap compose(const ChainMap& g, const ChainMap& f); // g ∘ f

private:
    ChainComplex source_, target_;
    int lo_ = 0;
    std::vector<IntegerMatrix> components_;
};

/// h_n : X_n -> Y_{n+1} (chain grading) or X^n -> Y^{n-1} (cochain grading),
/// validated against h d + d h = f - g.
class HomotopyOperator {
public:
    HomotopyOperator(const ChainMap& f, const ChainMap& g, int min_degree, std::vector<IntegerMatrix> components);

    /// Returns f - (h d + d h), the chain map homotopic to f through h.
    static ChainMap shifted(const ChainMap& f, int min_degree, const std::vector<IntegerMatrix>& components);

    IntegerMatrix component(int n) const;
    int min_degree() const { return lo_; }
    const ChainMap& f() const { return f_; }
    const ChainMap& g() const { return g_; }

private:
    ChainMap f_, g_;
    int lo_;
    std::vector<IntegerMatrix> components_;
};

} // namespace relcone

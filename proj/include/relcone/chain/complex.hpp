#pragma once

#include <string>
#include <vector>

#include "relcone/algebra/matrix.hpp"

namespace relcone {

/// Direction of the differential: chain complexes lower degree, cochain complexes raise it.
enum class Grading { chain, cochain };
enum class Ring { integers, rationals };

const char* to_string(Grading g);
const char* to_string(Ring r);

/// Bounded complex of free modules. Degrees outside [min_degree, max_degree] are zero.
///
/// differential(n) is the matrix leaving degree n, of shape dim(target_degree(n)) x dim(n).
/// The constructor validates shapes and d∘d = 0.
class ChainComplex {
public:
    ChainComplex() = default;
    ChainComplex(Grading grading, int min_degree, std::vector<std::size_t> dims,
                 std::vector<IntegerMatrix> differentials, Ring ring = Ring::integers);

    /// Complex concentrated in degree `degree` with a single free module of rank `dim`.
    static ChainComplex concentrated(Grading grading, int degree, std::size_t dim, Ring ring = Ring::integers);

    Grading grading() const { return grading_; }
    Ring ring() const { return ring_; }
    int min_degree() const { return min_degree_; }
    int max_degree() const { return min_degree_ + static_cast<int>(dims_.size()) - 1; }
    bool empty_range() const { return dims_.empty(); }
    bool in_range(int n) const { return n >= min_degree_ && n <= max_degree(); }

    int target_degree(int n) const { return grading_ == Grading::chain ? n - 1 : n + 1; }
    int source_degree(int n) const { return grading_ == Grading::chain ? n + 1 : n - 1; }

    std::size_t dim(int n) const;
    std::size_t total_dim() const;
    /// Leaving degree n (zero matrix of the right shape outside the range).
    IntegerMatrix differential(int n) const;
    /// Arriving at degree n.
    IntegerMatrix incoming(int n) const { return differential(source_degree(n)); }
    const std::vector<std::size_t>& dims() const { return dims_; }

    ChainComplex with_ring(Ring ring) const;
    /// Same data with the range widened to [lo, hi] (zeros added).
    ChainComplex widened(int lo, int hi) const;

    long euler_characteristic() const;

    friend bool operator==(const ChainComplex& a, const ChainComplex& b);

private:
    Grading grading_ = Grading::chain;
    Ring ring_ = Ring::integers;
    int min_degree_ = 0;
    std::vector<std::size_t> dims_;
    std::vector<IntegerMatrix> diffs_;
};

/// Cochain complex C^{-n} = C_n, differential unchanged; and the inverse.
ChainComplex regrade(const ChainComplex& c);

} // namespace relcone

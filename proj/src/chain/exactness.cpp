#include "relcone/chain/exactness.hpp"

#include <algorithm>

namespace relcone {

namespace {

bool reduces_to_zero(const IntegerVector& v, const IntegerVector& orders)
{
    for (std::size_t i = 0; i < v.size(); ++i) {
        if (orders[i] == 0 ? v[i] != 0 : !mpz_divisible_p(v[i].get_mpz_t(), orders[i].get_mpz_t()))
            return false;
    }
    return true;
}

int range_lo(const ChainComplex& c) { return c.empty_range() ? 0 : c.min_degree(); }
int range_hi(const ChainComplex& c) { return c.empty_range() ? -1 : c.max_degree(); }

} // namespace

bool exact_at(const GroupHom& g, const GroupHom& h)
{
    const std::size_t b = g.target_orders.size();
    if (h.source_orders.size() != b || g.matrix.rows() != b || h.matrix.cols() != b)
        throw DimensionError("maps are not composable");
    // h ∘ g = 0
    const IntegerMatrix hg = h.matrix * g.matrix;
    for (std::size_t j = 0; j < hg.cols(); ++j)
        if (!reduces_to_zero(hg.column(j), h.target_orders))
            return false;
    // ker h ⊆ im g + relations of B
    const IntegerMatrix ker = kernel_modulo(h.matrix, h.target_orders);
    const IntegerMatrix span = hstack(g.matrix, IntegerMatrix::diagonal(g.target_orders));
    const IntegerSolver solver(span);
    for (std::size_t j = 0; j < ker.cols(); ++j)
        if (!solver.solve(ker.column(j)))
            return false;
    return true;
}

bool ExactnessReport::all_exact() const
{
    return std::all_of(slots.begin(), slots.end(), [](const ExactnessSlot& s) { return s.exact; });
}

namespace {

struct Node {
    std::string name;
    int degree;
    Subquotient group;
};

// Assemble a sequence of groups and maps and check exactness at every interior node.
// Boundary nodes are flanked by the zero group.
ExactnessReport check_sequence(const std::vector<Node>& nodes, const std::vector<GroupHom>& maps)
{
    ExactnessReport r;
    long balance = 0;
    for (std::size_t k = 0; k < nodes.size(); ++k) {
        GroupHom in, out;
        if (k == 0) {
            in.matrix = IntegerMatrix(nodes[0].group.size(), 0);
            in.target_orders = nodes[0].group.orders();
        } else {
            in = maps[k - 1];
        }
        if (k + 1 == nodes.size()) {
            out.matrix = IntegerMatrix(0, nodes[k].group.size());
            out.source_orders = nodes[k].group.orders();
        } else {
            out = maps[k];
        }
        ExactnessSlot s;
        s.group = nodes[k].name;
        s.degree = nodes[k].degree;
        s.value = nodes[k].group.presentation();
        s.exact = exact_at(in, out);
        balance += (k % 2 == 0 ? 1 : -1) * static_cast<long>(s.value.free_rank);
        r.slots.push_back(std::move(s));
    }
    r.rank_balanced = balance == 0;
    return r;
}

} // namespace

ExactnessReport long_exact_sequence(const ChainMap& f)
{
    if (f.grading() != Grading::chain)
        throw ValidationError("long_exact_sequence expects a chain map");
    const auto& x = f.source();
    const auto& y = f.target();
    const ConeComplex cone(f);
    const auto& c = cone.complex();
    const int hi = std::max({range_hi(x) + 1, range_hi(y), range_hi(c)});
    const int lo = std::min({range_lo(x) + 1, range_lo(y), range_lo(c)});

    std::vector<Node> nodes;
    std::vector<GroupHom> maps;
    for (int n = hi; n >= lo; --n) {
        // H_n(Y) -> H_n(f) -> H_{n-1}(X) -> (next) H_{n-1}(Y)
        nodes.push_back({"H_" + std::to_string(n) + "(Y)", n, homology_basis(y, n)});
        nodes.push_back({"H_" + std::to_string(n) + "(f)", n, homology_basis(c, n)});
        nodes.push_back({"H_" + std::to_string(n - 1) + "(X)", n - 1, homology_basis(x, n - 1)});
    }
    for (std::size_t k = 0; k + 1 < nodes.size(); ++k) {
        const Node& a = nodes[k];
        const Node& b = nodes[k + 1];
        const int n = a.degree;
        switch (k % 3) {
        case 0: // η ↦ (0, η)
            maps.push_back(induced_hom(a.group, b.group, [&](const IntegerVector& v) {
                return cone.join(n, IntegerVector(cone.first_dim(n)), v);
            }));
            break;
        case 1: // (θ, η) ↦ θ
            maps.push_back(induced_hom(a.group, b.group, [&](const IntegerVector& v) { return cone.first(n, v); }));
            break;
        default: // f_*
            maps.push_back(induced_hom(a.group, b.group, [&](const IntegerVector& v) { return f.apply(n, v); }));
            break;
        }
    }
    return check_sequence(nodes, maps);
}

Subquotient kernel_homology_basis(const ChainMap& f, int n)
{
    const auto& x = f.source();
    const IntegerMatrix z = integer_kernel_basis(vstack(x.differential(n), f.component(n)));
    const IntegerMatrix b = x.incoming(n) * integer_kernel_basis(f.component(n + 1));
    return Subquotient(x.dim(n), z, b);
}

Subquotient cokernel_homology_basis(const ChainMap& f, int n)
{
    const auto& y = f.target();
    const IntegerMatrix k = integer_kernel_basis(hstack(y.differential(n), -f.component(n - 1)));
    const IntegerMatrix z = k.block(0, 0, y.dim(n), k.cols());
    const IntegerMatrix b = hstack(y.incoming(n), f.component(n));
    return Subquotient(y.dim(n), z, b);
}

KerCokerReport ker_coker_sequence(const ChainMap& f)
{
    if (f.grading() != Grading::chain)
        throw ValidationError("ker_coker_sequence expects a chain map");
    const auto& x = f.source();
    const auto& y = f.target();
    const ConeComplex cone(f);
    const auto& c = cone.complex();

    KerCokerReport r;
    r.injective = f.is_injective();
    r.surjective = f.is_surjective();

    const int hi = std::max({range_hi(x) + 1, range_hi(y), range_hi(c)});
    const int lo = std::min({range_lo(x) + 1, range_lo(y), range_lo(c)});

    std::vector<Node> nodes;
    for (int n = hi; n >= lo; --n) {
        // H_{n-1}(ker) -> H_n(f) -> H_n(coker) -> (next) H_{n-2}(ker)
        nodes.push_back({"H_" + std::to_string(n - 1) + "(ker f)", n - 1, kernel_homology_basis(f, n - 1)});
        nodes.push_back({"H_" + std::to_string(n) + "(f)", n, homology_basis(c, n)});
        nodes.push_back({"H_" + std::to_string(n) + "(coker f)", n, cokernel_homology_basis(f, n)});
        r.kernel[n - 1] = nodes[nodes.size() - 3].group.presentation();
        r.relative[n] = nodes[nodes.size() - 2].group.presentation();
        r.cokernel[n] = nodes.back().group.presentation();
    }

    std::vector<GroupHom> maps;
    for (std::size_t k = 0; k + 1 < nodes.size(); ++k) {
        const Node& a = nodes[k];
        const Node& b = nodes[k + 1];
        switch (k % 3) {
        case 0: { // θ ↦ (θ, 0)
            const int n = b.degree;
            maps.push_back(induced_hom(a.group, b.group, [&](const IntegerVector& v) {
                return cone.join(n, v, IntegerVector(cone.second_dim(n)));
            }));
            break;
        }
        case 1: { // (θ, η) ↦ η mod f(X)
            const int n = a.degree;
            maps.push_back(induced_hom(a.group, b.group, [&](const IntegerVector& v) { return cone.second(n, v); }));
            break;
        }
        default: { // y ↦ ∂θ where f(θ) = ∂y
            const int n = a.degree;
            const IntegerSolver solver(f.component(n - 1));
            maps.push_back(induced_hom(a.group, b.group, [&](const IntegerVector& v) {
                auto theta = solver.solve(y.differential(n).apply(v));
                if (!theta)
                    throw ComputationError("cokernel cycle whose boundary is not in the image of f");
                return x.differential(n - 1).apply(*theta);
            }));
            break;
        }
        }
    }
    r.sequence = check_sequence(nodes, maps);

    for (const auto& [n, rel] : r.relative) {
        if (r.injective && rel != r.cokernel[n])
            r.special_case_holds = false;
        if (r.surjective && rel != r.kernel[n - 1])
            r.special_case_holds = false;
    }
    return r;
}

} // namespace relcone

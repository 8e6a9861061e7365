#include "relcone/algebra/abelian_group.hpp"

#include <sstream>

#include "relcone/algebra/smith.hpp"

namespace relcone {

AbelianGroupPresentation AbelianGroupPresentation::from_orders(const IntegerVector& orders)
{
    AbelianGroupPresentation g;
    IntegerVector finite;
    for (const auto& o : orders) {
        if (o == 0)
            ++g.free_rank;
        else if (abs(o) != 1)
            finite.push_back(abs(o));
    }
    // Invariant factors of diag(finite) give the canonical divisibility chain.
    for (const auto& d : smith_invariants(IntegerMatrix::diagonal(finite)).factors)
        if (d != 1)
            g.torsion.push_back(d);
    return g;
}

namespace {

std::string render(const AbelianGroupPresentation& g, const char* z, const char* plus)
{
    if (g.is_trivial())
        return "0";
    std::ostringstream os;
    bool first = true;
    if (g.free_rank > 0) {
        os << z;
        if (g.free_rank > 1)
            os << '^' << g.free_rank;
        first = false;
    }
    for (const auto& t : g.torsion) {
        if (!first)
            os << plus;
        os << z << '/' << t.get_str();
        first = false;
    }
    return os.str();
}

} // namespace

std::string AbelianGroupPresentation::to_string() const { return render(*this, "ℤ", " ⊕ "); }
std::string AbelianGroupPresentation::to_ascii() const { return render(*this, "Z", " + "); }

std::ostream& operator<<(std::ostream& os, const AbelianGroupPresentation& g) { return os << g.to_string(); }

AbelianGroupPresentation direct_sum(const AbelianGroupPresentation& a, const AbelianGroupPresentation& b)
{
    IntegerVector orders(a.free_rank + b.free_rank, Integer(0));
    orders.insert(orders.end(), a.torsion.begin(), a.torsion.end());
    orders.insert(orders.end(), b.torsion.begin(), b.torsion.end());
    return AbelianGroupPresentation::from_orders(orders);
}

} // namespace relcone

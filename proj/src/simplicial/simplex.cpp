#include "relcone/simplicial/simplex.hpp"

#include <sstream>

#include "relcone/errors.hpp"

namespace relcone {

std::vector<int> identity_surjection(int n)
{
    std::vector<int> s(static_cast<std::size_t>(n + 1));
    for (int i = 0; i <= n; ++i)
        s[static_cast<std::size_t>(i)] = i;
    return s;
}

bool is_monotone_surjection(const std::vector<int>& s)
{
    if (s.empty() || s.front() != 0)
        return false;
    for (std::size_t i = 1; i < s.size(); ++i)
        if (s[i] != s[i - 1] && s[i] != s[i - 1] + 1)
            return false;
    return true;
}

SimplexRef SimplexRef::nondegenerate(int dim, std::size_t cell) { return {dim, cell, identity_surjection(dim)}; }

SimplexRef SimplexRef::constant(std::size_t vertex, int n)
{
    return {0, vertex, std::vector<int>(static_cast<std::size_t>(n + 1), 0)};
}

SimplexRef SimplexRef::compose(const std::vector<int>& t) const
{
    if (!is_monotone_surjection(t) || t.back() != size())
        throw ValidationError("composition with a map that is not a monotone surjection onto [" +
                              std::to_string(size()) + "]");
    SimplexRef out{dim, cell, {}};
    out.degeneracy.reserve(t.size());
    for (int v : t)
        out.degeneracy.push_back(degeneracy[static_cast<std::size_t>(v)]);
    return out;
}

std::string SimplexRef::to_string() const
{
    std::ostringstream os;
    os << "cell " << cell << " (dim " << dim << ")";
    if (is_degenerate()) {
        os << " via [";
        for (std::size_t i = 0; i < degeneracy.size(); ++i)
            os << (i ? "," : "") << degeneracy[i];
        os << "]";
    }
    return os.str();
}

} // namespace relcone

#pragma once

#include <random>
#include <string>
#include <vector>

#include "relcone/simplicial/builtins.hpp"

namespace relcone::testing {

/// A random closed walk on circle:k with m edges, m >= k.
inline SimplicialMap random_circle_walk(std::mt19937& rng, std::size_t k, std::size_t m)
{
    std::uniform_int_distribution<int> coin(0, 1);
    for (;;) {
        std::vector<int> steps(m);
        long forward = 0;
        for (auto& s : steps)
            forward += s = coin(rng);
        if (forward % static_cast<long>(k) == 0)
            return builtins::circle_walk(k, steps, rng() % k);
    }
}

inline std::vector<std::pair<std::string, SimplicialMap>> simplicial_corpus(unsigned seed, std::size_t random_maps)
{
    std::vector<std::pair<std::string, SimplicialMap>> out;
    const std::vector<std::string> names{
        "deg2-circle-map",   "s0-in-circle",      "vertex-in-disk",    "boundary-in-disk",
        "loop-in-rp2",       "circle-cover:3:3",  "circle-cover:4:2",  "identity:circle:4",
        "identity:disk",     "identity:rp2",      "identity:torus",    "identity:s2",
        "constant:circle:3", "constant:rp2",      "constant:torus",    "constant:s2",
        "constant:s0",       "constant:rp2-6",    "identity:grid:2",   "constant:point"};
    for (const auto& n : names)
        out.emplace_back(n, builtins::map(n));
    std::mt19937 rng(seed);
    for (std::size_t i = 0; i < random_maps; ++i) {
        const std::size_t k = 2 + rng() % 3;
        const std::size_t m = k + rng() % 7;
        out.emplace_back("random-walk-" + std::to_string(i), random_circle_walk(rng, k, m));
    }
    return out;
}

} // namespace relcone::testing

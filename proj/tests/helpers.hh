#ifndef CFFKIT_GUARD_TESTS_HELPERS_HH
#define CFFKIT_GUARD_TESTS_HELPERS_HH 1

#include <cffkit/model.hh>

#include <algorithm>
#include <random>
#include <vector>

namespace cffkit::testing
{
    /// Uniform labelled tree on n >= 2 vertices, decoded from a random Pruefer sequence.
    inline auto random_tree(std::mt19937_64 & rng, std::uint32_t n) -> SimpleGraph
    {
        if (n == 2)
            return path_graph(2);
        std::vector<std::uint32_t> code(n - 2);
        for (auto & c : code)
            c = static_cast<std::uint32_t>(rng() % n);

        std::vector<std::uint32_t> degree(n, 1);
        for (auto c : code)
            ++degree[c];

        std::vector<Edge> edges;
        for (auto c : code) {
            auto leaf = static_cast<std::uint32_t>(std::find(degree.begin(), degree.end(), 1u) - degree.begin());
            edges.emplace_back(leaf, c);
            --degree[leaf];
            --degree[c];
        }
        std::vector<std::uint32_t> rest;
        for (std::uint32_t v = 0 ; v < n ; ++v)
            if (degree[v] == 1)
                rest.push_back(v);
        edges.emplace_back(rest[0], rest[1]);
        return SimpleGraph(n, std::move(edges));
    }
}

#endif

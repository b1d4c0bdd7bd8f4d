/* vim: set sw=4 sts=4 et foldmethod=syntax : */

#include <cffkit/keyring.hh>
#include <cffkit/errors.hh>

#include <algorithm>
#include <numeric>
#include <random>

using std::uint32_t;
using std::uint64_t;
using std::vector;

namespace
{
    auto splitmix64(uint64_t x) -> uint64_t
    {
        x += 0x9e3779b97f4a7c15ULL;
        x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
        x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
        return x ^ (x >> 31);
    }

    auto bounded(std::mt19937_64 & rng, uint64_t n) -> uint64_t
    {
        // rejection keeps the draw uniform and independent of the standard library
        uint64_t limit = UINT64_MAX - UINT64_MAX % n;
        uint64_t x;
        do
            x = rng();
        while (x >= limit);
        return x % n;
    }
}

auto cffkit::derive_keyrings(const GraphCovering & c, bool verify, const VerifyOptions & opts) -> Deployment
{
    if (verify) {
        auto report = verify_covering(c, opts);
        if (! report.ok)
            throw UsageError("covering fails verification: " + report.witness.dump());
    }

    Deployment dep{ c.graph(), vector<Subset>(c.graph().n_vertices()), c.size(), c.w(), c.d() };
    for (uint32_t j = 0 ; j < c.size() ; ++j)
        for (auto v : c.sets()[j])
            dep.keyrings[v].push_back(j);

    if (! dep.keyrings.empty()) {
        dep.min_ring = UINT64_MAX;
        uint64_t total = 0;
        for (auto & k : dep.keyrings) {
            dep.min_ring = std::min<uint64_t>(dep.min_ring, k.size());
            dep.max_ring = std::max<uint64_t>(dep.max_ring, k.size());
            total += k.size();
        }
        dep.mean_ring = static_cast<double>(total) / dep.keyrings.size();
    }
    return dep;
}

auto cffkit::to_json(const Deployment & dep) -> Json
{
    Json j;
    j["n_keys"] = dep.n_keys;
    j["w"] = dep.w;
    j["d"] = dep.d;
    j["keyrings"] = dep.keyrings;
    j["ring_sizes"] = Json{ { "min", dep.min_ring }, { "max", dep.max_ring }, { "mean", dep.mean_ring } };
    return j;
}

auto cffkit::link_secure_keys(const Deployment & dep, Edge edge, const Subset & coalition) -> Subset
{
    auto [u, v] = edge;
    if (u >= dep.graph.n_vertices() || v >= dep.graph.n_vertices() || ! dep.graph.adjacent(u, v))
        throw UsageError("link_secure_keys: not an edge of the scheme graph");

    vector<bool> lost(dep.n_keys, false);
    for (auto x : coalition) {
        if (x == u || x == v)
            throw UsageError("link_secure_keys: coalition overlaps the edge");
        if (x >= dep.graph.n_vertices())
            throw UsageError("link_secure_keys: coalition vertex out of range");
        for (auto j : dep.keyrings[x])
            lost[j] = true;
    }

    Subset shared;
    std::set_intersection(dep.keyrings[u].begin(), dep.keyrings[u].end(), dep.keyrings[v].begin(), dep.keyrings[v].end(),
            std::back_inserter(shared));
    std::erase_if(shared, [&] (uint32_t j) { return lost[j]; });
    return shared;
}

auto cffkit::resilience_mc(const Deployment & dep, uint32_t coalition_size, uint64_t trials, uint64_t seed)
    -> ResilienceSummary
{
    auto n = dep.graph.n_vertices();
    auto & edges = dep.graph.edges();
    if (edges.empty())
        throw UsageError("resilience_mc needs a graph with at least one edge");
    if (coalition_size + 2 > n)
        throw UsageError("resilience_mc needs coalition_size <= n_vertices - 2");
    if (trials < 1)
        throw UsageError("resilience_mc needs trials >= 1");

    ResilienceSummary summary{ 0.0, 0, trials, coalition_size, seed };
    vector<uint32_t> pool;
    for (uint64_t trial = 0 ; trial < trials ; ++trial) {
        std::mt19937_64 rng(splitmix64(seed ^ splitmix64(trial)));
        auto edge = edges[bounded(rng, edges.size())];

        pool.clear();
        for (uint32_t x = 0 ; x < n ; ++x)
            if (x != edge.first && x != edge.second)
                pool.push_back(x);
        for (uint32_t i = 0 ; i < coalition_size ; ++i)
            std::swap(pool[i], pool[i + bounded(rng, pool.size() - i)]);
        Subset coalition(pool.begin(), pool.begin() + coalition_size);
        std::sort(coalition.begin(), coalition.end());

        if (link_secure_keys(dep, edge, coalition).size() < dep.d)
            ++summary.compromised;
    }
    summary.compromised_fraction = static_cast<double>(summary.compromised) / static_cast<double>(trials);
    return summary;
}

auto cffkit::to_json(const ResilienceSummary & s) -> Json
{
    Json j;
    j["compromised_fraction"] = s.compromised_fraction;
    j["trials"] = s.trials;
    j["coalition_size"] = s.coalition_size;
    j["seed"] = s.seed;
    return j;
}

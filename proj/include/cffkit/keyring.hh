/* vim: set sw=4 sts=4 et foldmethod=syntax : */

#ifndef CFFKIT_GUARD_KEYRING_HH
#define CFFKIT_GUARD_KEYRING_HH 1

#include <cffkit/io.hh>
#include <cffkit/model.hh>
#include <cffkit/verifier.hh>

#include <cstdint>

namespace cffkit
{
    /// Key j goes to every vertex of set A_j.
    struct Deployment
    {
        SimpleGraph graph;
        std::vector<Subset> keyrings;
        std::uint32_t n_keys = 0;
        std::uint32_t w = 1;
        std::uint32_t d = 1;

        std::uint64_t min_ring = 0;
        std::uint64_t max_ring = 0;
        double mean_ring = 0.0;
    };

    /// Throws UsageError if verify is set and c fails verification.
    auto derive_keyrings(const GraphCovering & c, bool verify = true, const VerifyOptions & opts = { }) -> Deployment;

    auto to_json(const Deployment & dep) -> Json;

    /// Keys shared by the edge's endpoints and held by no coalition member.
    auto link_secure_keys(const Deployment & dep, Edge edge, const Subset & coalition) -> Subset;

    struct ResilienceSummary
    {
        double compromised_fraction = 0.0;
        std::uint64_t compromised = 0;
        std::uint64_t trials = 0;
        std::uint32_t coalition_size = 0;
        std::uint64_t seed = 0;
    };

    /**
     * Each trial draws a uniform edge and a uniform coalition of the given
     * size avoiding it, from a generator seeded by (seed, trial); it counts
     * as compromised if fewer than d secure keys remain.
     */
    auto resilience_mc(const Deployment & dep, std::uint32_t coalition_size, std::uint64_t trials, std::uint64_t seed)
        -> ResilienceSummary;

    auto to_json(const ResilienceSummary & s) -> Json;
}

#endif

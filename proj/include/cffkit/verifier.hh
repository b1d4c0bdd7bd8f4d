/* vim: set sw=4 sts=4 et foldmethod=syntax : */

#ifndef CFFKIT_GUARD_VERIFIER_HH
#define CFFKIT_GUARD_VERIFIER_HH 1

#include <cffkit/io.hh>
#include <cffkit/model.hh>

#include <cstdint>
#include <optional>

namespace cffkit
{
    /// Caps for exhaustive checks; force skips them.
    inline constexpr std::uint64_t max_cff_pairs = 100'000'000;
    inline constexpr std::uint64_t max_host_edges = 10'000'000;

    struct VerifyOptions
    {
        bool force = false;
        unsigned threads = 1;
    };

    /**
     * Outcome of an exhaustive check. achieved_d is nullopt when there is
     * nothing to check (no (L, M) pair, no (edge, W) pair, no host edge), in
     * which case the property holds vacuously. The witness is the first
     * violation in enumeration order, and is null iff ok.
     */
    struct VerifyReport
    {
        bool ok = true;
        std::optional<std::uint64_t> achieved_d;
        std::optional<std::uint64_t> max_d;
        Json witness = nullptr;
        std::uint64_t pairs_checked = 0;
        /// Biclique checks only: every host edge covered exactly d times.
        std::optional<bool> partition;
        /// Biclique checks only: some member is not a biclique of the host.
        bool structural_failure = false;
    };

    auto to_json(const VerifyReport & r) -> Json;

    auto verify_cff(const SetSystem & s, const CffParams & p, const VerifyOptions & opts = { }) -> VerifyReport;

    /// Largest d for which s is an (r,w;d)-CFF; nullopt means unbounded (vacuous).
    auto achieved_d(const SetSystem & s, std::uint32_t r, std::uint32_t w, const VerifyOptions & opts = { })
        -> std::optional<std::uint64_t>;

    auto verify_covering(const GraphCovering & c, const VerifyOptions & opts = { }) -> VerifyReport;

    /// Verifies at c.w() and the given d instead of c.d().
    auto verify_covering_at(const GraphCovering & c, std::uint32_t w, std::uint32_t d,
            const VerifyOptions & opts = { }) -> VerifyReport;

    auto verify_biclique_cover(const BicliqueCover & bc, const VerifyOptions & opts = { }) -> VerifyReport;
}

#endif

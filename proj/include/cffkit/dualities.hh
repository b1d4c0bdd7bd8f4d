/* vim: set sw=4 sts=4 et foldmethod=syntax : */

#ifndef CFFKIT_GUARD_DUALITIES_HH
#define CFFKIT_GUARD_DUALITIES_HH 1

#include <cffkit/io.hh>
#include <cffkit/model.hh>
#include <cffkit/verifier.hh>

#include <cstdint>

namespace cffkit
{
    /**
     * One biclique of I_t(r,w) per point x: r-subsets of the blocks holding x
     * against w-subsets of the rest. Declared d is the achieved d.
     */
    auto cff_to_biclique_cover(const SetSystem & s, std::uint32_t r, std::uint32_t w, const VerifyOptions & opts = { })
        -> BicliqueCover;

    /// One point per biclique; block i holds j iff i lies in a left subset of biclique j.
    auto biclique_cover_to_cff(const BicliqueCover & bc, const VerifyOptions & opts = { }) -> SetSystem;

    /// C(2t,t)/2 bicliques of KG(2t,k), one per complementary pair of t-subsets.
    auto kneser_cover(std::uint32_t t, std::uint32_t k, bool force = false) -> BicliqueCover;

    /// Both orientations of every Kneser biclique, as a cover of I_{2t}(k,k).
    auto kneser_to_bi_intersection(const BicliqueCover & kneser) -> BicliqueCover;

    auto build_H(const SimpleGraph & g, std::uint32_t w) -> HostGraphSpec;

    /// Set A_j becomes (edges inside A_j) x (w-subsets outside A_j).
    auto covering_to_biclique_cover_H(const GraphCovering & c) -> BicliqueCover;

    /// Set i is the union of the endpoints of the left side of biclique i.
    auto biclique_cover_H_to_covering(const BicliqueCover & bc, const VerifyOptions & opts = { }) -> GraphCovering;

    struct OneWCff
    {
        SetSystem system;
        bool certificate_ok = true;
        Json witness = nullptr;
        std::uint64_t checks = 0;
    };

    /**
     * Key-intersection system: one block per edge, holding the sets that
     * contain both endpoints. The certificate checks that for every edge e
     * and w-subset W avoiding e, at least d points of block(e) lie in no block
     * of an edge meeting W.
     */
    auto covering_to_1w_cff(const GraphCovering & c, const VerifyOptions & opts = { }) -> OneWCff;

    auto to_json(const OneWCff & o) -> Json;
}

#endif

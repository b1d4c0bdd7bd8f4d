/* vim: set sw=4 sts=4 et foldmethod=syntax : */

#ifndef CFFKIT_GUARD_CONSTRUCTIONS_HH
#define CFFKIT_GUARD_CONSTRUCTIONS_HH 1

#include <cffkit/model.hh>

#include <cstdint>
#include <utility>
#include <vector>

namespace cffkit
{
    inline constexpr std::uint64_t max_construction_points = 1'000'000;

    /// Smallest c with C(c, floor(c/2)) >= t.
    auto sperner_number(std::uint64_t t) -> std::uint32_t;

    /// Antichain of the first t floor(R/2)-subsets of [R(t)] in colex order.
    auto sperner_cff(std::uint32_t t) -> SetSystem;

    /// d disjoint copies of the ground set; point x of copy c is c * n + x.
    auto replicate(const SetSystem & s, std::uint32_t d) -> SetSystem;

    /// Points are the k-subsets of [t] in colex order; block i holds the
    /// subsets containing i. subset_design(t, 2) is the pair design.
    auto subset_design(std::uint32_t t, std::uint32_t k, bool force = false) -> SetSystem;

    /**
     * 2t blocks on C(2t,t) points, one per t-subset of [2t]. Every disjoint
     * (L, M) with |L| = |M| = k leaves exactly C(2t-2k, t-k) points, which
     * is optimal. k only fixes the parameters the result is meant for.
     */
    auto optimal_kk(std::uint32_t t, std::uint32_t k, bool force = false) -> SetSystem;

    enum class DoublingMode
    {
        Paper,  ///< one extra point on each side: n1 + n2 + 2
        Safe    ///< d extra points on each side: n1 + n2 + 2d
    };

    struct DoublingOptions
    {
        /// Check the ingredient properties first, throwing UsageError.
        bool pre_verify = true;
        bool force = false;
    };

    /**
     * From a (2,1;d)-CFF(n1,t) and a (1,1;d)-CFF(n2,t), builds a family with
     * 2t blocks D_0..D_{t-1}, D_t..D_{2t-1}. Points of s1 go into D_j and
     * D_{j+t} when in B_j; points of s2 go into D_j when in C_j and into
     * D_{j+t} otherwise. Extra points q (in every unprimed block) come first,
     * then p (in every primed block).
     */
    auto double_21(const SetSystem & s1, const SetSystem & s2, std::uint32_t d, DoublingMode mode,
            const DoublingOptions & opts = { }) -> SetSystem;

    /**
     * From a (2,2;d)-CFF(n1,t) and a (2,1;d)-CFF(n2,t): s1 points doubled as
     * in double_21, each s2 point y in two mirrored copies (copy A follows
     * C_j on the unprimed side, copy B follows its complement), then q and p.
     */
    auto double_22(const SetSystem & s1, const SetSystem & s2, std::uint32_t d, DoublingMode mode,
            const DoublingOptions & opts = { }) -> SetSystem;

    using VertexSplit = std::pair<Subset, Subset>;

    /// ceil(log2 t) bipartitions of [t] by binary digit; every pair of
    /// distinct vertices is separated by at least one.
    auto ks_split_cover(std::uint32_t t) -> std::vector<VertexSplit>;

    /**
     * Glues coverings of subgraphs of K_t (each on vertex set [t]) whose
     * edges together cover K_t into a (2,w;d)-CFF. Points are the pieces'
     * sets in order; block u holds the sets containing u.
     */
    auto compose_complete_cover(const std::vector<GraphCovering> & pieces, std::uint32_t t) -> SetSystem;

    /// Bipartite coverings over ks_split_cover(t), relabelled onto [t].
    auto ks_pieces(std::uint32_t t, std::uint32_t d = 1) -> std::vector<GraphCovering>;

    /// compose_complete_cover(ks_pieces(t), t): a (2,1;1)-CFF with at most
    /// 2 R(t/2) ceil(log2 t) points when t is a power of two.
    auto ks_compose(std::uint32_t t) -> SetSystem;
}

#endif

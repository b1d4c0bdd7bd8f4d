/* vim: set sw=4 sts=4 et foldmethod=syntax : */

#ifndef CFFKIT_GUARD_COVERINGS_HH
#define CFFKIT_GUARD_COVERINGS_HH 1

#include <cffkit/model.hh>
#include <cffkit/verifier.hh>

#include <cstdint>
#include <optional>
#include <vector>

namespace cffkit
{
    /// Constructions check their own output unless told otherwise, throwing
    /// std::logic_error if it ever fails to verify.
    struct CoveringOptions
    {
        bool verify = true;
        VerifyOptions verify_options = { };
    };

    /**
     * Covering of the star K_{1,t} (leaves 0..t-1, centre t): one set per
     * point of a (1,w;d)-CFF on the leaves, plus the centre. The ingredient
     * is built for w <= 1; for w >= 2 use the overload.
     */
    auto star_covering(std::uint32_t t, std::uint32_t w, std::uint32_t d, const CoveringOptions & opts = { })
        -> GraphCovering;
    auto star_covering(const SetSystem & ingredient, std::uint32_t w, std::uint32_t d,
            const CoveringOptions & opts = { }) -> GraphCovering;

    /// (1,d)-covering of K_{t1,t2} of size d R(t1) + d R(t2).
    auto bipartite_covering(std::uint32_t t1, std::uint32_t t2, std::uint32_t d, const CoveringOptions & opts = { })
        -> GraphCovering;

    /// Covering of P_n by recursive halving, at most 2 ceil(log2(n-1)) sets.
    auto path_covering(std::uint32_t n_vertices, const CoveringOptions & opts = { }) -> GraphCovering;

    /// path_covering plus the closing-edge set {0, n-1}.
    auto cycle_covering(std::uint32_t n, const CoveringOptions & opts = { }) -> GraphCovering;

    /// A subgraph on a shared vertex universe: its vertex set and edges.
    struct GraphPart
    {
        Subset vertices;
        std::vector<Edge> edges;
    };

    /// Injective adjacency-preserving map from parts[j].vertices (same order)
    /// into parts[0].vertices.
    using Embedding = std::vector<std::uint32_t>;

    /**
     * Covering of the union of parts from a covering of parts[0]:
     * C_i = A_i plus every vertex of another part mapped into A_i, followed
     * by the full vertex set of each part. base.graph() must have
     * n_vertices equal to the shared universe size.
     */
    auto union_covering(std::uint32_t n_vertices, const std::vector<GraphPart> & parts,
            const std::vector<Embedding> & embeddings, const GraphCovering & base,
            const CoveringOptions & opts = { }) -> GraphCovering;

    /// Per-tree breakdown of tree_covering's size.
    struct TreeCoveringStats
    {
        std::uint32_t m = 0;              ///< edges
        std::uint32_t max_degree = 0;
        std::uint32_t branch_vertices = 0; ///< vertices of degree >= 3
        std::uint32_t path_sets = 0;
        std::uint32_t code_sets = 0;
        std::uint32_t neighbourhood_sets = 0; ///< one per branch vertex at most
        std::uint32_t extra_sets = 0;     ///< leftover edges between branch vertices
        std::uint64_t bound = 0;          ///< 2 ceil(log2 m) + R(Delta) + t
    };

    /**
     * Covering of a tree: halving sets over a linear forest holding every
     * edge between vertices of degree <= 2, one set per branch vertex, R(Delta)
     * antichain code sets for the stars of branch vertices, and a two-element
     * set for any edge between branch vertices left over. Several edge
     * placements are tried and the smallest result is kept.
     */
    auto tree_covering(const SimpleGraph & tree, const CoveringOptions & opts = { },
            TreeCoveringStats * stats = nullptr) -> GraphCovering;

    /// Maps vertex v of c's graph to map[v] in a graph on n vertices; sets
    /// and edges are carried along.
    auto relabel(const GraphCovering & c, const std::vector<std::uint32_t> & map, std::uint32_t n) -> GraphCovering;

    /// Covering of G [] H from coverings of G and H, both of minimum degree >= 2.
    auto product_covering(const GraphCovering & a, const GraphCovering & b, const CoveringOptions & opts = { })
        -> GraphCovering;

    /// product_covering of two cycle coverings, restricted to the grid P_t1 [] P_t2.
    auto grid_covering(std::uint32_t t1, std::uint32_t t2, const CoveringOptions & opts = { }) -> GraphCovering;

    struct LllParams
    {
        double p = 0;
        double q = 0;
        std::uint64_t dependency = 0;  ///< D
        std::uint64_t rows = 0;        ///< N
        std::uint64_t seed = 0;
        std::uint64_t max_attempts = 0;
        std::uint64_t attempts = 0;
    };

    auto to_json(const LllParams & p) -> Json;

    /// q, D and N of the local-lemma bound; p defaults to 2/(w+2).
    auto lll_size(const SimpleGraph & g, std::uint32_t w, std::optional<double> p = std::nullopt) -> LllParams;

    struct LllResult
    {
        GraphCovering covering;
        LllParams params;
    };

    /// Samples N x t Bernoulli(p) matrices until the rows form a (w,1)-covering.
    auto lll_covering(const SimpleGraph & g, std::uint32_t w, std::optional<double> p, std::uint64_t seed,
            std::uint64_t max_attempts = 1000, const VerifyOptions & vopts = { }) -> LllResult;
}

#endif

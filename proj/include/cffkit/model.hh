/* vim: set sw=4 sts=4 et foldmethod=syntax : */

#ifndef CFFKIT_GUARD_MODEL_HH
#define CFFKIT_GUARD_MODEL_HH 1

#include <cffkit/bitset.hh>
#include <cffkit/subsets.hh>

#include <cstdint>
#include <optional>
#include <utility>
#include <variant>
#include <vector>

namespace cffkit
{
    using Block = Subset;

    /**
     * A ground set of points 0..n-1 and an ordered list of blocks. Block i is
     * the key ring of user i. Blocks are stored sorted and duplicate-free;
     * they may repeat and may be empty.
     */
    class SetSystem
    {
        private:
            std::uint32_t _n_points = 0;
            std::vector<Block> _blocks;

        public:
            SetSystem() = default;
            SetSystem(std::uint32_t n_points, std::vector<Block> blocks);

            auto n_points() const -> std::uint32_t { return _n_points; }
            auto t() const -> std::uint32_t { return static_cast<std::uint32_t>(_blocks.size()); }
            auto blocks() const -> const std::vector<Block> & { return _blocks; }
            auto block(std::uint32_t i) const -> const Block & { return _blocks.at(i); }

            auto block_bits() const -> std::vector<Bitset>;

            /// Users holding point x, i.e. {i : x in B_i}.
            auto holders(std::uint32_t x) const -> Subset;

            auto operator== (const SetSystem &) const -> bool = default;
    };

    struct CffParams
    {
        std::uint32_t r = 1;
        std::uint32_t w = 1;
        std::uint32_t d = 1;
    };

    using Edge = std::pair<std::uint32_t, std::uint32_t>;

    /// Undirected simple graph. Edges are normalised to u < v and sorted.
    class SimpleGraph
    {
        private:
            std::uint32_t _n_vertices = 0;
            std::vector<Edge> _edges;
            std::vector<std::vector<std::uint32_t>> _adj;

        public:
            SimpleGraph() = default;
            SimpleGraph(std::uint32_t n_vertices, std::vector<Edge> edges);

            auto n_vertices() const -> std::uint32_t { return _n_vertices; }
            auto edges() const -> const std::vector<Edge> & { return _edges; }
            auto n_edges() const -> std::uint32_t { return static_cast<std::uint32_t>(_edges.size()); }
            auto neighbours(std::uint32_t v) const -> const std::vector<std::uint32_t> & { return _adj.at(v); }
            auto degree(std::uint32_t v) const -> std::uint32_t { return static_cast<std::uint32_t>(_adj.at(v).size()); }
            auto adjacent(std::uint32_t u, std::uint32_t v) const -> bool;
            auto max_degree() const -> std::uint32_t;
            auto min_degree() const -> std::uint32_t;

            /// Index of edge {u, v} in edges(), if present.
            auto edge_index(std::uint32_t u, std::uint32_t v) const -> std::optional<std::uint32_t>;

            auto operator== (const SimpleGraph & o) const -> bool
            {
                return _n_vertices == o._n_vertices && _edges == o._edges;
            }
    };

    auto path_graph(std::uint32_t n) -> SimpleGraph;
    auto cycle_graph(std::uint32_t n) -> SimpleGraph;
    auto complete_graph(std::uint32_t n) -> SimpleGraph;
    /// K_{t1,t2} with parts 0..t1-1 and t1..t1+t2-1.
    auto complete_bipartite_graph(std::uint32_t t1, std::uint32_t t2) -> SimpleGraph;
    /// Star with leaves 0..t-1 and centre t.
    auto star_graph(std::uint32_t t) -> SimpleGraph;
    /// Cartesian product; vertex (g, h) is g * |V(h)| + h.
    auto cartesian_product(const SimpleGraph & g, const SimpleGraph & h) -> SimpleGraph;
    auto grid_graph(std::uint32_t t1, std::uint32_t t2) -> SimpleGraph;

    /// Candidate (w,d)-covering: vertex subsets of a graph.
    class GraphCovering
    {
        private:
            SimpleGraph _graph;
            std::vector<Subset> _sets;
            std::uint32_t _w = 1;
            std::uint32_t _d = 1;

        public:
            GraphCovering() = default;
            GraphCovering(SimpleGraph graph, std::vector<Subset> sets, std::uint32_t w, std::uint32_t d);

            auto graph() const -> const SimpleGraph & { return _graph; }
            auto sets() const -> const std::vector<Subset> & { return _sets; }
            auto w() const -> std::uint32_t { return _w; }
            auto d() const -> std::uint32_t { return _d; }
            auto size() const -> std::uint32_t { return static_cast<std::uint32_t>(_sets.size()); }

            /// Per vertex, the bit set of set indices containing it.
            auto membership_bits() const -> std::vector<Bitset>;

            auto operator== (const GraphCovering &) const -> bool = default;
    };

    /// I_t(r, w): r-subsets vs w-subsets of [t], adjacent iff disjoint.
    struct BiIntersectionHost
    {
        std::uint32_t t, r, w;
        auto operator== (const BiIntersectionHost &) const -> bool = default;
    };

    /// KG(t, k): k-subsets of [t], adjacent iff disjoint.
    struct KneserHost
    {
        std::uint32_t t, k;
        auto operator== (const KneserHost &) const -> bool = default;
    };

    /// Bipartite host given by its edge list.
    struct ExplicitHost
    {
        std::uint32_t n_left, n_right;
        std::vector<Edge> edges; // (left, right), sorted, duplicate-free
        auto operator== (const ExplicitHost &) const -> bool = default;
    };

    /// Edges of a graph vs w-subsets of its vertices, adjacent iff disjoint.
    struct DerivedHost
    {
        SimpleGraph graph;
        std::uint32_t w;
        auto operator== (const DerivedHost &) const -> bool = default;
    };

    using HostGraphSpec = std::variant<BiIntersectionHost, KneserHost, ExplicitHost, DerivedHost>;

    auto make_explicit_host(std::uint32_t n_left, std::uint32_t n_right, std::vector<Edge> edges) -> ExplicitHost;

    /// Checks parameter ranges, throwing UsageError.
    auto validate_host(const HostGraphSpec & host) -> void;

    /**
     * Host vertex ids. Subset vertices (both sides of bi-intersection and
     * Kneser hosts, the right side of derived hosts) are colex ranks; the left
     * side of a derived host indexes graph().edges(); explicit hosts use plain
     * indices.
     */
    struct Biclique
    {
        std::vector<std::uint64_t> left;
        std::vector<std::uint64_t> right;
        auto operator== (const Biclique &) const -> bool = default;
    };

    /// A list of bicliques of a host with target multiplicity d; nullopt d
    /// means "unbounded", used for hosts without edges.
    struct BicliqueCover
    {
        HostGraphSpec host;
        std::optional<std::uint64_t> d;
        std::vector<Biclique> bicliques;
        auto operator== (const BicliqueCover &) const -> bool = default;
    };

    auto host_left_count(const HostGraphSpec & host) -> std::uint64_t;
    auto host_right_count(const HostGraphSpec & host) -> std::uint64_t;
    auto host_edge_count(const HostGraphSpec & host) -> std::uint64_t;
    auto host_adjacent(const HostGraphSpec & host, std::uint64_t left, std::uint64_t right) -> bool;
    auto host_is_symmetric(const HostGraphSpec & host) -> bool;
}

#endif

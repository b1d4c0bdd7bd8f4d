/* vim: set sw=4 sts=4 et foldmethod=syntax : */

#include <cffkit/model.hh>
#include <cffkit/errors.hh>

#include <algorithm>
#include <string>

using std::to_string;
using std::uint32_t;
using std::uint64_t;
using std::vector;

namespace
{
    auto normalise(cffkit::Subset & s) -> void
    {
        std::sort(s.begin(), s.end());
        s.erase(std::unique(s.begin(), s.end()), s.end());
    }

    auto edge_str(uint32_t u, uint32_t v) -> std::string
    {
        return "{" + to_string(u) + "," + to_string(v) + "}";
    }
}

cffkit::SetSystem::SetSystem(uint32_t n_points, vector<Block> blocks) :
    _n_points(n_points),
    _blocks(std::move(blocks))
{
    if (_blocks.empty())
        throw UsageError("a set system needs at least one block");
    for (auto & b : _blocks) {
        normalise(b);
        if (! b.empty() && b.back() >= _n_points)
            throw UsageError("point " + to_string(b.back()) + " out of range for " + to_string(_n_points) + " points");
    }
}

auto cffkit::SetSystem::block_bits() const -> vector<Bitset>
{
    vector<Bitset> result;
    result.reserve(_blocks.size());
    for (auto & b : _blocks) {
        Bitset bits(_n_points);
        for (auto x : b)
            bits.set(x);
        result.push_back(std::move(bits));
    }
    return result;
}

auto cffkit::SetSystem::holders(uint32_t x) const -> Subset
{
    Subset result;
    for (uint32_t i = 0 ; i < t() ; ++i)
        if (std::binary_search(_blocks[i].begin(), _blocks[i].end(), x))
            result.push_back(i);
    return result;
}

cffkit::SimpleGraph::SimpleGraph(uint32_t n_vertices, vector<Edge> edges) :
    _n_vertices(n_vertices),
    _edges(std::move(edges)),
    _adj(n_vertices)
{
    for (auto & [u, v] : _edges) {
        if (u == v)
            throw UsageError("loop at vertex " + to_string(u));
        if (u >= _n_vertices || v >= _n_vertices)
            throw UsageError("edge " + edge_str(u, v) + " out of range for " + to_string(_n_vertices) + " vertices");
        if (u > v)
            std::swap(u, v);
    }
    std::sort(_edges.begin(), _edges.end());
    auto dup = std::adjacent_find(_edges.begin(), _edges.end());
    if (dup != _edges.end())
        throw UsageError("duplicate edge " + edge_str(dup->first, dup->second));

    for (auto & [u, v] : _edges) {
        _adj[u].push_back(v);
        _adj[v].push_back(u);
    }
    for (auto & a : _adj)
        std::sort(a.begin(), a.end());
}

auto cffkit::SimpleGraph::adjacent(uint32_t u, uint32_t v) const -> bool
{
    if (u >= _n_vertices || v >= _n_vertices)
        return false;
    return std::binary_search(_adj[u].begin(), _adj[u].end(), v);
}

auto cffkit::SimpleGraph::max_degree() const -> uint32_t
{
    uint32_t result = 0;
    for (auto & a : _adj)
        result = std::max<uint32_t>(result, a.size());
    return result;
}

auto cffkit::SimpleGraph::min_degree() const -> uint32_t
{
    if (_adj.empty())
        return 0;
    uint32_t result = _n_vertices;
    for (auto & a : _adj)
        result = std::min<uint32_t>(result, a.size());
    return result;
}

auto cffkit::SimpleGraph::edge_index(uint32_t u, uint32_t v) const -> std::optional<uint32_t>
{
    if (u > v)
        std::swap(u, v);
    auto it = std::lower_bound(_edges.begin(), _edges.end(), Edge{ u, v });
    if (it == _edges.end() || *it != Edge{ u, v })
        return std::nullopt;
    return static_cast<uint32_t>(it - _edges.begin());
}

auto cffkit::path_graph(uint32_t n) -> SimpleGraph
{
    vector<Edge> edges;
    for (uint32_t i = 0 ; i + 1 < n ; ++i)
        edges.emplace_back(i, i + 1);
    return SimpleGraph(n, std::move(edges));
}

auto cffkit::cycle_graph(uint32_t n) -> SimpleGraph
{
    if (n < 3)
        throw UsageError("a cycle needs at least 3 vertices");
    vector<Edge> edges;
    for (uint32_t i = 0 ; i + 1 < n ; ++i)
        edges.emplace_back(i, i + 1);
    edges.emplace_back(0, n - 1);
    return SimpleGraph(n, std::move(edges));
}

auto cffkit::complete_graph(uint32_t n) -> SimpleGraph
{
    vector<Edge> edges;
    for (uint32_t i = 0 ; i < n ; ++i)
        for (uint32_t j = i + 1 ; j < n ; ++j)
            edges.emplace_back(i, j);
    return SimpleGraph(n, std::move(edges));
}

auto cffkit::complete_bipartite_graph(uint32_t t1, uint32_t t2) -> SimpleGraph
{
    vector<Edge> edges;
    for (uint32_t i = 0 ; i < t1 ; ++i)
        for (uint32_t j = 0 ; j < t2 ; ++j)
            edges.emplace_back(i, t1 + j);
    return SimpleGraph(t1 + t2, std::move(edges));
}

auto cffkit::star_graph(uint32_t t) -> SimpleGraph
{
    vector<Edge> edges;
    for (uint32_t i = 0 ; i < t ; ++i)
        edges.emplace_back(i, t);
    return SimpleGraph(t + 1, std::move(edges));
}

auto cffkit::cartesian_product(const SimpleGraph & g, const SimpleGraph & h) -> SimpleGraph
{
    uint32_t nh = h.n_vertices();
    vector<Edge> edges;
    for (auto [u, v] : g.edges())
        for (uint32_t y = 0 ; y < nh ; ++y)
            edges.emplace_back(u * nh + y, v * nh + y);
    for (uint32_t x = 0 ; x < g.n_vertices() ; ++x)
        for (auto [u, v] : h.edges())
            edges.emplace_back(x * nh + u, x * nh + v);
    return SimpleGraph(g.n_vertices() * nh, std::move(edges));
}

auto cffkit::grid_graph(uint32_t t1, uint32_t t2) -> SimpleGraph
{
    return cartesian_product(path_graph(t1), path_graph(t2));
}

cffkit::GraphCovering::GraphCovering(SimpleGraph graph, vector<Subset> sets, uint32_t w, uint32_t d) :
    _graph(std::move(graph)),
    _sets(std::move(sets)),
    _w(w),
    _d(d)
{
    for (auto & s : _sets) {
        normalise(s);
        if (! s.empty() && s.back() >= _graph.n_vertices())
            throw UsageError("set member " + to_string(s.back()) + " out of range for "
                    + to_string(_graph.n_vertices()) + " vertices");
    }
}

auto cffkit::GraphCovering::membership_bits() const -> vector<Bitset>
{
    vector<Bitset> result(_graph.n_vertices(), Bitset(_sets.size()));
    for (std::size_t j = 0 ; j < _sets.size() ; ++j)
        for (auto v : _sets[j])
            result[v].set(j);
    return result;
}

auto cffkit::make_explicit_host(uint32_t n_left, uint32_t n_right, vector<Edge> edges) -> ExplicitHost
{
    for (auto & [l, r] : edges)
        if (l >= n_left || r >= n_right)
            throw UsageError("explicit host edge (" + to_string(l) + "," + to_string(r) + ") out of range");
    std::sort(edges.begin(), edges.end());
    edges.erase(std::unique(edges.begin(), edges.end()), edges.end());
    return ExplicitHost{ n_left, n_right, std::move(edges) };
}

auto cffkit::validate_host(const HostGraphSpec & host) -> void
{
    if (auto h = std::get_if<BiIntersectionHost>(&host)) {
        if (h->t == 0 || h->r == 0)
            throw UsageError("bi-intersection host needs t >= 1 and r >= 1");
        if (h->r + h->w > h->t)
            throw UsageError("bi-intersection host needs r + w <= t");
    }
    else if (auto h = std::get_if<KneserHost>(&host)) {
        if (h->t == 0 || h->k == 0)
            throw UsageError("Kneser host needs t >= 1 and k >= 1");
        if (h->k > h->t)
            throw UsageError("Kneser host needs k <= t");
    }
    else if (auto h = std::get_if<ExplicitHost>(&host)) {
        for (auto & [l, r] : h->edges)
            if (l >= h->n_left || r >= h->n_right)
                throw UsageError("explicit host edge out of range");
    }
    else if (auto h = std::get_if<DerivedHost>(&host)) {
        if (h->graph.n_edges() > 0 && h->w + 2 > h->graph.n_vertices())
            throw UsageError("derived host needs w <= n_vertices - 2");
    }
}

auto cffkit::host_left_count(const HostGraphSpec & host) -> uint64_t
{
    return std::visit([] (const auto & h) -> uint64_t {
        using T = std::decay_t<decltype(h)>;
        if constexpr (std::is_same_v<T, BiIntersectionHost>)
            return binomial(h.t, h.r);
        else if constexpr (std::is_same_v<T, KneserHost>)
            return binomial(h.t, h.k);
        else if constexpr (std::is_same_v<T, ExplicitHost>)
            return h.n_left;
        else
            return h.graph.n_edges();
    }, host);
}

auto cffkit::host_right_count(const HostGraphSpec & host) -> uint64_t
{
    return std::visit([] (const auto & h) -> uint64_t {
        using T = std::decay_t<decltype(h)>;
        if constexpr (std::is_same_v<T, BiIntersectionHost>)
            return binomial(h.t, h.w);
        else if constexpr (std::is_same_v<T, KneserHost>)
            return binomial(h.t, h.k);
        else if constexpr (std::is_same_v<T, ExplicitHost>)
            return h.n_right;
        else
            return binomial(h.graph.n_vertices(), h.w);
    }, host);
}

auto cffkit::host_edge_count(const HostGraphSpec & host) -> uint64_t
{
    return std::visit([] (const auto & h) -> uint64_t {
        using T = std::decay_t<decltype(h)>;
        if constexpr (std::is_same_v<T, BiIntersectionHost>)
            return binomial(h.t, h.r) * binomial(h.t - h.r, h.w);
        else if constexpr (std::is_same_v<T, KneserHost>)
            return h.t < 2 * h.k ? 0 : binomial(h.t, h.k) * binomial(h.t - h.k, h.k) / 2;
        else if constexpr (std::is_same_v<T, ExplicitHost>)
            return h.edges.size();
        else
            return h.graph.n_vertices() < 2 ? 0 : uint64_t{h.graph.n_edges()} * binomial(h.graph.n_vertices() - 2, h.w);
    }, host);
}

auto cffkit::host_is_symmetric(const HostGraphSpec & host) -> bool
{
    return std::holds_alternative<KneserHost>(host);
}

auto cffkit::host_adjacent(const HostGraphSpec & host, uint64_t left, uint64_t right) -> bool
{
    if (left >= host_left_count(host) || right >= host_right_count(host))
        return false;

    return std::visit([&] (const auto & h) -> bool {
        using T = std::decay_t<decltype(h)>;
        if constexpr (std::is_same_v<T, BiIntersectionHost> || std::is_same_v<T, KneserHost>) {
            uint32_t ls, rs;
            if constexpr (std::is_same_v<T, BiIntersectionHost>) {
                ls = h.r;
                rs = h.w;
            }
            else {
                ls = h.k;
                rs = h.k;
            }
            auto a = unrank_subset(left, ls, h.t), b = unrank_subset(right, rs, h.t);
            Subset both;
            std::set_intersection(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(both));
            return both.empty();
        }
        else if constexpr (std::is_same_v<T, ExplicitHost>) {
            Edge e{ static_cast<uint32_t>(left), static_cast<uint32_t>(right) };
            return std::binary_search(h.edges.begin(), h.edges.end(), e);
        }
        else {
            auto [u, v] = h.graph.edges()[left];
            auto wset = unrank_subset(right, h.w, h.graph.n_vertices());
            return ! std::binary_search(wset.begin(), wset.end(), u) && ! std::binary_search(wset.begin(), wset.end(), v);
        }
    }, host);
}

/* vim: set sw=4 sts=4 et foldmethod=syntax : */

#include <cffkit/coverings.hh>
#include <cffkit/constructions.hh>
#include <cffkit/errors.hh>

#include <algorithm>
#include <array>
#include <cmath>
#include <numbers>
#include <queue>
#include <random>
#include <stdexcept>
#include <string>

using std::optional;
using std::string;
using std::to_string;
using std::uint32_t;
using std::uint64_t;
using std::vector;

namespace
{
    using cffkit::CoveringOptions;
    using cffkit::GraphCovering;

    auto checked(GraphCovering c, const CoveringOptions & opts, const char * what) -> GraphCovering
    {
        if (opts.verify) {
            auto report = cffkit::verify_covering(c, opts.verify_options);
            if (! report.ok)
                throw std::logic_error(string(what) + " produced a covering that fails verification: "
                        + report.witness.dump());
        }
        return c;
    }

    auto range_set(uint32_t begin, uint32_t end) -> cffkit::Subset
    {
        cffkit::Subset s;
        for (uint32_t i = begin ; i < end ; ++i)
            s.push_back(i);
        return s;
    }

    /// Sets of the recursive-halving covering of P_n, in A_1, B_1, A_2, ... order.
    auto halving_sets(uint32_t n) -> vector<cffkit::Subset>
    {
        uint32_t m = n - 1;
        auto k = cffkit::ceil_log2(m);
        if (k == 0)
            return { { 0, 1 } };

        vector<cffkit::Subset> result;
        for (uint32_t level = 1 ; level <= k ; ++level) {
            uint32_t len = 1u << (k - level);
            cffkit::Subset a, b;
            for (uint32_t j = 1 ; j <= (1u << level) ; ++j) {
                // segments 4t-3 and 4t go to A, 4t-2 and 4t-1 to B
                auto & target = (j % 4 == 0 || j % 4 == 1) ? a : b;
                for (uint32_t x = (j - 1) * len ; x <= j * len && x < n ; ++x)
                    target.push_back(x);
            }
            for (auto * s : { &a, &b }) {
                std::sort(s->begin(), s->end());
                s->erase(std::unique(s->begin(), s->end()), s->end());
                bool has_edge = false;
                for (std::size_t i = 0 ; i + 1 < s->size() ; ++i)
                    if ((*s)[i] + 1 == (*s)[i + 1])
                        has_edge = true;
                if (has_edge)
                    result.push_back(std::move(*s));
            }
        }
        return result;
    }
}

auto cffkit::star_covering(uint32_t t, uint32_t w, uint32_t d, const CoveringOptions & opts) -> GraphCovering
{
    if (t < 1 || d < 1)
        throw UsageError("star_covering needs t >= 1 and d >= 1");
    if (w >= 2)
        throw UsageError("star_covering with w >= 2 needs a (1,w;d)-CFF ingredient");

    if (w == 0)
        return star_covering(SetSystem(d, vector<Block>(t, range_set(0, d))), w, d, opts);
    return star_covering(replicate(sperner_cff(t), d), w, d, opts);
}

auto cffkit::star_covering(const SetSystem & ingredient, uint32_t w, uint32_t d, const CoveringOptions & opts)
    -> GraphCovering
{
    auto t = ingredient.t();
    if (opts.verify && 1 + w <= t) {
        auto report = verify_cff(ingredient, { 1, w, d }, opts.verify_options);
        if (! report.ok)
            throw UsageError("star ingredient is not a (1," + to_string(w) + ";" + to_string(d) + ")-CFF");
    }

    vector<Subset> sets;
    for (uint32_t x = 0 ; x < ingredient.n_points() ; ++x) {
        auto s = ingredient.holders(x);
        s.push_back(t);
        sets.push_back(std::move(s));
    }
    return checked(GraphCovering(star_graph(t), std::move(sets), w, d), opts, "star_covering");
}

auto cffkit::bipartite_covering(uint32_t t1, uint32_t t2, uint32_t d, const CoveringOptions & opts) -> GraphCovering
{
    if (t1 < 1 || t2 < 1 || d < 1)
        throw UsageError("bipartite_covering needs t1, t2, d >= 1");

    vector<Subset> sets;
    auto left = replicate(sperner_cff(t1), d);
    for (uint32_t x = 0 ; x < left.n_points() ; ++x) {
        auto s = left.holders(x);
        for (uint32_t v = 0 ; v < t2 ; ++v)
            s.push_back(t1 + v);
        sets.push_back(std::move(s));
    }
    auto right = replicate(sperner_cff(t2), d);
    for (uint32_t x = 0 ; x < right.n_points() ; ++x) {
        auto s = range_set(0, t1);
        for (auto v : right.holders(x))
            s.push_back(t1 + v);
        sets.push_back(std::move(s));
    }
    return checked(GraphCovering(complete_bipartite_graph(t1, t2), std::move(sets), 1, d), opts, "bipartite_covering");
}

auto cffkit::path_covering(uint32_t n_vertices, const CoveringOptions & opts) -> GraphCovering
{
    if (n_vertices < 2)
        throw UsageError("path_covering needs at least 2 vertices");
    return checked(GraphCovering(path_graph(n_vertices), halving_sets(n_vertices), 1, 1), opts, "path_covering");
}

auto cffkit::cycle_covering(uint32_t n, const CoveringOptions & opts) -> GraphCovering
{
    if (n < 3)
        throw UsageError("cycle_covering needs n >= 3");
    auto sets = halving_sets(n);
    sets.push_back({ 0, n - 1 });
    return checked(GraphCovering(cycle_graph(n), std::move(sets), 1, 1), opts, "cycle_covering");
}

auto cffkit::relabel(const GraphCovering & c, const vector<uint32_t> & map, uint32_t n) -> GraphCovering
{
    if (map.size() != c.graph().n_vertices())
        throw UsageError("relabel: map size does not match the graph");
    vector<Edge> edges;
    for (auto [u, v] : c.graph().edges())
        edges.emplace_back(map[u], map[v]);
    vector<Subset> sets;
    for (auto & s : c.sets()) {
        Subset out;
        for (auto v : s)
            out.push_back(map[v]);
        sets.push_back(std::move(out));
    }
    return GraphCovering(SimpleGraph(n, std::move(edges)), std::move(sets), c.w(), c.d());
}

auto cffkit::union_covering(uint32_t n_vertices, const vector<GraphPart> & parts, const vector<Embedding> & embeddings,
        const GraphCovering & base, const CoveringOptions & opts) -> GraphCovering
{
    if (parts.empty())
        throw UsageError("union_covering needs at least one part");
    if (embeddings.size() + 1 != parts.size())
        throw UsageError("union_covering needs one embedding per part after the first");
    if (base.graph().n_vertices() != n_vertices)
        throw UsageError("union_covering: base covering must use the shared vertex universe");

    auto & first = parts[0];
    vector<int64_t> first_pos(n_vertices, -1);
    for (std::size_t i = 0 ; i < first.vertices.size() ; ++i) {
        if (first.vertices[i] >= n_vertices)
            throw UsageError("union_covering: vertex out of range");
        first_pos[first.vertices[i]] = i;
    }
    {
        auto base_edges = base.graph().edges();
        for (auto [u, v] : first.edges)
            if (! base.graph().adjacent(u, v))
                throw UsageError("union_covering: base covering's graph lacks edge {" + to_string(u) + "," + to_string(v) + "}");
    }

    // image[v] lists the base vertices that v is mapped to by some embedding
    vector<vector<uint32_t>> image(n_vertices);
    for (std::size_t j = 1 ; j < parts.size() ; ++j) {
        auto & part = parts[j];
        auto & f = embeddings[j - 1];
        if (f.size() != part.vertices.size())
            throw UsageError("union_covering: embedding " + to_string(j) + " has the wrong length");

        vector<int64_t> pos(n_vertices, -1);
        for (std::size_t i = 0 ; i < part.vertices.size() ; ++i) {
            if (part.vertices[i] >= n_vertices)
                throw UsageError("union_covering: vertex out of range");
            pos[part.vertices[i]] = i;
        }
        auto sorted = f;
        std::sort(sorted.begin(), sorted.end());
        if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end())
            throw UsageError("union_covering: embedding " + to_string(j) + " is not injective");
        for (auto target : f)
            if (target >= n_vertices || first_pos[target] < 0)
                throw UsageError("union_covering: embedding " + to_string(j) + " leaves the first part");
        for (auto [u, v] : part.edges) {
            if (pos[u] < 0 || pos[v] < 0)
                throw UsageError("union_covering: part " + to_string(j) + " edge uses a vertex outside the part");
            if (! base.graph().adjacent(f[pos[u]], f[pos[v]]))
                throw UsageError("union_covering: embedding " + to_string(j) + " does not preserve edge {"
                        + to_string(u) + "," + to_string(v) + "}");
        }
        for (std::size_t i = 0 ; i < part.vertices.size() ; ++i)
            image[part.vertices[i]].push_back(f[i]);
    }

    vector<Edge> edges;
    for (auto & part : parts)
        edges.insert(edges.end(), part.edges.begin(), part.edges.end());
    for (auto & [u, v] : edges)
        if (u > v)
            std::swap(u, v);
    std::sort(edges.begin(), edges.end());
    edges.erase(std::unique(edges.begin(), edges.end()), edges.end());

    vector<Subset> sets;
    for (auto & a : base.sets()) {
        Subset c = a;
        for (uint32_t v = 0 ; v < n_vertices ; ++v)
            for (auto target : image[v])
                if (std::binary_search(a.begin(), a.end(), target))
                    c.push_back(v);
        sets.push_back(std::move(c));
    }
    for (auto & part : parts)
        sets.push_back(part.vertices);

    return checked(GraphCovering(SimpleGraph(n_vertices, std::move(edges)), std::move(sets), 1, 1), opts, "union_covering");
}

namespace
{
    /// Orders each path component with at least one edge of the subgraph given
    /// by `keep` (edges with every vertex of degree <= 2 and no cycles) from an
    /// endpoint.
    auto path_orders(uint32_t n, const vector<cffkit::Edge> & keep, const vector<bool> & include) -> vector<vector<uint32_t>>
    {
        vector<vector<uint32_t>> adj(n);
        for (auto [u, v] : keep) {
            adj[u].push_back(v);
            adj[v].push_back(u);
        }
        vector<bool> done(n, false);
        vector<vector<uint32_t>> result;
        for (uint32_t s = 0 ; s < n ; ++s) {
            if (! include[s] || done[s] || adj[s].size() != 1)
                continue;
            vector<uint32_t> order;
            uint32_t prev = s, cur = s;
            while (true) {
                order.push_back(cur);
                done[cur] = true;
                auto next = std::find_if(adj[cur].begin(), adj[cur].end(), [&] (uint32_t x) { return x != prev && ! done[x]; });
                if (next == adj[cur].end())
                    break;
                prev = cur;
                cur = *next;
            }
            result.push_back(std::move(order));
        }
        return result;
    }
    enum class Placement
    {
        AbsorbChild,
        Forest,
        AbsorbParent
    };

    using PlacementOrder = std::array<Placement, 3>;

    const std::array<PlacementOrder, 6> placement_orders = { {
        { Placement::AbsorbChild, Placement::Forest, Placement::AbsorbParent },
        { Placement::AbsorbChild, Placement::AbsorbParent, Placement::Forest },
        { Placement::Forest, Placement::AbsorbChild, Placement::AbsorbParent },
        { Placement::Forest, Placement::AbsorbParent, Placement::AbsorbChild },
        { Placement::AbsorbParent, Placement::AbsorbChild, Placement::Forest },
        { Placement::AbsorbParent, Placement::Forest, Placement::AbsorbChild }
    } };

    /// One candidate tree covering; clean_limit caps the number of plain
    /// neighbours a branch vertex may route through the linear forest.
    auto tree_sets(const cffkit::SimpleGraph & tree, const vector<bool> & branch, const PlacementOrder & order,
            uint32_t clean_limit, cffkit::TreeCoveringStats & local) -> vector<cffkit::Subset>
    {
        using namespace cffkit;
        auto n = tree.n_vertices();

        // Linear forest: every edge between non-branch vertices plus at most two
        // edges at each branch vertex. A branch vertex is clean when all its edges
        // to non-branch vertices are in the forest, and a hub otherwise. A clean
        // vertex's set absorbs one edge to another branch vertex; a hub's set
        // absorbs every clean neighbour, which then takes a code in its star.
        vector<uint32_t> forest_degree(n, 0);
        vector<Edge> forest;
        auto take = [&] (uint32_t u, uint32_t v) {
            forest.emplace_back(u, v);
            ++forest_degree[u];
            ++forest_degree[v];
        };
        for (auto [u, v] : tree.edges())
            if (! branch[u] && ! branch[v])
                take(u, v);

        vector<bool> clean(n, false);
        for (uint32_t v = 0 ; v < n ; ++v) {
            if (! branch[v])
                continue;
            vector<uint32_t> plain;
            for (auto u : tree.neighbours(v))
                if (! branch[u])
                    plain.push_back(u);
            if (plain.size() <= clean_limit) {
                clean[v] = true;
                for (auto u : plain)
                    take(v, u);
            }
        }

        vector<int64_t> absorbed(n, -1);
        vector<vector<uint32_t>> hub_absorbs(n);
        vector<Edge> extra_edges;
        {
            vector<bool> seen(n, false);
            for (uint32_t root = 0 ; root < n ; ++root) {
                if (! branch[root] || seen[root])
                    continue;
                std::queue<uint32_t> q;
                q.push(root);
                seen[root] = true;
                while (! q.empty()) {
                    auto p = q.front();
                    q.pop();
                    for (auto c : tree.neighbours(p)) {
                        if (! branch[c] || seen[c])
                            continue;
                        seen[c] = true;
                        q.push(c);
                        bool placed = false;
                        if (clean[p] != clean[c]) {
                            // a hub absorbs any number of clean neighbours
                            auto hub = clean[p] ? c : p;
                            hub_absorbs[hub].push_back(clean[p] ? p : c);
                            placed = true;
                        }
                        for (auto choice : order) {
                            if (placed)
                                break;
                            if (choice == Placement::AbsorbChild && clean[c] && absorbed[c] < 0)
                                absorbed[c] = p;
                            else if (choice == Placement::Forest && forest_degree[p] < 2 && forest_degree[c] < 2)
                                take(p, c);
                            else if (choice == Placement::AbsorbParent && clean[p] && absorbed[p] < 0)
                                absorbed[p] = c;
                            else
                                continue;
                            placed = true;
                            break;
                        }
                        if (! placed)
                            extra_edges.emplace_back(p, c);
                    }
                }
            }
        }

        vector<uint32_t> long_path;
        for (auto & order : path_orders(n, forest, vector<bool>(n, true)))
            long_path.insert(long_path.end(), order.begin(), order.end());

        vector<Subset> sets;
        if (long_path.size() >= 2) {
            for (auto & s : halving_sets(long_path.size())) {
                Subset mapped;
                bool has_edge = false;
                for (std::size_t i = 0 ; i < s.size() ; ++i) {
                    mapped.push_back(long_path[s[i]]);
                    if (i + 1 < s.size() && s[i] + 1 == s[i + 1] && tree.adjacent(long_path[s[i]], long_path[s[i + 1]]))
                        has_edge = true;
                }
                if (has_edge)
                    sets.push_back(std::move(mapped));
            }
        }
        local.path_sets = sets.size();

        bool any_unclean = false;
        for (uint32_t v = 0 ; v < n ; ++v) {
            if (! branch[v])
                continue;
            Subset s{ v };
            if (! clean[v]) {
                any_unclean = true;
                for (auto u : tree.neighbours(v))
                    if (! branch[u])
                        s.push_back(u);
            }
            if (absorbed[v] >= 0)
                s.push_back(absorbed[v]);
            s.insert(s.end(), hub_absorbs[v].begin(), hub_absorbs[v].end());
            if (s.size() >= 2) {
                sets.push_back(std::move(s));
                ++local.neighbourhood_sets;
            }
        }

        if (any_unclean) {
            // Codes: the plain and absorbed neighbours of each hub get distinct
            // antichain members.
            auto codes = sperner_cff(local.max_degree);
            vector<int64_t> code_of(n, -1);

            vector<uint32_t> bfs_order;
            {
                vector<bool> seen(n, false);
                std::queue<uint32_t> q;
                q.push(0);
                seen[0] = true;
                while (! q.empty()) {
                    auto v = q.front();
                    q.pop();
                    bfs_order.push_back(v);
                    for (auto u : tree.neighbours(v))
                        if (! seen[u]) {
                            seen[u] = true;
                            q.push(u);
                        }
                }
            }
            for (auto v : bfs_order) {
                if (! branch[v] || clean[v])
                    continue;
                auto coded_here = [&] (uint32_t u) {
                    return ! branch[u] || std::find(hub_absorbs[v].begin(), hub_absorbs[v].end(), u) != hub_absorbs[v].end();
                };
                vector<bool> taken(codes.t(), false);
                for (auto u : tree.neighbours(v))
                    if (coded_here(u) && code_of[u] >= 0)
                        taken[code_of[u]] = true;
                uint32_t next = 0;
                for (auto u : tree.neighbours(v))
                    if (coded_here(u) && code_of[u] < 0) {
                        while (taken[next])
                            ++next;
                        code_of[u] = next;
                        taken[next] = true;
                    }
            }

            for (uint32_t l = 0 ; l < codes.n_points() ; ++l) {
                Subset s;
                for (uint32_t v = 0 ; v < n ; ++v) {
                    if (branch[v] && ! clean[v])
                        s.push_back(v);
                    else if (code_of[v] >= 0) {
                        auto & code = codes.block(code_of[v]);
                        if (std::binary_search(code.begin(), code.end(), l))
                            s.push_back(v);
                    }
                }
                sets.push_back(std::move(s));
                ++local.code_sets;
            }
        }

        for (auto [u, v] : extra_edges) {
            sets.push_back({ u, v });
            ++local.extra_sets;
        }

        return sets;
    }
}

auto cffkit::tree_covering(const SimpleGraph & tree, const CoveringOptions & opts, TreeCoveringStats * stats) -> GraphCovering
{
    auto n = tree.n_vertices();
    if (n == 0 || tree.n_edges() != n - 1)
        throw UsageError("tree_covering: input is not a tree (needs n - 1 edges)");
    {
        vector<bool> seen(n, false);
        std::queue<uint32_t> q;
        q.push(0);
        seen[0] = true;
        uint32_t reached = 1;
        while (! q.empty()) {
            auto v = q.front();
            q.pop();
            for (auto u : tree.neighbours(v))
                if (! seen[u]) {
                    seen[u] = true;
                    ++reached;
                    q.push(u);
                }
        }
        if (reached != n)
            throw UsageError("tree_covering: input is not a tree (disconnected)");
    }

    TreeCoveringStats local;
    local.m = tree.n_edges();
    local.max_degree = tree.max_degree();

    vector<bool> branch(n, false);
    for (uint32_t v = 0 ; v < n ; ++v)
        if (tree.degree(v) >= 3) {
            branch[v] = true;
            ++local.branch_vertices;
        }

    if (local.m > 0)
        local.bound = 2 * uint64_t{ceil_log2(local.m)} + sperner_number(local.max_degree) + local.branch_vertices;

    if (local.m == 0) {
        if (stats)
            *stats = local;
        return GraphCovering(tree, { }, 1, 1);
    }

    vector<Subset> sets;
    TreeCoveringStats best_stats;
    bool first = true;
    for (auto & order : placement_orders)
        for (uint32_t clean_limit : { 2u, 1u, 0u }) {
            TreeCoveringStats trial = local;
            auto candidate = tree_sets(tree, branch, order, clean_limit, trial);
            if (first || candidate.size() < sets.size()) {
                sets = std::move(candidate);
                best_stats = trial;
                first = false;
            }
        }
    local = best_stats;

    if (stats)
        *stats = local;
    return checked(GraphCovering(tree, std::move(sets), 1, 1), opts, "tree_covering");
}

auto cffkit::product_covering(const GraphCovering & a, const GraphCovering & b, const CoveringOptions & opts) -> GraphCovering
{
    auto & g = a.graph();
    auto & h = b.graph();
    if (g.min_degree() < 2 || h.min_degree() < 2)
        throw UsageError("product_covering needs both graphs to have minimum degree at least 2");
    if (opts.verify) {
        if (! verify_covering_at(a, 1, 1, opts.verify_options).ok || ! verify_covering_at(b, 1, 1, opts.verify_options).ok)
            throw UsageError("product_covering needs both input coverings to verify");
    }

    auto ng = g.n_vertices(), nh = h.n_vertices();
    vector<Subset> sets;
    for (auto & s : a.sets()) {
        Subset out;
        for (auto x : s)
            for (uint32_t y = 0 ; y < nh ; ++y)
                out.push_back(x * nh + y);
        sets.push_back(std::move(out));
    }
    for (auto & s : b.sets()) {
        Subset out;
        for (uint32_t x = 0 ; x < ng ; ++x)
            for (auto y : s)
                out.push_back(x * nh + y);
        sets.push_back(std::move(out));
    }
    return checked(GraphCovering(cartesian_product(g, h), std::move(sets), 1, 1), opts, "product_covering");
}

auto cffkit::grid_covering(uint32_t t1, uint32_t t2, const CoveringOptions & opts) -> GraphCovering
{
    if (t1 < 3 || t2 < 3)
        throw UsageError("grid_covering needs t1, t2 >= 3");
    CoveringOptions inner = opts;
    auto torus = product_covering(cycle_covering(t1, inner), cycle_covering(t2, inner), inner);
    return checked(GraphCovering(grid_graph(t1, t2), torus.sets(), 1, 1), opts, "grid_covering");
}

auto cffkit::to_json(const LllParams & p) -> Json
{
    Json j;
    j["p"] = p.p;
    j["q"] = p.q;
    j["D"] = p.dependency;
    j["N"] = p.rows;
    j["attempts"] = p.attempts;
    return j;
}

auto cffkit::lll_size(const SimpleGraph & g, uint32_t w, optional<double> p) -> LllParams
{
    auto t = g.n_vertices();
    uint64_t m = g.n_edges();
    if (m < 1)
        throw UsageError("lll_size needs a graph with at least one edge");
    if (w + 2 > t)
        throw UsageError("lll_size needs w + 2 <= n_vertices");

    LllParams result;
    result.p = p.value_or(2.0 / (w + 2));
    if (! (result.p > 0.0 && result.p < 1.0))
        throw UsageError("lll_size needs 0 < p < 1");
    result.q = 1.0 - result.p * result.p * std::pow(1.0 - result.p, w);

    auto delta = static_cast<int64_t>(g.max_degree());
    int64_t rest = static_cast<int64_t>(m) - static_cast<int64_t>(w + 2) * delta;
    uint64_t clamped = rest > 0 ? static_cast<uint64_t>(rest) : 0;
    result.dependency = m * binomial_ext(int64_t{t} - 2, w)
        - clamped * binomial_ext(int64_t{t} - w - 4, w);

    double numerator = std::log2(std::numbers::e * static_cast<double>(result.dependency + 1));
    result.rows = static_cast<uint64_t>(std::ceil(numerator / -std::log2(result.q)));
    if (result.rows < 1)
        result.rows = 1;
    return result;
}

auto cffkit::lll_covering(const SimpleGraph & g, uint32_t w, optional<double> p, uint64_t seed,
        uint64_t max_attempts, const VerifyOptions & vopts) -> LllResult
{
    auto params = lll_size(g, w, p);
    params.seed = seed;
    params.max_attempts = max_attempts;

    auto t = g.n_vertices();
    if (! vopts.force && params.rows > max_construction_points / t)
        throw CapacityError("lll_covering would sample " + to_string(params.rows) + " rows; use --force");
    std::mt19937_64 rng(seed);
    // 53-bit uniform in [0, 1), independent of the standard library's distributions
    auto uniform = [&] { return static_cast<double>(rng() >> 11) * 0x1.0p-53; };

    for (uint64_t attempt = 1 ; attempt <= max_attempts ; ++attempt) {
        vector<Subset> rows(params.rows);
        for (auto & row : rows)
            for (uint32_t v = 0 ; v < t ; ++v)
                if (uniform() < params.p)
                    row.push_back(v);

        GraphCovering candidate(g, std::move(rows), w, 1);
        if (verify_covering(candidate, vopts).ok) {
            params.attempts = attempt;
            return LllResult{ std::move(candidate), params };
        }
    }
    throw AttemptsExhausted("lll_covering: no covering found in " + to_string(max_attempts) + " attempts", max_attempts);
}

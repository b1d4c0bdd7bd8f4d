/* vim: set sw=4 sts=4 et foldmethod=syntax : */

#include <cffkit/constructions.hh>
#include <cffkit/coverings.hh>
#include <cffkit/errors.hh>
#include <cffkit/verifier.hh>

#include <algorithm>
#include <string>

using std::string;
using std::to_string;
using std::uint32_t;
using std::uint64_t;
using std::vector;

namespace
{
    auto require_cff(const cffkit::SetSystem & s, cffkit::CffParams p, const char * what) -> void
    {
        if (p.r + p.w > s.t())
            return;
        auto report = cffkit::verify_cff(s, p);
        if (! report.ok)
            throw cffkit::UsageError(string(what) + " is not a (" + to_string(p.r) + "," + to_string(p.w) + ";"
                    + to_string(p.d) + ")-CFF; witness " + report.witness.dump());
    }
}

auto cffkit::sperner_number(uint64_t t) -> uint32_t
{
    // R(1) = 1: one point, block {0}
    uint32_t c = 1;
    while (binomial(c, c / 2) < t)
        ++c;
    return c;
}

auto cffkit::sperner_cff(uint32_t t) -> SetSystem
{
    if (t < 1)
        throw UsageError("sperner_cff needs t >= 1");
    auto n = sperner_number(t);
    auto k = std::max<uint32_t>(1, n / 2);

    vector<Block> blocks;
    Subset c(k);
    for (uint32_t i = 0 ; i < k ; ++i)
        c[i] = i;
    do {
        blocks.push_back(c);
    } while (blocks.size() < t && next_colex(c, n));
    return SetSystem(n, std::move(blocks));
}

auto cffkit::replicate(const SetSystem & s, uint32_t d) -> SetSystem
{
    if (d < 1)
        throw UsageError("replicate needs d >= 1");
    auto n = s.n_points();
    vector<Block> blocks;
    for (auto & b : s.blocks()) {
        Block out;
        for (uint32_t c = 0 ; c < d ; ++c)
            for (auto x : b)
                out.push_back(c * n + x);
        blocks.push_back(std::move(out));
    }
    return SetSystem(n * d, std::move(blocks));
}

auto cffkit::subset_design(uint32_t t, uint32_t k, bool force) -> SetSystem
{
    if (t < 1 || k > t)
        throw UsageError("subset_design needs 1 <= t and k <= t");
    auto n = binomial(t, k);
    if (! force && n > max_construction_points)
        throw CapacityError("subset design would have " + to_string(n) + " points (limit "
                + to_string(max_construction_points) + ")");

    vector<Block> blocks(t);
    Subset c(k);
    for (uint32_t i = 0 ; i < k ; ++i)
        c[i] = i;
    uint32_t rank = 0;
    do {
        for (auto i : c)
            blocks[i].push_back(rank);
        ++rank;
    } while (next_colex(c, t));
    return SetSystem(static_cast<uint32_t>(n), std::move(blocks));
}

auto cffkit::optimal_kk(uint32_t t, uint32_t k, bool force) -> SetSystem
{
    if (k < 1 || k > t)
        throw UsageError("optimal_kk needs 1 <= k <= t");
    return subset_design(2 * t, t, force);
}

auto cffkit::double_21(const SetSystem & s1, const SetSystem & s2, uint32_t d, DoublingMode mode,
        const DoublingOptions & opts) -> SetSystem
{
    if (s1.t() != s2.t())
        throw UsageError("double_21: ingredients have " + to_string(s1.t()) + " and " + to_string(s2.t()) + " blocks");
    if (d < 1)
        throw UsageError("double_21 needs d >= 1");
    if (opts.pre_verify) {
        require_cff(s1, { 2, 1, d }, "left ingredient");
        require_cff(s2, { 1, 1, d }, "right ingredient");
    }

    auto t = s1.t();
    auto n1 = s1.n_points(), n2 = s2.n_points();
    uint32_t extra = mode == DoublingMode::Paper ? 1 : d;
    uint32_t q0 = n1 + n2, p0 = q0 + extra;

    vector<Block> blocks(2 * t);
    for (uint32_t j = 0 ; j < t ; ++j) {
        auto & unprimed = blocks[j];
        auto & primed = blocks[j + t];
        for (auto x : s1.block(j)) {
            unprimed.push_back(x);
            primed.push_back(x);
        }
        auto & c = s2.block(j);
        for (uint32_t y = 0 ; y < n2 ; ++y) {
            if (std::binary_search(c.begin(), c.end(), y))
                unprimed.push_back(n1 + y);
            else
                primed.push_back(n1 + y);
        }
        for (uint32_t e = 0 ; e < extra ; ++e) {
            unprimed.push_back(q0 + e);
            primed.push_back(p0 + e);
        }
    }
    return SetSystem(n1 + n2 + 2 * extra, std::move(blocks));
}

auto cffkit::double_22(const SetSystem & s1, const SetSystem & s2, uint32_t d, DoublingMode mode,
        const DoublingOptions & opts) -> SetSystem
{
    if (s1.t() != s2.t())
        throw UsageError("double_22: ingredients have " + to_string(s1.t()) + " and " + to_string(s2.t()) + " blocks");
    if (d < 1)
        throw UsageError("double_22 needs d >= 1");
    if (opts.pre_verify) {
        require_cff(s1, { 2, 2, d }, "left ingredient");
        require_cff(s2, { 2, 1, d }, "right ingredient");
    }

    auto t = s1.t();
    auto n1 = s1.n_points(), n2 = s2.n_points();
    uint32_t extra = mode == DoublingMode::Paper ? 1 : d;
    uint32_t a0 = n1, b0 = n1 + n2, q0 = n1 + 2 * n2, p0 = q0 + extra;

    vector<Block> blocks(2 * t);
    for (uint32_t j = 0 ; j < t ; ++j) {
        auto & unprimed = blocks[j];
        auto & primed = blocks[j + t];
        for (auto x : s1.block(j)) {
            unprimed.push_back(x);
            primed.push_back(x);
        }
        auto & c = s2.block(j);
        for (uint32_t y = 0 ; y < n2 ; ++y) {
            if (std::binary_search(c.begin(), c.end(), y)) {
                unprimed.push_back(a0 + y);
                primed.push_back(b0 + y);
            }
            else {
                primed.push_back(a0 + y);
                unprimed.push_back(b0 + y);
            }
        }
        for (uint32_t e = 0 ; e < extra ; ++e) {
            unprimed.push_back(q0 + e);
            primed.push_back(p0 + e);
        }
    }
    return SetSystem(n1 + 2 * n2 + 2 * extra, std::move(blocks));
}

auto cffkit::ks_split_cover(uint32_t t) -> vector<VertexSplit>
{
    if (t < 2)
        throw UsageError("ks_split_cover needs t >= 2");
    vector<VertexSplit> result;
    for (uint32_t b = 0 ; b < ceil_log2(t) ; ++b) {
        VertexSplit split;
        for (uint32_t v = 0 ; v < t ; ++v)
            ((v >> b) & 1 ? split.second : split.first).push_back(v);
        result.push_back(std::move(split));
    }
    return result;
}

auto cffkit::compose_complete_cover(const vector<GraphCovering> & pieces, uint32_t t) -> SetSystem
{
    if (t < 1)
        throw UsageError("compose_complete_cover needs t >= 1");

    vector<vector<bool>> seen(t, vector<bool>(t, false));
    for (auto & piece : pieces) {
        if (piece.graph().n_vertices() != t)
            throw UsageError("every piece must live on the vertex set [t]");
        for (auto [u, v] : piece.graph().edges())
            seen[u][v] = true;
    }
    for (uint32_t u = 0 ; u < t ; ++u)
        for (uint32_t v = u + 1 ; v < t ; ++v)
            if (! seen[u][v])
                throw UsageError("pieces do not cover edge {" + to_string(u) + "," + to_string(v) + "} of K_t");

    vector<Block> blocks(t);
    uint32_t offset = 0;
    for (auto & piece : pieces) {
        for (uint32_t j = 0 ; j < piece.size() ; ++j)
            for (auto u : piece.sets()[j])
                blocks[u].push_back(offset + j);
        offset += piece.size();
    }
    return SetSystem(offset, std::move(blocks));
}

auto cffkit::ks_pieces(uint32_t t, uint32_t d) -> vector<GraphCovering>
{
    vector<GraphCovering> pieces;
    for (auto & [side_a, side_b] : ks_split_cover(t)) {
        auto c = bipartite_covering(side_a.size(), side_b.size(), d);
        vector<uint32_t> map(side_a.begin(), side_a.end());
        map.insert(map.end(), side_b.begin(), side_b.end());
        pieces.push_back(relabel(c, map, t));
    }
    return pieces;
}

auto cffkit::ks_compose(uint32_t t) -> SetSystem
{
    return compose_complete_cover(ks_pieces(t), t);
}

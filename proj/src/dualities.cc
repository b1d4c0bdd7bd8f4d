/* vim: set sw=4 sts=4 et foldmethod=syntax : */

#include <cffkit/dualities.hh>
#include <cffkit/constructions.hh>
#include <cffkit/errors.hh>

#include <algorithm>
#include <string>

using std::string;
using std::to_string;
using std::uint32_t;
using std::uint64_t;
using std::vector;

namespace
{
    auto ranks_of_subsets(const cffkit::Subset & items, uint32_t k, uint32_t universe) -> vector<uint64_t>
    {
        vector<uint64_t> result;
        cffkit::for_each_subset_of(items, k, [&] (const cffkit::Subset & s) {
                result.push_back(cffkit::rank_subset(s, universe));
                });
        std::sort(result.begin(), result.end());
        return result;
    }

    auto complement(const cffkit::Subset & s, uint32_t n) -> cffkit::Subset
    {
        cffkit::Subset result;
        for (uint32_t i = 0 ; i < n ; ++i)
            if (! std::binary_search(s.begin(), s.end(), i))
                result.push_back(i);
        return result;
    }

    auto require_structure(const cffkit::BicliqueCover & bc, const cffkit::VerifyOptions & opts) -> void
    {
        auto report = cffkit::verify_biclique_cover(bc, opts);
        if (report.structural_failure)
            throw cffkit::UsageError("not a biclique of the host: " + report.witness.dump());
    }
}

auto cffkit::cff_to_biclique_cover(const SetSystem & s, uint32_t r, uint32_t w, const VerifyOptions & opts) -> BicliqueCover
{
    auto t = s.t();
    if (r < 1 || r + w > t)
        throw UsageError("cff_to_biclique_cover needs r >= 1 and r + w <= t");

    BicliqueCover result{ BiIntersectionHost{ t, r, w }, achieved_d(s, r, w, opts), { } };
    for (uint32_t x = 0 ; x < s.n_points() ; ++x) {
        auto holders = s.holders(x);
        result.bicliques.push_back(Biclique{ ranks_of_subsets(holders, r, t), ranks_of_subsets(complement(holders, t), w, t) });
    }
    return result;
}

auto cffkit::biclique_cover_to_cff(const BicliqueCover & bc, const VerifyOptions & opts) -> SetSystem
{
    auto host = std::get_if<BiIntersectionHost>(&bc.host);
    if (! host)
        throw UsageError("biclique_cover_to_cff needs a bi_intersection host");
    require_structure(bc, opts);

    vector<Block> blocks(host->t);
    for (uint32_t j = 0 ; j < bc.bicliques.size() ; ++j) {
        vector<bool> in_left(host->t, false);
        for (auto id : bc.bicliques[j].left)
            for (auto i : unrank_subset(id, host->r, host->t))
                in_left[i] = true;
        for (uint32_t i = 0 ; i < host->t ; ++i)
            if (in_left[i])
                blocks[i].push_back(j);
    }
    return SetSystem(bc.bicliques.size(), std::move(blocks));
}

auto cffkit::kneser_cover(uint32_t t, uint32_t k, bool force) -> BicliqueCover
{
    if (k < 1 || k > t)
        throw UsageError("kneser_cover needs 1 <= k <= t");
    auto count = binomial(2 * t, t);
    if (! force && count > max_construction_points)
        throw CapacityError("kneser_cover would build " + to_string(count / 2) + " bicliques; use --force");

    BicliqueCover result{ KneserHost{ 2 * t, k }, binomial(2 * t - 2 * k, t - k), { } };
    // colex order visits every t-subset avoiding 2t-1 before any complement
    Subset a(t);
    for (uint32_t i = 0 ; i < t ; ++i)
        a[i] = i;
    do {
        if (a.back() == 2 * t - 1)
            break;
        result.bicliques.push_back(Biclique{ ranks_of_subsets(a, k, 2 * t), ranks_of_subsets(complement(a, 2 * t), k, 2 * t) });
    } while (next_colex(a, 2 * t));
    return result;
}

auto cffkit::kneser_to_bi_intersection(const BicliqueCover & kneser) -> BicliqueCover
{
    auto host = std::get_if<KneserHost>(&kneser.host);
    if (! host)
        throw UsageError("kneser_to_bi_intersection needs a kneser host");
    BicliqueCover result{ BiIntersectionHost{ host->t, host->k, host->k }, kneser.d, { } };
    for (auto & b : kneser.bicliques) {
        result.bicliques.push_back(b);
        result.bicliques.push_back(Biclique{ b.right, b.left });
    }
    return result;
}

auto cffkit::build_H(const SimpleGraph & g, uint32_t w) -> HostGraphSpec
{
    if (w + 2 > g.n_vertices())
        throw UsageError("build_H needs w <= n_vertices - 2");
    return DerivedHost{ g, w };
}

auto cffkit::covering_to_biclique_cover_H(const GraphCovering & c) -> BicliqueCover
{
    auto & g = c.graph();
    auto n = g.n_vertices();
    BicliqueCover result{ DerivedHost{ g, c.w() }, c.d(), { } };
    auto & edges = g.edges();
    for (auto & a : c.sets()) {
        Biclique b;
        for (uint64_t e = 0 ; e < edges.size() ; ++e)
            if (std::binary_search(a.begin(), a.end(), edges[e].first) && std::binary_search(a.begin(), a.end(), edges[e].second))
                b.left.push_back(e);
        b.right = ranks_of_subsets(complement(a, n), c.w(), n);
        result.bicliques.push_back(std::move(b));
    }
    return result;
}

auto cffkit::biclique_cover_H_to_covering(const BicliqueCover & bc, const VerifyOptions & opts) -> GraphCovering
{
    auto host = std::get_if<DerivedHost>(&bc.host);
    if (! host)
        throw UsageError("biclique_cover_H_to_covering needs a derived_h host");
    require_structure(bc, opts);

    auto & edges = host->graph.edges();
    vector<Subset> sets;
    for (auto & b : bc.bicliques) {
        Subset a;
        for (auto e : b.left) {
            a.push_back(edges[e].first);
            a.push_back(edges[e].second);
        }
        sets.push_back(std::move(a));
    }
    uint64_t d = bc.d.value_or(1);
    if (d > UINT32_MAX)
        throw UsageError("biclique_cover_H_to_covering: d does not fit a covering");
    return GraphCovering(host->graph, std::move(sets), host->w, static_cast<uint32_t>(d));
}

auto cffkit::covering_to_1w_cff(const GraphCovering & c, const VerifyOptions & opts) -> OneWCff
{
    auto & g = c.graph();
    if (g.n_edges() == 0)
        throw UsageError("covering_to_1w_cff needs a graph with at least one edge");
    auto report = verify_covering(c, opts);
    if (! report.ok)
        throw UsageError("covering_to_1w_cff needs a verified covering: " + report.witness.dump());

    auto n = g.n_vertices();
    auto & edges = g.edges();
    vector<Block> blocks;
    for (auto [u, v] : edges) {
        Block b;
        for (uint32_t j = 0 ; j < c.sets().size() ; ++j) {
            auto & a = c.sets()[j];
            if (std::binary_search(a.begin(), a.end(), u) && std::binary_search(a.begin(), a.end(), v))
                b.push_back(j);
        }
        blocks.push_back(std::move(b));
    }

    OneWCff result{ SetSystem(c.size(), blocks), true, nullptr, 0 };

    // blocked[x] = points lying in a block of some edge at x
    vector<Bitset> blocked(n, Bitset(c.size()));
    vector<Bitset> block_bits;
    for (uint32_t e = 0 ; e < edges.size() ; ++e) {
        Bitset bits(c.size());
        for (auto j : blocks[e])
            bits.set(j);
        blocked[edges[e].first] |= bits;
        blocked[edges[e].second] |= bits;
        block_bits.push_back(std::move(bits));
    }

    for (uint32_t e = 0 ; e < edges.size() && result.certificate_ok ; ++e) {
        auto [u, v] = edges[e];
        Subset others;
        for (uint32_t x = 0 ; x < n ; ++x)
            if (x != u && x != v)
                others.push_back(x);
        for_each_subset_of(others, c.w(), [&] (const Subset & w_set) {
                if (! result.certificate_ok)
                    return;
                Bitset free = block_bits[e];
                for (auto x : w_set)
                    free.subtract(blocked[x]);
                ++result.checks;
                auto count = free.count();
                if (count < c.d()) {
                    result.certificate_ok = false;
                    result.witness = Json{ { "edge", Json::array({ u, v }) }, { "W", w_set }, { "count", count } };
                }
                });
    }
    return result;
}

auto cffkit::to_json(const OneWCff & o) -> Json
{
    Json j;
    j["set_system"] = to_json(o.system);
    j["certificate"] = Json{ { "ok", o.certificate_ok }, { "checks", o.checks }, { "witness", o.witness } };
    return j;
}

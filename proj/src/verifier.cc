/* vim: set sw=4 sts=4 et foldmethod=syntax : */

#include <cffkit/verifier.hh>
#include <cffkit/errors.hh>

#include <algorithm>
#include <limits>
#include <string>
#include <thread>
#include <unordered_map>

using std::optional;
using std::string;
using std::to_string;
using std::uint32_t;
using std::uint64_t;
using std::vector;

namespace
{
    using cffkit::Bitset;
    using cffkit::Json;
    using cffkit::Subset;

    /// Result of scanning one contiguous slice of the enumeration.
    struct Partial
    {
        optional<uint64_t> min, max;
        uint64_t pairs = 0;
        Json witness = nullptr;

        auto observe(uint64_t count) -> void
        {
            ++pairs;
            if (! min || count < *min)
                min = count;
            if (! max || count > *max)
                max = count;
        }
    };

    /// Runs work(begin, end) over [0, n) split into at most `threads` slices
    /// and merges in slice order, so the first witness is the global first.
    template <typename F_>
    auto run_sliced(std::size_t n, unsigned threads, F_ work) -> Partial
    {
        threads = std::max(1u, std::min<unsigned>(threads, std::max<std::size_t>(n, 1)));
        vector<Partial> parts(threads);
        if (threads == 1)
            parts[0] = work(0, n);
        else {
            vector<std::thread> pool;
            for (unsigned i = 0 ; i < threads ; ++i) {
                std::size_t b = n * i / threads, e = n * (i + 1) / threads;
                pool.emplace_back([&, i, b, e] { parts[i] = work(b, e); });
            }
            for (auto & t : pool)
                t.join();
        }

        Partial result;
        for (auto & p : parts) {
            result.pairs += p.pairs;
            if (p.min && (! result.min || *p.min < *result.min))
                result.min = p.min;
            if (p.max && (! result.max || *p.max > *result.max))
                result.max = p.max;
            if (result.witness.is_null() && ! p.witness.is_null())
                result.witness = p.witness;
        }
        return result;
    }

    auto finish(Partial && p, uint64_t d) -> cffkit::VerifyReport
    {
        cffkit::VerifyReport report;
        report.achieved_d = p.min;
        report.max_d = p.max;
        report.pairs_checked = p.pairs;
        report.ok = ! p.min || *p.min >= d;
        if (! report.ok)
            report.witness = std::move(p.witness);
        return report;
    }

    auto complement_of(const Subset & s, uint32_t n) -> Subset
    {
        Subset result;
        std::size_t j = 0;
        for (uint32_t i = 0 ; i < n ; ++i) {
            if (j < s.size() && s[j] == i)
                ++j;
            else
                result.push_back(i);
        }
        return result;
    }
}

auto cffkit::to_json(const VerifyReport & r) -> Json
{
    Json j;
    j["ok"] = r.ok;
    if (r.achieved_d)
        j["achieved_d"] = *r.achieved_d;
    else
        j["achieved_d"] = "unbounded";
    j["witness"] = r.witness;
    j["pairs_checked"] = r.pairs_checked;
    if (r.partition)
        j["partition"] = *r.partition;
    return j;
}

auto cffkit::verify_cff(const SetSystem & s, const CffParams & p, const VerifyOptions & opts) -> VerifyReport
{
    auto t = s.t();
    if (p.r < 1 || p.d < 1)
        throw UsageError("verify_cff needs r >= 1 and d >= 1");
    if (p.r + p.w > t)
        throw UsageError("verify_cff needs r + w <= t (r=" + to_string(p.r) + ", w=" + to_string(p.w)
                + ", t=" + to_string(t) + ")");

    auto pairs = binomial(t, p.r);
    auto per_l = binomial(t - p.r, p.w);
    if (! opts.force && (pairs > max_cff_pairs || per_l > max_cff_pairs / pairs))
        throw CapacityError("verify_cff: C(t,r)*C(t-r,w) exceeds " + to_string(max_cff_pairs) + " pairs");

    auto bits = s.block_bits();
    vector<Subset> ls;
    {
        Subset l(p.r);
        for (uint32_t i = 0 ; i < p.r ; ++i)
            l[i] = i;
        do {
            ls.push_back(l);
        } while (next_combination(l, t));
    }

    auto work = [&] (std::size_t begin, std::size_t end) {
        Partial part;
        for (std::size_t li = begin ; li < end ; ++li) {
            auto & l = ls[li];
            Bitset inter = bits[l[0]];
            for (std::size_t i = 1 ; i < l.size() ; ++i)
                inter &= bits[l[i]];
            auto rest = complement_of(l, t);

            for_each_subset_of(rest, p.w, [&] (const Subset & m) {
                Bitset uni(s.n_points());
                for (auto x : m)
                    uni |= bits[x];
                uint64_t count = inter.count_minus(uni);
                part.observe(count);
                if (count < p.d && part.witness.is_null()) {
                    part.witness = Json::object();
                    part.witness["L"] = l;
                    part.witness["M"] = m;
                    part.witness["residual"] = count;
                }
            });
        }
        return part;
    };

    return finish(run_sliced(ls.size(), opts.threads, work), p.d);
}

auto cffkit::achieved_d(const SetSystem & s, uint32_t r, uint32_t w, const VerifyOptions & opts) -> optional<uint64_t>
{
    return verify_cff(s, CffParams{ r, w, 1 }, opts).achieved_d;
}

auto cffkit::verify_covering(const GraphCovering & c, const VerifyOptions & opts) -> VerifyReport
{
    return verify_covering_at(c, c.w(), c.d(), opts);
}

auto cffkit::verify_covering_at(const GraphCovering & c, uint32_t w, uint32_t d, const VerifyOptions & opts) -> VerifyReport
{
    auto & g = c.graph();
    auto n = g.n_vertices();
    if (d < 1)
        throw UsageError("verify_covering needs d >= 1");

    if (n < w + 2 || g.n_edges() == 0)
        return finish(Partial{ }, d);

    auto per_edge = binomial(n - 2, w);
    if (! opts.force && (per_edge > max_cff_pairs || g.n_edges() > max_cff_pairs / per_edge))
        throw CapacityError("verify_covering: |E| * C(n-2,w) exceeds " + to_string(max_cff_pairs) + " pairs");

    auto members = c.membership_bits();

    auto work = [&] (std::size_t begin, std::size_t end) {
        Partial part;
        for (std::size_t ei = begin ; ei < end ; ++ei) {
            auto [u, v] = g.edges()[ei];
            Bitset both = members[u];
            both &= members[v];

            Subset rest;
            for (uint32_t x = 0 ; x < n ; ++x)
                if (x != u && x != v)
                    rest.push_back(x);

            for_each_subset_of(rest, w, [&] (const Subset & excluded) {
                Bitset uni(c.size());
                for (auto x : excluded)
                    uni |= members[x];
                uint64_t count = both.count_minus(uni);
                part.observe(count);
                if (count < d && part.witness.is_null()) {
                    part.witness = Json::object();
                    part.witness["edge"] = { u, v };
                    part.witness["W"] = excluded;
                    part.witness["count"] = count;
                }
            });
        }
        return part;
    };

    return finish(run_sliced(g.n_edges(), opts.threads, work), d);
}

namespace
{
    using cffkit::HostGraphSpec;

    /// Calls f(left, right) for every host edge in canonical order: left id
    /// ascending then right id ascending; Kneser edges once with left < right.
    template <typename F_>
    auto for_each_host_edge(const HostGraphSpec & host, F_ f) -> void
    {
        std::visit([&] (const auto & h) {
            using T = std::decay_t<decltype(h)>;
            if constexpr (std::is_same_v<T, cffkit::ExplicitHost>) {
                for (auto [l, r] : h.edges)
                    f(l, r);
            }
            else if constexpr (std::is_same_v<T, cffkit::DerivedHost>) {
                auto n = h.graph.n_vertices();
                if (n < h.w + 2)
                    return;
                for (uint32_t ei = 0 ; ei < h.graph.n_edges() ; ++ei) {
                    auto [u, v] = h.graph.edges()[ei];
                    Subset rest;
                    for (uint32_t x = 0 ; x < n ; ++x)
                        if (x != u && x != v)
                            rest.push_back(x);
                    vector<uint64_t> ranks;
                    cffkit::for_each_subset_of(rest, h.w, [&] (const Subset & s) {
                        ranks.push_back(cffkit::rank_subset(s, n));
                    });
                    std::sort(ranks.begin(), ranks.end());
                    for (auto r : ranks)
                        f(ei, r);
                }
            }
            else {
                uint32_t t, ls, rs;
                if constexpr (std::is_same_v<T, cffkit::BiIntersectionHost>) {
                    t = h.t;
                    ls = h.r;
                    rs = h.w;
                }
                else {
                    t = h.t;
                    ls = h.k;
                    rs = h.k;
                }
                auto lefts = cffkit::all_subsets_colex(t, ls);
                for (uint64_t li = 0 ; li < lefts.size() ; ++li) {
                    auto rest = complement_of(lefts[li], t);
                    vector<uint64_t> ranks;
                    cffkit::for_each_subset_of(rest, rs, [&] (const Subset & s) {
                        ranks.push_back(cffkit::rank_subset(s, t));
                    });
                    std::sort(ranks.begin(), ranks.end());
                    for (auto r : ranks)
                        if (! cffkit::host_is_symmetric(host) || li < r)
                            f(li, r);
                }
            }
        }, host);
    }
}

auto cffkit::verify_biclique_cover(const BicliqueCover & bc, const VerifyOptions & opts) -> VerifyReport
{
    validate_host(bc.host);
    auto edge_count = host_edge_count(bc.host);
    if (! opts.force && edge_count > max_host_edges)
        throw CapacityError("verify_biclique_cover: host has more than " + to_string(max_host_edges) + " edges");

    uint64_t n_right = host_right_count(bc.host);
    bool symmetric = host_is_symmetric(bc.host);
    auto key = [&] (uint64_t l, uint64_t r) {
        if (symmetric && r < l)
            std::swap(l, r);
        return l * n_right + r;
    };

    VerifyReport report;
    std::unordered_map<uint64_t, uint64_t> counts;
    uint64_t incidences = 0;
    for (std::size_t j = 0 ; j < bc.bicliques.size() ; ++j) {
        auto left = bc.bicliques[j].left, right = bc.bicliques[j].right;
        std::sort(left.begin(), left.end());
        left.erase(std::unique(left.begin(), left.end()), left.end());
        std::sort(right.begin(), right.end());
        right.erase(std::unique(right.begin(), right.end()), right.end());

        incidences += left.size() * right.size();
        if (! opts.force && incidences > max_cff_pairs)
            throw CapacityError("verify_biclique_cover: biclique incidences exceed " + to_string(max_cff_pairs));

        for (auto l : left)
            for (auto r : right) {
                if (! host_adjacent(bc.host, l, r)) {
                    report.ok = false;
                    report.structural_failure = true;
                    report.achieved_d = 0;
                    report.witness = Json::object();
                    report.witness["kind"] = "non_edge";
                    report.witness["biclique"] = j;
                    report.witness["left"] = encode_vertex(bc.host, true, l);
                    report.witness["right"] = encode_vertex(bc.host, false, r);
                    return report;
                }
                ++counts[key(l, r)];
            }
    }

    // Unbounded target: only an edgeless host satisfies it.
    uint64_t d = bc.d.value_or(std::numeric_limits<uint64_t>::max());
    Partial part;
    bool exact = true;
    for_each_host_edge(bc.host, [&] (uint64_t l, uint64_t r) {
        auto it = counts.find(key(l, r));
        uint64_t c = it == counts.end() ? 0 : it->second;
        part.observe(c);
        if (c != d)
            exact = false;
        if (c < d && part.witness.is_null()) {
            part.witness = Json::object();
            part.witness["kind"] = "undercovered_edge";
            part.witness["left"] = encode_vertex(bc.host, true, l);
            part.witness["right"] = encode_vertex(bc.host, false, r);
            part.witness["count"] = c;
        }
    });

    report = finish(std::move(part), d);
    report.partition = report.ok && exact;
    return report;
}

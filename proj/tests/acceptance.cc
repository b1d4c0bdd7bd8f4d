#include <cffkit/bounds.hh>
#include <cffkit/constructions.hh>
#include <cffkit/coverings.hh>
#include <cffkit/dualities.hh>
#include <cffkit/io.hh>
#include <cffkit/keyring.hh>
#include <cffkit/subsets.hh>
#include <cffkit/verifier.hh>

#include "helpers.hh"

#include <chrono>
#include <cmath>
#include <cstdio>
#include <filesystem>
#include <functional>
#include <numbers>
#include <random>
#include <set>
#include <string>
#include <vector>

using namespace cffkit;

namespace
{
    struct Outcome
    {
        bool ok = true;
        std::string detail;
        Json output = Json::object();

        auto require(bool cond, const std::string & what) -> void
        {
            if (! cond && ok) {
                ok = false;
                detail = what;
            }
            else if (! cond)
                detail += "; " + what;
        }
    };

    auto str(std::uint64_t v) -> std::string
    {
        return std::to_string(v);
    }

    auto opt_str(const std::optional<std::uint64_t> & v) -> std::string
    {
        return v ? std::to_string(*v) : std::string("unbounded");
    }

    auto criterion1() -> Outcome
    {
        Outcome o;
        const std::vector<std::pair<std::uint32_t, std::uint32_t>> cases{ { 2, 1 }, { 3, 1 }, { 3, 2 }, { 4, 2 } };
        const std::vector<std::uint64_t> want_n{ 6, 20, 20, 70 };
        const std::vector<std::uint32_t> want_d{ 2, 6, 2, 6 };
        for (std::size_t i = 0 ; i < cases.size() ; ++i) {
            auto [t, k] = cases[i];
            auto tag = "(" + str(t) + "," + str(k) + ")";
            auto s = optimal_kk(t, k);
            auto rep = verify_cff(s, { k, k, want_d[i] });
            auto bc = cff_to_biclique_cover(s, k, k);
            auto bc_rep = verify_biclique_cover(bc);
            o.require(s.n_points() == want_n[i], tag + " n=" + str(s.n_points()));
            o.require(s.n_points() == binomial(2 * t, t), tag + " n != C(2t,t)");
            o.require(rep.ok, tag + " verify failed");
            o.require(rep.achieved_d == want_d[i], tag + " achieved_d=" + opt_str(rep.achieved_d));
            o.require(rep.max_d == want_d[i], tag + " max residual=" + opt_str(rep.max_d));
            o.require(bc_rep.ok && bc_rep.partition == true, tag + " not a biclique partition");
            o.output[tag] = { { "set_system", to_json(s) }, { "verify", to_json(rep) },
                { "partition", to_json(bc_rep) } };
        }
        return o;
    }

    auto criterion2() -> Outcome
    {
        Outcome o;
        const std::vector<std::pair<std::uint32_t, std::uint32_t>> cases{ { 2, 1 }, { 3, 2 } };
        const std::vector<std::uint64_t> want_count{ 3, 10 };
        for (std::size_t i = 0 ; i < cases.size() ; ++i) {
            auto [t, k] = cases[i];
            auto tag = "(" + str(t) + "," + str(k) + ")";
            auto bc = kneser_cover(t, k);
            auto rep = verify_biclique_cover(bc);
            o.require(bc.bicliques.size() == want_count[i], tag + " bicliques=" + str(bc.bicliques.size()));
            o.require(bc.bicliques.size() == binomial(2 * t, t) / 2, tag + " count != C(2t,t)/2");
            o.require(bc.d == 2u, tag + " declared d");
            o.require(rep.ok && rep.achieved_d == 2u && rep.max_d == 2u, tag + " coverage not exactly 2");
            o.require(rep.partition == true, tag + " not a partition");
            o.output[tag] = { { "cover", to_json(bc) }, { "verify", to_json(rep) } };
        }
        return o;
    }

    auto sperner_scan(std::uint64_t t) -> std::uint32_t
    {
        std::uint32_t c = 0;
        while (binomial(c, c / 2) < t)
            ++c;
        return c;
    }

    auto criterion3() -> Outcome
    {
        Outcome o;
        const std::vector<std::uint64_t> ts{ 2, 3, 4, 6, 7, 10, 20, 35 };
        const std::vector<std::uint32_t> want{ 2, 3, 4, 4, 5, 5, 6, 7 };
        for (std::size_t i = 0 ; i < ts.size() ; ++i) {
            auto r = sperner_number(ts[i]);
            o.require(r == want[i], "R(" + str(ts[i]) + ")=" + str(r));
            o.require(r == sperner_scan(ts[i]), "R(" + str(ts[i]) + ") disagrees with scan");
            o.output["R"][str(ts[i])] = r;
        }
        for (std::uint32_t t = 2 ; t <= 50 ; ++t) {
            auto s = sperner_cff(t);
            auto rep = verify_cff(s, { 1, 1, 1 });
            o.require(rep.ok, "sperner_cff(" + str(t) + ") fails (1,1,1)");
            o.output["sperner_cff"][str(t)] = { { "n_points", s.n_points() }, { "ok", rep.ok } };
        }
        return o;
    }

    auto criterion4() -> Outcome
    {
        Outcome o;
        for (std::uint32_t t : { 3u, 4u, 5u }) {
            auto tag = "t=" + str(t);
            auto s1 = subset_design(t, 2), s2 = sperner_cff(t);

            auto d1 = double_21(s1, s2, 1, DoublingMode::Paper);
            auto r1 = verify_cff(d1, { 2, 1, 1 });
            o.require(r1.ok, tag + " d=1 paper fails");
            o.require(d1.n_points() == s1.n_points() + s2.n_points() + 2, tag + " d=1 point count");
            o.require(d1.t() == 2 * t, tag + " d=1 block count");

            auto rs1 = replicate(s1, 2), rs2 = replicate(s2, 2);
            auto safe = double_21(rs1, rs2, 2, DoublingMode::Safe);
            auto r2 = verify_cff(safe, { 2, 1, 2 });
            o.require(r2.ok, tag + " d=2 safe fails");
            o.require(safe.n_points() == rs1.n_points() + rs2.n_points() + 4, tag + " d=2 safe point count");

            auto paper2 = double_21(rs1, rs2, 2, DoublingMode::Paper);
            auto r3 = verify_cff(paper2, { 2, 1, 2 });

            o.output[tag] = { { "paper_d1", to_json(r1) }, { "safe_d2", to_json(r2) },
                { "paper_d2_recorded", to_json(r3) }, { "paper_d1_points", d1.n_points() },
                { "safe_d2_points", safe.n_points() }, { "paper_d2_points", paper2.n_points() } };
        }

        auto s1 = subset_design(4, 2), s2 = subset_design(4, 2);
        auto d22 = double_22(s1, s2, 1, DoublingMode::Paper);
        auto r22 = verify_cff(d22, { 2, 2, 1 });
        o.require(r22.ok, "double_22 t=4 fails (2,2,1)");
        o.require(d22.t() == 8, "double_22 block count");
        o.output["double_22"] = { { "n_points", d22.n_points() }, { "verify", to_json(r22) } };
        return o;
    }

    auto criterion5() -> Outcome
    {
        Outcome o;
        const std::vector<std::uint32_t> ts{ 4, 8, 16 };
        const std::vector<std::uint64_t> want_bound{ 8, 24, 40 };
        for (std::size_t i = 0 ; i < ts.size() ; ++i) {
            auto t = ts[i];
            auto tag = "t=" + str(t);
            auto bound = 2ull * sperner_number(t / 2) * ceil_log2(t);
            o.require(bound == want_bound[i], tag + " bound=" + str(bound));
            auto s = ks_compose(t);
            auto rep = verify_cff(s, { 2, 1, 1 });
            o.require(rep.ok, tag + " fails (2,1,1)");
            o.require(s.t() == t, tag + " block count");
            o.require(s.n_points() <= bound, tag + " points=" + str(s.n_points()));
            o.output[tag] = { { "n_points", s.n_points() }, { "bound", bound }, { "verify", to_json(rep) } };
        }
        return o;
    }

    struct NamedCovering
    {
        std::string name;
        GraphCovering covering;
    };

    auto criterion6_coverings() -> std::vector<NamedCovering>
    {
        std::vector<NamedCovering> out;
        for (std::uint32_t n = 2 ; n <= 64 ; ++n)
            out.push_back({ "path " + str(n), path_covering(n) });
        for (std::uint32_t n = 3 ; n <= 32 ; ++n)
            out.push_back({ "cycle " + str(n), cycle_covering(n) });
        out.push_back({ "grid 4x4", grid_covering(4, 4) });
        std::mt19937_64 rng(20240601);
        for (int i = 0 ; i < 25 ; ++i) {
            auto n = 2 + static_cast<std::uint32_t>(rng() % 30);
            out.push_back({ "tree " + str(i), tree_covering(cffkit::testing::random_tree(rng, n)) });
        }
        return out;
    }

    auto tree_bound(const SimpleGraph & g) -> std::uint64_t
    {
        std::uint32_t branch = 0;
        for (std::uint32_t v = 0 ; v < g.n_vertices() ; ++v)
            if (g.degree(v) >= 3)
                ++branch;
        return 2ull * ceil_log2(g.n_edges()) + sperner_number(g.max_degree()) + branch;
    }

    auto criterion6(const std::vector<NamedCovering> & all) -> Outcome
    {
        Outcome o;
        for (auto & [name, c] : all) {
            auto rep = verify_covering(c);
            o.require(rep.ok, name + " fails verification");
            auto n = c.graph().n_vertices();
            std::uint64_t bound = 0;
            if (name.starts_with("path"))
                // P_2 is a single edge: one set, below the degenerate 2 ceil(log2 1) = 0
                bound = n == 2 ? 1 : 2ull * ceil_log2(n - 1);
            else if (name.starts_with("cycle"))
                bound = 2ull * ceil_log2(n) + 1;
            else if (name.starts_with("grid"))
                bound = 10;
            else {
                o.require(c.graph().n_edges() <= 30, name + " has more than 30 edges");
                bound = tree_bound(c.graph());
            }
            o.require(c.size() <= bound, name + " size " + str(c.size()) + " > " + str(bound));
            o.output[name] = { { "size", c.size() }, { "bound", bound }, { "ok", rep.ok },
                { "pairs_checked", rep.pairs_checked }, { "sets", c.sets() } };
        }
        return o;
    }

    auto criterion7() -> Outcome
    {
        Outcome o;
        auto g = cycle_graph(5);
        auto params = lll_size(g, 1, 2.0 / 3.0);

        double q = 1.0 - (2.0 / 3.0) * (2.0 / 3.0) * (1.0 / 3.0);
        // D: events (e, W) whose vertex sets meet a given event's, including itself; maximised
        std::vector<std::pair<Edge, std::uint32_t>> events;
        for (auto e : g.edges())
            for (std::uint32_t x = 0 ; x < 5 ; ++x)
                if (x != e.first && x != e.second)
                    events.emplace_back(e, x);
        std::uint64_t D = 0;
        for (auto & [e, x] : events) {
            std::set<std::uint32_t> mine{ e.first, e.second, x };
            std::uint64_t count = 0;
            for (auto & [f, y] : events)
                if (mine.contains(f.first) || mine.contains(f.second) || mine.contains(y))
                    ++count;
            D = std::max(D, count);
        }
        auto N = static_cast<std::uint64_t>(std::ceil(std::log2(std::numbers::e * static_cast<double>(D + 1))
                    / -std::log2(q)));

        o.require(std::abs(params.q - 23.0 / 27.0) < 1e-12, "q=" + std::to_string(params.q));
        o.require(std::abs(q - 23.0 / 27.0) < 1e-12, "oracle q");
        o.require(params.dependency == 15 && D == 15, "D=" + str(params.dependency) + " oracle " + str(D));
        o.require(params.rows == 24 && N == 24, "N=" + str(params.rows) + " oracle " + str(N));

        auto res = lll_covering(g, 1, 2.0 / 3.0, 7);
        auto rep = verify_covering(res.covering);
        o.require(rep.ok, "lll covering fails verification");
        o.require(res.params.attempts <= res.params.max_attempts, "attempt cap exceeded");
        o.output = { { "params", to_json(params) }, { "oracle", { { "D", D }, { "N", N } } },
            { "result", to_json(res.params) }, { "covering", to_json(res.covering) } };
        return o;
    }

    auto criterion8() -> Outcome
    {
        Outcome o;
        std::mt19937_64 rng(8);
        Json systems = Json::array();
        for (int i = 0 ; i < 200 ; ++i) {
            auto t = 2 + static_cast<std::uint32_t>(rng() % 6);
            auto n = 1 + static_cast<std::uint32_t>(rng() % 8);
            std::vector<Block> blocks(t);
            for (auto & b : blocks)
                for (std::uint32_t x = 0 ; x < n ; ++x)
                    if (rng() % 2)
                        b.push_back(x);
            SetSystem s(n, blocks);
            Json entry = Json::object();
            for (std::uint32_t r = 1 ; r <= 2 ; ++r)
                for (std::uint32_t w = 1 ; w <= 2 ; ++w) {
                    if (r + w > t)
                        continue;
                    auto before = achieved_d(s, r, w);
                    auto bc = cff_to_biclique_cover(s, r, w);
                    auto after = achieved_d(biclique_cover_to_cff(bc), r, w);
                    o.require(before == after, "system " + str(i) + " (" + str(r) + "," + str(w) + ") "
                            + opt_str(before) + " -> " + opt_str(after));
                    entry[str(r) + "," + str(w)] = opt_str(before);
                }
            systems.push_back(entry);
        }
        o.output["systems"] = systems;

        std::vector<NamedCovering> inputs{ { "star", star_covering(5, 1, 1) }, { "cycle", cycle_covering(9) },
            { "grid", grid_covering(3, 4) } };
        for (auto & [name, c] : std::vector<NamedCovering>(inputs))
            if (c.size() > 1) {
                auto sets = c.sets();
                sets.pop_back();
                inputs.push_back({ name + " minus one set", GraphCovering(c.graph(), sets, c.w(), c.d()) });
            }
        for (auto & [name, c] : inputs) {
            auto rep = verify_covering(c);
            auto bc = covering_to_biclique_cover_H(c);
            auto bc_rep = verify_biclique_cover(bc);
            auto back = biclique_cover_H_to_covering(bc);
            auto back_rep = verify_covering(back);
            o.require(rep.ok == bc_rep.ok && rep.ok == back_rep.ok, name + " verdicts differ");
            o.require(bc.bicliques.size() == c.size() && back.size() == c.size(), name + " counts differ");
            o.require(back.sets() == c.sets(), name + " sets differ after round trip");
            o.output[name] = { { "ok", rep.ok }, { "bicliques", bc.bicliques.size() }, { "size", back.size() } };
        }
        return o;
    }

    auto criterion9(const std::vector<NamedCovering> & all) -> Outcome
    {
        Outcome o;
        std::uint64_t seed = 9;
        for (auto & [name, c] : all) {
            if (! verify_covering(c).ok)
                continue;
            if (c.w() + 2 > c.graph().n_vertices()) {
                o.output[name] = "no coalition of size w fits";
                continue;
            }
            auto dep = derive_keyrings(c);
            auto sim = resilience_mc(dep, c.w(), 1000, seed++);
            o.require(sim.compromised_fraction == 0.0, name + " fraction " + std::to_string(sim.compromised_fraction));
            o.output[name] = to_json(sim);
        }
        return o;
    }

    auto property_checks() -> Outcome
    {
        Outcome o;
        for (std::uint32_t t = 2 ; t <= 12 ; ++t) {
            auto c = bipartite_covering(t, t, 1);
            auto need = 1.637 * std::log2(static_cast<double>(t));
            o.require(c.size() >= need, "K_{" + str(t) + "," + str(t) + "} size " + str(c.size()));
            o.require(c.size() >= lower_form1(std::uint64_t{t} * t), "K_{t,t} below form 1 at t=" + str(t));
        }
        auto reports = lower_bounds(100, 3);
        for (auto & r : erdos_report(10))
            reports.push_back(r);
        for (auto & r : reports)
            o.require(! r.assumptions.empty(), r.name + " has no assumption tag");
        return o;
    }

    using Criterion = std::function<Outcome ()>;

    struct Timed
    {
        Outcome outcome;
        double seconds;
    };

    auto run(const Criterion & f) -> Timed
    {
        auto start = std::chrono::steady_clock::now();
        Outcome o;
        try {
            o = f();
        }
        catch (const std::exception & e) {
            o.ok = false;
            o.detail = std::string("exception: ") + e.what();
        }
        std::chrono::duration<double> took = std::chrono::steady_clock::now() - start;
        return { std::move(o), took.count() };
    }

    auto report(const std::string & label, bool ok, const std::string & detail) -> bool
    {
        std::printf("%s %s%s%s\n", ok ? "PASS" : "FAIL", label.c_str(), detail.empty() ? "" : ": ", detail.c_str());
        return ok;
    }
}

auto main() -> int
{
    namespace fs = std::filesystem;

    const std::vector<std::string> names{ "exact optimal family", "kneser cover", "sperner numbers", "doubling",
        "katona-szemeredi composition", "graph coverings", "lll sizing and sampling", "duality round trips",
        "deployment guarantee" };
    const std::vector<double> limits{ 5, 5, 1, 60, 10, 60, 30, 60, 30 };

    auto criteria = [] () -> std::vector<Criterion> {
        auto coverings = std::make_shared<std::vector<NamedCovering>>();
        return {
            criterion1, criterion2, criterion3, criterion4, criterion5,
            [coverings] {
                *coverings = criterion6_coverings();
                return criterion6(*coverings);
            },
            criterion7, criterion8,
            [coverings] { return criterion9(*coverings); }
        };
    };

    bool all_ok = true;
    std::vector<std::vector<std::string>> outputs(2);
    for (int pass = 0 ; pass < 2 ; ++pass) {
        auto dir = fs::path("acceptance_output") / ("run" + std::to_string(pass + 1));
        fs::create_directories(dir);
        auto list = criteria();
        for (std::size_t i = 0 ; i < list.size() ; ++i) {
            auto [o, secs] = run(list[i]);
            auto text = dump(o.output);
            auto file = dir / ("criterion" + std::to_string(i + 1) + ".json");
            write_file(file.string(), text);
            outputs[pass].push_back(read_file(file.string()));
            if (pass == 0) {
                char timing[64];
                std::snprintf(timing, sizeof timing, " (%.3f s, limit %.0f s)", secs, limits[i]);
                auto detail = o.detail;
                if (secs >= limits[i])
                    detail += (detail.empty() ? "" : "; ") + std::string("over time limit");
                all_ok &= report(std::to_string(i + 1) + ". " + names[i] + timing, o.ok && secs < limits[i], detail);
            }
        }
    }

    std::string mismatched;
    for (std::size_t i = 0 ; i < outputs[0].size() ; ++i)
        if (outputs[0][i] != outputs[1][i])
            mismatched += (mismatched.empty() ? "criterion " : ", ") + std::to_string(i + 1);
    all_ok &= report("10. determinism (byte-identical outputs of criteria 1-9 across two runs)",
            mismatched.empty(), mismatched.empty() ? "" : mismatched + " differ");

    auto [props, secs] = run(property_checks);
    all_ok &= report("asymptotic property checks (K_{t,t} >= 1.637 log2 t, assumption tags)", props.ok, props.detail);

    return all_ok ? 0 : 1;
}

/* vim: set sw=4 sts=4 et foldmethod=syntax : */

#include <cffkit/bounds.hh>
#include <cffkit/constructions.hh>
#include <cffkit/coverings.hh>
#include <cffkit/dualities.hh>
#include <cffkit/errors.hh>
#include <cffkit/io.hh>
#include <cffkit/keyring.hh>
#include <cffkit/verifier.hh>

#include <CLI11.hpp>

#include <functional>
#include <iostream>
#include <optional>
#include <string>

using namespace cffkit;

using std::cerr;
using std::optional;
using std::string;
using std::uint32_t;
using std::uint64_t;

namespace
{
    struct Globals
    {
        bool json = false;
        string out;
        bool no_verify = false;
        bool force = false;
        unsigned threads = 1;
        bool matrix = false;

        auto verify_options() const -> VerifyOptions { return { force, threads }; }
        auto covering_options() const -> CoveringOptions { return { ! no_verify, verify_options() }; }
    };

    Globals globals;

    auto emit(const string & text) -> void
    {
        if (globals.out.empty())
            std::cout << text << std::flush;
        else
            write_file(globals.out, text);
    }

    auto emit_json(const Json & j) -> void
    {
        emit(dump(j));
    }

    auto emit_set_system(const SetSystem & s) -> void
    {
        emit(globals.matrix ? to_matrix_text(s) : dump(to_json(s)));
    }

    auto emit_report(const VerifyReport & r) -> int
    {
        if (globals.json)
            emit_json(to_json(r));
        else {
            string text = string("result: ") + (r.ok ? "ok" : "failed") + "\n";
            text += "achieved_d: " + (r.achieved_d ? std::to_string(*r.achieved_d) : string("unbounded")) + "\n";
            if (r.partition)
                text += string("partition: ") + (*r.partition ? "true" : "false") + "\n";
            text += "pairs_checked: " + std::to_string(r.pairs_checked) + "\n";
            if (! r.ok)
                text += "witness: " + r.witness.dump() + "\n";
            emit(text);
        }
        if (! r.ok && ! globals.out.empty())
            cerr << "verification failed; witness: " << r.witness.dump() << "\n";
        return r.ok ? 0 : 1;
    }

    auto emit_bounds(const std::vector<BoundReport> & bs) -> void
    {
        if (globals.json)
            emit_json(to_json(bs));
        else
            emit(to_table(bs));
    }

    auto load_set_system(const string & path) -> SetSystem
    {
        return parse_set_system(read_file(path));
    }

    auto load_covering(const string & path) -> GraphCovering
    {
        return covering_from_json(read_json_file(path));
    }

    auto load_graph(const string & path) -> SimpleGraph
    {
        return graph_from_json(read_json_file(path));
    }

    auto parse_mode(const string & s) -> DoublingMode
    {
        return s == "safe" ? DoublingMode::Safe : DoublingMode::Paper;
    }

    auto leaf(CLI::App * group, const string & name, const string & description) -> CLI::App *
    {
        auto sub = group->add_subcommand(name, description);
        sub->fallthrough();
        return sub;
    }
}

auto main(int argc, char * argv[]) -> int
{
    CLI::App app{ "cffkit: cover-free families, graph coverings and biclique covers" };
    app.require_subcommand(1);

    app.add_flag("--json", globals.json, "Machine-readable JSON output for reports");
    app.add_option("--out", globals.out, "Write output to FILE instead of standard output");
    app.add_flag("--no-verify", globals.no_verify, "Skip self-verification inside constructions");
    app.add_flag("--force", globals.force, "Override capacity guards");
    app.add_option("--threads", globals.threads, "Worker threads for verification")->check(CLI::Range(1u, 1024u));

    std::function<int ()> action;

    auto group = [&] (const string & name, const string & description) {
        auto g = app.add_subcommand(name, description);
        g->require_subcommand(1);
        g->fallthrough();
        return g;
    };

    // construct
    auto construct = group("construct", "Build cover-free families");
    construct->add_flag("--matrix", globals.matrix, "Emit the 0/1 incidence matrix instead of JSON");

    uint32_t t = 0, k = 0, d = 1, w = 1, r = 1, n = 0, t1 = 0, t2 = 0;
    string left, right, mode = "paper", in, file, graph, a, b, c_choice = "all";
    optional<double> p;
    uint64_t seed = 0, max_attempts = 1000, m = 0, trials = 1000;
    uint32_t coalition = 0;

    {
        auto s = leaf(construct, "sperner", "Antichain (1,1;1)-CFF");
        s->add_option("--t", t, "Number of blocks")->required();
        s->callback([&] { action = [&] { emit_set_system(sperner_cff(t)); return 0; }; });

        s = leaf(construct, "optimal-kk", "(k,k;d)-CFF(C(2t,t), 2t)");
        s->add_option("--t", t)->required();
        s->add_option("--k", k)->required();
        s->callback([&] { action = [&] { emit_set_system(optimal_kk(t, k, globals.force)); return 0; }; });

        for (auto name : { "double21", "double22" }) {
            bool is21 = string(name) == "double21";
            s = leaf(construct, name, is21 ? "Doubling (2,1;d)-CFF" : "Doubling (2,2;d)-CFF");
            s->add_option("--left", left, "First ingredient file")->required();
            s->add_option("--right", right, "Second ingredient file")->required();
            s->add_option("--d", d)->required();
            s->add_option("--mode", mode)->check(CLI::IsMember({ "paper", "safe" }));
            s->callback([&, is21] { action = [&, is21] {
                DoublingOptions opts{ ! globals.no_verify, globals.force };
                auto s1 = load_set_system(left), s2 = load_set_system(right);
                emit_set_system(is21 ? double_21(s1, s2, d, parse_mode(mode), opts) : double_22(s1, s2, d, parse_mode(mode), opts));
                return 0;
            }; });
        }

        s = leaf(construct, "replicate", "Replace every point by d copies");
        s->add_option("--in", in)->required();
        s->add_option("--d", d)->required();
        s->callback([&] { action = [&] { emit_set_system(replicate(load_set_system(in), d)); return 0; }; });

        s = leaf(construct, "ks-compose", "(2,1;1)-CFF from bipartite coverings over binary splits");
        s->add_option("--t", t)->required();
        s->callback([&] { action = [&] { emit_set_system(ks_compose(t)); return 0; }; });
    }

    // cover
    auto cover = group("cover", "Build graph coverings");
    {
        auto s = leaf(cover, "star", "Covering of K_{1,t}");
        s->add_option("--t", t)->required();
        s->add_option("--w", w)->required();
        s->add_option("--d", d)->required();
        s->callback([&] { action = [&] { emit_json(to_json(star_covering(t, w, d, globals.covering_options()))); return 0; }; });

        s = leaf(cover, "bipartite", "Covering of K_{t1,t2}");
        s->add_option("--t1", t1)->required();
        s->add_option("--t2", t2)->required();
        s->add_option("--d", d)->required();
        s->callback([&] { action = [&] { emit_json(to_json(bipartite_covering(t1, t2, d, globals.covering_options()))); return 0; }; });

        s = leaf(cover, "path", "Covering of P_n");
        s->add_option("--n", n)->required();
        s->callback([&] { action = [&] { emit_json(to_json(path_covering(n, globals.covering_options()))); return 0; }; });

        s = leaf(cover, "cycle", "Covering of C_n");
        s->add_option("--n", n)->required();
        s->callback([&] { action = [&] { emit_json(to_json(cycle_covering(n, globals.covering_options()))); return 0; }; });

        s = leaf(cover, "tree", "Covering of a tree");
        s->add_option("--graph", graph)->required();
        s->callback([&] { action = [&] { emit_json(to_json(tree_covering(load_graph(graph), globals.covering_options()))); return 0; }; });

        s = leaf(cover, "product", "Covering of a Cartesian product");
        s->add_option("--a", a)->required();
        s->add_option("--b", b)->required();
        s->callback([&] { action = [&] {
            emit_json(to_json(product_covering(load_covering(a), load_covering(b), globals.covering_options())));
            return 0;
        }; });

        s = leaf(cover, "grid", "Covering of the grid P_t1 x P_t2");
        s->add_option("--t1", t1)->required();
        s->add_option("--t2", t2)->required();
        s->callback([&] { action = [&] { emit_json(to_json(grid_covering(t1, t2, globals.covering_options()))); return 0; }; });

        s = leaf(cover, "lll", "Random covering sized by the local lemma");
        s->add_option("--graph", graph)->required();
        s->add_option("--w", w)->required();
        s->add_option("--p", p);
        s->add_option("--seed", seed)->required();
        s->add_option("--max-attempts", max_attempts)->check(CLI::PositiveNumber);
        s->callback([&] { action = [&] {
            auto result = lll_covering(load_graph(graph), w, p, seed, max_attempts, globals.verify_options());
            auto j = to_json(result.covering);
            j["lll"] = to_json(result.params);
            emit_json(j);
            return 0;
        }; });
    }

    // verify
    auto verify = group("verify", "Exhaustively check a family, covering or biclique cover");
    {
        auto s = leaf(verify, "cff", "Check the (r,w;d) property");
        s->add_option("--file", file)->required();
        s->add_option("--r", r)->required();
        s->add_option("--w", w)->required();
        s->add_option("--d", d)->required();
        s->callback([&] { action = [&] {
            return emit_report(verify_cff(load_set_system(file), { r, w, d }, globals.verify_options()));
        }; });

        s = leaf(verify, "covering", "Check a (w,d)-covering");
        s->add_option("--file", file)->required();
        s->callback([&] { action = [&] { return emit_report(verify_covering(load_covering(file), globals.verify_options())); }; });

        s = leaf(verify, "bicliques", "Check a d-biclique cover");
        s->add_option("--file", file)->required();
        s->callback([&] { action = [&] {
            return emit_report(verify_biclique_cover(biclique_cover_from_json(read_json_file(file)), globals.verify_options()));
        }; });
    }

    // convert
    auto convert = group("convert", "Translate between families, coverings and biclique covers");
    {
        auto s = leaf(convert, "cff-to-bicliques", "Family to a biclique cover of I_t(r,w)");
        s->add_option("--file", file)->required();
        s->add_option("--r", r)->required();
        s->add_option("--w", w)->required();
        s->callback([&] { action = [&] {
            emit_json(to_json(cff_to_biclique_cover(load_set_system(file), r, w, globals.verify_options())));
            return 0;
        }; });

        s = leaf(convert, "bicliques-to-cff", "Biclique cover of I_t(r,w) to a family");
        s->add_option("--file", file)->required();
        s->callback([&] { action = [&] {
            emit_set_system(biclique_cover_to_cff(biclique_cover_from_json(read_json_file(file)), globals.verify_options()));
            return 0;
        }; });

        s = leaf(convert, "covering-to-h", "Covering to a biclique cover of the derived host");
        s->add_option("--file", file)->required();
        s->callback([&] { action = [&] { emit_json(to_json(covering_to_biclique_cover_H(load_covering(file)))); return 0; }; });

        s = leaf(convert, "h-to-covering", "Biclique cover of the derived host to a covering");
        s->add_option("--file", file)->required();
        s->callback([&] { action = [&] {
            emit_json(to_json(biclique_cover_H_to_covering(biclique_cover_from_json(read_json_file(file)), globals.verify_options())));
            return 0;
        }; });

        s = leaf(convert, "covering-to-cff", "Covering to its key-intersection family with a certificate");
        s->add_option("--file", file)->required();
        s->callback([&] { action = [&] {
            auto result = covering_to_1w_cff(load_covering(file), globals.verify_options());
            emit_json(to_json(result));
            if (! result.certificate_ok)
                cerr << "certificate failed; witness: " << result.witness.dump() << "\n";
            return result.certificate_ok ? 0 : 1;
        }; });
    }

    // bound
    auto bound = group("bound", "Evaluate closed-form bounds");
    {
        auto s = leaf(bound, "exact", "Exact size of the optimal (k,k;d) family on 2t blocks");
        s->add_option("--t", t)->required();
        s->add_option("--k", k)->required();
        s->callback([&] { action = [&] { emit_bounds(exact_report(t, k)); return 0; }; });

        s = leaf(bound, "lower", "Lower bounds for a graph with m edges");
        s->add_option("--m", m)->required();
        s->add_option("--w", w)->required();
        s->add_option("--c", c_choice)->check(CLI::IsMember({ "all", "0.5", "0.25", "0.125" }));
        s->callback([&] { action = [&] {
            std::vector<double> cs = c_choice == "all" ? all_c_choices : std::vector<double>{ std::stod(c_choice) };
            emit_bounds(lower_bounds(m, w, cs));
            return 0;
        }; });

        s = leaf(bound, "lll", "Local-lemma size of a random covering");
        s->add_option("--graph", graph)->required();
        s->add_option("--w", w)->required();
        s->add_option("--p", p);
        s->callback([&] { action = [&] { emit_bounds(lll_report(load_graph(graph), w, p)); return 0; }; });

        s = leaf(bound, "sperner", "Antichain bound");
        s->add_option("--n", n)->required();
        s->callback([&] { action = [&] { emit_bounds(sperner_report(n)); return 0; }; });

        s = leaf(bound, "erdos", "Asymptotic range for (2,1) families");
        s->add_option("--n", n)->required();
        s->callback([&] { action = [&] { emit_bounds(erdos_report(n)); return 0; }; });

        s = leaf(bound, "maxbiclique", "Largest biclique of KG(2t,k)");
        s->add_option("--t", t)->required();
        s->add_option("--k", k)->required();
        s->callback([&] { action = [&] { emit_bounds(max_biclique_report(t, k)); return 0; }; });
    }

    // simulate
    auto simulate = group("simulate", "Key pre-distribution from a covering");
    {
        auto s = leaf(simulate, "keyrings", "Per-vertex key rings");
        s->add_option("--cover", file)->required();
        s->callback([&] { action = [&] {
            emit_json(to_json(derive_keyrings(load_covering(file), ! globals.no_verify, globals.verify_options())));
            return 0;
        }; });

        s = leaf(simulate, "resilience", "Monte-Carlo coalition attack");
        s->add_option("--cover", file)->required();
        s->add_option("--coalition", coalition)->required();
        s->add_option("--trials", trials)->required()->check(CLI::PositiveNumber);
        s->add_option("--seed", seed)->required();
        s->callback([&] { action = [&] {
            auto dep = derive_keyrings(load_covering(file), ! globals.no_verify, globals.verify_options());
            emit_json(to_json(resilience_mc(dep, coalition, trials, seed)));
            return 0;
        }; });
    }

    try {
        app.parse(argc, argv);
    }
    catch (const CLI::ParseError & e) {
        auto rc = app.exit(e);
        return rc == 0 ? 0 : 2;
    }

    try {
        return action ? action() : 2;
    }
    catch (const AttemptsExhausted & e) {
        cerr << "cffkit: " << e.what() << "\n";
        return 4;
    }
    catch (const CapacityError & e) {
        cerr << "cffkit: " << e.what() << "\n";
        return 3;
    }
    catch (const UsageError & e) {
        cerr << "cffkit: " << e.what() << "\n";
        return 2;
    }
    catch (const nlohmann::json::exception & e) {
        cerr << "cffkit: malformed input: " << e.what() << "\n";
        return 2;
    }
    catch (const std::exception & e) {
        cerr << "cffkit: " << e.what() << "\n";
        return 1;
    }
}

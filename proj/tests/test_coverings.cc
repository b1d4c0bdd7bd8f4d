#include <cffkit/coverings.hh>
#include <cffkit/constructions.hh>
#include <cffkit/bounds.hh>
#include <cffkit/errors.hh>

#include "helpers.hh"

#include <doctest.h>

#include <cmath>

using namespace cffkit;

TEST_CASE("star_covering examples")
{
    auto c = star_covering(3, 1, 1);
    CHECK(c.size() == 3);
    CHECK(verify_covering(c).ok);

    c = star_covering(1, 0, 1);
    CHECK(c.sets() == std::vector<Subset>{ { 0, 1 } });

    c = star_covering(6, 1, 1);
    CHECK(c.size() == 4);
    CHECK(verify_covering(c).ok);

    c = star_covering(5, 1, 3);
    CHECK(c.size() == 3 * sperner_number(5));
    CHECK(verify_covering(c).ok);
}

TEST_CASE("star_covering with a supplied ingredient")
{
    CHECK_THROWS_AS(star_covering(5, 2, 1), UsageError);
    // singletons form a (1,w;1)-CFF for every w < t
    std::vector<Block> singles;
    for (std::uint32_t i = 0 ; i < 5 ; ++i)
        singles.push_back({ i });
    auto c = star_covering(SetSystem(5, singles), 2, 1);
    CHECK(c.size() == 5);
    CHECK(verify_covering(c).ok);

    SetSystem bad(1, { { 0 }, { 0 }, { 0 } });
    CHECK_THROWS_AS(star_covering(bad, 1, 1), UsageError);
}

TEST_CASE("bipartite_covering examples")
{
    auto c = bipartite_covering(2, 2, 1);
    CHECK(c.size() <= 4);
    CHECK(verify_covering(c).ok);

    c = bipartite_covering(4, 4, 1);
    CHECK(c.size() <= 8);
    CHECK(c.size() >= lower_form1(16));
    CHECK(verify_covering(c).ok);

    c = bipartite_covering(1, 1, 1);
    CHECK(c.size() == 2);
    CHECK(verify_covering(c).ok);

    for (std::uint32_t t = 2 ; t <= 12 ; ++t) {
        auto k = bipartite_covering(t, t, 1);
        CHECK(static_cast<double>(k.size()) >= 1.637 * std::log2(t) - 1e-9);
    }

    c = bipartite_covering(3, 5, 2);
    CHECK(c.size() == 2 * sperner_number(3) + 2 * sperner_number(5));
    CHECK(verify_covering(c).ok);
}

TEST_CASE("path_covering examples")
{
    auto c = path_covering(5);
    CHECK(c.sets() == std::vector<Subset>{ { 0, 1, 2 }, { 2, 3, 4 }, { 0, 1, 3, 4 }, { 1, 2, 3 } });
    CHECK(verify_covering(c).ok);

    CHECK(path_covering(2).sets() == std::vector<Subset>{ { 0, 1 } });

    c = path_covering(17);
    CHECK(c.size() <= 8);
    CHECK(verify_covering(c).ok);

    CHECK_THROWS_AS(path_covering(1), UsageError);
}

TEST_CASE("path_covering size bound for small n")
{
    for (std::uint32_t n = 2 ; n <= 64 ; ++n) {
        auto c = path_covering(n);
        CHECK(c.size() <= std::max(1u, 2 * ceil_log2(n - 1)));
        CHECK(verify_covering(c).ok);
    }
}

TEST_CASE("cycle_covering examples")
{
    CHECK(cycle_covering(4).size() <= 5);
    CHECK(cycle_covering(3).size() <= 5);
    CHECK(cycle_covering(12).size() <= 9);
    for (std::uint32_t n = 3 ; n <= 32 ; ++n) {
        auto c = cycle_covering(n);
        CHECK(c.size() <= 2 * ceil_log2(n) + 1);
        CHECK(verify_covering(c).ok);
    }
    CHECK_THROWS_AS(cycle_covering(2), UsageError);
}

TEST_CASE("union_covering of two disjoint paths")
{
    auto base = relabel(path_covering(3), { 0, 1, 2 }, 6);
    std::vector<GraphPart> parts{ { { 0, 1, 2 }, { { 0, 1 }, { 1, 2 } } }, { { 3, 4, 5 }, { { 3, 4 }, { 4, 5 } } } };
    auto c = union_covering(6, parts, { { 0, 1, 2 } }, base);
    CHECK(c.size() == path_covering(3).size() + 2);
    CHECK(verify_covering(c).ok);
}

TEST_CASE("union_covering with one part")
{
    auto base = path_covering(4);
    std::vector<GraphPart> parts{ { { 0, 1, 2, 3 }, base.graph().edges() } };
    auto c = union_covering(4, parts, { }, base);
    CHECK(c.size() == base.size() + 1);
    CHECK(c.sets().back() == Subset{ 0, 1, 2, 3 });
}

TEST_CASE("union_covering of three disjoint stars")
{
    std::vector<GraphPart> parts;
    std::vector<Embedding> embeddings;
    for (std::uint32_t j = 0 ; j < 3 ; ++j) {
        std::uint32_t o = 4 * j;
        parts.push_back({ { o, o + 1, o + 2, o + 3 }, { { o, o + 3 }, { o + 1, o + 3 }, { o + 2, o + 3 } } });
        if (j > 0)
            embeddings.push_back({ 0, 1, 2, 3 });
    }
    auto star = star_covering(3, 1, 1);
    auto base = relabel(star, { 0, 1, 2, 3 }, 12);
    auto c = union_covering(12, parts, embeddings, base);
    CHECK(c.size() == star.size() + 3);
    CHECK(verify_covering(c).ok);
}

TEST_CASE("union_covering rejects non-homomorphisms")
{
    auto base = relabel(path_covering(3), { 0, 1, 2 }, 6);
    std::vector<GraphPart> parts{ { { 0, 1, 2 }, { { 0, 1 }, { 1, 2 } } }, { { 3, 4, 5 }, { { 3, 4 }, { 4, 5 } } } };
    try {
        union_covering(6, parts, { { 0, 2, 1 } }, base);
        FAIL("expected an error");
    }
    catch (const UsageError & e) {
        CHECK(std::string(e.what()).find("{3,4}") != std::string::npos);
    }
}

TEST_CASE("tree_covering of a path reduces to path_covering")
{
    auto c = tree_covering(path_graph(9));
    CHECK(c.sets() == path_covering(9).sets());
}

TEST_CASE("tree_covering of a spider")
{
    // centre 0, legs 0-1-2, 0-3-4, 0-5-6
    SimpleGraph spider(7, { { 0, 1 }, { 1, 2 }, { 0, 3 }, { 3, 4 }, { 0, 5 }, { 5, 6 } });
    TreeCoveringStats stats;
    auto c = tree_covering(spider, { }, &stats);
    CHECK(stats.bound == 10);
    CHECK(c.size() <= 10);
    CHECK(verify_covering(c).ok);
}

TEST_CASE("tree_covering with adjacent branch vertices")
{
    // two adjacent degree-4 vertices and a third branch vertex hanging off one of them
    SimpleGraph g(12, { { 0, 1 }, { 0, 2 }, { 0, 3 }, { 0, 4 }, { 4, 5 }, { 4, 6 }, { 4, 7 },
            { 1, 8 }, { 1, 9 }, { 1, 10 }, { 10, 11 } });
    TreeCoveringStats stats;
    auto c = tree_covering(g, { }, &stats);
    CHECK(verify_covering(c).ok);
    CHECK(c.size() <= stats.bound);
}

TEST_CASE("tree_covering of a random tree on 20 vertices")
{
    std::mt19937_64 rng(20);
    auto tree = testing::random_tree(rng, 20);
    TreeCoveringStats stats;
    auto c = tree_covering(tree, { }, &stats);
    CHECK(verify_covering(c).ok);
    CHECK(c.size() <= stats.bound);
    CHECK(stats.bound == 2 * ceil_log2(19) + sperner_number(tree.max_degree()) + stats.branch_vertices);
}

TEST_CASE("tree_covering rejects non-trees")
{
    CHECK_THROWS_AS(tree_covering(cycle_graph(4)), UsageError);
    CHECK_THROWS_AS(tree_covering(SimpleGraph(4, { { 0, 1 }, { 2, 3 } })), UsageError);
    CHECK_THROWS_AS(tree_covering(SimpleGraph(4, { { 0, 1 }, { 1, 2 }, { 0, 2 } })), UsageError);
}

TEST_CASE("product_covering examples")
{
    auto c = product_covering(cycle_covering(4), cycle_covering(4));
    CHECK(c.size() <= 10);
    CHECK(verify_covering(c).ok);

    c = product_covering(cycle_covering(3), cycle_covering(3));
    CHECK(c.size() <= 10);
    CHECK(verify_covering(c).ok);

    CHECK_THROWS_AS(product_covering(path_covering(4), cycle_covering(4)), UsageError);
}

TEST_CASE("grid_covering examples")
{
    auto c = grid_covering(4, 4);
    CHECK(c.size() <= 10);
    CHECK(verify_covering(c).ok);

    c = grid_covering(4, 8);
    CHECK(c.size() <= 12);
    CHECK(verify_covering(c).ok);

    c = grid_covering(3, 3);
    CHECK(c.size() <= 12);
    CHECK(verify_covering(c).ok);

    CHECK_THROWS_AS(grid_covering(2, 5), UsageError);
}

TEST_CASE("restricting a torus covering to the grid keeps it valid")
{
    auto torus = product_covering(cycle_covering(5), cycle_covering(6));
    GraphCovering grid(grid_graph(5, 6), torus.sets(), 1, 1);
    CHECK(verify_covering(grid).ok);
}

TEST_CASE("lll_size examples")
{
    auto params = lll_size(cycle_graph(5), 1, 2.0 / 3.0);
    CHECK(params.q == doctest::Approx(23.0 / 27.0).epsilon(1e-12));
    CHECK(params.dependency == 15);
    CHECK(params.rows == 24);

    CHECK(lll_size(cycle_graph(5), 0, 0.5).q == doctest::Approx(0.75));

    params = lll_size(complete_graph(4), 1);
    CHECK(params.dependency == 12);
    CHECK(params.rows == static_cast<std::uint64_t>(std::ceil(std::log2(std::exp(1.0) * 13) / std::log2(27.0 / 23.0))));

    CHECK_THROWS_AS(lll_size(path_graph(2), 1), UsageError);
    CHECK_THROWS_AS(lll_size(cycle_graph(5), 1, 1.0), UsageError);
}

TEST_CASE("lll_covering is verified and reproducible")
{
    auto a = lll_covering(complete_graph(4), 1, std::nullopt, 42);
    CHECK(verify_covering(a.covering).ok);
    auto b = lll_covering(complete_graph(4), 1, std::nullopt, 42);
    CHECK(a.covering == b.covering);
    CHECK(a.params.attempts == b.params.attempts);

    auto c5 = lll_covering(cycle_graph(5), 1, 2.0 / 3.0, 7);
    CHECK(verify_covering(c5.covering).ok);
    CHECK(c5.covering.size() == 24);
}

TEST_CASE("lll_covering guards")
{
    // p tiny drives N past the capacity guard
    CHECK_THROWS_AS(lll_covering(cycle_graph(6), 1, 1e-9, 1), CapacityError);

    try {
        lll_covering(cycle_graph(6), 1, std::nullopt, 1, 0);
        FAIL("expected exhaustion");
    }
    catch (const AttemptsExhausted & e) {
        CHECK(e.attempts() == 0);
    }
}

TEST_CASE("tree_covering on adjacent hubs")
{
    // centre 0 with three leaves and three branch neighbours, each with three leaves
    std::vector<Edge> edges{ { 0, 1 }, { 0, 2 }, { 0, 3 }, { 0, 4 }, { 0, 5 }, { 0, 6 } };
    std::uint32_t next = 7;
    for (std::uint32_t hub : { 4u, 5u, 6u })
        for (int i = 0 ; i < 3 ; ++i)
            edges.emplace_back(hub, next++);
    SimpleGraph g(next, edges);
    TreeCoveringStats stats;
    auto c = tree_covering(g, { }, &stats);
    CHECK(verify_covering(c).ok);
    CHECK(c.size() <= stats.bound);
}

TEST_CASE("tree_covering on a caterpillar of degree-3 vertices")
{
    // spine 0..9, each spine vertex with one pendant leaf
    std::vector<Edge> edges;
    for (std::uint32_t i = 0 ; i + 1 < 10 ; ++i)
        edges.emplace_back(i, i + 1);
    for (std::uint32_t i = 0 ; i < 10 ; ++i)
        edges.emplace_back(i, 10 + i);
    SimpleGraph g(20, edges);
    TreeCoveringStats stats;
    auto c = tree_covering(g, { }, &stats);
    CHECK(verify_covering(c).ok);
    CHECK(c.size() <= stats.bound);
}

TEST_CASE("tree_covering bound over a random sweep")
{
    std::mt19937_64 rng(1234);
    for (int i = 0 ; i < 400 ; ++i) {
        auto tree = testing::random_tree(rng, 2 + static_cast<std::uint32_t>(rng() % 60));
        TreeCoveringStats stats;
        auto c = tree_covering(tree, { }, &stats);
        CHECK(verify_covering(c).ok);
        CHECK(c.size() <= stats.bound);
    }
}

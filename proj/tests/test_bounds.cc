#include <cffkit/bounds.hh>
#include <cffkit/constructions.hh>
#include <cffkit/errors.hh>

#include <doctest.h>

#include <cmath>

using namespace cffkit;

TEST_CASE("max_biclique_edges examples")
{
    CHECK(max_biclique_edges(3, 2) == 9);
    CHECK(max_biclique_edges(5, 5) == 1);
    CHECK(max_biclique_edges(4, 2) == 36);
    for (std::uint32_t t = 2 ; t <= 9 ; ++t)
        for (std::uint32_t k = 2 ; k <= t ; ++k)
            CHECK(max_biclique_edges(t, k) == max_biclique_edges_scan(t, k));
}

TEST_CASE("exact_cff_size examples")
{
    CHECK(exact_cff_size(2, 1) == 6);
    CHECK(exact_cff_size(1, 1) == 2);
    CHECK(exact_cff_size(5, 2) == 252);
    for (std::uint32_t t = 1 ; t <= 5 ; ++t)
        for (std::uint32_t k = 1 ; k <= t ; ++k)
            CHECK(exact_cff_size(t, k) == optimal_kk(t, k).n_points());
}

TEST_CASE("counting bound reproduces C(2t,t)")
{
    for (std::uint32_t t = 2 ; t <= 8 ; ++t)
        for (std::uint32_t k = 2 ; k <= t ; ++k)
            CHECK(biclique_counting_bound(t, k) == binomial(2 * t, t));
}

TEST_CASE("lower bounds")
{
    for (std::uint32_t t : { 2u, 5u, 16u })
        CHECK(lower_form1(std::uint64_t{t} * t) == doctest::Approx(1.637 * std::log2(t)).epsilon(1e-3));
    CHECK(lower_form2(100) == doctest::Approx(20.64).epsilon(1e-3));

    auto all = lower_bounds(1, 3);
    REQUIRE(all.size() == 5);
    for (auto & b : all) {
        CHECK(b.side == BoundSide::Lower);
        CHECK(as_double(b.value) == 0.0);
    }

    auto no_third = lower_bounds(50, 1);
    REQUIRE(no_third.size() == 5);
    CHECK(std::holds_alternative<std::monostate>(no_third[2].value));
    CHECK(no_third[2].assumptions.find("w >= 2") != std::string::npos);

    auto only = lower_bounds(50, 4, { 0.25 });
    REQUIRE(only.size() == 3);
    CHECK(as_double(only[2].value).value() == doctest::Approx(0.25 * 16 / std::log(4.0) * std::log(50.0)));
    CHECK(only[2].assumptions.find("asymptotic") != std::string::npos);

    CHECK_THROWS_AS(lower_bounds(0, 2), UsageError);
}

TEST_CASE("sperner and erdos")
{
    CHECK(sperner_upper(4) == 6);
    CHECK(sperner_upper(1) == 1);
    auto [lo, hi] = erdos_range(10);
    CHECK(lo == doctest::Approx(3.52).epsilon(1e-3));
    CHECK(hi == doctest::Approx(9.31).epsilon(1e-3));
    for (auto & b : erdos_report(10))
        CHECK(b.assumptions.find("asymptotic") != std::string::npos);
}

TEST_CASE("lll report")
{
    auto r = lll_report(cycle_graph(5), 1, 2.0 / 3.0);
    REQUIRE(r.size() == 4);
    CHECK(std::get<std::uint64_t>(r[2].value) == 15);
    CHECK(std::get<std::uint64_t>(r[3].value) == 24);
    CHECK(lll_report(cycle_graph(5), 0, 0.5)[1].value == BoundValue{ 0.75 });
}

TEST_CASE("report rendering")
{
    auto j = to_json(exact_report(2, 1));
    CHECK(j[0]["name"] == "exact_cff_size");
    CHECK(j[0]["value"] == 6);
    CHECK(j[0]["side"] == "exact");
    auto table = to_table(sperner_report(4));
    CHECK(table.find("sperner_upper") != std::string::npos);
    CHECK(table.find("6") != std::string::npos);
}

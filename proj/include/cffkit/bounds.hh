/* vim: set sw=4 sts=4 et foldmethod=syntax : */

#ifndef CFFKIT_GUARD_BOUNDS_HH
#define CFFKIT_GUARD_BOUNDS_HH 1

#include <cffkit/coverings.hh>
#include <cffkit/io.hh>

#include <cstdint>
#include <optional>
#include <string>
#include <variant>
#include <vector>

namespace cffkit
{
    enum class BoundSide
    {
        Lower,
        Upper,
        Exact
    };

    /// monostate marks a bound that was not evaluated (see assumptions).
    using BoundValue = std::variant<std::monostate, std::uint64_t, double>;

    struct BoundReport
    {
        std::string name;
        BoundValue value;
        BoundSide side = BoundSide::Exact;
        std::string assumptions;
    };

    auto as_double(const BoundValue & v) -> std::optional<double>;

    auto to_json(const BoundReport & b) -> Json;
    auto to_json(const std::vector<BoundReport> & bs) -> Json;
    auto to_table(const std::vector<BoundReport> & bs) -> std::string;

    /// C(t,k)^2, the largest biclique of KG(2t,k) and of I_2t(k,k).
    auto max_biclique_edges(std::uint32_t t, std::uint32_t k) -> std::uint64_t;

    /// max over i in [k,t] of C(i,k) C(2t-i,k), by scanning.
    auto max_biclique_edges_scan(std::uint32_t t, std::uint32_t k) -> std::uint64_t;

    /// C(2t,t).
    auto exact_cff_size(std::uint32_t t, std::uint32_t k) -> std::uint64_t;

    /// d |E(I_2t(k,k))| / B(I_2t(k,k)) with d = C(2t-2k,t-k), when it divides exactly.
    auto biclique_counting_bound(std::uint32_t t, std::uint32_t k) -> std::optional<std::uint64_t>;

    auto lower_form1(std::uint64_t m) -> double;
    auto lower_form2(std::uint64_t m) -> double;
    auto lower_form3(std::uint64_t m, std::uint32_t w, double c) -> double;

    inline const std::vector<double> all_c_choices = { 0.5, 0.25, 0.125 };

    auto lower_bounds(std::uint64_t m_edges, std::uint32_t w, const std::vector<double> & cs = all_c_choices)
        -> std::vector<BoundReport>;

    auto sperner_upper(std::uint32_t n) -> std::uint64_t;
    auto erdos_range(std::uint32_t n) -> std::pair<double, double>;

    auto exact_report(std::uint32_t t, std::uint32_t k) -> std::vector<BoundReport>;
    auto sperner_report(std::uint32_t n) -> std::vector<BoundReport>;
    auto erdos_report(std::uint32_t n) -> std::vector<BoundReport>;
    auto max_biclique_report(std::uint32_t t, std::uint32_t k) -> std::vector<BoundReport>;
    auto lll_report(const SimpleGraph & g, std::uint32_t w, std::optional<double> p) -> std::vector<BoundReport>;
}

#endif

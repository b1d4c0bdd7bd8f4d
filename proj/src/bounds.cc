/* vim: set sw=4 sts=4 et foldmethod=syntax : */

#include <cffkit/bounds.hh>
#include <cffkit/constructions.hh>
#include <cffkit/errors.hh>

#include <algorithm>
#include <cmath>
#include <numbers>
#include <sstream>
#include <iomanip>

using std::optional;
using std::string;
using std::to_string;
using std::uint32_t;
using std::uint64_t;
using std::vector;

namespace
{
    auto side_name(cffkit::BoundSide s) -> const char *
    {
        switch (s) {
            case cffkit::BoundSide::Lower: return "lower";
            case cffkit::BoundSide::Upper: return "upper";
            case cffkit::BoundSide::Exact: return "exact";
        }
        return "exact";
    }

    auto value_text(const cffkit::BoundValue & v) -> string
    {
        if (auto i = std::get_if<uint64_t>(&v))
            return to_string(*i);
        if (auto d = std::get_if<double>(&v)) {
            std::ostringstream s;
            s << std::setprecision(6) << *d;
            return s.str();
        }
        return "-";
    }
}

auto cffkit::as_double(const BoundValue & v) -> optional<double>
{
    if (auto i = std::get_if<uint64_t>(&v))
        return static_cast<double>(*i);
    if (auto d = std::get_if<double>(&v))
        return *d;
    return std::nullopt;
}

auto cffkit::to_json(const BoundReport & b) -> Json
{
    Json j;
    j["name"] = b.name;
    if (auto i = std::get_if<uint64_t>(&b.value))
        j["value"] = *i;
    else if (auto d = std::get_if<double>(&b.value))
        j["value"] = *d;
    else
        j["value"] = nullptr;
    j["side"] = side_name(b.side);
    j["assumptions"] = b.assumptions;
    return j;
}

auto cffkit::to_json(const vector<BoundReport> & bs) -> Json
{
    auto j = Json::array();
    for (auto & b : bs)
        j.push_back(to_json(b));
    return j;
}

auto cffkit::to_table(const vector<BoundReport> & bs) -> string
{
    std::size_t w_name = 4, w_value = 5;
    for (auto & b : bs) {
        w_name = std::max(w_name, b.name.size());
        w_value = std::max(w_value, value_text(b.value).size());
    }
    std::ostringstream s;
    s << std::left << std::setw(w_name) << "name" << "  " << std::setw(w_value) << "value" << "  "
        << std::setw(5) << "side" << "  assumptions\n";
    for (auto & b : bs)
        s << std::left << std::setw(w_name) << b.name << "  " << std::setw(w_value) << value_text(b.value) << "  "
            << std::setw(5) << side_name(b.side) << "  " << b.assumptions << "\n";
    return s.str();
}

auto cffkit::max_biclique_edges(uint32_t t, uint32_t k) -> uint64_t
{
    if (k < 1 || k > t)
        throw UsageError("max_biclique_edges needs 1 <= k <= t");
    auto c = binomial(t, k);
    return c * c;
}

auto cffkit::max_biclique_edges_scan(uint32_t t, uint32_t k) -> uint64_t
{
    if (k < 1 || k > t)
        throw UsageError("max_biclique_edges_scan needs 1 <= k <= t");
    uint64_t best = 0;
    for (uint32_t i = k ; i <= t ; ++i)
        best = std::max(best, binomial(i, k) * binomial(2 * t - i, k));
    return best;
}

auto cffkit::exact_cff_size(uint32_t t, uint32_t k) -> uint64_t
{
    if (k < 1 || k > t)
        throw UsageError("exact_cff_size needs 1 <= k <= t");
    return binomial(2 * t, t);
}

auto cffkit::biclique_counting_bound(uint32_t t, uint32_t k) -> optional<uint64_t>
{
    if (k < 1 || k > t)
        throw UsageError("biclique_counting_bound needs 1 <= k <= t");
    unsigned __int128 d = binomial(2 * t - 2 * k, t - k);
    unsigned __int128 edges = static_cast<unsigned __int128>(binomial(2 * t, k)) * binomial(2 * t - k, k);
    unsigned __int128 b = max_biclique_edges(t, k);
    auto num = d * edges;
    if (num % b != 0)
        return std::nullopt;
    return static_cast<uint64_t>(num / b);
}

auto cffkit::lower_form1(uint64_t m) -> double
{
    return 2.0 / (1.0 + std::numbers::log2e) * std::log2(static_cast<double>(m));
}

auto cffkit::lower_form2(uint64_t m) -> double
{
    return std::log(static_cast<double>(m)) / std::log(1.25);
}

auto cffkit::lower_form3(uint64_t m, uint32_t w, double c) -> double
{
    double wd = w;
    return c * wd * wd / std::log(wd) * std::log(static_cast<double>(m));
}

auto cffkit::lower_bounds(uint64_t m, uint32_t w, const vector<double> & cs) -> vector<BoundReport>
{
    if (m < 1)
        throw UsageError("lower_bounds needs m >= 1");

    vector<BoundReport> result;
    result.push_back({ "lower_w1", lower_form1(m), BoundSide::Lower,
            "N(G,1;1) for a graph with m edges; 2/(1+log2 e) log2 m" });
    result.push_back({ "lower_w2", lower_form2(m), BoundSide::Lower,
            "N(G,2;1) for a graph with m edges; log base 1.25 of m" });
    for (auto c : cs) {
        std::ostringstream name;
        name << "lower_cw_" << c;
        if (w < 2)
            result.push_back({ name.str(), std::monostate{ }, BoundSide::Lower, "omitted: needs w >= 2" });
        else
            result.push_back({ name.str(), lower_form3(m, w, c), BoundSide::Lower,
                    "N(G,w;1) for large m; c w^2 / ln w * ln m with c approximately the cited constant; asymptotic" });
    }
    return result;
}

auto cffkit::sperner_upper(uint32_t n) -> uint64_t
{
    if (n < 1)
        throw UsageError("sperner_upper needs n >= 1");
    return binomial(n, n / 2);
}

auto cffkit::erdos_range(uint32_t n) -> std::pair<double, double>
{
    if (n < 1)
        throw UsageError("erdos_range needs n >= 1");
    return { std::pow(1.134, n), std::pow(1.25, n) };
}

auto cffkit::exact_report(uint32_t t, uint32_t k) -> vector<BoundReport>
{
    return {
        { "exact_cff_size", exact_cff_size(t, k), BoundSide::Exact, "N((k,k;d),2t) with d = C(2t-2k,t-k); 1 <= k <= t" },
        { "multiplicity", binomial(2 * t - 2 * k, t - k), BoundSide::Exact, "d = C(2t-2k,t-k)" }
    };
}

auto cffkit::sperner_report(uint32_t n) -> vector<BoundReport>
{
    return {
        { "sperner_upper", sperner_upper(n), BoundSide::Upper, "T((1,1),n) <= C(n, floor(n/2))" },
        { "sperner_number", uint64_t{sperner_number(n)}, BoundSide::Exact, "R(n) = min c with C(c, floor(c/2)) >= n" }
    };
}

auto cffkit::erdos_report(uint32_t n) -> vector<BoundReport>
{
    auto [lo, hi] = erdos_range(n);
    return {
        { "erdos_lower", lo, BoundSide::Lower, "T((2,1),n) >= 1.134^n; asymptotic, sufficiently large n" },
        { "erdos_upper", hi, BoundSide::Upper, "T((2,1),n) <= 1.25^n; asymptotic, sufficiently large n" }
    };
}

auto cffkit::max_biclique_report(uint32_t t, uint32_t k) -> vector<BoundReport>
{
    string note = "B(KG(2t,k)) = B(I_2t(k,k)) = C(t,k)^2";
    if (k < 2)
        note += "; stated for k >= 2, k = 1 evaluated by the same formula";
    vector<BoundReport> result{ { "max_biclique_edges", max_biclique_edges(t, k), BoundSide::Exact, note } };
    if (auto c = biclique_counting_bound(t, k))
        result.push_back({ "counting_bound", *c, BoundSide::Lower, "d |E(I_2t(k,k))| / B lower-bounds bc_d" });
    return result;
}

auto cffkit::lll_report(const SimpleGraph & g, uint32_t w, optional<double> p) -> vector<BoundReport>
{
    auto params = lll_size(g, w, p);
    return {
        { "p", params.p, BoundSide::Exact, "sampling probability" },
        { "q", params.q, BoundSide::Exact, "1 - p^2 (1-p)^w" },
        { "D", params.dependency, BoundSide::Upper, "dependency degree bound" },
        { "N", params.rows, BoundSide::Upper, "N(G,w;1) <= ceil(log2(e(D+1)) / -log2 q)" }
    };
}

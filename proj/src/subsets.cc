/* vim: set sw=4 sts=4 et foldmethod=syntax : */

#include <cffkit/subsets.hh>
#include <cffkit/errors.hh>

#include <limits>
#include <string>

using std::uint32_t;
using std::uint64_t;

auto cffkit::binomial(uint64_t n, uint64_t k) -> uint64_t
{
    if (k > n)
        return 0;
    if (k > n - k)
        k = n - k;

    unsigned __int128 result = 1;
    for (uint64_t i = 1 ; i <= k ; ++i) {
        result = result * (n - k + i) / i;
        if (result > std::numeric_limits<uint64_t>::max())
            return std::numeric_limits<uint64_t>::max();
    }
    return static_cast<uint64_t>(result);
}

auto cffkit::binomial_ext(std::int64_t a, std::int64_t b) -> uint64_t
{
    if (a < 0 || b < 0 || a < b)
        return 0;
    return binomial(static_cast<uint64_t>(a), static_cast<uint64_t>(b));
}

auto cffkit::rank_subset(std::span<const uint32_t> s, uint32_t universe) -> uint64_t
{
    uint64_t rank = 0;
    for (std::size_t i = 0 ; i < s.size() ; ++i) {
        if (s[i] >= universe)
            throw EncodingError("element " + std::to_string(s[i]) + " outside universe of size " + std::to_string(universe));
        if (i > 0 && s[i] <= s[i - 1])
            throw EncodingError("subset is not strictly increasing");
        rank += binomial(s[i], i + 1);
    }
    return rank;
}

auto cffkit::unrank_subset(uint64_t rank, uint32_t size, uint32_t universe) -> Subset
{
    if (size > universe || rank >= binomial(universe, size))
        throw EncodingError("rank " + std::to_string(rank) + " out of range for " + std::to_string(size)
                + "-subsets of " + std::to_string(universe));

    Subset result(size);
    uint32_t c = universe;
    for (uint32_t i = size ; i >= 1 ; --i) {
        // largest c with C(c, i) <= rank
        --c;
        while (binomial(c, i) > rank)
            --c;
        result[i - 1] = c;
        rank -= binomial(c, i);
    }
    return result;
}

auto cffkit::next_combination(Subset & c, uint32_t n) -> bool
{
    auto k = c.size();
    if (k == 0)
        return false;
    std::size_t i = k;
    while (i > 0) {
        --i;
        if (c[i] < n - k + i) {
            ++c[i];
            for (std::size_t j = i + 1 ; j < k ; ++j)
                c[j] = c[j - 1] + 1;
            return true;
        }
    }
    return false;
}

auto cffkit::next_colex(Subset & c, uint32_t n) -> bool
{
    auto k = c.size();
    if (k == 0)
        return false;
    for (std::size_t i = 0 ; i < k ; ++i) {
        uint32_t limit = (i + 1 < k) ? c[i + 1] : n;
        if (c[i] + 1 < limit) {
            ++c[i];
            for (std::size_t j = 0 ; j < i ; ++j)
                c[j] = static_cast<uint32_t>(j);
            return true;
        }
    }
    return false;
}

auto cffkit::for_each_subset_of(std::span<const uint32_t> items, uint32_t k,
        const std::function<void (const Subset &)> & f) -> void
{
    auto n = static_cast<uint32_t>(items.size());
    if (k > n)
        return;

    Subset positions(k), chosen(k);
    for (uint32_t i = 0 ; i < k ; ++i)
        positions[i] = i;

    do {
        for (uint32_t i = 0 ; i < k ; ++i)
            chosen[i] = items[positions[i]];
        f(chosen);
    } while (next_combination(positions, n));
}

auto cffkit::all_subsets_colex(uint32_t n, uint32_t k) -> std::vector<Subset>
{
    std::vector<Subset> result;
    if (k > n)
        return result;
    Subset c(k);
    for (uint32_t i = 0 ; i < k ; ++i)
        c[i] = i;
    do {
        result.push_back(c);
    } while (next_colex(c, n));
    return result;
}

auto cffkit::ceil_log2(uint64_t n) -> uint32_t
{
    uint32_t c = 0;
    while ((uint64_t{1} << c) < n)
        ++c;
    return c;
}

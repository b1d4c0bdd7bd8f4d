/* vim: set sw=4 sts=4 et foldmethod=syntax : */

#ifndef CFFKIT_GUARD_SUBSETS_HH
#define CFFKIT_GUARD_SUBSETS_HH 1

#include <cstdint>
#include <functional>
#include <span>
#include <vector>

namespace cffkit
{
    using Subset = std::vector<std::uint32_t>;

    /// C(n, k), saturating at UINT64_MAX on overflow.
    auto binomial(std::uint64_t n, std::uint64_t k) -> std::uint64_t;

    /// C(a, b) extended to integers: zero when b < 0, a < 0 or a < b.
    auto binomial_ext(std::int64_t a, std::int64_t b) -> std::uint64_t;

    /// Colexicographic rank of a strictly increasing subset of [0, universe).
    auto rank_subset(std::span<const std::uint32_t> s, std::uint32_t universe) -> std::uint64_t;

    /// Inverse of rank_subset for subsets of the given size.
    auto unrank_subset(std::uint64_t rank, std::uint32_t size, std::uint32_t universe) -> Subset;

    /// Advance to the next k-subset of [0, n) in lexicographic order. Returns
    /// false (leaving c unspecified) when c was the last one.
    auto next_combination(Subset & c, std::uint32_t n) -> bool;

    /// Advance to the next k-subset of [0, n) in colex order.
    auto next_colex(Subset & c, std::uint32_t n) -> bool;

    /// Calls f on every k-subset of items, in lexicographic order of positions.
    auto for_each_subset_of(std::span<const std::uint32_t> items, std::uint32_t k,
            const std::function<void (const Subset &)> & f) -> void;

    /// All k-subsets of [0, n) in colex order.
    auto all_subsets_colex(std::uint32_t n, std::uint32_t k) -> std::vector<Subset>;

    /// Smallest c with 2^c >= n, for n >= 1.
    auto ceil_log2(std::uint64_t n) -> std::uint32_t;
}

#endif

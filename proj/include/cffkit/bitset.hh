/* vim: set sw=4 sts=4 et foldmethod=syntax : */

#ifndef CFFKIT_GUARD_BITSET_HH
#define CFFKIT_GUARD_BITSET_HH 1

#include <bit>
#include <cstddef>
#include <cstdint>
#include <vector>

namespace cffkit
{
    /// Fixed-width dynamic bit set used for block and membership arithmetic.
    class Bitset
    {
        private:
            std::vector<std::uint64_t> _words;
            std::size_t _size = 0;

        public:
            Bitset() = default;

            explicit Bitset(std::size_t size, bool filled = false) :
                _words((size + 63) / 64, filled ? ~std::uint64_t{0} : 0),
                _size(size)
            {
                if (filled && size % 64 != 0)
                    _words.back() &= (std::uint64_t{1} << (size % 64)) - 1;
            }

            auto size() const -> std::size_t { return _size; }

            auto set(std::size_t i) -> void { _words[i / 64] |= std::uint64_t{1} << (i % 64); }
            auto reset(std::size_t i) -> void { _words[i / 64] &= ~(std::uint64_t{1} << (i % 64)); }
            auto test(std::size_t i) const -> bool { return (_words[i / 64] >> (i % 64)) & 1; }

            auto count() const -> std::size_t
            {
                std::size_t result = 0;
                for (auto w : _words)
                    result += std::popcount(w);
                return result;
            }

            auto none() const -> bool
            {
                for (auto w : _words)
                    if (w)
                        return false;
                return true;
            }

            auto operator&= (const Bitset & o) -> Bitset &
            {
                for (std::size_t i = 0 ; i < _words.size() ; ++i)
                    _words[i] &= o._words[i];
                return *this;
            }

            auto operator|= (const Bitset & o) -> Bitset &
            {
                for (std::size_t i = 0 ; i < _words.size() ; ++i)
                    _words[i] |= o._words[i];
                return *this;
            }

            /// this & ~o
            auto subtract(const Bitset & o) -> Bitset &
            {
                for (std::size_t i = 0 ; i < _words.size() ; ++i)
                    _words[i] &= ~o._words[i];
                return *this;
            }

            /// popcount(this & ~o) without materialising it.
            auto count_minus(const Bitset & o) const -> std::size_t
            {
                std::size_t result = 0;
                for (std::size_t i = 0 ; i < _words.size() ; ++i)
                    result += std::popcount(_words[i] & ~o._words[i]);
                return result;
            }

            auto operator== (const Bitset &) const -> bool = default;
    };
}

#endif

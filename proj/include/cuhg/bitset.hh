#pragma once

#include <bit>
#include <cstddef>
#include <cstdint>
#include <vector>

namespace cuhg
{
    /// Fixed-capacity dynamic bitset over vertex ids [0, size).
    ///
    /// Bits at positions >= size are always zero, so word-level equality and
    /// popcount are exact.
    class Bitset
    {
        public:
            Bitset() = default;
            explicit Bitset(std::size_t size) : _size(size), _words((size + 63) / 64, 0) {}

            auto size() const -> std::size_t { return _size; }

            auto test(std::size_t i) const -> bool { return (_words[i >> 6] >> (i & 63)) & 1U; }
            auto set(std::size_t i) -> void { _words[i >> 6] |= (std::uint64_t{1} << (i & 63)); }
            auto reset(std::size_t i) -> void { _words[i >> 6] &= ~(std::uint64_t{1} << (i & 63)); }
            auto set(std::size_t i, bool value) -> void
            {
                if (value)
                    set(i);
                else
                    reset(i);
            }

            auto set_all() -> void
            {
                for (auto & w : _words)
                    w = ~std::uint64_t{0};
                trim();
            }

            auto clear() -> void
            {
                for (auto & w : _words)
                    w = 0;
            }

            /// Grows (or shrinks) capacity, keeping existing bits below the new size.
            auto resize(std::size_t size) -> void
            {
                _size = size;
                _words.resize((size + 63) / 64, 0);
                trim();
            }

            auto count() const -> std::size_t
            {
                std::size_t c = 0;
                for (auto w : _words)
                    c += std::popcount(w);
                return c;
            }

            auto any() const -> bool
            {
                for (auto w : _words)
                    if (w)
                        return true;
                return false;
            }

            auto none() const -> bool { return ! any(); }

            /// Index of the lowest set bit, or size() if empty.
            auto first() const -> std::size_t
            {
                for (std::size_t i = 0; i < _words.size(); ++i)
                    if (_words[i])
                        return i * 64 + std::countr_zero(_words[i]);
                return _size;
            }

            /// Index of the lowest set bit strictly above i, or size() if none.
            auto next(std::size_t i) const -> std::size_t
            {
                ++i;
                if (i >= _size)
                    return _size;
                std::size_t wi = i >> 6;
                std::uint64_t w = _words[wi] & (~std::uint64_t{0} << (i & 63));
                while (true) {
                    if (w)
                        return wi * 64 + std::countr_zero(w);
                    if (++wi >= _words.size())
                        return _size;
                    w = _words[wi];
                }
            }

            template <typename F_>
            auto for_each(F_ && f) const -> void
            {
                for (std::size_t wi = 0; wi < _words.size(); ++wi) {
                    auto w = _words[wi];
                    while (w) {
                        int b = std::countr_zero(w);
                        f(wi * 64 + b);
                        w &= w - 1;
                    }
                }
            }

            auto members() const -> std::vector<int>
            {
                std::vector<int> result;
                for_each([&](std::size_t v) { result.push_back(int(v)); });
                return result;
            }

            auto operator&=(const Bitset & o) -> Bitset &
            {
                for (std::size_t i = 0; i < _words.size(); ++i)
                    _words[i] &= o._words[i];
                return *this;
            }

            auto operator|=(const Bitset & o) -> Bitset &
            {
                for (std::size_t i = 0; i < _words.size(); ++i)
                    _words[i] |= o._words[i];
                return *this;
            }

            /// this &= ~o
            auto subtract(const Bitset & o) -> Bitset &
            {
                for (std::size_t i = 0; i < _words.size(); ++i)
                    _words[i] &= ~o._words[i];
                return *this;
            }

            /// this = a & b, reusing storage (all three share one size)
            auto assign_and(const Bitset & a, const Bitset & b) -> void
            {
                _size = a._size;
                _words.resize(a._words.size());
                for (std::size_t i = 0; i < _words.size(); ++i)
                    _words[i] = a._words[i] & b._words[i];
            }

            /// this = a & ~b
            auto assign_and_not(const Bitset & a, const Bitset & b) -> void
            {
                _size = a._size;
                _words.resize(a._words.size());
                for (std::size_t i = 0; i < _words.size(); ++i)
                    _words[i] = a._words[i] & ~b._words[i];
            }

            auto flip() -> Bitset &
            {
                for (auto & w : _words)
                    w = ~w;
                trim();
                return *this;
            }

            auto intersects(const Bitset & o) const -> bool
            {
                for (std::size_t i = 0; i < _words.size(); ++i)
                    if (_words[i] & o._words[i])
                        return true;
                return false;
            }

            auto is_subset_of(const Bitset & o) const -> bool
            {
                for (std::size_t i = 0; i < _words.size(); ++i)
                    if (_words[i] & ~o._words[i])
                        return false;
                return true;
            }

            auto words() const -> const std::vector<std::uint64_t> & { return _words; }

            friend auto operator&(Bitset a, const Bitset & b) -> Bitset { return a &= b; }
            friend auto operator|(Bitset a, const Bitset & b) -> Bitset { return a |= b; }
            friend auto operator==(const Bitset &, const Bitset &) -> bool = default;

        private:
            auto trim() -> void
            {
                if (_size & 63)
                    _words.back() &= (std::uint64_t{1} << (_size & 63)) - 1;
            }

            std::size_t _size = 0;
            std::vector<std::uint64_t> _words;
    };
}

#pragma once

#include <bit>
#include <cstdint>
#include <vector>

namespace ripscrush {

/** Fixed-size-at-construction bitset; sized at runtime. */
class Bitset
{
public:
    Bitset() = default;
    explicit Bitset(std::size_t bits) : bits_(bits), words_((bits + 63) / 64, 0) {}

    std::size_t size() const noexcept { return bits_; }

    void set(std::size_t i) { words_[i >> 6] |= (std::uint64_t{1} << (i & 63)); }
    void reset(std::size_t i) { words_[i >> 6] &= ~(std::uint64_t{1} << (i & 63)); }
    bool test(std::size_t i) const { return (words_[i >> 6] >> (i & 63)) & 1U; }

    void set_all()
    {
        for (auto& w : words_)
            w = ~std::uint64_t{0};
        trim();
    }

    bool any() const
    {
        for (auto w : words_)
            if (w)
                return true;
        return false;
    }
    bool none() const { return !any(); }
    bool all() const
    {
        Bitset full(bits_);
        full.set_all();
        return *this == full;
    }

    std::size_t count() const
    {
        std::size_t c = 0;
        for (auto w : words_)
            c += static_cast<std::size_t>(std::popcount(w));
        return c;
    }

    /** Index of the lowest set bit, or size() if none. */
    std::size_t first() const { return next(0); }

    /** Index of the lowest set bit >= from, or size() if none. */
    std::size_t next(std::size_t from) const
    {
        if (from >= bits_)
            return bits_;
        std::size_t wi = from >> 6;
        std::uint64_t w = words_[wi] & (~std::uint64_t{0} << (from & 63));
        while (true) {
            if (w)
                return (wi << 6) + static_cast<std::size_t>(std::countr_zero(w));
            if (++wi == words_.size())
                return bits_;
            w = words_[wi];
        }
    }

    Bitset& operator&=(const Bitset& o)
    {
        for (std::size_t i = 0; i < words_.size(); ++i)
            words_[i] &= o.words_[i];
        return *this;
    }
    Bitset& operator|=(const Bitset& o)
    {
        for (std::size_t i = 0; i < words_.size(); ++i)
            words_[i] |= o.words_[i];
        return *this;
    }
    /** this &= ~o */
    Bitset& subtract(const Bitset& o)
    {
        for (std::size_t i = 0; i < words_.size(); ++i)
            words_[i] &= ~o.words_[i];
        return *this;
    }

    friend Bitset operator&(Bitset a, const Bitset& b) { return a &= b; }
    friend Bitset operator|(Bitset a, const Bitset& b) { return a |= b; }
    friend bool operator==(const Bitset&, const Bitset&) = default;

    /** Popcount of (this & o) without materialising it. */
    std::size_t count_and(const Bitset& o) const
    {
        std::size_t c = 0;
        for (std::size_t i = 0; i < words_.size(); ++i)
            c += static_cast<std::size_t>(std::popcount(words_[i] & o.words_[i]));
        return c;
    }

    bool is_subset_of(const Bitset& o) const
    {
        for (std::size_t i = 0; i < words_.size(); ++i)
            if (words_[i] & ~o.words_[i])
                return false;
        return true;
    }

    const std::vector<std::uint64_t>& words() const noexcept { return words_; }

private:
    void trim()
    {
        if (bits_ & 63)
            words_.back() &= (std::uint64_t{1} << (bits_ & 63)) - 1;
    }

    std::size_t bits_ = 0;
    std::vector<std::uint64_t> words_;
};

}  // namespace ripscrush

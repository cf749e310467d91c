#pragma once

#include <bit>
#include <cstddef>
#include <cstdint>
#include <stdexcept>
#include <vector>

namespace hhl {

/// Dynamically sized bitset over the 0-based index range [0, size).
/// Bits past `size` in the last word are kept clear.
class Bitset
{
public:
    using Word = std::uint64_t;
    static constexpr std::size_t word_bits = 64;
    static constexpr std::size_t npos = static_cast<std::size_t>(-1);

    Bitset() = default;
    explicit Bitset(std::size_t size) : size_(size), words_((size + word_bits - 1) / word_bits, 0) {}

    static Bitset full(std::size_t size)
    {
        Bitset b(size);
        for (auto& w : b.words_)
            w = ~Word{0};
        b.trim();
        return b;
    }

    std::size_t size() const noexcept { return size_; }

    bool test(std::size_t i) const { return (words_[i / word_bits] >> (i % word_bits)) & 1U; }
    void set(std::size_t i) { words_[i / word_bits] |= Word{1} << (i % word_bits); }
    void reset(std::size_t i) { words_[i / word_bits] &= ~(Word{1} << (i % word_bits)); }

    std::size_t count() const noexcept
    {
        std::size_t n = 0;
        for (auto w : words_)
            n += static_cast<std::size_t>(std::popcount(w));
        return n;
    }

    bool none() const noexcept
    {
        for (auto w : words_)
            if (w != 0)
                return false;
        return true;
    }
    bool any() const noexcept { return !none(); }

    /// Index of the lowest set bit at or after `from`, or npos.
    std::size_t find_next(std::size_t from) const noexcept
    {
        if (from >= size_)
            return npos;
        std::size_t wi = from / word_bits;
        Word w = words_[wi] & (~Word{0} << (from % word_bits));
        while (true) {
            if (w != 0)
                return wi * word_bits + static_cast<std::size_t>(std::countr_zero(w));
            if (++wi == words_.size())
                return npos;
            w = words_[wi];
        }
    }
    std::size_t find_first() const noexcept { return find_next(0); }

    /// Keeps the `k` lowest set bits and clears the rest.
    Bitset lowest(std::size_t k) const
    {
        Bitset out(size_);
        std::size_t remaining = k;
        for (std::size_t wi = 0; wi < words_.size() && remaining > 0; ++wi) {
            Word w = words_[wi];
            auto c = static_cast<std::size_t>(std::popcount(w));
            if (c <= remaining) {
                out.words_[wi] = w;
                remaining -= c;
            } else {
                Word kept = 0;
                while (remaining > 0) {
                    Word low = w & (~w + 1);
                    kept |= low;
                    w ^= low;
                    --remaining;
                }
                out.words_[wi] = kept;
            }
        }
        return out;
    }

    bool is_subset_of(const Bitset& other) const
    {
        check_same_size(other);
        for (std::size_t i = 0; i < words_.size(); ++i)
            if ((words_[i] & ~other.words_[i]) != 0)
                return false;
        return true;
    }

    bool intersects(const Bitset& other) const
    {
        check_same_size(other);
        for (std::size_t i = 0; i < words_.size(); ++i)
            if ((words_[i] & other.words_[i]) != 0)
                return true;
        return false;
    }

    Bitset& operator|=(const Bitset& other)
    {
        check_same_size(other);
        for (std::size_t i = 0; i < words_.size(); ++i)
            words_[i] |= other.words_[i];
        return *this;
    }

    Bitset& operator&=(const Bitset& other)
    {
        check_same_size(other);
        for (std::size_t i = 0; i < words_.size(); ++i)
            words_[i] &= other.words_[i];
        return *this;
    }

    /// Set difference.
    Bitset& operator-=(const Bitset& other)
    {
        check_same_size(other);
        for (std::size_t i = 0; i < words_.size(); ++i)
            words_[i] &= ~other.words_[i];
        return *this;
    }

    Bitset operator~() const
    {
        Bitset out(*this);
        for (auto& w : out.words_)
            w = ~w;
        out.trim();
        return out;
    }

    friend Bitset operator|(Bitset a, const Bitset& b) { return a |= b; }
    friend Bitset operator&(Bitset a, const Bitset& b) { return a &= b; }
    friend Bitset operator-(Bitset a, const Bitset& b) { return a -= b; }

    friend bool operator==(const Bitset&, const Bitset&) = default;

    const std::vector<Word>& words() const noexcept { return words_; }

private:
    void trim()
    {
        if (size_ % word_bits != 0 && !words_.empty())
            words_.back() &= (Word{1} << (size_ % word_bits)) - 1;
    }

    void check_same_size(const Bitset& other) const
    {
        if (other.size_ != size_)
            throw std::invalid_argument("bitset size mismatch");
    }

    std::size_t size_ = 0;
    std::vector<Word> words_;
};

} // namespace hhl

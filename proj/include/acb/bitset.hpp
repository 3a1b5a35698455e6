#pragma once

#include <bit>
#include <cstddef>
#include <cstdint>
#include <vector>

namespace acb {

/// Fixed-length bit vector stored as 64-bit words.
///
/// Every set operation works word by word. Bits past size() are kept zero so
/// that equality and subset tests can compare raw words.
class Bitset {
public:
    using word_type = std::uint64_t;
    static constexpr std::size_t word_bits = 64;

    Bitset() = default;
    explicit Bitset(std::size_t size) : size_(size), words_((size + word_bits - 1) / word_bits, 0) {}

    std::size_t size() const { return size_; }

    bool test(std::size_t i) const { return (words_[i / word_bits] >> (i % word_bits)) & 1u; }
    void set(std::size_t i) { words_[i / word_bits] |= word_type{1} << (i % word_bits); }
    void reset(std::size_t i) { words_[i / word_bits] &= ~(word_type{1} << (i % word_bits)); }
    void assign(std::size_t i, bool value)
    {
        if (value)
            set(i);
        else
            reset(i);
    }

    void set_all()
    {
        for (auto& w : words_)
            w = ~word_type{0};
        trim();
    }

    void flip_all()
    {
        for (auto& w : words_)
            w = ~w;
        trim();
    }

    std::size_t count() const
    {
        std::size_t c = 0;
        for (auto w : words_)
            c += static_cast<std::size_t>(std::popcount(w));
        return c;
    }

    bool none() const
    {
        for (auto w : words_)
            if (w != 0)
                return false;
        return true;
    }
    bool any() const { return !none(); }

    /// True iff every set bit of *this is set in other (sizes must match).
    bool is_subset_of(const Bitset& other) const
    {
        for (std::size_t k = 0; k < words_.size(); ++k)
            if (words_[k] & ~other.words_[k])
                return false;
        return true;
    }

    bool intersects(const Bitset& other) const
    {
        for (std::size_t k = 0; k < words_.size(); ++k)
            if (words_[k] & other.words_[k])
                return true;
        return false;
    }

    Bitset& operator&=(const Bitset& o)
    {
        for (std::size_t k = 0; k < words_.size(); ++k)
            words_[k] &= o.words_[k];
        return *this;
    }
    Bitset& operator|=(const Bitset& o)
    {
        for (std::size_t k = 0; k < words_.size(); ++k)
            words_[k] |= o.words_[k];
        return *this;
    }
    /// Set difference.
    Bitset& operator-=(const Bitset& o)
    {
        for (std::size_t k = 0; k < words_.size(); ++k)
            words_[k] &= ~o.words_[k];
        return *this;
    }

    friend Bitset operator&(Bitset a, const Bitset& b) { return a &= b; }
    friend Bitset operator|(Bitset a, const Bitset& b) { return a |= b; }
    friend Bitset operator-(Bitset a, const Bitset& b) { return a -= b; }

    /// Index of the first set bit at or after `from`, or size() if none.
    std::size_t find_next(std::size_t from) const
    {
        if (from >= size_)
            return size_;
        std::size_t k = from / word_bits;
        word_type w = words_[k] & (~word_type{0} << (from % word_bits));
        while (true) {
            if (w != 0)
                return k * word_bits + static_cast<std::size_t>(std::countr_zero(w));
            if (++k == words_.size())
                return size_;
            w = words_[k];
        }
    }
    std::size_t find_first() const { return find_next(0); }

    /// Indices of set bits in increasing order.
    std::vector<std::size_t> indices() const
    {
        std::vector<std::size_t> out;
        for (std::size_t i = find_first(); i < size_; i = find_next(i + 1))
            out.push_back(i);
        return out;
    }

    friend bool operator==(const Bitset&, const Bitset&) = default;

private:
    void trim()
    {
        if (size_ % word_bits != 0 && !words_.empty())
            words_.back() &= (word_type{1} << (size_ % word_bits)) - 1;
    }

    std::size_t size_ = 0;
    std::vector<word_type> words_;
};

} // namespace acb

#pragma once

#include <bit>
#include <cstddef>
#include <cstdint>
#include <vector>

namespace gdom {

using Vertex = std::uint32_t;

/**
 * Fixed-width bit vector sized at construction. Bits past size() are kept
 * zero so that count() and comparisons never see garbage in the last word.
 */
class Bitset {
public:
    using word_type = std::uint64_t;
    static constexpr std::size_t word_bits = 64;

    Bitset() = default;
    explicit Bitset(std::size_t bits, bool value = false)
        : bits_(bits), words_((bits + word_bits - 1) / word_bits, value ? ~word_type{0} : 0) {
        trim();
    }

    std::size_t size() const { return bits_; }

    bool test(std::size_t i) const { return (words_[i / word_bits] >> (i % word_bits)) & 1U; }
    bool operator[](std::size_t i) const { return test(i); }

    Bitset& set(std::size_t i) {
        words_[i / word_bits] |= word_type{1} << (i % word_bits);
        return *this;
    }
    Bitset& reset(std::size_t i) {
        words_[i / word_bits] &= ~(word_type{1} << (i % word_bits));
        return *this;
    }
    Bitset& set_all() {
        for (auto& w : words_) w = ~word_type{0};
        trim();
        return *this;
    }
    Bitset& reset_all() {
        for (auto& w : words_) w = 0;
        return *this;
    }
    Bitset& flip() {
        for (auto& w : words_) w = ~w;
        trim();
        return *this;
    }

    std::size_t count() const {
        std::size_t c = 0;
        for (auto w : words_) c += static_cast<std::size_t>(std::popcount(w));
        return c;
    }
    bool any() const {
        for (auto w : words_)
            if (w) return true;
        return false;
    }
    bool none() const { return !any(); }
    bool all() const { return count() == bits_; }

    Bitset& operator&=(const Bitset& o) {
        for (std::size_t i = 0; i < words_.size(); ++i) words_[i] &= o.words_[i];
        return *this;
    }
    Bitset& operator|=(const Bitset& o) {
        for (std::size_t i = 0; i < words_.size(); ++i) words_[i] |= o.words_[i];
        return *this;
    }
    Bitset& operator^=(const Bitset& o) {
        for (std::size_t i = 0; i < words_.size(); ++i) words_[i] ^= o.words_[i];
        return *this;
    }
    // this := this \ o
    Bitset& subtract(const Bitset& o) {
        for (std::size_t i = 0; i < words_.size(); ++i) words_[i] &= ~o.words_[i];
        return *this;
    }

    friend Bitset operator&(Bitset a, const Bitset& b) { return a &= b; }
    friend Bitset operator|(Bitset a, const Bitset& b) { return a |= b; }
    friend Bitset operator^(Bitset a, const Bitset& b) { return a ^= b; }
    friend Bitset operator-(Bitset a, const Bitset& b) { return a.subtract(b); }
    friend bool operator==(const Bitset&, const Bitset&) = default;

    // |this & o| without allocating.
    std::size_t count_and(const Bitset& o) const {
        std::size_t c = 0;
        for (std::size_t i = 0; i < words_.size(); ++i)
            c += static_cast<std::size_t>(std::popcount(words_[i] & o.words_[i]));
        return c;
    }
    // |this & ~o|, restricted to valid bits.
    std::size_t count_and_not(const Bitset& o) const {
        std::size_t c = 0;
        for (std::size_t i = 0; i < words_.size(); ++i)
            c += static_cast<std::size_t>(std::popcount(words_[i] & ~o.words_[i]));
        return c;
    }
    bool intersects(const Bitset& o) const {
        for (std::size_t i = 0; i < words_.size(); ++i)
            if (words_[i] & o.words_[i]) return true;
        return false;
    }
    bool is_subset_of(const Bitset& o) const {
        for (std::size_t i = 0; i < words_.size(); ++i)
            if (words_[i] & ~o.words_[i]) return false;
        return true;
    }

    // Index of the lowest set bit at or after `from`, or size() if none.
    std::size_t find_next(std::size_t from) const {
        if (from >= bits_) return bits_;
        std::size_t wi = from / word_bits;
        word_type w = words_[wi] & (~word_type{0} << (from % word_bits));
        while (true) {
            if (w) return wi * word_bits + static_cast<std::size_t>(std::countr_zero(w));
            if (++wi == words_.size()) return bits_;
            w = words_[wi];
        }
    }
    std::size_t find_first() const { return find_next(0); }

    template <typename F>
    void for_each(F&& f) const {
        for (std::size_t wi = 0; wi < words_.size(); ++wi) {
            word_type w = words_[wi];
            while (w) {
                f(static_cast<Vertex>(wi * word_bits + static_cast<std::size_t>(std::countr_zero(w))));
                w &= w - 1;
            }
        }
    }

    std::vector<Vertex> to_vector() const {
        std::vector<Vertex> out;
        out.reserve(count());
        for_each([&](Vertex v) { out.push_back(v); });
        return out;
    }

private:
    void trim() {
        if (bits_ % word_bits && !words_.empty())
            words_.back() &= (word_type{1} << (bits_ % word_bits)) - 1;
    }

    std::size_t bits_ = 0;
    std::vector<word_type> words_;
};

}  // namespace gdom

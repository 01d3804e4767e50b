#pragma once

#include <bit>
#include <cstddef>
#include <cstdint>
#include <vector>

namespace ramseykit {

// Fixed-size dynamic bitset used for adjacency rows and vertex sets.
// All graph algorithms in this library index vertices as dense integers,
// so a row is just n bits.
class Bitset {
public:
    Bitset() = default;
    explicit Bitset(std::size_t nbits)
        : nbits_(nbits), words_((nbits + 63) / 64, 0) {}

    std::size_t size() const { return nbits_; }

    bool test(std::size_t i) const {
        return (words_[i >> 6] >> (i & 63)) & 1u;
    }
    void set(std::size_t i) { words_[i >> 6] |= uint64_t(1) << (i & 63); }
    void reset(std::size_t i) { words_[i >> 6] &= ~(uint64_t(1) << (i & 63)); }

    void clear() {
        for (auto& w : words_) w = 0;
    }
    void set_all() {
        for (auto& w : words_) w = ~uint64_t(0);
        trim();
    }

    std::size_t count() const {
        std::size_t c = 0;
        for (auto w : words_) c += std::popcount(w);
        return c;
    }
    bool any() const {
        for (auto w : words_)
            if (w) return true;
        return false;
    }
    bool none() const { return !any(); }

    // first set bit, or size() if none
    std::size_t find_first() const { return next(0); }

    // first set bit at position >= from, or size() if none
    std::size_t next(std::size_t from) const {
        if (from >= nbits_) return nbits_;
        std::size_t wi = from >> 6;
        uint64_t w = words_[wi] & (~uint64_t(0) << (from & 63));
        while (true) {
            if (w) return (wi << 6) + std::countr_zero(w);
            if (++wi == words_.size()) return nbits_;
            w = words_[wi];
        }
    }

    Bitset& operator&=(const Bitset& o) {
        for (std::size_t i = 0; i < words_.size(); ++i) words_[i] &= o.words_[i];
        return *this;
    }
    Bitset& operator|=(const Bitset& o) {
        for (std::size_t i = 0; i < words_.size(); ++i) words_[i] |= o.words_[i];
        return *this;
    }
    // this &= ~o
    Bitset& subtract(const Bitset& o) {
        for (std::size_t i = 0; i < words_.size(); ++i) words_[i] &= ~o.words_[i];
        return *this;
    }

    friend Bitset operator&(Bitset a, const Bitset& b) { return a &= b; }
    friend Bitset operator|(Bitset a, const Bitset& b) { return a |= b; }

    // popcount(this & o) without materializing the intersection
    std::size_t count_and(const Bitset& o) const {
        std::size_t c = 0;
        for (std::size_t i = 0; i < words_.size(); ++i)
            c += std::popcount(words_[i] & o.words_[i]);
        return c;
    }
    bool intersects(const Bitset& o) const {
        for (std::size_t i = 0; i < words_.size(); ++i)
            if (words_[i] & o.words_[i]) return true;
        return false;
    }

    bool operator==(const Bitset& o) const = default;

    template <typename F>
    void for_each(F&& f) const {
        for (std::size_t wi = 0; wi < words_.size(); ++wi) {
            uint64_t w = words_[wi];
            while (w) {
                f((wi << 6) + std::countr_zero(w));
                w &= w - 1;
            }
        }
    }

    std::vector<int> to_vector() const {
        std::vector<int> out;
        out.reserve(count());
        for_each([&](std::size_t i) { out.push_back(static_cast<int>(i)); });
        return out;
    }

private:
    void trim() {
        if (nbits_ & 63) words_.back() &= (uint64_t(1) << (nbits_ & 63)) - 1;
    }

    std::size_t nbits_ = 0;
    std::vector<uint64_t> words_;
};

} // namespace ramseykit

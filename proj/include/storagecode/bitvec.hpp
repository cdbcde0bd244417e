#pragma once
#include <bit>
#include <cstdint>
#include <cstddef>
#include <vector>

namespace storagecode {

// Packed bit vector. Bit i lives in word i/64 at position i%64; pad bits of
// the last word stay zero (construction and every mutator preserve this).
struct BitVec {
    std::size_t nbits = 0;
    std::vector<std::uint64_t> w;

    BitVec() = default;
    explicit BitVec(std::size_t n) : nbits(n), w((n + 63) / 64, 0) {}

    std::size_t words() const { return w.size(); }
    bool get(std::size_t i) const { return (w[i >> 6] >> (i & 63)) & 1u; }
    void set(std::size_t i) { w[i >> 6] |= std::uint64_t(1) << (i & 63); }
    void clear(std::size_t i) { w[i >> 6] &= ~(std::uint64_t(1) << (i & 63)); }
    void flip(std::size_t i) { w[i >> 6] ^= std::uint64_t(1) << (i & 63); }

    bool any() const {
        for (auto x : w)
            if (x) return true;
        return false;
    }
    std::size_t popcount() const {
        std::size_t c = 0;
        for (auto x : w) c += std::popcount(x);
        return c;
    }
    // index of lowest set bit, or nbits if none
    std::size_t lowest() const {
        for (std::size_t i = 0; i < w.size(); ++i)
            if (w[i]) return i * 64 + std::countr_zero(w[i]);
        return nbits;
    }
    void xor_with(const BitVec& o) {
        for (std::size_t i = 0; i < w.size(); ++i) w[i] ^= o.w[i];
    }
    friend bool operator==(const BitVec& a, const BitVec& b) {
        return a.nbits == b.nbits && a.w == b.w;
    }
};

} // namespace storagecode

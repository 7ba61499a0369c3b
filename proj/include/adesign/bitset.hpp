#pragma once

#include <bit>
#include <cstddef>
#include <cstdint>
#include <vector>

namespace adesign {

// Runtime-sized bitset backed by 64-bit words. Used as a block-membership
// index: one Bitset per point, bit j set iff the point lies in block j.
class Bitset {
public:
    Bitset() = default;
    explicit Bitset(std::size_t bits) : bits_(bits), words_((bits + 63) / 64, 0) {}

    void set(std::size_t i) { words_[i >> 6] |= std::uint64_t{1} << (i & 63); }
    bool test(std::size_t i) const { return (words_[i >> 6] >> (i & 63)) & 1; }
    std::size_t size() const { return bits_; }

    std::size_t count() const {
        std::size_t c = 0;
        for (std::uint64_t w : words_) c += static_cast<std::size_t>(std::popcount(w));
        return c;
    }

    static std::size_t and_count(const Bitset& a, const Bitset& b) {
        std::size_t c = 0;
        for (std::size_t i = 0; i < a.words_.size(); ++i)
            c += static_cast<std::size_t>(std::popcount(a.words_[i] & b.words_[i]));
        return c;
    }

    static std::size_t and3_count(const Bitset& a, const Bitset& b, const Bitset& c) {
        std::size_t n = 0;
        for (std::size_t i = 0; i < a.words_.size(); ++i)
            n += static_cast<std::size_t>(std::popcount(a.words_[i] & b.words_[i] & c.words_[i]));
        return n;
    }

    // dst = a & b; all three must have equal size.
    static void and_into(Bitset& dst, const Bitset& a, const Bitset& b) {
        for (std::size_t i = 0; i < a.words_.size(); ++i)
            dst.words_[i] = a.words_[i] & b.words_[i];
    }

private:
    std::size_t bits_ = 0;
    std::vector<std::uint64_t> words_;
};

}  // namespace adesign

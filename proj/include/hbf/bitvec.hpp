#pragma once

#include <bit>
#include <cstddef>
#include <cstdint>
#include <span>
#include <vector>

namespace hbf {

// Packed bit vector, LSB-first within each 64-bit word.
// Invariant: unused high bits of the last word are always zero, so
// operator== and popcount work directly on the word array.
class BitVec {
public:
    BitVec() = default;
    explicit BitVec(std::size_t nbits)
        : nbits_(nbits), words_(word_count(nbits), 0) {}

    static BitVec from_bools(std::span<const std::uint8_t> bits) {
        BitVec v(bits.size());
        for (std::size_t i = 0; i < bits.size(); ++i)
            if (bits[i]) v.words_[i >> 6] |= std::uint64_t{1} << (i & 63);
        return v;
    }

    std::size_t size() const { return nbits_; }
    bool empty() const { return nbits_ == 0; }

    int get(std::size_t i) const {
        return static_cast<int>((words_[i >> 6] >> (i & 63)) & 1);
    }
    void set(std::size_t i, int v) {
        std::uint64_t mask = std::uint64_t{1} << (i & 63);
        if (v) words_[i >> 6] |= mask;
        else   words_[i >> 6] &= ~mask;
    }
    void flip(std::size_t i) { words_[i >> 6] ^= std::uint64_t{1} << (i & 63); }

    void clear() { words_.assign(words_.size(), 0); }

    std::size_t popcount() const {
        std::size_t c = 0;
        for (std::uint64_t w : words_) c += static_cast<std::size_t>(std::popcount(w));
        return c;
    }

    std::span<const std::uint64_t> words() const { return words_; }
    std::span<std::uint64_t> words() { return words_; }

    // Zeroes the unused high bits of the last word. Call after word-level
    // writes that may have dirtied them.
    void mask_tail() {
        if (nbits_ & 63) words_.back() &= (std::uint64_t{1} << (nbits_ & 63)) - 1;
    }

    bool operator==(const BitVec&) const = default;

    static std::size_t word_count(std::size_t nbits) { return (nbits + 63) / 64; }

private:
    std::size_t nbits_ = 0;
    std::vector<std::uint64_t> words_;
};

}  // namespace hbf

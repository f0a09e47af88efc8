#pragma once

#include <cstdint>
#include <span>
#include <string>
#include <string_view>

#include "hbf/bitvec.hpp"

namespace hbf {

inline constexpr int kMinVars = 2;
inline constexpr int kMaxVars = 20;

// Output vector of an n-variable Boolean function. The input vector
// x = (x_1, ..., x_n) maps to the integer index sum x_i * 2^(n-i), i.e. x_1
// is the most significant bit of the index.
class TruthTable {
public:
    TruthTable() = default;
    explicit TruthTable(int n);
    TruthTable(int n, BitVec bits);

    static TruthTable from_bits(int n, std::span<const std::uint8_t> bits);

    // Hex text format: digit k encodes bits 4k..4k+3, with bit index i at
    // digit i/4, within-digit position 3-(i%4). Lowercase, digit 0 first.
    static TruthTable from_hex(std::string_view hex);
    std::string to_hex() const;

    int n() const { return n_; }
    std::size_t size() const { return std::size_t{1} << n_; }

    int get(std::size_t i) const { return bits_.get(i); }
    void set(std::size_t i, int v) { bits_.set(i, v); }
    void flip(std::size_t i) { bits_.flip(i); }

    const BitVec& bits() const { return bits_; }
    BitVec& bits() { return bits_; }

    bool operator==(const TruthTable&) const = default;

private:
    int n_ = 0;
    BitVec bits_;
};

}  // namespace hbf

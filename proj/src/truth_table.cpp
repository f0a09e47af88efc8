#include "hbf/truth_table.hpp"

#include <stdexcept>

namespace hbf {
namespace {

void check_n(int n) {
    if (n < kMinVars || n > kMaxVars)
        throw std::invalid_argument("variable count must be in [" +
                                    std::to_string(kMinVars) + ", " +
                                    std::to_string(kMaxVars) + "], got " +
                                    std::to_string(n));
}

int hex_value(char c) {
    if (c >= '0' && c <= '9') return c - '0';
    if (c >= 'a' && c <= 'f') return c - 'a' + 10;
    if (c >= 'A' && c <= 'F') return c - 'A' + 10;
    return -1;
}

}  // namespace

TruthTable::TruthTable(int n) : n_(n) {
    check_n(n);
    bits_ = BitVec(std::size_t{1} << n);
}

TruthTable::TruthTable(int n, BitVec bits) : n_(n), bits_(std::move(bits)) {
    check_n(n);
    if (bits_.size() != size())
        throw std::invalid_argument("truth table for n=" + std::to_string(n) +
                                    " needs " + std::to_string(size()) +
                                    " bits, got " + std::to_string(bits_.size()));
}

TruthTable TruthTable::from_bits(int n, std::span<const std::uint8_t> bits) {
    return TruthTable(n, BitVec::from_bools(bits));
}

TruthTable TruthTable::from_hex(std::string_view hex) {
    std::size_t digits = hex.size();
    if (digits == 0) throw std::invalid_argument("empty truth table hex string");
    if ((digits & (digits - 1)) != 0)
        throw std::invalid_argument("truth table bit count must be a power of two; "
                                    "got " + std::to_string(4 * digits) + " bits");
    int n = 2;
    while ((std::size_t{1} << (n - 2)) < digits) ++n;
    check_n(n);

    TruthTable tt(n);
    for (std::size_t k = 0; k < digits; ++k) {
        int v = hex_value(hex[k]);
        if (v < 0)
            throw std::invalid_argument("invalid hex digit '" +
                                        std::string(1, hex[k]) + "' at position " +
                                        std::to_string(k));
        for (int j = 0; j < 4; ++j)
            if ((v >> (3 - j)) & 1) tt.bits_.set(4 * k + j, 1);
    }
    return tt;
}

std::string TruthTable::to_hex() const {
    static const char* digits = "0123456789abcdef";
    std::string out(size() / 4, '0');
    for (std::size_t k = 0; k < out.size(); ++k) {
        int v = 0;
        for (int j = 0; j < 4; ++j) v |= bits_.get(4 * k + j) << (3 - j);
        out[k] = digits[v];
    }
    return out;
}

}  // namespace hbf

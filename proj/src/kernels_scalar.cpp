#include "hbf/kernels.hpp"

namespace hbf::kernels {
namespace {

void expand_signed_scalar(const std::uint64_t* words, std::size_t nbits,
                          std::int32_t* out) {
    for (std::size_t i = 0; i < nbits; ++i) {
        int bit = static_cast<int>((words[i >> 6] >> (i & 63)) & 1);
        out[i] = 1 - 2 * bit;
    }
}

void fwht_scalar(std::int32_t* data, std::size_t size) {
    for (std::size_t len = 1; len < size; len <<= 1) {
        for (std::size_t block = 0; block < size; block += 2 * len) {
            for (std::size_t i = block; i < block + len; ++i) {
                std::int32_t a = data[i];
                std::int32_t b = data[i + len];
                data[i] = a + b;
                data[i + len] = a - b;
            }
        }
    }
}

MaxAbs max_abs_count_scalar(const std::int32_t* data, std::size_t size) {
    std::int32_t best = 0;
    std::int64_t count = 0;
    for (std::size_t i = 0; i < size; ++i) {
        std::int32_t v = data[i] < 0 ? -data[i] : data[i];
        if (v > best) {
            best = v;
            count = 1;
        } else if (v == best) {
            ++count;
        }
    }
    return {best, count};
}

}  // namespace

const Ops& scalar() {
    static const Ops ops{expand_signed_scalar, fwht_scalar, max_abs_count_scalar,
                         "scalar"};
    return ops;
}

}  // namespace hbf::kernels

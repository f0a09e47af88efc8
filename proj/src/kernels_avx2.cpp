// AVX2 variants of the spectrum kernels. This translation unit is compiled
// with -mavx2 and must only be reached through the runtime dispatch in
// kernels.cpp after a CPU capability check.

#include "hbf/kernels.hpp"

#ifndef __AVX2__
#error "kernels_avx2.cpp requires -mavx2"
#endif

#include <immintrin.h>

namespace hbf::kernels {
namespace {

void expand_signed_avx2(const std::uint64_t* words, std::size_t nbits,
                        std::int32_t* out) {
    const __m256i shifts = _mm256_setr_epi32(0, 1, 2, 3, 4, 5, 6, 7);
    const __m256i ones = _mm256_set1_epi32(1);
    const auto* bytes = reinterpret_cast<const unsigned char*>(words);
    std::size_t i = 0;
    for (; i + 8 <= nbits; i += 8) {
        __m256i b = _mm256_set1_epi32(bytes[i >> 3]);
        __m256i bits = _mm256_and_si256(_mm256_srlv_epi32(b, shifts), ones);
        __m256i v = _mm256_sub_epi32(ones, _mm256_slli_epi32(bits, 1));
        _mm256_storeu_si256(reinterpret_cast<__m256i*>(out + i), v);
    }
    for (; i < nbits; ++i) {
        int bit = static_cast<int>((words[i >> 6] >> (i & 63)) & 1);
        out[i] = 1 - 2 * bit;
    }
}

void fwht_avx2(std::int32_t* data, std::size_t size) {
    std::size_t len = 1;
    // First passes have pair strides below one vector width.
    for (; len < size && len < 8; len <<= 1) {
        for (std::size_t block = 0; block < size; block += 2 * len) {
            for (std::size_t i = block; i < block + len; ++i) {
                std::int32_t a = data[i];
                std::int32_t b = data[i + len];
                data[i] = a + b;
                data[i + len] = a - b;
            }
        }
    }
    for (; len < size; len <<= 1) {
        for (std::size_t block = 0; block < size; block += 2 * len) {
            for (std::size_t i = block; i < block + len; i += 8) {
                __m256i a = _mm256_loadu_si256(reinterpret_cast<__m256i*>(data + i));
                __m256i b =
                    _mm256_loadu_si256(reinterpret_cast<__m256i*>(data + i + len));
                _mm256_storeu_si256(reinterpret_cast<__m256i*>(data + i),
                                    _mm256_add_epi32(a, b));
                _mm256_storeu_si256(reinterpret_cast<__m256i*>(data + i + len),
                                    _mm256_sub_epi32(a, b));
            }
        }
    }
}

MaxAbs max_abs_count_avx2(const std::int32_t* data, std::size_t size) {
    if (size < 8) return scalar().max_abs_count(data, size);

    __m256i vmax = _mm256_setzero_si256();
    std::size_t i = 0;
    for (; i + 8 <= size; i += 8) {
        __m256i v = _mm256_loadu_si256(reinterpret_cast<const __m256i*>(data + i));
        vmax = _mm256_max_epi32(vmax, _mm256_abs_epi32(v));
    }
    alignas(32) std::int32_t lanes[8];
    _mm256_store_si256(reinterpret_cast<__m256i*>(lanes), vmax);
    std::int32_t best = 0;
    for (std::int32_t lane : lanes)
        if (lane > best) best = lane;
    for (std::size_t j = i; j < size; ++j) {
        std::int32_t v = data[j] < 0 ? -data[j] : data[j];
        if (v > best) best = v;
    }

    const __m256i target = _mm256_set1_epi32(best);
    std::int64_t count = 0;
    for (i = 0; i + 8 <= size; i += 8) {
        __m256i v = _mm256_loadu_si256(reinterpret_cast<const __m256i*>(data + i));
        __m256i eq = _mm256_cmpeq_epi32(_mm256_abs_epi32(v), target);
        count += _mm_popcnt_u32(
            static_cast<unsigned>(_mm256_movemask_ps(_mm256_castsi256_ps(eq))));
    }
    for (std::size_t j = i; j < size; ++j) {
        std::int32_t v = data[j] < 0 ? -data[j] : data[j];
        if (v == best) ++count;
    }
    return {best, count};
}

}  // namespace

const Ops* avx2_ops_detail() {
    static const Ops ops{expand_signed_avx2, fwht_avx2, max_abs_count_avx2,
                         "avx2"};
    return &ops;
}

}  // namespace hbf::kernels

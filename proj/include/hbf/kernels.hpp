#pragma once

#include <cstddef>
#include <cstdint>

namespace hbf::kernels {

struct MaxAbs {
    std::int32_t max_abs;
    std::int64_t count;
};

// The per-evaluation hot path of the search engine: expand a packed truth
// table into a signed +/-1 buffer, run the in-place Walsh-Hadamard butterfly,
// and scan the spectrum for the maximal absolute value and its multiplicity.
// Each operation exists as a scalar reference kernel and, on x86-64, an AVX2
// variant; the two are equivalence-tested against each other.
struct Ops {
    void (*expand_signed)(const std::uint64_t* words, std::size_t nbits,
                          std::int32_t* out);
    void (*fwht)(std::int32_t* data, std::size_t size);
    MaxAbs (*max_abs_count)(const std::int32_t* data, std::size_t size);
    const char* name;
};

const Ops& scalar();

// nullptr when the binary was built without AVX2 support or the CPU lacks it.
const Ops* avx2_or_null();

// Best available implementation, resolved once per process. Setting the
// environment variable HOMBENT_FORCE_SCALAR=1 pins the scalar kernels.
const Ops& active();

}  // namespace hbf::kernels

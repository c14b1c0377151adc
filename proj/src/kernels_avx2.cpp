// AVX2 variant of the shifted-OR kernel. Compiled with -mavx2 on x86_64 only;
// callers go through the runtime dispatch in kernels.cpp, which checks cpuid
// before exposing this entry point.

#include "powsem/kernels.hpp"

#include <immintrin.h>

namespace powsem::kernels {

void shift_or_avx2(std::uint64_t* dst, const std::uint64_t* src,
                   std::size_t src_words, std::uint64_t shift_bits) {
    if (src_words == 0) return;
    std::uint64_t* out = dst + (shift_bits >> 6);
    const unsigned r = static_cast<unsigned>(shift_bits & 63);

    if (r == 0) {
        std::size_t i = 0;
        for (; i + 4 <= src_words; i += 4) {
            __m256i v = _mm256_loadu_si256(reinterpret_cast<const __m256i*>(src + i));
            __m256i d = _mm256_loadu_si256(reinterpret_cast<__m256i*>(out + i));
            _mm256_storeu_si256(reinterpret_cast<__m256i*>(out + i), _mm256_or_si256(d, v));
        }
        for (; i < src_words; ++i) out[i] |= src[i];
        return;
    }

    const __m128i rl = _mm_cvtsi32_si128(static_cast<int>(r));
    const __m128i rr = _mm_cvtsi32_si128(static_cast<int>(64 - r));

    out[0] |= src[0] << r;
    std::size_t i = 1;
    for (; i + 4 <= src_words; i += 4) {
        __m256i cur = _mm256_loadu_si256(reinterpret_cast<const __m256i*>(src + i));
        __m256i prev = _mm256_loadu_si256(reinterpret_cast<const __m256i*>(src + i - 1));
        __m256i shifted = _mm256_or_si256(_mm256_sll_epi64(cur, rl), _mm256_srl_epi64(prev, rr));
        __m256i d = _mm256_loadu_si256(reinterpret_cast<__m256i*>(out + i));
        _mm256_storeu_si256(reinterpret_cast<__m256i*>(out + i), _mm256_or_si256(d, shifted));
    }
    for (; i < src_words; ++i) {
        out[i] |= (src[i] << r) | (src[i - 1] >> (64 - r));
    }
    out[src_words] |= src[src_words - 1] >> (64 - r);
}

} // namespace powsem::kernels

#ifndef POWSEM_KERNELS_HPP
#define POWSEM_KERNELS_HPP

#include <cstddef>
#include <cstdint>
#include <string_view>
#include <vector>

namespace powsem::kernels {

// dst |= src << shift_bits, over bit vectors stored as little-endian arrays of
// 64-bit words. src spans src_words words; dst must provide at least
// shift_bits/64 + src_words + 1 words. This is the inner loop of sumset
// addition: the result mask accumulates one shifted copy of the operand mask
// per element of the other operand.
using ShiftOrFn = void (*)(std::uint64_t* dst, const std::uint64_t* src,
                           std::size_t src_words, std::uint64_t shift_bits);

void shift_or_scalar(std::uint64_t* dst, const std::uint64_t* src,
                     std::size_t src_words, std::uint64_t shift_bits);

#if defined(POWSEM_HAVE_AVX2_KERNEL)
void shift_or_avx2(std::uint64_t* dst, const std::uint64_t* src,
                   std::size_t src_words, std::uint64_t shift_bits);
#endif

struct KernelEntry {
    std::string_view name;
    ShiftOrFn fn;
};

// Kernels compiled into this binary and usable on this CPU, scalar first.
const std::vector<KernelEntry>& available_kernels();

// Runtime-selected kernel: widest available unless overridden by the
// POWSEM_KERNEL environment variable ("scalar", "avx2").
ShiftOrFn active_shift_or();
std::string_view active_kernel_name();

} // namespace powsem::kernels

#endif

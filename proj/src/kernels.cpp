#include "powsem/kernels.hpp"

#include <cstdlib>

namespace powsem::kernels {

void shift_or_scalar(std::uint64_t* dst, const std::uint64_t* src,
                     std::size_t src_words, std::uint64_t shift_bits) {
    if (src_words == 0) return;
    std::uint64_t* out = dst + (shift_bits >> 6);
    const unsigned r = static_cast<unsigned>(shift_bits & 63);
    if (r == 0) {
        for (std::size_t i = 0; i < src_words; ++i) out[i] |= src[i];
        return;
    }
    std::uint64_t carry = 0;
    for (std::size_t i = 0; i < src_words; ++i) {
        const std::uint64_t w = src[i];
        out[i] |= (w << r) | carry;
        carry = w >> (64 - r);
    }
    out[src_words] |= carry;
}

namespace {

std::vector<KernelEntry> build_registry() {
    std::vector<KernelEntry> v;
    v.push_back({"scalar", &shift_or_scalar});
#if defined(POWSEM_HAVE_AVX2_KERNEL)
    if (__builtin_cpu_supports("avx2")) v.push_back({"avx2", &shift_or_avx2});
#endif
    return v;
}

const KernelEntry& pick_active() {
    const auto& reg = available_kernels();
    if (const char* env = std::getenv("POWSEM_KERNEL")) {
        for (const auto& e : reg) {
            if (e.name == env) return e;
        }
        // unknown or unavailable name: fall through to the default choice
    }
    return reg.back();
}

} // namespace

const std::vector<KernelEntry>& available_kernels() {
    static const std::vector<KernelEntry> reg = build_registry();
    return reg;
}

ShiftOrFn active_shift_or() {
    static const KernelEntry& e = pick_active();
    return e.fn;
}

std::string_view active_kernel_name() {
    static const KernelEntry& e = pick_active();
    return e.name;
}

} // namespace powsem::kernels

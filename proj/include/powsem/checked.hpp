#ifndef POWSEM_CHECKED_HPP
#define POWSEM_CHECKED_HPP

#include <cstdint>
#include <stdexcept>
#include <string>

namespace powsem {

// 64-bit unsigned arithmetic that refuses to wrap.
inline std::uint64_t checked_add(std::uint64_t a, std::uint64_t b) {
    std::uint64_t r;
    if (__builtin_add_overflow(a, b, &r)) {
        throw std::overflow_error("integer overflow: " + std::to_string(a) + " + " +
                                  std::to_string(b));
    }
    return r;
}

inline std::uint64_t checked_mul(std::uint64_t a, std::uint64_t b) {
    std::uint64_t r;
    if (__builtin_mul_overflow(a, b, &r)) {
        throw std::overflow_error("integer overflow: " + std::to_string(a) + " * " +
                                  std::to_string(b));
    }
    return r;
}

} // namespace powsem

#endif

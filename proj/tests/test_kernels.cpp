#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "powsem/kernels.hpp"

#include <random>
#include <vector>

using namespace powsem;

namespace {

// Bit-by-bit reference, the slow way.
std::vector<std::uint64_t> naive_shift_or(std::vector<std::uint64_t> dst,
                                          const std::vector<std::uint64_t>& src,
                                          std::uint64_t shift) {
    for (std::size_t w = 0; w < src.size(); ++w) {
        for (unsigned b = 0; b < 64; ++b) {
            if (src[w] & (std::uint64_t{1} << b)) {
                const std::uint64_t pos = (std::uint64_t{w} << 6) + b + shift;
                dst[static_cast<std::size_t>(pos >> 6)] |= std::uint64_t{1} << (pos & 63);
            }
        }
    }
    return dst;
}

} // namespace

TEST_CASE("scalar kernel matches the bit-by-bit reference") {
    std::mt19937_64 rng(7);
    for (int iter = 0; iter < 400; ++iter) {
        const std::size_t words = 1 + static_cast<std::size_t>(rng() % 9);
        const std::uint64_t shift = rng() % 130;
        std::vector<std::uint64_t> src(words);
        for (auto& w : src) w = rng();
        const std::size_t dst_words = words + (shift >> 6) + 2;
        std::vector<std::uint64_t> dst(dst_words);
        for (auto& w : dst) w = rng();

        std::vector<std::uint64_t> got = dst;
        kernels::shift_or_scalar(got.data(), src.data(), words, shift);
        CHECK(got == naive_shift_or(dst, src, shift));
    }
}

TEST_CASE("every available kernel agrees with scalar") {
    const auto& reg = kernels::available_kernels();
    REQUIRE(!reg.empty());
    CHECK(reg.front().name == "scalar");

    std::mt19937_64 rng(11);
    for (int iter = 0; iter < 600; ++iter) {
        const std::size_t words = 1 + static_cast<std::size_t>(rng() % 12);
        const std::uint64_t shift = rng() % 200;
        std::vector<std::uint64_t> src(words);
        for (auto& w : src) w = rng();
        const std::size_t dst_words = words + (shift >> 6) + 2;
        std::vector<std::uint64_t> base(dst_words);
        for (auto& w : base) w = rng();

        std::vector<std::uint64_t> want = base;
        kernels::shift_or_scalar(want.data(), src.data(), words, shift);
        for (const auto& entry : reg) {
            std::vector<std::uint64_t> got = base;
            entry.fn(got.data(), src.data(), words, shift);
            INFO("kernel ", entry.name, " shift ", shift, " words ", words);
            CHECK(got == want);
        }
    }
}

TEST_CASE("word-aligned and tiny shifts hit the exact same words") {
    for (const auto& entry : kernels::available_kernels()) {
        for (std::uint64_t shift : {0ull, 1ull, 63ull, 64ull, 65ull, 128ull}) {
            std::vector<std::uint64_t> src{0x8000000000000001ull, 0xffffffffffffffffull};
            std::vector<std::uint64_t> dst(src.size() + (shift >> 6) + 2, 0);
            entry.fn(dst.data(), src.data(), src.size(), shift);
            CHECK(dst == naive_shift_or(std::vector<std::uint64_t>(dst.size(), 0), src, shift));
        }
    }
}

TEST_CASE("runtime dispatch picks a registered kernel") {
    const auto name = kernels::active_kernel_name();
    bool found = false;
    for (const auto& entry : kernels::available_kernels()) {
        if (entry.name == name) {
            found = true;
            CHECK(entry.fn == kernels::active_shift_or());
        }
    }
    CHECK(found);
}
